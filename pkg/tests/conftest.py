import cmath
import math

import hypothesis.strategies as st
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

SQRT_HALF = 0.7071067811865476


def finite_complex(bound=1e6):
    part = st.floats(-bound, bound, allow_nan=False, allow_infinity=False)
    return st.builds(complex, part, part)


def domain_points(domain):
    """Complex numbers inside a SampleDomain, drawn the same way the checker does."""
    u = st.floats(0.0, 1.0, exclude_max=True)
    return st.builds(domain.point, u, u)


def rel_diff(a, b):
    return abs(a - b) / (1.0 + max(abs(a), abs(b)))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
