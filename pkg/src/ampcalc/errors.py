"""Exception types shared across the package."""

from __future__ import annotations


class AmplitudeError(Exception):
    """Base class for every error raised by ampcalc."""


class NonFinite(AmplitudeError, ValueError):
    pass


class ConjugateConflict(AmplitudeError, ValueError):
    """A reverse entry exists and the new amplitude is not its conjugate."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class MissingAmplitude(AmplitudeError, LookupError):
    def __init__(self, source: str, target: str):
        super().__init__(
            f"missing amplitude <{target}|{source}> for leg ({source} -> {target})"
        )
        self.leg = (source, target)


class InvalidDiagram(AmplitudeError, ValueError):
    pass


class Unprintable(AmplitudeError, ValueError):
    pass


class NotAChain(AmplitudeError, ValueError):
    pass


class DomainViolation(AmplitudeError, ValueError):
    pass


class RuleEvaluationFailure(AmplitudeError, ArithmeticError):
    pass


class DegenerateDistribution(AmplitudeError, ValueError):
    pass


class NotNormalized(AmplitudeError, ValueError):
    pass


class NoRootInBracket(AmplitudeError, ArithmeticError):
    pass


class GroupTooLarge(AmplitudeError, ValueError):
    pass


class DuplicateLabel(AmplitudeError, ValueError):
    pass


class IncompatibleGroups(AmplitudeError, ValueError):
    """Two orthogonal groups share labels that are not mutually orthogonal."""


class UnknownLabel(AmplitudeError, LookupError):
    pass


class NonOrthogonalBranches(AmplitudeError, ValueError):
    def __init__(self, first: str, second: str, overlap: float):
        super().__init__(
            f"parallel filters {first} and {second} are not orthogonal "
            f"(|<{first}|{second}>| = {overlap:.3e})"
        )
        self.pair = (first, second)
        self.overlap = overlap
