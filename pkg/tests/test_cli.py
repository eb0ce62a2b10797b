import subprocess
import sys

import pytest

from ampcalc.cli import main

from conftest import SQRT_HALF

INTERFERENCE = f"""<C1|B> = {SQRT_HALF}
<A|C1> = {SQRT_HALF}
<C2|B> = {SQRT_HALF}
<A|C2> = -{SQRT_HALF}
"""


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_chain(capsys, write):
    code, out, _ = run(capsys, "parse", write("d.txt", "C->B  ->A\n"))
    assert code == 0
    assert out == "C -> B -> A\nSeries\n  Atomic C -> B\n  Atomic B -> A\n"


def test_parse_parallel(capsys, write):
    code, out, _ = run(capsys, "parse", write("d.txt", "B -> {C1|C2} -> A"))
    assert code == 0
    assert out.splitlines()[:2] == ["B -> {C1 | C2} -> A", "Parallel (2 branches)"]


def test_parse_syntax_error(capsys, write):
    path = write("d.txt", "->")
    code, out, err = run(capsys, "parse", path)
    assert code == 2 and out == ""
    assert f"{path}:1:1:" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "parse", "/nonexistent/diagram.txt")
    assert code == 2 and "cannot read" in err


def test_eval_interference(capsys, write):
    code, out, _ = run(capsys, "eval", write("d.txt", "B -> {C1 | C2} -> A"), write("a.txt", INTERFERENCE))
    assert code == 0
    assert out == "amplitude = 0.000000000000e0+0.000000000000e0i\nprobability = 0\n"


def test_eval_chain(capsys, write):
    amps = write("a.txt", "<B|C> = 0.6\n<A|B> = 0+0.5i\n")
    code, out, _ = run(capsys, "eval", write("d.txt", "C -> B -> A"), amps)
    assert code == 0
    assert out == "amplitude = 0.000000000000e0+3.000000000000e-1i\nprobability = 0.09\n"


def test_eval_alpha_and_rule(capsys, write):
    amps = write("a.txt", "<B|C> = 0.6\n<A|B> = 0+0.5i\n")
    code, out, _ = run(capsys, "eval", write("d.txt", "C -> B -> A"), amps, "--alpha", "1", "--rule", "scale:2")
    assert code == 0
    # scale(2): f = 2xy, so amplitude 0.6i and |.|^1 = 0.6
    assert out == "amplitude = 0.000000000000e0+6.000000000000e-1i\nprobability = 0.6\n"


def test_eval_missing_leg(capsys, write):
    code, _, err = run(capsys, "eval", write("d.txt", "C -> B -> A"), write("a.txt", "<B|C> = 0.6\n"))
    assert code == 2
    assert "(B -> A)" in err


@pytest.mark.parametrize("extra", [["--rule", "bogus"], ["--alpha", "0"]])
def test_eval_bad_values(capsys, write, extra):
    d, a = write("d.txt", "C -> B -> A"), write("a.txt", "<B|C> = 1\n<A|B> = 1\n")
    assert run(capsys, "eval", d, a, *extra)[0] == 2


def test_eval_unparseable_alpha(write):
    d, a = write("d.txt", "C -> B -> A"), write("a.txt", "<B|C> = 1\n<A|B> = 1\n")
    with pytest.raises(SystemExit) as exc:
        main(["eval", d, a, "--alpha", "x"])
    assert exc.value.code == 2


def test_eval_bad_table(capsys, write):
    code, _, err = run(capsys, "eval", write("d.txt", "C -> B -> A"), write("a.txt", "<B|C> = 1\n<A|B = 1\n"))
    assert code == 2 and ":2:" in err


def test_check_canonical(capsys):
    code, out, _ = run(capsys, "check", "canonical")
    assert code == 0
    lines = out.splitlines()
    assert [l.split()[1] for l in lines] == ["series_assoc", "parallel_assoc", "distributivity", "parallel_comm"]
    assert all(l.split()[2] == "PASS" for l in lines)


def test_check_g_affine(capsys):
    code, out, _ = run(capsys, "check", "broken:g_affine")
    assert code == 1
    verdicts = {l.split()[1]: l.split()[2] for l in out.splitlines()}
    assert verdicts == {
        "series_assoc": "PASS",
        "parallel_assoc": "FAIL",
        "distributivity": "PASS",
        "parallel_comm": "FAIL",
    }


def test_check_power_deterministic(capsys):
    first = run(capsys, "check", "power:0.7", "--samples", "5000", "--seed", "9")
    second = run(capsys, "check", "power:0.7", "--samples", "5000", "--seed", "9")
    assert first[0] == 0 and first == second


@pytest.mark.parametrize("argv", [["check", "canonical", "--samples", "0"], ["check", "nope"], ["check", "canonical", "--tol", "-1"]])
def test_check_bad_flags(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("argv", [["check", "canonical", "--seed", "-1"], ["check", "canonical", "--samples", "many"], ["check", "canonical", "-s", "3"]])
def test_check_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_exponent(capsys):
    assert run(capsys, "exponent", "--moduli", "0.6,0.8") == (0, "alpha = 2.000000000000\n", "")


@pytest.mark.parametrize(
    "moduli, word",
    [("1.0,0.0", "every alpha"), ("0.5,0.5", "not 1"), ("0.6,x", "comma-separated"), ("1.5,0.2", "[0, 1]")],
)
def test_exponent_errors(capsys, moduli, word):
    code, _, err = run(capsys, "exponent", "--moduli", moduli)
    assert code == 2 and word in err


def test_oracle_compare_parallel(capsys, write):
    code, out, _ = run(capsys, "oracle-compare", write("d.txt", "B -> {C1|C2} -> A"), "--dim", "2", "--seed", "7")
    assert code == 0
    diff = float(out.splitlines()[2].split("=")[1])
    assert diff <= 1e-10


def test_oracle_compare_chain(capsys, write):
    code, _, _ = run(capsys, "oracle-compare", write("d.txt", "E -> D -> C -> B -> A"), "--dim", "4", "--seed", "1")
    assert code == 0


def test_oracle_compare_fanout_too_large(capsys, write):
    code, _, err = run(capsys, "oracle-compare", write("d.txt", "B -> {X|Y|Z} -> A"), "--dim", "2")
    assert code == 2 and "dim 2" in err


def test_module_and_script_entry_points(write):
    d = write("d.txt", "C -> B -> A")
    for cmd in ([sys.executable, "-m", "ampcalc", "parse", d], ["ampcalc", "parse", d]):
        res = subprocess.run(cmd, capture_output=True, text=True)
        assert res.returncode == 0 and res.stdout.startswith("C -> B -> A\n")
    res = subprocess.run([sys.executable, "-m", "ampcalc"], capture_output=True, text=True)
    assert res.returncode == 2
