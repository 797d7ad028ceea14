import csv
import io
from fractions import Fraction

import pytest

from ffsolve.cli import main
from ffsolve.io import format_problem, parse_problem
from ffsolve import Mat, ParseError, ZZ_t
from ffsolve.metrics import random_system

from helpers import GOLDEN


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def problem(tmp_path):
    def write(text, name="p.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


GOLDEN_FILE = format_problem(Mat(GOLDEN))


def test_solve_golden(problem):
    code, out, _ = run(["solve", problem(GOLDEN_FILE)])
    assert code == 0
    assert "delta = 27; x = (1, 2, -2, -1)" in out


def test_solve_identity(problem):
    code, out, _ = run(["solve", problem("domain: int\n2 3\n1 0 -4\n0 1 9\n")])
    assert code == 0 and "x = (-4, 9)" in out


def test_solve_fraction_output(problem):
    code, out, _ = run(["solve", problem("domain: int\n2 3\n2 0 1\n0 4 -6\n")])
    assert "x = (1/2, -3/2)" in out


def test_solve_output_satisfies_system(problem, rng):
    a = random_system(5, 6, rng)
    code, out, _ = run(["solve", problem(format_problem(a))])
    line = next(ln for ln in out.splitlines() if "; x = (" in ln)
    xs = [Fraction(t) for t in line.split("x = (")[1].rstrip(")").split(", ")]
    for i in range(5):
        assert sum(a[i, j] * xs[j] for j in range(5)) == a[i, 5]


def test_solve_underdetermined(problem, rng):
    a = random_system(3, 5, rng)
    code, out, _ = run(["solve", problem(format_problem(a))])
    assert code == 0
    assert "free unknowns: x4" in out
    assert sum(1 for ln in out.splitlines() if ln.startswith("x")) == 3


def test_singular_exit_code(problem):
    path = problem("domain: int\n2 3\n0 1 5\n1 0 7\n")
    code, _, err = run(["solve", path])
    assert code == 3 and "order 1" in err and "--permute" in err
    code, out, _ = run(["solve", path, "--permute"])
    assert code == 0 and "x = (7, 5)" in out


def test_structural_exit_code(problem):
    code, _, _ = run(["solve", problem("domain: int\n2 3\n1 2 5\n2 4 7\n"), "--permute"])
    assert code == 4


@pytest.mark.parametrize(
    "text",
    ["domain: real\n1 2\n1 2\n", "domain: int\n2 3\n1 2 3\n", "domain: int\n1 2\n1 x\n", "oops\n", "domain: int\n1 2\n1 2 3\n"],
)
def test_parse_exit_code(problem, text):
    code, _, err = run(["solve", problem(text)])
    assert code == 2 and err.startswith("error:")


def test_missing_file():
    assert run(["solve", "/nonexistent/file.txt"])[0] == 2


def test_domain_flag_must_match(problem):
    assert run(["solve", problem(GOLDEN_FILE), "--domain", "poly"])[0] == 2


def test_det_and_adj(problem):
    path = problem(GOLDEN_FILE)
    code, out, _ = run(["det", path])
    assert code == 0 and out.strip() == "27"
    swapped = Mat([GOLDEN[1], GOLDEN[0], GOLDEN[2], GOLDEN[3]])
    assert run(["det", problem(format_problem(swapped), "s.txt")])[0] == 0
    code, out, _ = run(["det", problem(format_problem(swapped.permute_rows([0, 2, 1, 3])), "s2.txt"), "--permute"])
    assert out.strip() == "27"
    code, out, _ = run(["adj", problem("domain: int\n4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n", "i.txt")])
    assert [ln.split() for ln in out.strip().splitlines()] == [["1" if i == j else "0" for j in range(4)] for i in range(4)]


def test_det_permuted_sign(problem):
    rows = [GOLDEN[1], GOLDEN[0], GOLDEN[2], GOLDEN[3]]
    code, out, _ = run(["det", problem(format_problem(Mat(rows))), "--permute"])
    assert out.strip() == "-27"


def test_count_line(problem, rng):
    a = random_system(4, 5, rng)
    path = problem(format_problem(a))
    code, out, _ = run(["count", path])
    assert code == 0
    assert out.splitlines()[0] == "adds=26 muls=44 divs=8 (predicted 26/44/8)"
    code, out, _ = run(["count", path, "--strategy", "onepass"])
    assert out.splitlines()[0] == "adds=26 muls=45 divs=10 (predicted 26/45/10)"
    assert "one-pass closed form: adds=26 muls=45 divs=7" in out
    code, out, _ = run(["count", path, "--mul", "strassen", "--cutoff", "1"])
    assert "muls+divs+unit_divs=61 (Strassen closed form 61)" in out


def test_solve_with_count_flag(problem):
    code, out, _ = run(["solve", problem(GOLDEN_FILE), "--count", "--strategy", "fixed=1"])
    assert "predicted" in out and "x = (1, 2, -2, -1)" in out


def test_bad_strategy(problem):
    with pytest.raises(SystemExit):
        run(["solve", problem(GOLDEN_FILE), "--strategy", "random"])


def test_sweep_csv(tmp_path):
    out_path = tmp_path / "s.csv"
    code, _, _ = run(["sweep", "--sizes", "2,4", "--out", str(out_path)])
    rows = list(csv.DictReader(out_path.open()))
    assert code == 0 and [r["size_n"] for r in rows] == ["2", "4"]
    assert rows[1]["muls"] == rows[1]["predicted_muls"] == "44"


def test_sweep_empty_sizes():
    code, out, _ = run(["sweep", "--sizes", ""])
    assert code == 0
    assert out.strip() == "size_n,size_m,strategy,backend,adds,muls,divs,predicted_adds,predicted_muls,predicted_divs,wall_ns"


def test_poly_file(problem):
    text = "domain: poly\n2 3\n[0,1] [1] [1,1]\n[1] [0,1] [2]\n"
    prob = parse_problem(text)
    assert prob.domain is ZZ_t
    code, out, _ = run(["solve", problem(text)])
    assert code == 0
    assert "delta = [-1,0,1]" in out
    assert format_problem(prob.matrix) == text


def test_parse_problem_positions():
    with pytest.raises(ParseError) as exc:
        parse_problem("domain: int\n1 3\n1 2 3x\n")
    assert exc.value.line == 3 and exc.value.position == 6


def test_deterministic(problem):
    path = problem(GOLDEN_FILE)
    assert run(["solve", path, "--count"]) == run(["solve", path, "--count"])
