import io
import subprocess
import sys

import pytest

from nullforest import Forest, GenSpec, generate, parse_forest
from nullforest.cli import main

P5 = "p forest 5 4\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n"
P4 = "p forest 4 3\ne 0 1\ne 1 2\ne 2 3\n"


def run_cli(capsys, *argv, stdin=None):
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            code = main(list(argv))
        finally:
            sys.stdin = old
    else:
        code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def p5_file(tmp_path):
    path = tmp_path / "p5.txt"
    path.write_text(P5)
    return str(path)


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text(P4)
    return str(path)


class TestSubcommands:
    def test_nnz(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "nnz", p5_file)
        assert code == 0
        assert out == "3\n"

    def test_stats_includes_nullity(self, capsys, p4_file):
        code, out, _ = run_cli(capsys, "stats", p4_file)
        assert code == 0
        assert "nullity=0\n" in out
        assert out.startswith("n=4\nm=3\n")

    def test_stats_full_output(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "stats", p5_file)
        assert out == ("n=5\nm=4\nmatching=2\nnullity=1\n"
                       "support=3\ncore=2\nnnz=3\n")

    def test_support(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "support", p5_file)
        assert code == 0
        assert out == "0\n2\n4\n"

    def test_sparsest_text(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "sparsest", p5_file)
        assert code == 0
        assert out == "2: -0 +2 -4\n"

    def test_sparsest_mm(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "sparsest", p5_file, "--format", "mm")
        assert out.splitlines() == [
            "%%MatrixMarket matrix coordinate integer general",
            "5 1 3",
            "1 1 -1",
            "3 1 1",
            "5 1 -1",
        ]

    def test_basis_empty_for_perfect_matching(self, capsys, p4_file):
        code, out, _ = run_cli(capsys, "basis", p4_file)
        assert code == 0
        assert out == ""

    def test_gen_pipes_into_sparsest(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--family", "star", "--n", "4")
        assert code == 0
        code, out2, _ = run_cli(capsys, "sparsest", "-", stdin=out)
        assert code == 0
        assert out2 == "1: +1 -2\n3: -2 +3\n"

    def test_gen_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--family", "caterpillar",
                               "--n", "9", "--seed", "5")
        parsed = parse_forest(out)
        assert isinstance(parsed, Forest)
        assert parsed == generate(GenSpec("caterpillar", 9, seed=5))

    def test_sort_by_nnz(self, capsys, tmp_path):
        # star with extra pendant path: vector sizes differ
        path = tmp_path / "f.txt"
        path.write_text("p forest 6 4\ne 0 1\ne 0 2\ne 0 3\ne 3 4\n")
        code, out, _ = run_cli(capsys, "sparsest", str(path))
        default_lines = out.splitlines()
        code, out, _ = run_cli(capsys, "sparsest", str(path), "--sort-by-nnz")
        sorted_lines = out.splitlines()
        assert sorted(default_lines) == sorted(sorted_lines)
        nnzs = [line.count("+") + line.count("-") for line in sorted_lines]
        assert nnzs == sorted(nnzs)


class TestVerify:
    def test_accepts_own_output(self, capsys, tmp_path, p5_file):
        code, basis_out, _ = run_cli(capsys, "sparsest", p5_file)
        basis_file = tmp_path / "b.txt"
        basis_file.write_text(basis_out)
        code, out, _ = run_cli(capsys, "verify", p5_file, str(basis_file))
        assert code == 0
        assert "null_membership: PASS" in out

    def test_accepts_basis_output(self, capsys, tmp_path, p5_file):
        code, basis_out, _ = run_cli(capsys, "basis", p5_file)
        basis_file = tmp_path / "b.txt"
        basis_file.write_text(basis_out)
        code, out, _ = run_cli(capsys, "verify", p5_file, str(basis_file))
        assert code == 0

    def test_rejects_wrong_basis(self, capsys, tmp_path, p5_file):
        basis_file = tmp_path / "bad.txt"
        basis_file.write_text("2: +0 +2 +4\n")
        code, out, _ = run_cli(capsys, "verify", p5_file, str(basis_file))
        assert code == 2
        assert "null_membership: FAIL" in out

    def test_malformed_basis_file(self, capsys, tmp_path, p5_file):
        basis_file = tmp_path / "bad.txt"
        basis_file.write_text("2: squirrel\n")
        code, _, err = run_cli(capsys, "verify", p5_file, str(basis_file))
        assert code == 1
        assert "error:" in err


class TestErrorPaths:
    def test_cycle_input(self, capsys, tmp_path):
        path = tmp_path / "c.txt"
        path.write_text("p forest 3 3\ne 0 1\ne 1 2\ne 0 2\n")
        code, _, err = run_cli(capsys, "stats", str(path))
        assert code == 1
        assert "error:" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "stats", "/nonexistent/forest.txt")
        assert code == 1

    def test_unknown_flag(self, capsys, p5_file):
        code, _, err = run_cli(capsys, "nnz", p5_file, "--frobnicate")
        assert code == 1

    def test_bad_gen_spec(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--family", "path", "--n", "0")
        assert code == 1
        assert "error:" in err


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ("support",), ("basis",), ("sparsest",), ("nnz",), ("stats",),
        ("sparsest", "--format", "mm"),
    ])
    def test_repeated_runs_identical(self, capsys, p5_file, argv):
        first = run_cli(capsys, *argv[:1], p5_file, *argv[1:])
        second = run_cli(capsys, *argv[:1], p5_file, *argv[1:])
        assert first == second

    def test_gen_identical(self, capsys):
        args = ("gen", "--family", "random-forest", "--n", "9",
                "--components", "2", "--seed", "11")
        assert run_cli(capsys, *args) == run_cli(capsys, *args)

    def test_bench_header_only_identical(self, capsys):
        args = ("bench", "--sizes", "", "--csv")
        first = run_cli(capsys, *args)
        second = run_cli(capsys, *args)
        assert first == second
        assert first[1] == "backend,n,nnz,time_ms\n"


class TestBench:
    def test_rows_and_csv(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--family", "star",
                               "--sizes", "50,100", "--csv")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "backend,n,nnz,time_ms"
        assert len(lines) == 3
        first = lines[1].split(",")
        assert first[1] == "50" and first[2] == "96"  # star nnz = 2(n-2)

    def test_backend_py_selection(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--sizes", "40",
                               "--backend", "py", "--csv")
        assert code == 0
        assert out.splitlines()[1].startswith("py,40,")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nullforest", "nnz", "-"],
        input=P5, capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "3\n"
