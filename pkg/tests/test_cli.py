import sys

import pytest

from cfc.cli import main, parse_args
from cfc.exact import Formula, write_formula
from cfc.generators import gen_path
from cfc.graph import read_coloring, read_graph

C4 = "4 4\n0 1\n1 2\n2 3\n0 3\n"
C6 = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n"
P9 = "9 8\n" + "".join(f"{v} {v + 1}\n" for v in range(8))
K4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


@pytest.fixture(autouse=True)
def restore_excepthook(monkeypatch):
    monkeypatch.setattr(sys, "excepthook", sys.excepthook)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out.strip().splitlines()


class TestParseArgs:
    def test_budget_defaults(self):
        args = parse_args(["exact", "chi", "--graph", "g.txt"])
        assert args.k is None
        assert args.mode == "closed"
        assert args.node_budget > 0

    def test_dp_requires_k(self):
        with pytest.raises(SystemExit):
            parse_args(["dp", "--graph", "g.txt"])


class TestVerify:
    def test_valid(self, capsys, write_file):
        graph = write_file("c4.txt", C4)
        coloring = write_file("c4.col", "0 1\n1 2\n2 1\n3 2\n")
        code, lines = run(capsys, "verify", "--graph", graph, "--coloring", coloring)
        assert code == 0
        assert lines[-1] == "RESULT valid colors=2 colored=4"

    def test_invalid(self, capsys, write_file):
        graph = write_file("c4.txt", C4)
        coloring = write_file("c4.col", "0 1\n")
        code, lines = run(capsys, "verify", "--graph", graph, "--coloring", coloring)
        assert code == 1
        assert lines[-1] == "RESULT invalid colors=1 colored=1"

    def test_open_mode(self, capsys, write_file):
        graph = write_file("k2.txt", "2 1\n0 1\n")
        coloring = write_file("k2.col", "0 1\n1 1\n")
        code, lines = run(
            capsys, "verify", "--graph", graph, "--coloring", coloring, "--mode", "open"
        )
        assert code == 0
        assert lines[-1] == "RESULT valid colors=1 colored=2"

    def test_unreadable_graph(self, capsys, write_file):
        graph = write_file("bad.txt", "4 5\n0 1\n")
        coloring = write_file("c.col", "0 1\n")
        code, lines = run(capsys, "verify", "--graph", graph, "--coloring", coloring)
        assert code == 2
        assert lines[-1] == "RESULT error colors=0 colored=0"


class TestExact:
    def test_infeasible(self, capsys, write_file):
        graph = write_file("c4.txt", C4)
        code, lines = run(capsys, "exact", "chi", "--graph", graph, "--k", "1")
        assert code == 1
        assert lines == ["RESULT infeasible colors=0 colored=0"]

    def test_chi_writes_the_coloring(self, capsys, write_file, tmp_path):
        graph = write_file("c4.txt", C4)
        out = tmp_path / "c4.col"
        code, lines = run(capsys, "exact", "chi", "--graph", graph, "--out", str(out))
        assert code == 0
        assert lines == ["RESULT feasible colors=2 colored=2"]
        assert len(read_coloring(out, 4)) == 2

    def test_domset_is_one_color(self, capsys, write_file):
        graph = write_file("c6.txt", C6)
        code, lines = run(capsys, "exact", "domset", "--graph", graph)
        assert code == 0
        assert lines[-1] == "RESULT feasible colors=1 colored=2"

    def test_gamma_needs_k(self, capsys, write_file):
        graph = write_file("c4.txt", C4)
        code, lines = run(capsys, "exact", "gamma", "--graph", graph)
        assert code == 2
        assert lines[-1].startswith("RESULT error")

    def test_budget_exceeded(self, capsys, write_file):
        graph = write_file("c4.txt", C4)
        code, lines = run(
            capsys, "exact", "chi", "--graph", graph, "--k", "2", "--node-budget", "1"
        )
        assert code == 3
        assert lines[-1] == "RESULT budget-exceeded colors=0 colored=0"


class TestHeuristic:
    def test_trace(self, capsys, write_file):
        graph = write_file("p9.txt", P9)
        code, lines = run(capsys, "heuristic", "--graph", graph, "--trace")
        assert code == 0
        assert lines[0].startswith("# paths-initial")
        assert lines[-1] == "RESULT feasible colors=1 colored=3"


class TestDP:
    def test_path(self, capsys, write_file):
        graph = write_file("p9.txt", P9)
        code, lines = run(capsys, "dp", "--graph", graph, "--k", "1", "--minimize")
        assert code == 0
        assert lines[:-1] == ["1 1", "4 1", "7 1"]
        assert lines[-1] == "RESULT feasible colors=1 colored=3"

    def test_profile_lines_are_comments(self, capsys, write_file):
        graph = write_file("c4.txt", C4)
        code, lines = run(capsys, "dp", "--graph", graph, "--k", "2", "--profile")
        assert code == 0
        comments = [line for line in lines if line.startswith("# ")]
        assert comments
        assert lines[-1].startswith("RESULT feasible")

    def test_infeasible(self, capsys, write_file):
        graph = write_file("c4.txt", C4)
        code, lines = run(capsys, "dp", "--graph", graph, "--k", "1")
        assert code == 1
        assert lines[-1] == "RESULT infeasible colors=0 colored=0"

    def test_three_colors_rejected(self, capsys, write_file):
        graph = write_file("c4.txt", C4)
        assert main(["dp", "--graph", graph, "--k", "3"]) == 2

    def test_not_outerplanar(self, capsys, write_file):
        graph = write_file("k4.txt", K4)
        code, lines = run(capsys, "dp", "--graph", graph, "--k", "2")
        assert code == 2
        assert lines[-1] == "RESULT error colors=0 colored=0"


class TestDominateColor:
    def test_cf4(self, capsys, write_file):
        graph = write_file("c6.txt", C6)
        code, lines = run(capsys, "dominate-color", "cf4", "--graph", graph)
        assert code == 0
        assert lines[-1] == "RESULT feasible colors=2 colored=2"

    def test_open4_on_odd_cycle(self, capsys, write_file):
        graph = write_file("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
        code, lines = run(capsys, "dominate-color", "open4", "--graph", graph)
        assert code == 2
        assert lines[-1].startswith("RESULT error")


class TestGen:
    def test_path_to_file(self, capsys, tmp_path):
        out = tmp_path / "p5.txt"
        code, lines = run(capsys, "gen", "path", "--n", "5", "--out", str(out))
        assert code == 0
        assert lines == ["RESULT ok colors=0 colored=0"]
        assert read_graph(out) == gen_path(5)

    def test_to_stdout(self, capsys):
        code, lines = run(capsys, "gen", "gk", "--k", "2")
        assert code == 0
        assert lines[0] == "# cfc gen gk"
        assert lines[1] == "5 4"

    def test_missing_n(self, capsys):
        code, lines = run(capsys, "gen", "cycle")
        assert code == 2
        assert lines[-1].startswith("RESULT error")

    def test_no_small_o9(self, capsys):
        code, lines = run(capsys, "gen", "o9", "--n", "4")
        assert code == 1
        assert lines == ["RESULT infeasible colors=0 colored=0"]

    def test_open_reduction_roles(self, capsys, write_file, tmp_path):
        graph = write_file("k2.txt", "2 1\n0 1\n")
        roles = tmp_path / "roles.txt"
        code, _ = run(
            capsys, "gen", "open-reduction", "--graph", graph, "--roles", str(roles)
        )
        assert code == 0
        assert roles.read_text().splitlines() == [
            "0 original",
            "1 original",
            "2 pendant",
            "3 pendant",
            "4 subdivision",
        ]

    def test_reduction_from_formula_file(self, capsys, tmp_path):
        formula = tmp_path / "f.txt"
        write_formula(formula, Formula.from_clauses(3, [(0, 1, 2)]))
        out = tmp_path / "g.txt"
        roles = tmp_path / "roles.txt"
        code, lines = run(
            capsys,
            "gen",
            "reduction1",
            "--formula",
            str(formula),
            "--out",
            str(out),
            "--roles",
            str(roles),
        )
        assert code == 0
        assert lines[-1].startswith("RESULT ok")
        assert read_graph(out).n == 40
        role_lines = roles.read_text().splitlines()
        assert role_lines[0] == "0 z1.1-true"
        assert role_lines[36] == "36 c1.1-clause"

    def test_unknown_command(self, capsys):
        assert main(["paint"]) == 2
