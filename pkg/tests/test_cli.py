import json
import subprocess
import sys

import pytest

from truncdim import checks, formulas, parse_edge_list
from truncdim.cli import (EXIT_BUDGET, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK,
                          EXIT_USAGE, main)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def p9_file(tmp_path):
    from truncdim import format_edge_list
    from truncdim.families import path
    f = tmp_path / "p9.txt"
    f.write_text(format_edge_list(path(9)))
    return str(f)


class TestCompute:
    def test_auto_picks_formula_on_paths(self, capsys, p9_file):
        code, out, err = run(capsys, "compute", p9_file, "--k", "1")
        assert code == EXIT_OK
        assert "method: formula" in out and "size: 4" in out

    def test_exact_json_schema(self, capsys, p9_file):
        code, out, err = run(capsys, "compute", p9_file, "--k", "1",
                             "--method", "exact", "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert set(doc) == {"command", "input", "k", "result", "method",
                            "elapsed_s", "warnings"}
        assert set(doc["input"]) == {"n", "m", "diameter"}
        assert set(doc["result"]) == {"size", "set", "resolving", "collision"}
        assert doc["method"] == "exact" and doc["result"]["size"] == 4

    def test_auto_tree_dp(self, capsys, tmp_path):
        from truncdim import format_edge_list
        from truncdim.families import star
        f = tmp_path / "s7.txt"
        f.write_text(format_edge_list(star(7)))
        code, out, err = run(capsys, "compute", str(f), "--k", "1", "--verify")
        assert code == EXIT_OK
        assert "method: tree-dp" in out and "size: 5" in out

    def test_auto_cycle_formula(self, capsys, tmp_path):
        from truncdim import format_edge_list
        from truncdim.families import cycle
        f = tmp_path / "c7.txt"
        f.write_text(format_edge_list(cycle(7)))
        code, out, err = run(capsys, "compute", str(f), "--k", "1", "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["method"] == "formula" and doc["result"]["size"] == 3

    def test_heuristic_method(self, capsys, p9_file):
        code, out, err = run(capsys, "compute", p9_file, "--k", "1",
                             "--method", "ich", "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["method"] == "heuristic"
        assert doc["result"]["size"] >= 4

    def test_exact_cap_enforced(self, capsys, tmp_path):
        from truncdim import format_edge_list
        from truncdim.families import path as mkpath
        f = tmp_path / "p30.txt"
        f.write_text(format_edge_list(mkpath(30)))
        code, out, err = run(capsys, "compute", str(f), "--k", "1",
                             "--method", "exact")
        assert code == EXIT_BUDGET
        code, out, err = run(capsys, "compute", str(f), "--k", "1",
                             "--method", "exact", "--exact-cap", "30")
        assert code == EXIT_OK

    def test_auto_plain_graph_exact(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("n 5\n0 1\n0 2\n0 3\n1 2\n2 3\n3 4\n1 4\n")
        code, out, err = run(capsys, "compute", str(f), "--k", "1", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["method"] == "exact"

    def test_k0_formula(self, capsys, p9_file):
        code, out, err = run(capsys, "compute", p9_file, "--k", "0", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["result"]["size"] == 8

    def test_missing_file(self, capsys):
        code, out, err = run(capsys, "compute", "/nonexistent.txt", "--k", "1")
        assert code == EXIT_INPUT

    def test_disconnected_input(self, capsys, tmp_path):
        f = tmp_path / "dis.txt"
        f.write_text("n 4\n0 1\n2 3\n")
        code, out, err = run(capsys, "compute", str(f), "--k", "1")
        assert code == EXIT_INPUT
        assert "disconnected" in err


class TestVerify:
    def test_yes(self, capsys, p9_file):
        code, out, err = run(capsys, "verify", p9_file, "--k", "1",
                             "--set", "1,3,6,8")
        assert code == EXIT_OK and "resolving: yes" in out

    def test_no_with_collision(self, capsys, p9_file):
        code, out, err = run(capsys, "verify", p9_file, "--k", "1",
                             "--set", "0", "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["result"]["resolving"] is False
        assert doc["result"]["collision"]["pair"] == ["2", "3"]

    def test_unknown_label(self, capsys, p9_file):
        code, out, err = run(capsys, "verify", p9_file, "--k", "1",
                             "--set", "zebra")
        assert code == EXIT_INPUT

    def test_triangle_pair(self, capsys, tmp_path):
        f = tmp_path / "k3.txt"
        f.write_text("a b\nb c\na c\n")
        code, out, err = run(capsys, "verify", str(f), "--k", "1",
                             "--set", "a,b")
        assert code == EXIT_OK and "resolving: yes" in out


class TestGenerate:
    @pytest.mark.parametrize("argv,n,m", [
        (("generate", "path", "7"), 7, 6),
        (("generate", "cycle", "5"), 5, 5),
        (("generate", "complete", "4"), 4, 6),
        (("generate", "star", "6"), 6, 5),
        (("generate", "kst", "2", "3"), 5, 6),
        (("generate", "ks-kbar", "2", "2"), 4, 5),
        (("generate", "ks-k1-kt", "1", "2"), 4, 4),
        (("generate", "u", "9", "5"), 9, 14),
        (("generate", "stilde", "3", "4"), 30, 29),
    ])
    def test_families_parse_back(self, capsys, argv, n, m):
        code, out, err = run(capsys, *argv)
        assert code == EXIT_OK
        lg = parse_edge_list(out)
        assert lg.graph.n == n and lg.graph.num_edges == m

    def test_headers_carry_hint_and_prediction(self, capsys):
        code, out, err = run(capsys, "generate", "stilde", "3", "4")
        assert "# predicted-beta-k: 3 (k=4)" in out
        assert "# landmark-hint: 0 1 2" in out

    def test_hint_verifies_after_round_trip(self, capsys):
        code, out, err = run(capsys, "generate", "path", "9")
        hint = next(l for l in out.splitlines()
                    if l.startswith("# landmark-hint:"))
        labels = hint.split(":")[1].split()
        lg = parse_edge_list(out)
        from truncdim import all_pairs_distances, is_truncated_resolving
        ids = [lg.id_of(s) for s in labels]
        assert is_truncated_resolving(all_pairs_distances(lg.graph), ids, 1)

    def test_stilde_k1_warning_surfaced(self, capsys):
        code, out, err = run(capsys, "generate", "stilde", "2", "1")
        assert code == EXIT_OK
        assert "order formula" in err

    def test_bad_parameters(self, capsys):
        code, out, err = run(capsys, "generate", "u", "5", "5")
        assert code == EXIT_INPUT
        code, out, err = run(capsys, "generate", "path")
        assert code == EXIT_USAGE
        code, out, err = run(capsys, "generate", "nosuch", "3")
        assert code == EXIT_USAGE
        code, out, err = run(capsys, "generate", "ks-kbar", "2", "1")
        assert code == EXIT_INPUT


class TestTree:
    @pytest.fixture
    def star7_file(self, tmp_path):
        from truncdim import format_edge_list
        from truncdim.families import star
        f = tmp_path / "s7.txt"
        f.write_text(format_edge_list(star(7)))
        return str(f)

    def test_beta1(self, capsys, star7_file):
        code, out, err = run(capsys, "tree", "beta1", star7_file, "--json")
        assert code == EXIT_OK
        assert json.loads(out)["result"]["size"] == 5

    def test_ld(self, capsys, star7_file):
        code, out, err = run(capsys, "tree", "ld", star7_file, "--json")
        assert code == EXIT_OK
        assert json.loads(out)["result"]["size"] == 6

    def test_classic(self, capsys, star7_file):
        code, out, err = run(capsys, "tree", "classic", star7_file, "--json")
        assert code == EXIT_OK
        assert json.loads(out)["result"]["size"] == 5

    def test_tk_member(self, capsys, star7_file):
        code, out, err = run(capsys, "tree", "tk", star7_file, "--k", "1",
                             "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["member"] is True and doc["size"] == 5
        assert doc["method"] == "tk-peel"
        assert len(doc["rounds"]) == 1

    def test_tk_non_member(self, capsys, tmp_path):
        from truncdim import format_edge_list
        from truncdim.families import path as mkpath
        f = tmp_path / "p5.txt"
        f.write_text(format_edge_list(mkpath(5)))
        code, out, err = run(capsys, "tree", "tk", str(f), "--k", "1")
        assert code == EXIT_OK and "condition 2" in out

    def test_tk_budget(self, capsys, star7_file):
        code, out, err = run(capsys, "tree", "tk", star7_file, "--k", "1",
                             "--budget", "1")
        assert code == EXIT_BUDGET

    def test_rejects_cycle(self, capsys, tmp_path):
        from truncdim import format_edge_list
        from truncdim.families import cycle
        f = tmp_path / "c5.txt"
        f.write_text(format_edge_list(cycle(5)))
        code, out, err = run(capsys, "tree", "beta1", str(f))
        assert code == EXIT_INPUT


class TestCheckTheorems:
    def test_small_run_passes(self, capsys):
        code, out, err = run(capsys, "check-theorems", "--max-n", "4",
                             "--trees", "5", "--family-trees", "6",
                             "--random-trees", "5", "--random-graphs", "5")
        assert code == EXIT_OK
        assert "checks passed" in out

    def test_json_output(self, capsys):
        code, out, err = run(capsys, "check-theorems", "--max-n", "4",
                             "--trees", "4", "--family-trees", "5",
                             "--random-trees", "2", "--random-graphs", "2",
                             "--json")
        assert code == EXIT_OK
        docs = json.loads(out)
        assert all(d["passed"] for d in docs)

    def test_injected_perturbation_fails(self, capsys, monkeypatch):
        # mutation sanity: a wrong formula must turn the sweep red
        real = formulas.beta_k_path

        def perturbed(n, k):
            v = real(n, k)
            return v + 1 if (n, k) == (9, 1) else v

        monkeypatch.setattr(formulas, "beta_k_path", perturbed)
        res = checks.check_path_formula(max_n=10, max_k=2)
        assert not res.passed
        code, out, err = run(capsys, "check-theorems", "--max-n", "4",
                             "--trees", "4", "--family-trees", "5",
                             "--random-trees", "2", "--random-graphs", "2")
        assert code == EXIT_CHECK_FAILED


class TestUsage:
    def test_usage_errors_exit_1(self, capsys):
        assert run(capsys, "compute")[0] == EXIT_USAGE
        assert run(capsys, "frobnicate")[0] == EXIT_USAGE

    def test_console_script_installed(self):
        r = subprocess.run([sys.executable, "-m", "truncdim.cli", "--help"],
                           capture_output=True, text=True)
        assert r.returncode == 0
        assert "truncated metric dimension" in r.stdout.lower()
