import json
from fractions import Fraction

from g2orbits.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassifyCommand:
    def test_json_report(self, capsys):
        code, out, err = run_cli(capsys, "classify", "--tau", "1,0,-1", "--json")
        assert code == 0
        d = json.loads(out)
        assert d["stabilizer_dim"] == 4
        assert d["orbit_type"] == "DIM4_SHORT"
        assert d["tau"] == ["1", "0", "-1"]
        assert d["vanishing_roots"] == [[0, 1, 0], [1, 0, 1]]
        assert d["structure"] == {"dim": 4, "derived_dim": 3, "center_dim": 1}

    def test_text_report(self, capsys):
        code, out, err = run_cli(capsys, "classify", "--tau", "0,0,0")
        assert code == 0
        assert "orbit_label:     G2/G2" in out
        assert "stabilizer_dim:  14" in out

    def test_sum_nonzero_exit_2(self, capsys):
        code, out, err = run_cli(capsys, "classify", "--tau", "1,1,1")
        assert code == 2
        assert "SUM_NONZERO" in err

    def test_project_flag(self, capsys):
        # (2,1,0) minus its mean 1 is (1,0,-1)
        code, out, err = run_cli(capsys, "classify", "--tau", "2,1,0", "--project", "--json")
        assert code == 0
        d = json.loads(out)
        assert d["tau"] == ["1", "0", "-1"]
        assert d["orbit_type"] == "DIM4_SHORT"

    def test_rational_input(self, capsys):
        code, out, err = run_cli(capsys, "classify", "--tau", "1/2,0,-1/2", "--json")
        assert code == 0
        d = json.loads(out)
        assert d["orbit_type"] == "DIM4_SHORT"

    def test_bad_rational_exit_2(self, capsys):
        code, out, err = run_cli(capsys, "classify", "--tau", "1,x,0")
        assert code == 2
        assert "error" in err

    def test_wrong_arity_exit_2(self, capsys):
        code, out, err = run_cli(capsys, "classify", "--tau", "1,2")
        assert code == 2

    def test_convention_flag(self, capsys):
        code, out, err = run_cli(
            capsys, "classify", "--tau", "1,0,-1", "--json", "--convention", "short=u1xsp1"
        )
        assert code == 0
        d = json.loads(out)
        assert d["orbit_label"] == "G2/((U(1)xSp(1))/Z2)"
        assert d["convention"] == "short=u1xsp1"


class TestScanCommand:
    def test_csv(self, capsys):
        code, out, err = run_cli(capsys, "scan", "--radius", "1", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "tau1,tau2,tau3,stabilizer_dim,orbit_type"
        assert len(lines) == 8
        assert "0,0,0,14,FULL" in lines

    def test_json(self, capsys):
        code, out, err = run_cli(capsys, "scan", "--radius", "2", "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert d["radius"] == 2
        assert d["counts"]["FULL"] == 1
        assert d["stabilizer_dims_ok"] is True
        assert len(d["census"]) == d["points"]

    def test_bad_radius_exit_2(self, capsys):
        code, out, err = run_cli(capsys, "scan", "--radius", "0")
        assert code == 2


class TestTableCommand:
    def test_table(self, capsys):
        code, out, err = run_cli(capsys, "table")
        assert code == 0
        d = json.loads(out)
        assert d["basis"] == [f"e{i}" for i in range(8)]
        assert d["display"][4][4] == "-e0"
        assert d["display"][1][2] == "e3"
        # octonions serialize as arrays of 8 rational strings
        prod = d["products"][4][4]
        assert prod == ["-1", "0", "0", "0", "0", "0", "0", "0"]
        assert all(Fraction(s) is not None for row in d["products"] for p in row for s in p)


class TestDerivationsCommand:
    def test_payload(self, capsys):
        code, out, err = run_cli(capsys, "derivations")
        assert code == 0
        d = json.loads(out)
        assert d["dimension"] == 14
        assert len(d["basis"]) == 14
        assert len(d["basis"][0]) == 8 and len(d["basis"][0][0]) == 8
        assert d["structure_constants"], "no structure constants emitted"
        entry = d["structure_constants"][0]
        assert set(entry) == {"i", "j", "k", "c"}
        Fraction(entry["c"])  # parses as a rational


class TestRootsCommand:
    def test_payload(self, capsys):
        code, out, err = run_cli(capsys, "roots")
        assert code == 0
        d = json.loads(out)
        assert len(d["roots"]) == 12
        classes = [r["length_class"] for r in d["roots"]]
        assert classes.count("short") == 6 and classes.count("long") == 6
        lengths = {r["killing_sq_length"] for r in d["roots"]}
        assert lengths == {"1/12", "1/4"}
