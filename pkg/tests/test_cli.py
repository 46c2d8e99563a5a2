import json

import pytest
from click.testing import CliRunner

from extcodes import checks
from extcodes.checks import Row
from extcodes.cli import FAMILIES, main


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, [str(a) for a in args], catch_exceptions=False)


def test_construct_ovoid_writes_all_files(runner, tmp_path):
    res = invoke(runner, "construct", "--family", "ovoid-eq", "--field", "3^1", "--out", tmp_path)
    assert res.exit_code == 0, res.output
    assert "[10,4,6]" in res.output
    code = json.loads((tmp_path / "code.json").read_text())
    assert code["code"]["n"] == 10 and code["code"]["k"] == 4
    verdict = json.loads((tmp_path / "verdict.json").read_text())
    assert verdict["params"] == [10, 4, 6]
    csv = (tmp_path / "weights.csv").read_text().splitlines()
    assert csv[0] == "weight,count"
    assert {"0,1", "6,60", "9,20"} <= set(csv[1:])


def test_identical_jobs_give_identical_bytes(runner, tmp_path):
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        res = invoke(runner, "extend", "--family", "two-weight", "--field", "3^1", "--params", "poly=2,0,0,2,1",
                     "--params", "l=2", "--params", "s=1", "--params", "h=2", "--u", "search", "--out", out)
        assert res.exit_code == 0, res.output
        outs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert outs[0] == outs[1]
    assert set(outs[0]) == {"code.json", "weights.csv", "verdict.json"}


def test_trivial_standard_extension_warns_and_exits_zero(runner, tmp_path):
    res = invoke(runner, "extend", "--family", "rs", "--field", "5^1", "--params", "d=3", "--u", "standard", "--out", tmp_path)
    assert res.exit_code == 0
    assert "trivial extension" in res.output
    record = json.loads((tmp_path / "code.json").read_text())
    assert record["extension"]["trivial"] is True
    assert record["warnings"]


def test_designated_extension_of_rs_is_mds(runner, tmp_path):
    res = invoke(runner, "extend", "--family", "rs", "--field", "5^1", "--params", "d=3", "--u", "designated", "--out", tmp_path)
    assert res.exit_code == 0
    v = json.loads((tmp_path / "verdict.json").read_text())
    assert v["params"] == [5, 2, 4] and v["singleton_class"] == "MDS"


def test_explicit_u_list(runner, tmp_path):
    res = invoke(runner, "extend", "--family", "hamming", "--field", "3^1", "--params", "m=2",
                 "--u", "list:1,1,1,1", "--out", tmp_path)
    assert res.exit_code == 0
    assert json.loads((tmp_path / "code.json").read_text())["extension"]["u"] == [1, 1, 1, 1]


def test_analyze_and_search(runner, tmp_path):
    res = invoke(runner, "analyze", "--family", "conic", "--field", "5^1", "--params", "stage=3", "--out", tmp_path)
    assert res.exit_code == 0, res.output
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["base"]["code"]["singleton_class"] == "NMDS"
    res = invoke(runner, "search-u", "--family", "hamming", "--field", "3^1", "--params", "m=2",
                 "--objective", "max_d", "--out", tmp_path / "s")
    assert res.exit_code == 0 and "score=3" in res.output


@pytest.mark.parametrize(
    "args",
    [
        ["construct", "--family", "rs", "--field", "5^1", "--params", "d=9"],
        ["construct", "--family", "rs", "--field", "6^1", "--params", "d=2"],
        ["construct", "--family", "two-weight", "--field", "3^1"],
        ["construct", "--family", "rs", "--field", "5^1", "--params", "d"],
        ["construct", "--family", "nope", "--field", "5^1"],
        ["construct", "--family", "ovoid-tits", "--field", "3^1"],
        ["extend", "--family", "rs", "--field", "5^1", "--params", "d=3", "--u", "bogus"],
        ["verify", "--suite", "99"],
    ],
)
def test_invalid_input_exits_two(runner, tmp_path, args):
    res = runner.invoke(main, args + (["--out", str(tmp_path)] if args[0] != "verify" else []))
    assert res.exit_code == 2


def test_every_family_is_registered():
    assert set(FAMILIES) == {
        "rs", "conic", "hamming", "simplex", "two-weight", "ovoid-eq", "ovoid-tits", "ovoid-cyclic",
        "denniston", "sec6-single", "sec6-double", "sec6-bch", "sec6-ternary",
    }


def test_verify_passes_selected_suite(runner, tmp_path):
    out = tmp_path / "table.json"
    res = invoke(runner, "verify", "--suite", "1,3", "--out", out)
    assert res.exit_code == 0, res.output
    assert "[PASS] criterion 1" in res.output
    assert all(r["passed"] for r in json.loads(out.read_text()))


def test_verify_detects_a_corrupted_row(runner, monkeypatch):
    good = checks.CRITERIA["3"]

    def corrupted():
        rows = good()
        return [Row(r.criterion, r.name, False, "mutated") if i == 0 else r for i, r in enumerate(rows)]

    monkeypatch.setitem(checks.CRITERIA, "3", corrupted)
    res = runner.invoke(main, ["verify", "--suite", "3"])
    assert res.exit_code == 1
    assert "[FAIL] criterion 3" in res.output
