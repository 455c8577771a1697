import json

import pytest

from ellrank.cli import main, run_table, _bundled_table
from ellrank.report import Report, parse_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--m", "2", "--p", "3", "--q", "7", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["discriminant"] == -84011696
    assert all(d["flags"].values())
    assert d["marked_points"]["AB"] == ["-2", "-21"]


def test_info_never_fails_on_flags(capsys):
    code, out, _ = run(capsys, "info", "--m", "4", "--p", "3", "--q", "7", "--json")
    assert code == 0
    assert json.loads(out)["flags"]["m_not_0_mod_4"] is False


def test_info_bad_prime(capsys):
    code, _, err = run(capsys, "info", "--m", "2", "--p", "9", "--q", "7")
    assert code == 2 and "InvalidPrime" in err


@pytest.mark.parametrize("a,b,p,n", [(0, 1, 5, 6), (0, 2, 7, 9)])
def test_count(capsys, a, b, p, n):
    code, out, _ = run(capsys, "count", "--a", str(a), "--b", str(b), "--prime", str(p))
    assert code == 0 and out.strip() == str(n)


def test_count_not_prime(capsys):
    code, _, err = run(capsys, "count", "--a", "0", "--b", "1", "--prime", "4")
    assert code == 2 and "NotPrime" in err


def test_count_bad_reduction(capsys):
    code, _, err = run(capsys, "count", "--a", "0", "--b", "1", "--prime", "3")
    assert code == 1 and "BadReduction" in err


@pytest.mark.parametrize("mpq", [("2", "3", "7"), ("2", "3", "11")])
def test_torsion_trivial(capsys, mpq):
    code, out, _ = run(capsys, "torsion", "--m", mpq[0], "--p", mpq[1], "--q", mpq[2], "--json")
    assert code == 0 and json.loads(out)["structure"] == "trivial"


def test_torsion_outside_hypotheses(capsys):
    code, out, _ = run(capsys, "torsion", "--m", "66", "--p", "3", "--q", "5", "--json")
    d = json.loads(out)
    assert code == 0 and d["note"] == "hypotheses_unmet" and d["structure"] == "trivial"


def test_torsion_general_curve_and_primes(capsys):
    code, out, _ = run(capsys, "torsion", "--a", "0", "--b", "1", "--primes", "5,7,11", "--json")
    d = json.loads(out)
    assert d["structure"] == "cyclic(6)" and sorted(d["counts"]) == ["11", "5", "7"]


@pytest.mark.parametrize("mpq,status,code", [
    (("2", "3", "7"), "certified_lb2", 0),
    (("258", "5", "7"), "certified_lb2", 0),
    (("4", "3", "7"), "hypotheses_unmet", 1),
])
def test_rank_lb(capsys, mpq, status, code):
    got, out, _ = run(capsys, "rank-lb", "--m", mpq[0], "--p", mpq[1], "--q", mpq[2], "--json")
    d = json.loads(out)
    assert got == code
    assert d["schema"] == 1 and d["rows"][0]["status"] == status


def test_table_bundled(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, stdout, _ = run(capsys, "table", "--output", str(out))
    d = json.loads(out.read_text())
    assert code == 0
    assert len(d["rows"]) == 77
    assert {r["status"] for r in d["rows"]} == {"certified_lb2"}
    assert stdout.strip().startswith("77 rows certified_lb2=77")
    assert set(d) >= {"schema", "version", "rows"}
    row = d["rows"][0]
    assert set(row) >= {"m", "p", "q", "flags", "status", "certificate", "millis"}


def test_table_dedup_and_claimed_rank(tmp_path, capsys):
    csv = tmp_path / "t.csv"
    csv.write_text("m,pq,claimed_rank\n2,15,3\n2,21,2\n2,15,3\n")
    code, _, _ = run(capsys, "table", "--input", str(csv), "--output", str(tmp_path / "o.json"))
    rows = json.loads((tmp_path / "o.json").read_text())["rows"]
    assert code == 0
    assert [(r["pq"], r["count"], r["claimed_rank"]) for r in rows] == [(15, 2, 3), (21, 1, 2)]
    assert rows[0]["status"] == "certified_lb2" and (rows[0]["p"], rows[0]["q"]) == (3, 5)


def test_table_rejects_bad_rows(tmp_path, capsys):
    csv = tmp_path / "t.csv"
    csv.write_text("m,pq,claimed_rank\n2,16,2\n2,21,2\nx,1,2\n2,9,2\n")
    code, _, err = run(capsys, "table", "--input", str(csv), "--no-timings")
    assert code == 3
    assert "line 2" in err and "16" in err and "line 4" in err and "line 5" in err


def test_table_bad_header(tmp_path, capsys):
    csv = tmp_path / "t.csv"
    csv.write_text("m,p,q\n2,3,7\n")
    code, _, _ = run(capsys, "table", "--input", str(csv))
    assert code == 3


def test_table_missing_file(capsys):
    code, _, _ = run(capsys, "table", "--input", "/nonexistent/table.csv")
    assert code == 2


def test_report_round_trip():
    rep = run_table("m,pq,claimed_rank\n2,21,2\n4,21,2\n2,16,2\n", timings=False)
    d = json.loads(json.dumps(rep.to_dict()))
    assert Report.from_dict(d) == rep
    assert Report.from_dict(d).to_dict() == d
    assert [r["status"] for r in rep.rows] == ["certified_lb2", "hypotheses_unmet"]
    assert rep.exit_code == 3


def test_deterministic_output(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        run(capsys, "table", "--no-timings", "--output", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_parallel_matches_serial():
    text = "m,pq,claimed_rank\n2,21,2\n194,33,2\n2,15,3\n258,95,5\n"
    serial = run_table(text, jobs=1, timings=False)
    parallel = run_table(text, jobs=2, timings=False)
    assert serial == parallel


def test_verify_lemmas_list(capsys):
    code, out, _ = run(capsys, "verify-lemmas", "--list")
    assert code == 0
    assert "halving-B" in out and "order3/case-I" in out


def test_verify_lemmas_default_run(capsys):
    code, out, _ = run(capsys, "verify-lemmas", "--json")
    results = json.loads(out)
    mismatched = [r["spec"]["name"] for r in results if not r["ok"]]
    # the only corpus claim without a modular obstruction
    assert mismatched == ["order5/x-even/full"]
    assert code == 1


def test_verify_lemmas_mutated_spec(tmp_path, capsys):
    spec = {
        "name": "halving-B/mutated", "modulus": 4, "polynomial": "w**2 - (4*s + 2*m)",
        "variables": [["w", "any"], ["s", "any"], ["m", "2 mod 4"]], "expect_empty": True,
    }
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "verify-lemmas", "--extra-spec", str(path), "--json")
    res = {r["spec"]["name"]: r for r in json.loads(out)}
    assert res["halving-B/mutated"]["solution_count"] > 0
    assert not res["halving-B/mutated"]["ok"]
    assert code == 1


def test_bundled_table_parses():
    rows, errors = parse_table(_bundled_table())
    assert not errors and len(rows) == 77
