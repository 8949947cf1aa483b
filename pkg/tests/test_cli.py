import json

import pytest

from monoidrep.cli import main, parse_weights
from monoidrep.monoids import from_transformations

from conftest import T3_GENERATORS


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


@pytest.fixture
def files(tmp_path):
    return {
        "nt5": write(tmp_path, "nt5.json", {"type": "nt", "t": 5}),
        "nt7": write(tmp_path, "nt7.json", {"type": "nt", "t": 7}),
        "nt_rep": write(tmp_path, "nt_rep.json", {"mode": "nt-paper"}),
        "t2": write(tmp_path, "t2.json",
                    {"type": "transformations", "degree": 2,
                     "generators": [[2, 1], [1, 1]]}),
        "t3": write(tmp_path, "t3.json",
                    {"type": "transformations", "degree": 3,
                     "generators": [list(g) for g in T3_GENERATORS]}),
        "natural": write(tmp_path, "natural.json", {"mode": "natural"}),
        "unfaithful": write(tmp_path, "unfaithful.json",
                            {"dim": 1, "matrices": {str(i): [["1"]] for i in range(6)}}),
        "bad_table": write(tmp_path, "bad.json",
                           {"type": "cayley", "identity": 0,
                            "table": [[0, 1, 2], [1, 2, 0], [2, 1, 0]]}),
    }


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- info ----------------------------------------------------------------------

def test_info_nt5(files, capsys):
    code, out, _ = run(capsys, ["info", files["nt5"]])
    assert code == 0
    assert "size=6" in out and "zero='0'" in out
    assert "idempotents (2)" in out


def test_info_with_representation(files, capsys):
    code, out, _ = run(capsys, ["info", files["t2"], files["natural"]])
    assert code == 0
    assert "faithful=yes" in out
    assert "(r=3)" in out and "(s=3)" in out


def test_info_json_round_trips(files, capsys):
    code, out, _ = run(capsys, ["info", files["nt5"], files["nt_rep"], "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["monoid"]["size"] == 6
    assert payload["representation"]["r"] == 2
    assert json.dumps(payload, indent=2, sort_keys=True) == out.strip()


def test_info_bad_table_exit_two(files, capsys):
    code, out, err = run(capsys, ["info", files["bad_table"]])
    assert code == 2
    assert "(1, 1, 1)" in err


# --- verify ----------------------------------------------------------------------

def test_verify_nt7_all(files, capsys):
    code, out, _ = run(capsys, ["verify", files["nt7"], files["nt_rep"],
                                "--which", "all"])
    assert code == 0
    assert "tensor: HOLDS r=2" in out
    assert "symmetric: HOLDS s=2" in out
    assert "dim_rad=6" in out and "dim_ann=5" in out
    assert "positive-refinement: monoid has a zero element (skipped)" in out
    assert "overall: OK" in out


def test_verify_json_report_schema(files, capsys):
    code, out, _ = run(capsys, ["verify", files["nt7"], files["nt_rep"],
                                "--which", "tensor", "--json"])
    assert code == 0
    payload = json.loads(out)
    report = payload["reports"][0]
    assert set(report) == {"theorem", "r", "s", "dim_rad", "dim_ann", "holds",
                           "witness", "powers_used"}
    assert report["holds"] is True
    assert report["powers_used"] == [0, 1]
    assert payload["sharpness"]["tensor"] == 1
    assert json.dumps(payload, indent=2, sort_keys=True) == out.strip()


def test_verify_t3_tensor(files, capsys):
    code, out, _ = run(capsys, ["verify", files["t3"], files["natural"],
                                "--which", "tensor"])
    assert code == 0
    assert "r=4" in out


def test_verify_positive_explicitly_on_zero_monoid(files, capsys):
    code, _, err = run(capsys, ["verify", files["nt5"], files["nt_rep"],
                                "--which", "positive"])
    assert code == 2
    assert "zero element" in err


def test_verify_unfaithful_exit_two(files, capsys):
    code, _, err = run(capsys, ["verify", files["nt5"], files["unfaithful"],
                                "--which", "tensor"])
    assert code == 2
    assert "not faithful" in err


def test_verify_corrupted_radical_exit_one(files, capsys):
    code, out, _ = run(capsys, ["verify", files["nt5"], files["nt_rep"],
                                "--which", "tensor", "--corrupt-radical"])
    assert code == 1
    assert "VIOLATED" in out and "witness" in out


def test_verify_powers_cap(files, capsys):
    code, _, err = run(capsys, ["verify", files["t2"], files["natural"],
                                "--which", "tensor", "--powers-cap", "1"])
    assert code == 2
    assert "cap" in err


# --- scan-nt -----------------------------------------------------------------------

def test_scan_nt_tensor(files, capsys):
    code, out, _ = run(capsys, ["scan-nt", "--from", "2", "--to", "8",
                                "--mode", "tensor", "--json"])
    assert code == 0
    payload = json.loads(out)
    rows = payload["rows"]
    assert [r["min_faithful"] for r in rows] == [1, 2, 3, 4, 5, 6, 7]
    assert all(r["min_covering"] <= 1 for r in rows)
    assert all(r["holds"] for r in rows)
    assert [r["dim_rad"] for r in rows] == [t - 1 for t in range(2, 9)]
    assert [r["dim_ann"] for r in rows] == [t - 2 for t in range(2, 9)]


def test_scan_nt_marks_dimension_threshold(capsys):
    code, out, _ = run(capsys, ["scan-nt", "--from", "8", "--to", "9", "--json"])
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows[0]["note"] == ""
    assert "9 < |M| = 10" in rows[1]["note"]


def test_scan_nt_text_table(capsys):
    code, out, _ = run(capsys, ["scan-nt", "--from", "2", "--to", "4"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:4] == ["t", "r", "dim_rad", "dim_ann"]
    assert "overall: OK" in out


def test_scan_nt_parallel_identical_output(capsys):
    _, seq, _ = run(capsys, ["scan-nt", "--from", "2", "--to", "5", "--json"])
    _, par, _ = run(capsys, ["scan-nt", "--from", "2", "--to", "5", "--json",
                             "--parallel"])
    assert seq == par


def test_scan_nt_bad_range(capsys):
    code, _, err = run(capsys, ["scan-nt", "--from", "5", "--to", "2"])
    assert code == 2
    assert "bad range" in err


def test_scan_nt_symmetric_mode(capsys):
    code, out, _ = run(capsys, ["scan-nt", "--from", "2", "--to", "5",
                                "--mode", "symmetric", "--json"])
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["min_faithful"] for r in rows] == [1, 2, 3, 4]
    assert all(r["holds"] for r in rows)


# --- molien -------------------------------------------------------------------------

def test_molien_identity_weight(files, capsys):
    code, out, _ = run(capsys, ["molien", files["nt5"], files["nt_rep"],
                                "--idempotent", "1", "--weights", "1:1", "-N", "4"])
    assert code == 0
    assert "g(t) = (1) / (t^2 - 2t + 1)" in out
    assert "series: 1, 2, 3, 4, 5" in out


def test_molien_two_terms(files, capsys):
    code, out, _ = run(capsys, ["molien", files["nt5"], files["nt_rep"],
                                "--idempotent", "1", "--weights", "1:1,2:1",
                                "-N", "2"])
    assert code == 0
    assert "series: 2, 2, 3" in out


def test_molien_json(files, capsys):
    code, out, _ = run(capsys, ["molien", files["nt5"], files["nt_rep"],
                                "--idempotent", "1", "--weights", "1:1,2:1",
                                "-N", "2", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["num"] == ["2", "-2", "1"]
    assert payload["den"] == ["1", "-2", "1"]
    assert payload["series"] == ["2", "2", "3"]
    assert json.dumps(payload, indent=2, sort_keys=True) == out.strip()


def test_molien_support_violation(files, capsys):
    code, _, err = run(capsys, ["molien", files["nt5"], files["nt_rep"],
                                "--idempotent", "0", "--weights", "2:1"])
    assert code == 2
    assert "outside eMe" in err


def test_parse_weights_with_bracketed_labels():
    m = from_transformations(2, [(2, 1), (1, 1)])
    w = parse_weights("[1,2]:1/2,[2,1]:-3", m)
    assert w[0] == 0.5 and w[1] == -3
    with pytest.raises(ValueError, match="no element labelled"):
        parse_weights("[9,9]:1", m)
    with pytest.raises(ValueError, match="bad rational"):
        parse_weights("[1,2]:x", m)


# --- determinism -----------------------------------------------------------------------

def test_outputs_are_deterministic(files, capsys):
    args = ["verify", files["nt5"], files["nt_rep"], "--json"]
    _, first, _ = run(capsys, args)
    _, second, _ = run(capsys, args)
    assert first == second
