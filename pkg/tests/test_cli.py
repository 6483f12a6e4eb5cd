import json

import pytest

from duadiq import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cosets_text(capsys):
    code, out, _ = run(capsys, "cosets", "-n", "13", "-q", "4")
    assert code == 0
    assert "3 cosets" in out
    assert "leader   0" in out and "leader   1" in out and "leader   2" in out


def test_cosets_even_n_exit_2(capsys):
    code, _, err = run(capsys, "cosets", "-n", "4", "-q", "2")
    assert code == 2
    assert "invalid input" in err


def test_cosets_n3_singletons(capsys):
    code, out, _ = run(capsys, "cosets", "-n", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["cosets"] == [[0], [1], [2]]


def test_splittings_n23(capsys):
    code, out, _ = run(capsys, "splittings", "-n", "23", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 1
    entry = payload["splittings"][0]
    assert entry["s1_leaders"] == [1]
    assert (-2) % 23 in entry["multipliers"]


def test_splittings_empty_still_exit_0(capsys):
    code, out, _ = run(capsys, "splittings", "-n", "11", "--multiplier", "-2", "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == 0


def test_splittings_n17(capsys):
    code, out, _ = run(capsys, "splittings", "-n", "17", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert [1, 3] in [e["s1_leaders"] for e in payload["splittings"]]


def test_quantum_qr_23(capsys):
    code, out, _ = run(capsys, "quantum", "-n", "23", "--qr", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert (payload["n"], payload["k"], payload["d_lo"], payload["d_hi"]) == (24, 0, 8, 8)


def test_quantum_qr_11_exit_3(capsys):
    code, _, err = run(capsys, "quantum", "-n", "11", "--qr")
    assert code == 3
    assert "no applicable construction" in err
    assert "failed precondition" in err


def test_quantum_leaders_141(capsys):
    code, out, _ = run(capsys, "quantum", "-n", "141", "--leaders", "2,3,10",
                       "--budget", "50000", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 144 and payload["k"] == 0
    assert payload["d_lo"] >= 2  # budget-honest bound, far below the record value


def test_quantum_leaders_rejects_bad_set(capsys):
    code, _, err = run(capsys, "quantum", "-n", "5", "--leaders", "0")
    assert code == 3
    assert "A cap -2A" in err


def test_quantum_duadic_index(capsys):
    code, out, _ = run(capsys, "quantum", "-n", "17", "--duadic-index", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["n"] == 18


def test_quantum_annotation_route(capsys, tmp_path):
    path = tmp_path / "ann.json"
    path.write_text(json.dumps([{"n": 93, "k": 48, "d": 21, "source": "tables"}]))
    code, out, _ = run(capsys, "quantum", "-n", "93", "--from-annotation",
                       "--annotations", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert (payload["n"], payload["k"], payload["d_lo"]) == (96, 0, 22)


def test_quantum_secondary_steps(capsys, tmp_path):
    path = tmp_path / "ann.json"
    path.write_text(json.dumps([{"n": 120, "k": 120, "d": 32, "source": "t"}]))
    # use the qr route instead for a computed chain
    code, out, _ = run(capsys, "quantum", "-n", "13", "--qr", "--secondary-steps", "2",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    seconds = payload["secondary"]
    assert [(s["n"], s["k"], s["d_lo"]) for s in seconds] == [(13, 0, 5), (12, 0, 4)]


def test_distance_exact(capsys):
    code, out, _ = run(capsys, "distance", "-n", "5", "--leaders", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["lo"] == 3 and payload["hi"] == 3
    assert payload["lo_src"] == "exact-enumeration"


def test_distance_via_binary(capsys):
    code, out, _ = run(capsys, "distance", "-n", "23", "--leaders", "1",
                       "--via-binary", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["lo"] == payload["hi"] == 7


def test_distance_via_binary_refused(capsys):
    code, _, err = run(capsys, "distance", "-n", "5", "--leaders", "1", "--via-binary")
    assert code == 3
    assert "ord_5(2) = 4" in err and "ord_5(4) = 2" in err


def test_distance_fixed_subcode_flag(capsys):
    code, out, _ = run(capsys, "distance", "-n", "13", "--leaders", "1",
                       "--fixed-subcode", "-1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["lo"] == payload["hi"] == 5


def test_distance_budget_zero_interval(capsys):
    code, out, _ = run(capsys, "distance", "-n", "23", "--leaders", "1",
                       "--budget", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["lo"] == 1 and payload["hi"] is None
    assert payload["lo_src"] == "budget-exhausted"


def test_table_small(capsys):
    import csv
    import io

    code, out, _ = run(capsys, "table", "--max-n", "23")
    assert code == 0
    reader = csv.reader(io.StringIO(out))
    header = next(reader)
    assert header == ["n", "leaders", "type", "params", "source"]
    rows = [r for r in reader if r]
    assert [r[0] for r in rows] == ["5", "7", "13", "17", "23"]
    assert rows[-1][3] == "[[24,0,8]]"
    assert [r[2] for r in rows] == ["QR", "QR", "QR", "D", "QR"]


def test_table_max_n_3_empty(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "3")
    assert code == 0
    assert out.strip() == "n,leaders,type,params,source"


def test_determinism_byte_identical(capsys):
    outs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "quantum", "-n", "17", "--duadic-index", "1", "--format", "json")
        outs.add(out)
    assert len(outs) == 1
    # worker count must not alter output
    _, out1, _ = run(capsys, "table", "--max-n", "13")
    _, out2, _ = run(capsys, "table", "--max-n", "13", "--workers", "2")
    assert out1 == out2


def test_unknown_flag_rejected(capsys):
    code, _, _ = run(capsys, "cosets", "-n", "5", "--nope")
    assert code == 2


def test_expand_flag(capsys):
    code, out, _ = run(capsys, "splittings", "-n", "7", "--expand", "--format", "json")
    assert code == 0
    entry = json.loads(out)["splittings"][0]
    assert entry["s1"] == [1, 2, 4] and entry["s2"] == [3, 5, 6]


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("DUADIQ_BUDGET", "0")
    code, out, _ = run(capsys, "distance", "-n", "23", "--leaders", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["lo"] == 1 and payload["hi"] is None
    monkeypatch.setenv("DUADIQ_BUDGET", "-3")
    code, _, err = run(capsys, "distance", "-n", "23", "--leaders", "1")
    assert code == 2
