import json

from wreathmac.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_compute_json_round_trip(capsys):
    code, out = run_cli(
        capsys,
        "compute",
        "--g", "1", "--k", "1", "--n", "2",
        "--class", "0,0:1", "--class", "1,0:",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == 4
    assert payload["e_poly"] == [[0, 0, "2"], [1, 0, "-2"], [3, 0, "-2"], [4, 0, "2"]]
    # canonical serialization: parse and re-dump is byte-identical
    assert json.dumps(payload, sort_keys=True, separators=(",", ":")) == out.strip()


def test_compute_rank_one(capsys):
    code, out = run_cli(
        capsys,
        "compute", "--n", "1", "--g", "2", "--k", "1",
        "--class", "0,0:", "--class", "0,0:",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    # (t + q t^2)^4 has leading term q^4 t^8
    assert [4, 8, "1"] in payload["mhp"]
    assert payload["checks"]["curious_duality"] is True


def test_compute_bad_input(capsys):
    code, _ = run_cli(
        capsys, "compute", "--g", "0", "--k", "1", "--n", "4", "--class", "0,0:1",
        "--class", "0,0:1",
    )
    assert code == 3


def test_compute_check_all_passes(capsys):
    code, _ = run_cli(
        capsys,
        "compute", "--g", "0", "--k", "2", "--n", "3",
        "--class", "0,0:1", "--class", "0,0:1", "--class", "0,0:1", "--class", "1,0:",
        "--check-all", "--json",
    )
    assert code == 0


def test_wreath_mac_dump(capsys):
    code, out = run_cli(capsys, "wreath-mac", "--size", "1", "--core", "0", "--json")
    assert code == 0
    payload = json.loads(out)
    fam = payload["family"]
    assert fam["([1],[])"]["schur"]["([],[1])"] == [[1, 0, "1"]]
    assert fam["([],[1])"]["schur"]["([],[1])"] == [[0, 1, "1"]]
    code, out = run_cli(capsys, "wreath-mac", "--size", "2", "--core", "1")
    assert code == 0 and "pairing" in out


def test_oracle_pass_verdict(capsys):
    code, out = run_cli(
        capsys,
        "oracle", "--q", "7", "--n", "2", "--g", "1",
        "--eigs", "2", "--eigs", "1",
        "--strong-check", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4104
    assert payload["formula"] == 4104
    assert payload["verdict"] == "PASS"


def test_oracle_rank_one(capsys):
    code, out = run_cli(
        capsys, "oracle", "--q", "5", "--n", "1", "--g", "1", "--eigs", "", "--eigs", "", "--json"
    )
    assert code == 0
    assert json.loads(out)["count"] == 4**2


def test_oracle_rejects_nongeneric(capsys):
    code, _ = run_cli(
        capsys, "oracle", "--q", "7", "--n", "2", "--g", "1", "--eigs", "2", "--eigs", "3"
    )
    assert code == 3


def test_selftest_filter(capsys):
    code, out = run_cli(capsys, "selftest", "--filter", "09-partition")
    assert code == 0
    assert out.count("PASS") == 1 and "09-partition-identities" in out


def test_wreath_mac_size_zero(capsys):
    code, out = run_cli(capsys, "wreath-mac", "--size", "0", "--core", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["family"]["([],[])"]["pairing"] == [[0, 0, "1"]]


def test_oracle_rank_one_verdict(capsys):
    code, out = run_cli(
        capsys, "oracle", "--q", "7", "--n", "1", "--g", "1", "--eigs", "", "--eigs", "", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 36 and payload["verdict"] == "PASS"


def test_oracle_non_ccl_skips_formula(capsys):
    code, out = run_cli(
        capsys, "oracle", "--q", "13", "--n", "2", "--g", "1",
        "--eigs", "2", "--eigs", "5", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert "verdict" not in payload
    assert payload["count"] == 13**6 - 3 * 13**4 + 4 * 13**3 - 3 * 13**2 + 1
