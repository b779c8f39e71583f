"""Command line surface: envelope shape, determinism, exit codes, report files."""

import json
import os

import pytest

from rootnumbers.cli import main

ENVELOPE_KEYS = {"command", "config", "results", "warnings", "paper_anchor"}


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, argv)
    assert code == 0
    return json.loads(out)


def test_envelope_keys_everywhere(capsys):
    for argv in (
        ["root-number", "--p", "11"],
        ["orbits", "--p", "3"],
        ["gauss", "--p", "5"],
        ["o-invariant", "--p", "3", "--coeffs", "(1,0);(0,1);(1,1)"],
    ):
        payload = run_json(capsys, argv)
        assert set(payload) == ENVELOPE_KEYS
        assert payload["command"] == argv[0]
        assert isinstance(payload["warnings"], list)
        assert payload["paper_anchor"]


def test_output_is_deterministic(capsys):
    argv = ["root-number", "--p", "17", "--twisted", "--signs=-,+,-"]
    _, first = run(capsys, argv)
    _, second = run(capsys, argv)
    assert first == second
    argv = ["o-invariant", "--p", "5", "--coeffs", "(1,0);(0,1);(2,1)"]
    _, first = run(capsys, argv)
    _, second = run(capsys, argv)
    assert first == second


def test_root_number_twisted(capsys):
    payload = run_json(capsys, ["root-number", "--p", "11", "--twisted"])
    r = payload["results"]
    assert r["W_global"] == -1
    assert r["W_infinity"] == -1
    assert r["conductor"] == "11^8"
    assert r["conductor_value"] == 11 ** 8
    assert r["epsilon_p"] == str(11 ** 16)   # above 2^53, so a decimal string
    assert r["delta_p"] == 1
    assert r["local_W"]["11"] == 1
    assert r["functional_equation"]["sign"] == -1
    assert r["functional_equation"]["center"] == 2


def test_root_number_untwisted_follows_signs(capsys):
    for signs, w in (("+,+,+", 1), ("+,-,+", -1), ("-,-,-", -1), ("-,+,-", 1)):
        payload = run_json(capsys, ["root-number", "--p", "17", "--signs=" + signs])
        r = payload["results"]
        assert r["W_global"] == w
        assert r["conductor"] == "17^5"
        assert r["epsilon_p"] == 1


def test_root_number_signs_variants(capsys):
    a = run_json(capsys, ["root-number", "--p", "11", "--signs", "+1,-1,+1"])
    b = run_json(capsys, ["root-number", "--p", "11", "--signs", "+,-,+"])
    assert a["results"] == b["results"]


def test_gauss_quadratic(capsys):
    payload = run_json(capsys, ["gauss", "--p", "5"])
    r = payload["results"]
    assert r["G_squared"] == 5
    assert r["abs_G_squared"] == 5
    payload = run_json(capsys, ["gauss", "--p", "7"])
    assert payload["results"]["G_squared"] == -7


def test_gauss_trivial_character(capsys):
    payload = run_json(capsys, ["gauss", "--q", "11", "--char-exponent", "0"])
    assert payload["results"]["G_rational"] == -1
    assert payload["results"]["G_squared"] == 1


def test_orbits_output(capsys):
    payload = run_json(capsys, ["orbits", "--p", "5"])
    r = payload["results"]
    assert r["states"] == 24 ** 3
    assert r["n_orbits"] == 128
    assert r["nondegenerate_orbits"] == 64
    assert r["diamond_orbits"] == 2
    assert r["diamond_orbit_sizes"] == [32, 32]
    assert r["stabilizer"] == 2
    assert r["s3"] == "fixes"
    assert r["plus_orbit_is_squares"]
    assert r["field_of_definition"]["radicand"] == 5
    assert r["projector_checks_ok"]
    payload = run_json(capsys, ["orbits", "--p", "7"])
    assert payload["results"]["s3"] == "swaps"
    assert payload["results"]["field_of_definition"]["radicand"] == -7


def test_o_invariant_square(capsys):
    payload = run_json(capsys, ["o-invariant", "--p", "5", "--coeffs", "(1,0);(0,1);(1,1)"])
    r = payload["results"]
    assert r["class"] == "square"
    assert r["det_class"] == "plus"
    assert r["dets"] == [4, 4, 1]
    assert r["exponents"] == [4, 4, 1]
    assert r["bridge"] is True
    assert r["curve"]["curve"] == {"l": 7, "a": 1, "b": 1}


def test_o_invariant_nonsquare_and_degenerate(capsys):
    payload = run_json(capsys, ["o-invariant", "--p", "5", "--coeffs", "(1,0);(0,1);(2,1)"])
    assert payload["results"]["class"] == "nonsquare"
    assert payload["results"]["det_class"] == "minus"
    payload = run_json(capsys, ["o-invariant", "--p", "5", "--coeffs", "(1,0);(2,0);(0,1)"])
    assert payload["results"]["class"] == "degenerate"
    assert payload["results"]["det_class"] == "degenerate"


def test_text_format(capsys):
    code, out = run(capsys, ["gauss", "--p", "5", "--format", "text"])
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert all(" = " in l for l in lines)
    assert any(l.startswith("results.G_squared = 5") for l in lines)


def test_exit_code_value_error(capsys):
    assert main(["root-number", "--p", "12"]) == 2
    assert main(["gauss", "--p", "15"]) == 2
    assert main(["o-invariant", "--p", "5", "--coeffs", "(0,0);(0,1);(1,1)"]) == 2
    capsys.readouterr()


def test_exit_code_resource_limit(capsys):
    assert main(["orbits", "--p", "19"]) == 4
    err = capsys.readouterr().err
    assert "resource limit" in err


def test_orbits_bound_override(capsys):
    payload = run_json(capsys, ["orbits", "--p", "3", "--bound", "3"])
    assert payload["results"]["n_orbits"] == 24


def test_report_writes_files(tmp_path, capsys):
    out = str(tmp_path / "rep")
    payload = run_json(capsys, ["report", "--out", out, "--primes", "11",
                                "--gauss-q", "7", "--orbit-p", "3"])
    r = payload["results"]
    assert r["triple_rows"] == 16
    for path in r["csv_files"] + r["figures"]:
        assert os.path.exists(path)
        assert os.path.getsize(path) > 0
    csvs = {os.path.basename(p) for p in r["csv_files"]}
    assert csvs == {"triple_root_numbers.csv", "single_form_root_numbers.csv"}
    figs = {os.path.basename(p) for p in r["figures"]}
    assert figs == {"root_numbers.png", "gauss_walk.png", "orbit_sizes.png"}
    with open(os.path.join(out, "triple_root_numbers.csv")) as fh:
        rows = fh.read().splitlines()
    assert rows[0] == "p,s1,s2,s3,twisted,W_global,conductor_exponent,epsilon_p,delta_p"
    assert len(rows) == 17
    twisted = [row for row in rows[1:] if row.split(",")[4] == "1"]
    assert all(row.split(",")[5] == "-1" for row in twisted)


def test_report_is_deterministic(tmp_path, capsys):
    import hashlib
    digests = []
    for name in ("a", "b"):
        out = str(tmp_path / name)
        payload = run_json(capsys, ["report", "--out", out, "--primes", "11",
                                    "--gauss-q", "7", "--orbit-p", "3"])
        h = hashlib.sha256()
        for path in sorted(payload["results"]["csv_files"] + payload["results"]["figures"]):
            with open(path, "rb") as fh:
                h.update(fh.read())
        digests.append(h.hexdigest())
    assert digests[0] == digests[1]


def test_warnings_for_small_genus(capsys):
    payload = run_json(capsys, ["root-number", "--p", "5"])
    assert payload["warnings"]
    payload = run_json(capsys, ["root-number", "--p", "11"])
    assert payload["warnings"] == []
