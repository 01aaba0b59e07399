"""The command-line interface, driven through main() with captured output."""

from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from motzkinperm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert err == ""
    return code, json.loads(out)


def test_map_prints_the_path(capsys):
    code, out, err = run(capsys, "map", "--perm", "5 7 2 4 3 8 1 6 9 12 10 11")
    assert code == 0
    assert out.strip() == "U U L4 L0 D1 U D0 D0 L0 U L2 D0"


def test_map_json_shape(capsys):
    code, data = run_json(capsys, "map", "--perm", "2 3 1")
    assert code == 0
    assert data["perm"] == [2, 3, 1]
    assert data["path"] == "U L1 D0"
    assert data["word"] == "ULD"
    assert data["steps"][1] == {"letter": "L", "height": 1, "color": 1}


def test_unmap_inverts_map(capsys):
    code, out, _ = run(capsys, "unmap", "--path", "U U L4 L0 D1 U D0 D0 L0 U L2 D0")
    assert code == 0
    assert out.strip() == "5 7 2 4 3 8 1 6 9 12 10 11"


def test_map_unmap_round_trip_json(capsys):
    code, data = run_json(capsys, "map", "--perm", "2 1")
    assert code == 0
    code, data2 = run_json(capsys, "unmap", "--path", data["path"])
    assert code == 0
    assert data2["perm"] == [2, 1]


def test_stats_json_fields(capsys):
    code, data = run_json(capsys, "stats", "--perm", "5 7 2 4 3 8 1 6 9 12 10 11")
    assert code == 0
    assert data["fixed_points"] == 2
    assert data["excedances"] == 4
    assert data["double_excedances"] == 0
    assert data["cycles"] == 5
    assert data["inversions"] == 17
    assert data["word"] == "UULLDUDDLULD"
    assert data["monomial"] == "x^2*v^4*t^5*q^17"


def test_stats_plain_output_mentions_every_statistic(capsys):
    code, out, _ = run(capsys, "stats", "--perm", "2 3 1")
    assert code == 0
    for line in ("excedances", "cycles", "inversions", "word"):
        assert line in out


def test_census_passes_and_exits_zero(capsys):
    code, data = run_json(
        capsys, "census", "--subset", "Avoid321", "--n-max", "5"
    )
    assert code == 0
    assert data["passing"] is True
    assert data["values"]["BruteForce"] == [1, 1, 2, 5, 14, 42]
    assert data["values"]["ClosedForm"] == [1, 1, 2, 5, 14, 42]


def test_census_csv_output(capsys):
    code, out, _ = run(
        capsys, "census", "--subset", "All", "--n-max", "4", "--csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("n,")
    assert lines[1].split(",")[:2] == ["0", "1"]
    assert lines[-1].split(",")[1] == "24"


def test_census_marked_json_embeds_polynomials(capsys):
    code, data = run_json(
        capsys,
        "census",
        "--subset",
        "All",
        "--n-max",
        "3",
        "--marks",
        "xt",
        "--sources",
        "bf,cf",
    )
    assert code == 0
    cell = data["values"]["ContinuedFraction"][3]
    assert "text" in cell and "terms" in cell
    assert data["passing"] is True


def test_census_rejects_unknown_subset(capsys):
    code, out, err = run(capsys, "census", "--subset", "Nope", "--n-max", "3")
    assert code == 1
    assert out == ""
    assert "error:" in err


def test_census_rejects_oversized_brute_force(capsys):
    code, _, err = run(capsys, "census", "--subset", "All", "--n-max", "10")
    assert code == 1
    assert "error:" in err


def test_cf_lists_coefficients(capsys):
    code, data = run_json(
        capsys, "cf", "--scheme", "Involutions", "--order", "4", "--marks", "tq"
    )
    assert code == 0
    assert data["scheme"] == "Involutions"
    assert data["marks"] == "qt"
    assert data["elevated"] is False
    assert len(data["coefficients"]) == 5
    assert data["coefficients"][0]["text"] == "1"


def test_cf_plain_output(capsys):
    code, out, _ = run(capsys, "cf", "--scheme", "Motzkin", "--order", "3")
    assert code == 1  # no scheme of that name
    code, out, _ = run(capsys, "cf", "--scheme", "Consecutive123", "--order", "3")
    assert code == 0
    assert "[z^3]" in out


def test_invert_plain_and_regenerated(capsys):
    code, out, _ = run(
        capsys,
        "invert",
        "--terms",
        "1, 1, 3, 17, 155, 2073, 38227",
        "--regenerate",
    )
    assert code == 0
    assert "Complete" in out
    assert "level weights: 1, 6, 15" in out
    assert "fall weights:  2, 24, 108" in out
    assert "regenerated:   1, 1, 3, 17, 155, 2073, 38227" in out


def test_invert_json_statuses(capsys):
    code, data = run_json(capsys, "invert", "--terms", "1 0 0 1")
    assert code == 0
    assert data["status"] == "Failed"
    code, data = run_json(capsys, "invert", "--terms", "1 2 4 8")
    assert code == 0
    assert data["status"] == "Terminated"
    assert data["level_weights"] == ["2"]


def test_invert_rejects_bad_head(capsys):
    code, _, err = run(capsys, "invert", "--terms", "2 1 1")
    assert code == 1
    assert "error:" in err


def test_bell_triptych(capsys):
    code, data = run_json(capsys, "bell", "--perm", "2 6 8 3 9 11 4 5 1 7 10")
    assert code == 0
    assert data["elevated_path"] == "U L1 U L1 U L3 L1 D1 D0 L0 D0"
    assert data["grounded_path"] == "U L1 U L1 U D2 L1 D1 D0 L0"
    assert data["partition"] == [[1, 9], [2], [3, 4, 7, 8], [5, 6], [10]]


def test_bell_rejects_non_members(capsys):
    code, _, err = run(capsys, "bell", "--perm", "1 2 3")
    assert code == 1
    assert "error:" in err


def test_mobius_formula_with_brute_check(capsys):
    code, data = run_json(
        capsys, "mobius", "--family", "123,2413,3412", "--n", "6", "--brute"
    )
    assert code == 0
    assert data["formula"] == 11
    assert data["brute_force"] == 11
    assert data["agree"] is True


def test_mobius_unknown_family(capsys):
    code, _, err = run(capsys, "mobius", "--family", "111", "--n", "4")
    assert code == 1
    assert "error:" in err


def test_check_reports_every_check(capsys):
    code, data = run_json(capsys, "check", "--n-max", "4", "--seed", "1")
    assert code == 0
    assert data["passed"] is True
    assert len(data["checks"]) == 10
    names = [c["name"] for c in data["checks"]]
    assert len(set(names)) == 10


def test_check_plain_output(capsys):
    code, out, _ = run(capsys, "check", "--n-max", "3")
    assert code == 0
    assert "10/10 checks passed" in out
    assert out.count("PASS") == 10


def test_census_json_csv_mutually_exclusive():
    with pytest.raises(SystemExit) as excinfo:
        main(["census", "--subset", "All", "--n-max", "2", "--json", "--csv"])
    assert excinfo.value.code == 2


def test_console_script_installed():
    exe = shutil.which("motzkinperm")
    assert exe is not None
    proc = subprocess.run(
        [exe, "stats", "--perm", "2 3 1", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["excedances"] == 2
