import json

import pytest

from wirtlab.cli import main
from tests.conftest import corpus_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_verified(capsys):
    code, out, _ = run(capsys, "validate", str(corpus_path("nodal_cubic")))
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "Verified"


def test_validate_region_failure_is_a_verdict_not_an_error(capsys):
    code, out, _ = run(capsys, "validate", str(corpus_path("cardioid")))
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "NoValidRegion"


def test_validate_facing_failure(capsys):
    code, out, _ = run(capsys, "validate", str(corpus_path("cuspidal_cubic")))
    assert code == 0
    assert json.loads(out)["verdict"] == "FacingViolation"


def test_validate_connectivity_failure(capsys):
    code, out, _ = run(capsys, "validate", str(corpus_path("smooth_cubic")))
    assert code == 0
    assert json.loads(out)["verdict"] == "ConnectivityViolation"


def test_wirtinger_json_and_gap_formats(capsys):
    path = str(corpus_path("nodal_cubic"))
    code, out, _ = run(capsys, "wirtinger", path, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["generators"]
    code, gap, _ = run(capsys, "wirtinger", path, "--format", "gap")
    assert code == 0 and "FreeGroup" in gap


def test_zvk_command(capsys):
    code, out, _ = run(capsys, "zvk", str(corpus_path("parabola_two_lines")), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["generators"]) == 3


def test_extended_command(capsys):
    code, out, _ = run(capsys, "extended", str(corpus_path("cardioid")), "--format", "json")
    assert code == 0
    assert json.loads(out)["relators"]


def test_invariants_and_compare_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "wirtinger", str(corpus_path("nodal_cubic")), "--format", "json")
    pres = out
    f1 = tmp_path / "p1.json"
    f1.write_text(pres)
    code, out, _ = run(capsys, "invariants", str(f1))
    assert code == 0
    inv = json.loads(out)
    assert inv["hom_counts"]["S3"] == 6
    code, out, _ = run(capsys, "compare", str(f1), str(f1))
    assert code == 0
    assert json.loads(out)["equal"] is True


def test_simplify_command(capsys, tmp_path):
    code, out, _ = run(capsys, "wirtinger", str(corpus_path("cuspidal_cubic")), "--format", "json")
    pres = out
    f1 = tmp_path / "p.json"
    f1.write_text(pres)
    code, out, _ = run(capsys, "simplify", str(f1))
    assert code == 0
    data = json.loads(out)
    assert set(data["move_kinds"]) <= {"I", "IIa"}
    assert len(data["presentation"]["generators"]) == 2


def test_hypo_stats_command(capsys):
    code, out, _ = run(capsys, "hypo-stats", "--k", "3")
    assert code == 0
    data = json.loads(out)
    assert data["degree"] == 6 and data["ramification_identity"] is True


def test_hypo_diagram_round_trips(capsys):
    code, out, _ = run(capsys, "hypo-diagram", "--k", "2")
    assert code == 0
    assert out == corpus_path("hypocycloid_quotient_k2").read_text()


def test_hypo_verify_command(capsys):
    code, out, _ = run(capsys, "hypo-verify", "--k", "2")
    assert code == 0
    data = json.loads(out)
    assert data["equal"] is True


def test_missing_file_is_a_user_error(capsys):
    code, out, err = run(capsys, "validate", "no_such_file.wd")
    assert code == 2
    assert "error" in err


def test_malformed_diagram_is_a_user_error(capsys, tmp_path):
    bad = tmp_path / "bad.wd"
    bad.write_text("diagram\nnot a line\nend\n")
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert "error" in err
