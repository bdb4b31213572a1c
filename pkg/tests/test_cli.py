import json

import pytest

from rootspace import cli


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def _run_json(capsys, *argv):
    code, out = _run(capsys, *argv)
    payload = json.loads(out)
    assert payload["schema"] == "rootspace/1"
    return code, payload


def test_cartan_command(capsys):
    code, payload = _run_json(capsys, "cartan", "--type", "B2")
    assert code == 0
    assert payload["matrix"] == [[2, -1], [-2, 2]]
    assert payload["symmetrizer"] == ["2", "1"]


def test_unit_height_a6(capsys):
    code, payload = _run_json(capsys, "unit-height", "--type", "A6",
                              "--I", "2,4,5")
    assert code == 0
    assert len(payload["unit_height_roots"]) == 8
    assert [1, 1, 0, 0, 0, 0] in payload["unit_height_roots"]


def test_psp_command(capsys):
    code, payload = _run_json(capsys, "psp", "--type", "A6",
                              "--I", "2,4,5", "--beta", "1,1,1,1,1,1")
    assert code == 0
    assert payload["verified"] and len(payload["gammas"]) == 3


def test_weights_command(capsys):
    code, payload = _run_json(capsys, "weights", "--type", "A2",
                              "--lambda", "1,1", "--kind", "simple",
                              "--depth", "4")
    assert code == 0
    assert payload["count"] == 7 and payload["exact"]


def test_faces_enumerate(capsys):
    code, payload = _run_json(capsys, "faces", "enumerate", "--type", "A2",
                              "--ambient", "roots")
    assert code == 0 and payload["count"] == 26


def test_faces_check_with_descriptor(capsys):
    code, payload = _run_json(capsys, "faces", "check", "--type", "A2",
                              "--ambient", "roots", "--Y", "0,1;1,1")
    assert code == 0 and payload["closed"]
    assert payload["descriptor"]["variant"] == "standard_roots"


def test_faces_check_witness(capsys):
    code, payload = _run_json(capsys, "faces", "check", "--type", "A2",
                              "--ambient", "roots0", "--Y", "1,0;0,1")
    assert code == 0 and not payload["closed"]
    assert len(payload["witness"]) == 4


def test_faces_affine_verify(capsys):
    code, payload = _run_json(capsys, "faces", "affine-verify",
                              "--type", "A2~1", "--window", "9")
    assert code == 0
    assert payload["closed_finite"] == 26 == payload["closed_lifts"]


def test_liewords_command(capsys):
    code, payload = _run_json(capsys, "liewords", "verify", "--type", "B2",
                              "--I", "1", "--beta", "1,2")
    assert code == 0
    assert payload["coefficient"] != 0 and len(payload["word"]) == 1


def test_hull_svg(capsys):
    code, out = _run(capsys, "hull", "--type", "A2", "--lambda", "1,1",
                     "--depth", "4", "--format", "svg")
    assert code == 0 and out.startswith("<svg") and "circle" in out


def test_usage_error_exit_code(capsys):
    code = cli.main(["unit-height", "--type", "A2", "--I", "1,x"])
    assert code == 2
    assert "entry 1" in capsys.readouterr().err


def test_domain_error_exit_code(capsys):
    code = cli.main(["psp", "--type", "A2", "--I", "1", "--beta", "2,0"])
    assert code == 1


def test_json_determinism(capsys):
    _code, out1 = _run(capsys, "faces", "enumerate", "--type", "B2")
    _code, out2 = _run(capsys, "faces", "enumerate", "--type", "B2")
    assert out1 == out2
