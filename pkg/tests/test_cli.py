import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from pingpong import config
from pingpong.cli import main

from conftest import FIXTURES

ALL = ["schottky.json", "exotic.json", "rank3.json"]


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def fx(name):
    return FIXTURES / name


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", fx("exotic.json"))
    assert code == 0 and json.loads(out) == {"valid": True, "rank": 2, "m": 8}


def test_validate_invalid(capsys):
    code, out, err = run(capsys, "validate", fx("mismatched.json"))
    assert code == 1
    doc = json.loads(out)
    assert doc["valid"] is False and any("≠" in v for v in doc["violations"])
    assert "invalid" in err


def test_unreadable_and_malformed(capsys, tmp_path):
    assert run(capsys, "validate", tmp_path / "missing.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "classify", bad)[0] == 2
    bad.write_text(json.dumps({"rank": 2, "word": ["a", "?"], "offsets": {}}))
    assert run(capsys, "classify", bad)[0] == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["realize", str(fx("exotic.json")), "--layout", "bogus"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", fx("exotic.json"))
    doc = json.loads(out)
    assert code == 0
    assert (doc["boundary_count"], doc["chi"], doc["genus"], doc["isolated"]) == (1, -5, 3, True)
    assert sorted(sum(doc["cycles"], [])) == list(range(8))


def test_classify_pretty(capsys):
    code, out, _ = run(capsys, "classify", fx("schottky.json"), "--pretty")
    assert code == 0 and "genus          1" in out and "isolated       yes" in out


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("layout", ["standard", "perturbed"])
def test_realize_extract_roundtrip(capsys, tmp_path, name, layout):
    action = tmp_path / "action.json"
    code, out, _ = run(capsys, "realize", fx(name), "--layout", layout, "--out", action)
    assert code == 0 and json.loads(out)["layout"] == layout
    code, out, _ = run(capsys, "extract", action)
    assert code == 0
    assert config.from_dict(json.loads(out)) == config.canonical_form(config.loads(fx(name).read_text()))


def test_extract_failure(capsys, tmp_path):
    code, out, _ = run(capsys, "realize", fx("schottky.json"))
    doc = json.loads(out)
    doc["domains"]["a"] = [["1/12", "1/8"]]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "extract", path)
    assert code == 1
    assert json.loads(out)["violations"][0]["kind"] == "inclusion"
    path.write_text(json.dumps({"maps": {}}))
    assert run(capsys, "extract", path)[0] == 2


def test_order_queries(capsys):
    assert json.loads(run(capsys, "order", fx("schottky.json"), "1", "a", "b")[1]) == {"value": 1}
    assert json.loads(run(capsys, "order", fx("schottky.json"), "a", "a", "b")[1]) == {"value": 0}
    code, out, _ = run(capsys, "order", fx("schottky.json"), "--linear", "1:1", "1:0")
    assert code == 0 and json.loads(out) == {"value": 1}
    assert run(capsys, "order", fx("schottky.json"), "a", "b")[0] == 2
    assert run(capsys, "order", fx("schottky.json"), "a", "b", "x")[0] == 2


def test_survey(capsys):
    code, out, _ = run(capsys, "survey", "--rank", "2", "--max-k", "1")
    doc = json.loads(out)
    assert code == 0 and doc["total"] == 6 and doc["histogram"] == {"1": 2, "3": 4}
    assert run(capsys, "survey", "--rank", "2")[0] == 2
    assert run(capsys, "survey", "--rank", "3", "--max-k", "5", "--ceiling", "1000")[0] == 1
    code, out, _ = run(capsys, "survey", "--rank", "3", "--max-k", "2", "--sample", "50", "--seed", "1")
    assert code == 0 and json.loads(out)["total"] == 50
    code, out, _ = run(capsys, "survey", "--rank", "2", "--bound", "6", "--pretty")
    assert "boundary count   5: 8" in out


def test_diagram(capsys, tmp_path):
    svg = tmp_path / "d.svg"
    code, out, _ = run(capsys, "diagram", fx("exotic.json"), "--out", svg)
    assert code == 0 and json.loads(out)["arcs"] == 8
    first = svg.read_bytes()
    root = ET.fromstring(first)
    texts = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]
    assert sorted(texts).count("a") == 2 and texts.count("b⁻¹") == 2
    run(capsys, "diagram", fx("exotic.json"), "--out", svg)
    assert svg.read_bytes() == first


def test_outputs_are_byte_identical(capsys):
    outs = {run(capsys, "realize", fx("exotic.json"))[1] for _ in range(2)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pingpong", "classify", str(fx("schottky.json"))], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["genus"] == 1
