import io
import json

from rigidtriples.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def test_generate_then_verify(tmp_path):
    path = tmp_path / "t.json"
    code, _ = call("generate", "--family", "hg", "--m", "5", "--seed", "1", "--out", str(path))
    assert code == 0
    code, text = call("verify", "--in", str(path))
    assert code == 0
    assert "FAIL" not in text


def test_corrupted_entry_fails(tmp_path):
    path = tmp_path / "t.json"
    call("generate", "--family", "even", "--m", "3", "--seed", "2", "--out", str(path))
    doc = json.loads(path.read_text())
    doc["B"][0][1] = "7" if doc["B"][0][1] != "7" else "8"
    path.write_text(json.dumps(doc))
    code, out = call("verify", "--in", str(path), "--json")
    assert code == 1
    claims = json.loads(out)["claims"]
    assert claims["matches constructor"] is False


def test_identities_quick():
    code, text = call("identities", "--trials", "1", "--seed", "1")
    assert code == 0
    assert text.count("PASS") == 14


def test_usage_errors():
    assert call("generate", "--family", "hg")[0] == 2
    assert call("generate", "--bogus")[0] == 2
    assert call("nonsense")[0] == 2


def test_positivity_check_json():
    code, out = call("positivity", "--family", "odd", "--m", "2", "--seed", "3", "--scan", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["predicate"]["verdict"] == doc["scan"]["verdict"]


def test_lr():
    code, out = call("lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--json")
    assert code == 0 and json.loads(out)["count"] == 2


def test_degenerate():
    code, out = call("degenerate", "--from", "even:3", "--map", "om-sub", "--i", "2", "--seed", "0", "--json")
    assert code == 0 and json.loads(out)["matches"]


def test_fuchsian_round_trip(tmp_path):
    path = tmp_path / "f.json"
    code, _ = call("fuchsian", "--family", "hg", "--m", "2", "--seed", "0", "--out", str(path))
    assert code == 0
    assert json.loads(path.read_text())["singularities"][2] == {"kind": "infinity"}
    assert call("fuchsian", "--in", str(path))[0] == 0
