import json

from relaus.cache import Workspace, input_hash


def test_roundtrip(tmp_path):
    ws = Workspace(tmp_path)
    inputs = {"command": "pair", "cap": 64}
    assert ws.get(inputs) is None
    ws.put(inputs, {"x": 1})
    assert ws.get(inputs) == {"x": 1}
    assert ws.hits == 1 and ws.misses == 1


def test_hash_is_order_independent():
    assert input_hash({"a": 1, "b": 2}) == input_hash({"b": 2, "a": 1})
    assert input_hash({"a": 1}) != input_hash({"a": 2})


def test_stale_entry_ignored(tmp_path):
    ws = Workspace(tmp_path)
    inputs = {"k": 1}
    ws.put(inputs, {"x": 1})
    (path,) = list(tmp_path.rglob("*.json"))
    entry = json.loads(path.read_text())
    entry["inputs"] = {"k": 2}
    path.write_text(json.dumps(entry))
    assert ws.get(inputs) is None


def test_corrupt_entry_ignored(tmp_path):
    ws = Workspace(tmp_path)
    ws.put({"k": 1}, {"x": 1})
    (path,) = list(tmp_path.rglob("*.json"))
    path.write_text("{not json")
    assert ws.get({"k": 1}) is None


def test_no_temp_files_left(tmp_path):
    ws = Workspace(tmp_path)
    for k in range(5):
        ws.put({"k": k}, {"x": k})
    assert not list(tmp_path.rglob(".tmp-*"))
    assert len(list(tmp_path.rglob("*.json"))) == 5


def test_disabled():
    ws = Workspace(None)
    ws.put({"k": 1}, 1)
    assert ws.get({"k": 1}) is None
