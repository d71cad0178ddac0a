from __future__ import annotations

import io
import json
from importlib import resources

import jsonschema
import pytest
from referencing import Registry, Resource

from abelrep.cli import run

SCHEMA_DIR = resources.files("abelrep") / "schemas"


def _registry() -> Registry:
    reg = Registry()
    for path in SCHEMA_DIR.iterdir():
        if path.name.endswith(".json"):
            reg = reg.with_resource(path.name, Resource.from_contents(json.loads(path.read_text())))
    return reg


def _validate(data, schema_name: str) -> None:
    schema = json.loads((SCHEMA_DIR / schema_name).read_text())
    jsonschema.Draft202012Validator(schema, registry=_registry()).validate(data)


def cli(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_schemas_are_valid():
    names = [p.name for p in SCHEMA_DIR.iterdir() if p.name.endswith(".json")]
    assert len(names) >= 6
    for name in names:
        jsonschema.Draft202012Validator.check_schema(json.loads((SCHEMA_DIR / name).read_text()))


def test_classify_c4():
    code, out, _ = cli("classify", "gens: (1 2 3 4); degree: 4")
    data = json.loads(out)
    assert code == 0 and data["verdict_GR"] is False and data["verdict_DGR"] is True
    _validate(data, "classification.schema.json")


def test_classify_witness_and_oracle():
    code, out, _ = cli("classify", "--witness", "--check-oracle", "dsum(cyclic: 2, par(cyclic: 3, 2))")
    data = json.loads(out)
    assert code == 0 and data["verdict_GR"] and data["oracle"]["agrees"]
    assert data["witness_graph"]["colour_count"] <= 4
    _validate(data, "classification.schema.json")


def test_synth_directed_z3_2():
    code, out, _ = cli("synth", "--directed", "regular: [3,3]")
    data = json.loads(out)
    assert code == 0 and data["colour_count"] == 3
    assert data["verification"]["stamp"] == "Aut order 9, equal: true"
    _validate(data, "graph.schema.json")


def test_synth_dot_has_stamp():
    code, out, _ = cli("synth", "--out", "dot", "regular: [2,2]")
    assert code == 0 and out.startswith("graph G {") and out.rstrip().endswith("// Aut order 4, equal: true")


def test_synth_min_colours():
    code, out, _ = cli("synth", "--min-colours", "regular: [2,2,2]")
    assert code == 0 and json.loads(out)["colour_count"] == 4
    code, _, err = cli("synth", "--min-colours", "cyclic: 5")
    assert code == 1 and json.loads(err)["error"] == "negative"


def test_synth_verify_round_trip(tmp_path):
    for spec in ("regular: [2,2,2]", "par(regular: [3,3], 2)", "gens: (1 2 3 4 5 6 7 8)(9 10 11 12 13 14 15 16 17 18 19 20)"):
        code, out, _ = cli("synth", spec)
        assert code == 0
        path = tmp_path / "g.json"
        path.write_text(out)
        code, out, _ = cli("verify", str(path), spec)
        data = json.loads(out)
        assert code == 0 and data["equal"] is True
        _validate(data, "verify.schema.json")


def test_verify_fig1(tmp_path):
    code, out, _ = cli("catalogue", "fig1")
    entry = json.loads(out)
    assert code == 0 and entry["verified"] is True
    _validate(entry, "catalogue_entry.schema.json")
    path = tmp_path / "fig1.json"
    path.write_text(json.dumps(entry["graph"]))
    code, out, _ = cli("verify", str(path), "regular: [2,2,2,2]")
    assert code == 0 and json.loads(out)["equal"] is True
    code, out, _ = cli("verify", str(path), "regular: [4,4]")
    assert code == 1 and json.loads(out)["equal"] is False


def test_catalogue_all():
    code, out, _ = cli("catalogue")
    entries = json.loads(out)
    assert code == 0 and all(e["verified"] for e in entries)
    for e in entries:
        _validate(e, "catalogue_entry.schema.json")


def test_analyze_and_closure():
    code, out, _ = cli("analyze", "par(cyclic: 3, 2)")
    data = json.loads(out)
    assert code == 0 and data["adjacency"] == [[False, True], [True, False]]
    _validate(data, "orbit_structure.schema.json")
    code, out, _ = cli("closure", "--kind=2star", "cyclic: 5")
    data = json.loads(out)
    assert code == 0 and data["closure"]["order"] == 10 and data["equal"] is False
    _validate(data, "closure.schema.json")
    code, out, _ = cli("closure", "--kind=2orbit", "gens: (1 2 3)(4 5 6), (4 5 6)(7 8 9)")
    assert json.loads(out)["closure"]["order"] == 27


def test_aut(tmp_path):
    code, out, _ = cli("catalogue", "z3_2_plus")
    path = tmp_path / "g.json"
    path.write_text(json.dumps(json.loads(out)["graph"]))
    code, out, _ = cli("aut", str(path))
    data = json.loads(out)
    assert code == 0 and data["order"] == 18
    _validate(data, "group.schema.json")


def test_group_from_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("dsum(\n  cyclic: 2,\n  cyclic: 3\n)\n")
    code, out, _ = cli("classify", f"@{path}")
    assert code == 0 and json.loads(out)["order"] == 6


@pytest.mark.parametrize(
    "argv, code, kind",
    [
        (("classify", "gens: (1 2"), 2, "input"),
        (("classify", "gens: (1 2 3), (1 2)"), 2, "input"),
        (("synth", "cyclic: 4"), 1, "negative"),
        (("synth", "trivial: 2"), 1, "negative"),
        (("verify", "/nonexistent.json", "cyclic: 2"), 2, "input"),
        (("catalogue", "nope"), 2, "input"),
        (("bogus",), 2, "input"),
        (("--limit-vertices", "3", "synth", "regular: [2,2]"), 3, "capacity"),
        (("--limit-elements", "5", "classify", "cyclic: 12"), 3, "capacity"),
    ],
)
def test_error_exit_codes(argv, code, kind):
    got, out, err = cli(*argv)
    assert got == code and out == ""
    lines = err.strip().splitlines()
    assert len(lines) == 1
    payload = json.loads(lines[0])
    assert payload["error"] == kind and payload["reason"]


def test_limits_are_restored():
    from abelrep import autgrp, perm

    before = (perm.ELEMENT_CAP, autgrp.VERTEX_LIMIT)
    cli("--limit-vertices", "3", "synth", "regular: [2,2]")
    assert (perm.ELEMENT_CAP, autgrp.VERTEX_LIMIT) == before


def test_output_is_deterministic():
    assert cli("synth", "par(regular: [3,3], 2)") == cli("synth", "par(regular: [3,3], 2)")
