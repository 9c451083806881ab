import json

import pytest

from treehopf.serialize import (encode_key, encode_z_key, lincomb_from_obj,
                                lincomb_to_json, parse_forest_tensor,
                                parse_tree_tensor, parse_z_key)
from treehopf.trees import parse_forest, parse_tree

KEY_PARSERS = {
    "tree": parse_tree,
    "forest": parse_forest,
    "tensor-tree": parse_tree_tensor,
    "tensor-forest": parse_forest_tensor,
    "z": parse_z_key,
}

KEY_ENCODERS = {
    "tree": encode_key,
    "forest": encode_key,
    "tensor-tree": encode_key,
    "tensor-forest": encode_key,
    "z": encode_z_key,
}


def roundtrip_ok(payload: str, family: str) -> bool:
    """Re-parse an emitted JSON combination and re-serialize it bit-exactly."""
    obj = json.loads(payload)
    parsed = lincomb_from_obj(obj, KEY_PARSERS[family])
    return lincomb_to_json(parsed, KEY_ENCODERS[family]) == payload


@pytest.fixture(scope="session")
def cli_corpus(tmp_path_factory):
    """Fixed corpus of 50 invocations; entries are (argv, roundtrip family)."""
    path = tmp_path_factory.mktemp("elements") / "x2.json"
    path.write_text(json.dumps({"terms": [
        {"basis": "[[[]]]", "coeff": "1"},
        {"basis": "[[][]]", "coeff": "1"},
    ]}), encoding="utf-8")
    at_file = f"@{path}"
    corpus = [
        (["enum", "--size", "1"], None),
        (["enum", "--size", "2"], None),
        (["enum", "--size", "3"], None),
        (["enum", "--size", "4"], None),
        (["enum", "--size", "5"], None),
        (["enum", "--size", "6"], None),
        (["enum", "--size", "5", "--count-only"], None),
        (["enum", "--size", "7", "--count-only"], None),
        (["--format", "text", "enum", "--size", "4"], None),
        (["prod", "--algebra", "gl", "[[]]", "[[]]"], "tree"),
        (["prod", "--algebra", "gl", "[[][]]", "[[]]"], "tree"),
        (["prod", "--algebra", "gl", "[[]]", "[[][]]"], "tree"),
        (["prod", "--algebra", "hr", "[] [[]]", "[]"], "forest"),
        (["prod", "--algebra", "hr", "1", "[[]]"], "forest"),
        (["coprod", "--algebra", "gl", "[[][]]"], "tensor-tree"),
        (["coprod", "--algebra", "gl", "[[[]][]]"], "tensor-tree"),
        (["coprod", "--algebra", "hr", "[[][]]"], "tensor-forest"),
        (["coprod", "--algebra", "hr", "[] []"], "tensor-forest"),
        (["antipode", "--algebra", "gl", "[[][]]"], "tree"),
        (["antipode", "--algebra", "hr", "[[[]]]"], "forest"),
        (["counit", "--algebra", "gl", "[]"], None),
        (["counit", "--algebra", "hr", "1"], None),
        (["counit", "--algebra", "hr", "[[]]"], None),
        (["grow", "--algebra", "gl", "[[]]"], "tree"),
        (["grow", "--algebra", "hr", "[] []"], "forest"),
        (["xk", "0"], "tree"),
        (["xk", "3"], "tree"),
        (["delta", "1"], "forest"),
        (["delta", "4"], "forest"),
        (["mop", "[[]]"], "tree"),
        (["mop", "[]"], "tree"),
        (["lop", "1"], "forest"),
        (["lop", "[[]] []"], "forest"),
        (["bracket", "[]", "[[]]"], "z"),
        (["bracket", "[[]]", "[]"], "z"),
        (["star", "[]", "[[][]]"], "z"),
        (["star", "[[]]", "[[]]"], "z"),
        (["phi", "[[]]"], "z"),
        (["phi", "[[[]]]"], "z"),
        (["psi", "[]"], "tree"),
        (["psi", "[[][]]"], "tree"),
        (["--format", "text", "prod", "--algebra", "gl", "[[]]", "[[]]"], None),
        (["--format", "text", "coprod", "--algebra", "gl", "[[]]"], None),
        (["--format", "text", "delta", "3"], None),
        (["verify", "--suite", "trees", "--max-degree", "3"], None),
        (["verify", "--suite", "lie", "--max-degree", "3"], None),
        (["verify", "--suite", "dual", "--max-degree", "2"], None),
        (["verify", "--suite", "hr", "--max-degree", "2", "--report", "text"], None),
        (["verify", "--suite", "gl", "--max-degree", "2"], None),
        (["prod", "--algebra", "gl", at_file, "[[]]"], "tree"),
    ]
    assert len(corpus) == 50
    return corpus
