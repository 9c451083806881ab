"""Deterministic JSON and text renderings of linear combinations.

JSON schema: ``{"terms": [{"basis": "<encoding>", "coeff": "<p>/<q>"}, ...]}``
with terms sorted by basis encoding.  Integer coefficients omit the
denominator, and ``"3"`` is accepted on input as shorthand for ``"3/1"``.
Tensor keys render as ``"<left> | <right>"``; the Lie-side basis renders with
a ``"Z:"`` prefix on the tree encoding.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exactlin import LinComb, Tensor
from .trees import parse_forest, parse_tree


def encode_key(key) -> str:
    return key.encoding


def encode_z_key(key) -> str:
    return "Z:" + key.encoding


def parse_z_key(text: str):
    if not text.startswith("Z:"):
        raise ValueError(f"expected 'Z:' prefixed tree encoding, got {text!r}")
    return parse_tree(text[2:])


def parse_tensor_key(text: str, parse_left, parse_right) -> Tensor:
    left, sep, right = text.partition(" | ")
    if not sep:
        raise ValueError(f"missing ' | ' tensor separator in {text!r}")
    return Tensor(parse_left(left), parse_right(right))


def parse_tree_tensor(text: str) -> Tensor:
    return parse_tensor_key(text, parse_tree, parse_tree)


def parse_forest_tensor(text: str) -> Tensor:
    return parse_tensor_key(text, parse_forest, parse_forest)


def lincomb_to_obj(x: LinComb, encode=encode_key) -> dict:
    pairs = sorted(((encode(k), c) for k, c in x.terms.items()),
                   key=lambda kv: kv[0])
    return {"terms": [{"basis": basis, "coeff": str(coeff)} for basis, coeff in pairs]}


def lincomb_to_json(x: LinComb, encode=encode_key) -> str:
    return json.dumps(lincomb_to_obj(x, encode), sort_keys=True)


def lincomb_from_obj(obj, parse_key) -> LinComb:
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise ValueError("expected an object with a 'terms' list")
    pairs = []
    for entry in obj["terms"]:
        if not isinstance(entry, dict) or "basis" not in entry or "coeff" not in entry:
            raise ValueError(f"malformed term entry: {entry!r}")
        pairs.append((parse_key(entry["basis"]), Fraction(entry["coeff"])))
    return LinComb(pairs)


def lincomb_from_json(text: str, parse_key) -> LinComb:
    return lincomb_from_obj(json.loads(text), parse_key)


def lincomb_to_text(x: LinComb, encode=encode_key) -> str:
    """Human-readable rendering, e.g. ``[[[]]] + 2*[[][]]``; zero is ``0``."""
    if not x.terms:
        return "0"
    pairs = sorted(((encode(k), c) for k, c in x.terms.items()),
                   key=lambda kv: kv[0])
    pieces = []
    for basis, coeff in pairs:
        magnitude = -coeff if coeff < 0 else coeff
        body = basis if magnitude == 1 else f"{magnitude}*{basis}"
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)
