"""Shared JSON formats for lattices, embeddings, and Clifford elements.

Output is deterministic: keys sorted, canonical separators, and integers
whose magnitude exceeds 53 bits rendered as strings so that double-based
JSON consumers cannot corrupt them (disable with raw_ints).
"""

from __future__ import annotations

import json
from typing import Any

from .clifford import CliffordElement
from .lattices import Isometry, Lattice, LatticeEmbedding
from .linalg import IntMatrix

SAFE_INT = 1 << 53


def _encode_ints(obj: Any, raw_ints: bool) -> Any:
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        if not raw_ints and abs(obj) > SAFE_INT:
            return str(obj)
        return obj
    if isinstance(obj, (list, tuple)):
        return [_encode_ints(x, raw_ints) for x in obj]
    if isinstance(obj, dict):
        return {k: _encode_ints(v, raw_ints) for k, v in obj.items()}
    return obj


def dumps(payload: Any, raw_ints: bool = False) -> str:
    return json.dumps(_encode_ints(payload, raw_ints), sort_keys=True, separators=(",", ":"))


def _parse_int(x) -> int:
    if isinstance(x, bool):
        raise ValueError("expected an integer, got a boolean")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x)
    raise ValueError(f"expected an integer, got {type(x).__name__}")


def _parse_matrix(rows) -> IntMatrix:
    return IntMatrix([[_parse_int(x) for x in row] for row in rows])


def lattice_to_obj(lat: Lattice) -> dict:
    obj = {"rank": lat.rank, "gram": lat.gram.tolists()}
    if lat.label:
        obj["label"] = lat.label
    return obj


def lattice_from_obj(obj: dict) -> Lattice:
    gram = _parse_matrix(obj["gram"])
    rank = _parse_int(obj["rank"])
    return Lattice(rank, gram, obj.get("label"))


def embedding_to_obj(emb: LatticeEmbedding) -> dict:
    return {
        "source": lattice_to_obj(emb.source),
        "target": lattice_to_obj(emb.target),
        "matrix": emb.matrix.tolists(),
    }


def embedding_from_obj(obj: dict) -> LatticeEmbedding:
    return LatticeEmbedding(
        lattice_from_obj(obj["source"]),
        lattice_from_obj(obj["target"]),
        _parse_matrix(obj["matrix"]),
    )


def isometry_to_obj(iso: Isometry) -> dict:
    return {"lattice": lattice_to_obj(iso.lattice), "matrix": iso.matrix.tolists()}


def isometry_from_obj(obj: dict) -> Isometry:
    return Isometry(lattice_from_obj(obj["lattice"]), _parse_matrix(obj["matrix"]))


def clifford_to_obj(x: CliffordElement) -> dict:
    terms = [{"mask": m, "coeff": str(c)} for m, c in sorted(x.coeffs.items())]
    return {"rank": x.host.rank, "gram": x.host.gram.tolists(), "terms": terms}


def clifford_from_obj(obj: dict, host: Lattice | None = None) -> CliffordElement:
    if host is None:
        host = Lattice(_parse_int(obj["rank"]), _parse_matrix(obj["gram"]))
    coeffs = {_parse_int(t["mask"]): _parse_int(t["coeff"]) for t in obj["terms"]}
    return CliffordElement(host, coeffs)
