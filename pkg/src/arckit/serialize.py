"""Versioned JSON encodings for the domain objects.

Weights serialise as strings over the alphabet o, v, ^, x together with the
parameter tuple; blocks as digit strings; Laurent polynomials as lists of
[degree, coefficient] pairs; diagrams carry their level structure as lists of
elementary pieces.
"""

from __future__ import annotations

from typing import Any

from .diagrams import OrientedCap, OrientedCircleDiagram
from .laurent import LaurentPoly
from .stretched import EVec, TVec, ThatVec
from .weights import Block, Params, Weight, admissible
from .diagrams import stretched_blocks

SCHEMA = 1


class SchemaError(ValueError):
    pass


def params_to_json(p: Params) -> dict:
    return {"m": p.m, "n": p.n, "I": [p.lo, p.hi]}


def params_from_json(data: dict) -> Params:
    try:
        lo, hi = data["I"]
        return Params(int(data["m"]), int(data["n"]), int(lo), int(hi))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad params: {data!r}") from exc


def weight_to_json(w: Weight) -> dict:
    return {"schema": SCHEMA, "type": "weight",
            "params": params_to_json(w.params), "labels": "".join(w.labels)}


def weight_from_json(data: dict) -> Weight:
    _expect(data, "weight")
    return Weight(params_from_json(data["params"]), tuple(data["labels"]))


def block_to_json(b: Block) -> dict:
    return {"schema": SCHEMA, "type": "block",
            "params": params_to_json(b.params),
            "signature": "".join(str(s) for s in b.signature)}


def block_from_json(data: dict) -> Block:
    _expect(data, "block")
    return Block(params_from_json(data["params"]),
                 tuple(int(c) for c in data["signature"]))


def laurent_to_json(p: LaurentPoly) -> dict:
    return {"schema": SCHEMA, "type": "laurent", "terms": p.to_json(),
            "human": str(p)}


def laurent_from_json(data: dict) -> LaurentPoly:
    _expect(data, "laurent")
    return LaurentPoly.from_json(data["terms"])


def _levels(params: Params, iseq) -> list[dict]:
    blocks = stretched_blocks(params, iseq)
    out = []
    for r, i in enumerate(iseq):
        kind = admissible(blocks[r], i)[1]
        out.append({"colour": i, "kind": kind})
    return out


def circle_diagram_to_json(d: OrientedCircleDiagram) -> dict:
    return {"schema": SCHEMA, "type": "circle-diagram",
            "params": params_to_json(d.middle.params),
            "a": "".join(d.a_weight.labels),
            "mid": "".join(d.middle.labels),
            "b": "".join(d.b_weight.labels)}


def circle_diagram_from_json(data: dict) -> OrientedCircleDiagram:
    _expect(data, "circle-diagram")
    params = params_from_json(data["params"])
    return OrientedCircleDiagram(Weight(params, tuple(data["a"])),
                                 Weight(params, tuple(data["mid"])),
                                 Weight(params, tuple(data["b"])))


def oriented_cap_to_json(oc: OrientedCap) -> dict:
    return {"schema": SCHEMA, "type": "stretched-cap",
            "params": params_to_json(oc.params),
            "iseq": list(oc.iseq),
            "levels": _levels(oc.params, oc.iseq),
            "weights": ["".join(g) for g in oc.gammas]}


def oriented_cap_from_json(data: dict) -> OrientedCap:
    _expect(data, "stretched-cap")
    params = params_from_json(data["params"])
    return OrientedCap(params, tuple(int(i) for i in data["iseq"]),
                       tuple(tuple(w) for w in data["weights"]))


def evec_to_json(e: EVec) -> dict:
    return {"schema": SCHEMA, "type": "stretched-circle",
            "params": params_to_json(e.params),
            "iseq": list(e.iseq), "jseq": list(e.jseq),
            "upper_levels": _levels(e.params, e.iseq),
            "lower_levels": _levels(e.params, e.jseq),
            "gammas": ["".join(g) for g in e.gammas],
            "deltas": ["".join(g) for g in e.deltas]}


def evec_from_json(data: dict) -> EVec:
    _expect(data, "stretched-circle")
    params = params_from_json(data["params"])
    return EVec(params,
                tuple(int(i) for i in data["iseq"]),
                tuple(tuple(w) for w in data["gammas"]),
                tuple(int(j) for j in data["jseq"]),
                tuple(tuple(w) for w in data["deltas"]))


def tvec_to_json(v: TVec) -> dict:
    return {"schema": SCHEMA, "type": "tensor-vector",
            "params": params_to_json(v.params),
            "iseq": list(v.iseq),
            "weights": ["".join(g) for g in v.gammas],
            "cup": "".join(v.cup.labels)}


def tvec_from_json(data: dict) -> TVec:
    _expect(data, "tensor-vector")
    params = params_from_json(data["params"])
    return TVec(params, tuple(int(i) for i in data["iseq"]),
                tuple(tuple(w) for w in data["weights"]),
                Weight(params, tuple(data["cup"])))


def element_to_json(formal_sum, term_encoder) -> dict:
    return {"schema": SCHEMA, "type": "element",
            "terms": [[term_encoder(k), c] for k, c in formal_sum.items()]}


def _expect(data: Any, kind: str) -> None:
    if not isinstance(data, dict) or data.get("type") != kind:
        raise SchemaError(f"expected a {kind} object, got {data!r}")
    if data.get("schema") != SCHEMA:
        raise SchemaError(f"unsupported schema {data.get('schema')!r}")
