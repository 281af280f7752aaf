"""Command-line front end.

Subcommands: block, crystal, mult, cartan, decomp, cgt, e-basis, e-mult,
klr-verify, specht, bijection, render, verify.  Output is deterministic for
a fixed invocation; --format json emits the versioned encodings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import categorify as C
from . import diagrams as D
from . import karc as K
from . import klr
from . import render
from . import serialize as SER
from . import specht as SP
from . import stretched as S
from . import verify as V
from .laurent import LaurentPoly
from .surgery import FormalSum
from .weights import (
    Block,
    Params,
    Weight,
    block_of,
    crystal_f,
    crystal_path_to_max,
    defect,
    max_defect_set,
)


def _params(args) -> Params:
    lo, hi = args.interval
    return Params(args.m, args.n, lo, hi)


def _interval(text: str):
    lo, _, hi = text.partition("..")
    return int(lo), int(hi or lo)


def _weight(params: Params, text: str) -> Weight:
    return Weight(params, tuple(text))


def _signature(params: Params, text: str) -> Block:
    parts = text.split(",") if "," in text else list(text)
    return Block(params, tuple(int(x) for x in parts))


def _alpha(text: str):
    # "1,2,2" (a word) or "1:1,2:2" (colour:multiplicity)
    acc: dict[int, int] = {}
    for chunk in text.split(","):
        if ":" in chunk:
            colour, mult = chunk.split(":")
            acc[int(colour)] = acc.get(int(colour), 0) + int(mult)
        else:
            acc[int(chunk)] = acc.get(int(chunk), 0) + 1
    return tuple(sorted(acc.items()))


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_block(args) -> int:
    params = _params(args)
    block = _signature(params, args.sig)
    top = max_defect_set(block)
    text = "\n".join([
        f"block {block}",
        f"defect {defect(block)}",
        f"weights {' '.join(str(w) for w in block.weights())}",
        f"maximal-defect {' '.join(str(w) for w in top)}",
    ])
    _emit(args, {"block": SER.block_to_json(block), "defect": defect(block),
                 "weights": [str(w) for w in block.weights()],
                 "maximal_defect": [str(w) for w in top]}, text)
    return 0


def cmd_crystal(args) -> int:
    params = _params(args)
    w = _weight(params, getattr(args, "from"))
    lines = []
    edges = {}
    for i in params.index_set:
        target = crystal_f(i, w)
        if target is not None:
            lines.append(f"f_{i}: {w} -> {target}")
            edges[str(i)] = str(target)
    mu, path = crystal_path_to_max(w)
    lines.append(f"maximal {mu} via path {list(path)}")
    _emit(args, {"weight": str(w), "edges": edges,
                 "maximal": str(mu), "path": list(path)}, "\n".join(lines))
    return 0


def _parse_kdiag(params: Params, text: str) -> D.OrientedCircleDiagram:
    a, mid, b = text.split("|")
    return D.OrientedCircleDiagram(
        _weight(params, a), _weight(params, mid), _weight(params, b))


def cmd_mult(args) -> int:
    params = _params(args)
    x = _parse_kdiag(params, args.lhs)
    y = _parse_kdiag(params, args.rhs)
    product = K.mult(x, y)
    text = " + ".join(f"{c}*{t}" for t, c in product.items()) or "0"
    _emit(args, {"terms": [[SER.circle_diagram_to_json(t), c]
                           for t, c in product.items()]}, text)
    return 0


def cmd_cartan(args) -> int:
    params = _params(args)
    block = _signature(params, args.sig)
    cartan = K.graded_cartan(block)
    ws = block.weights()
    lines = [f"order: {' '.join(str(w) for w in ws)}"]
    for a in ws:
        lines.append("  ".join(str(cartan[(a, b)]) for b in ws))
    _emit(args, {"order": [str(w) for w in ws],
                 "entries": {f"{a}|{b}": str(cartan[(a, b)])
                             for a in ws for b in ws}}, "\n".join(lines))
    return 0


def cmd_decomp(args) -> int:
    params = _params(args)
    block = _signature(params, args.sig)
    bases = C.block_bases(block)
    ws = block.weights()
    lines = [f"order: {' '.join(str(w) for w in ws)}", "d-matrix:"]
    for a in ws:
        lines.append("  ".join(str(bases.d[(a, b)]) for b in ws))
    lines.append("p-matrix:")
    for a in ws:
        lines.append("  ".join(str(bases.p_poly(a, b)) for b in ws))
    _emit(args, {"order": [str(w) for w in ws],
                 "d": {f"{a}|{b}": bases.d[(a, b)].to_json() for a in ws for b in ws},
                 "p": {f"{a}|{b}": bases.p_poly(a, b).to_json() for a in ws for b in ws}},
          "\n".join(lines))
    return 0


def cmd_cgt(args) -> int:
    params = _params(args)
    w = _weight(params, args.weight)
    ok = C.cgt_check(w)
    _emit(args, {"weight": str(w), "holds": ok},
          f"crystal-path identity at {w}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_e_basis(args) -> int:
    params = _params(args)
    alpha = _alpha(args.alpha)
    basis = S.E_basis(params, alpha)
    lines = [f"dim {len(basis)}", f"graded dim {S.graded_dimension(basis)}"]
    for v in basis:
        lines.append(f"  {v} deg {v.degree()}")
    _emit(args, {"dimension": len(basis),
                 "graded_dimension": S.graded_dimension(basis).to_json(),
                 "basis": [SER.evec_to_json(v) for v in basis]}, "\n".join(lines))
    return 0


def cmd_e_mult(args) -> int:
    params = _params(args)
    x = SER.evec_from_json(json.loads(args.lhs))
    y = SER.evec_from_json(json.loads(args.rhs))
    product = S.e_mult(x, y)
    text = " + ".join(f"{c}*{t}" for t, c in product.items()) or "0"
    _emit(args, {"terms": [[SER.evec_to_json(t), c] for t, c in product.items()]}, text)
    return 0


def cmd_klr_verify(args) -> int:
    params = _params(args)
    rows = []
    failed = False
    for alpha in S.all_alphas(params, args.max_height):
        bad = klr.verify_relations(params, alpha)
        surj = klr.surjectivity_check(params, alpha)
        dims = klr.dim_check(params, alpha)
        hecke = klr.verify_hecke(params, alpha) if args.hecke else []
        ok = not bad and surj and dims and not hecke
        failed = failed or not ok
        rows.append({"alpha": [list(x) for x in alpha], "relations": not bad,
                     "surjective": surj, "dimensions": dims,
                     "hecke": (not hecke) if args.hecke else None,
                     "violations": bad[:3] + hecke[:3]})
        print(f"alpha={alpha}: relations={'ok' if not bad else 'FAIL'} "
              f"span={'ok' if surj else 'FAIL'} dims={'ok' if dims else 'FAIL'}"
              + (f" hecke={'ok' if not hecke else 'FAIL'}" if args.hecke else ""))
    if args.format == "json":
        print(json.dumps({"rows": rows}, indent=2))
    return 1 if failed else 0


def cmd_specht(args) -> int:
    params = _params(args)
    w = _weight(params, args.weight)
    G = SP.gram(w)
    iseq = tuple(int(x) for x in args.i.split(",")) if args.i else None
    payload: dict = {"weight": str(w)}
    lines = []
    if args.gdim or not (args.gram or args.irreducible):
        gd = G.graded_dimension(iseq)
        payload["graded_dimension"] = gd.to_json()
        lines.append(f"graded dim S = {gd}")
    if args.gram:
        mat = G.matrix()
        payload["gram"] = mat
        payload["rank"] = G.rank()
        lines.append(f"gram rank {G.rank()} of dim {G.dimension}")
    if args.irreducible:
        gd = G.irreducible_graded_dimension(iseq)
        rd = G.radical_graded_dimension(iseq)
        payload["irreducible"] = gd.to_json()
        payload["radical"] = rd.to_json()
        lines.append(f"graded dim D = {gd}")
        lines.append(f"graded dim rad = {rd}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_bijection(args) -> int:
    params = _params(args)
    oc = SER.oriented_cap_from_json(json.loads(args.diagram))
    tab = D.to_bitableau(oc)
    payload = {"first": [list(r) for r in tab.first],
               "second": [list(r) for r in tab.second],
               "residues": list(D.residue_sequence(params, tab)),
               "degree": D.cap_degree(oc)}
    _emit(args, payload,
          f"bitableau {tab.first} | {tab.second}\n"
          f"residues {payload['residues']}\ndegree {payload['degree']}")
    return 0


def cmd_render(args) -> int:
    data = json.loads(args.diagram)
    kind = data.get("type")
    if kind == "stretched-circle":
        stack = S.evec_stack(SER.evec_from_json(data))
    elif kind == "stretched-cap":
        oc = SER.oriented_cap_from_json(data)
        from .diagrams import half_geometry

        geometry = half_geometry(oc.params, oc.iseq)
        from .surgery import OrientedStack

        stack = OrientedStack(oc.params, oc.gammas, geometry.arcs)
    elif kind == "circle-diagram":
        stack = K.to_stack(SER.circle_diagram_from_json(data))
    else:
        print(f"cannot render objects of type {kind!r}", file=sys.stderr)
        return 2
    print(render.render_svg(stack) if args.format == "svg" else render.render_stack(stack))
    return 0


def cmd_verify(args) -> int:
    scope = V.Scope(max_vertices=args.max_vertices, max_height=args.max_height,
                    max_mn=args.m if args.m else 2)
    report = V.run_all(scope)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    if not report["passed"]:
        failing = [r for r in report["results"] if not r["passed"]]
        print(f"FAILED criteria: {[r['criterion'] for r in failing]}", file=sys.stderr)
        return 1
    return 0


def _add_params(sub, m_default=None):
    sub.add_argument("--m", type=int, required=m_default is None, default=m_default)
    sub.add_argument("--n", type=int, required=m_default is None, default=m_default)
    sub.add_argument("--I", dest="interval", type=_interval, required=True,
                     help="index interval, e.g. 1..3")
    sub.add_argument("--format", choices=("text", "json", "svg"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arckit",
        description="Exact diagram calculus for arc algebras and level-two "
                    "cyclotomic KLR algebras")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("block", help="block data: defect, weights")
    _add_params(p)
    p.add_argument("--sig", required=True, help="signature, e.g. 2,0 or 110")
    p.set_defaults(func=cmd_block)

    p = subs.add_parser("crystal", help="crystal edges and path to a maximal weight")
    _add_params(p)
    p.add_argument("--from", required=True, help="weight string over o v ^ x")
    p.set_defaults(func=cmd_crystal)

    p = subs.add_parser("mult", help="multiply two arc-algebra basis diagrams")
    _add_params(p)
    p.add_argument("--lhs", required=True, help="diagram a|mid|b, e.g. v^|^v|v^")
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_mult)

    p = subs.add_parser("cartan", help="graded Cartan matrix of a block")
    _add_params(p)
    p.add_argument("--sig", required=True)
    p.set_defaults(func=cmd_cartan)

    p = subs.add_parser("decomp", help="d- and p-transition matrices of a block")
    _add_params(p)
    p.add_argument("--sig", required=True)
    p.set_defaults(func=cmd_decomp)

    p = subs.add_parser("cgt", help="check the crystal-path identity at a weight")
    _add_params(p)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_cgt)

    p = subs.add_parser("e-basis", help="basis of the stretched endomorphism algebra")
    _add_params(p)
    p.add_argument("--alpha", required=True, help="word 1,2,2 or pairs 1:1,2:2")
    p.set_defaults(func=cmd_e_basis)

    p = subs.add_parser("e-mult", help="multiply two stretched basis vectors (JSON)")
    _add_params(p)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_e_mult)

    p = subs.add_parser("klr-verify", help="relation/span/dimension table per alpha")
    _add_params(p)
    p.add_argument("--max-height", type=int, default=4)
    p.add_argument("--hecke", action="store_true")
    p.set_defaults(func=cmd_klr_verify)

    p = subs.add_parser("specht", help="cell-module data at a weight")
    _add_params(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--i", default=None, help="restrict to one residue sequence")
    p.add_argument("--gdim", action="store_true")
    p.add_argument("--gram", action="store_true")
    p.add_argument("--irreducible", action="store_true")
    p.set_defaults(func=cmd_specht)

    p = subs.add_parser("bijection", help="stretched cap diagram -> bitableau")
    _add_params(p)
    p.add_argument("--diagram", required=True, help="stretched-cap JSON")
    p.set_defaults(func=cmd_bijection)

    p = subs.add_parser("render", help="ASCII or SVG picture of a diagram (JSON)")
    _add_params(p, m_default=0)
    p.add_argument("--diagram", required=True)
    p.add_argument("--trace-surgery", action="store_true",
                   help="print every intermediate diagram of a multiplication")
    p.set_defaults(func=cmd_render)

    p = subs.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--I", dest="interval", type=_interval, default=(1, 3))
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--max-height", type=int, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    threads = os.environ.get("ARCKIT_THREADS")
    if threads is not None and not threads.isdigit():
        print("ARCKIT_THREADS must be a nonnegative integer", file=sys.stderr)
        return 2
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
