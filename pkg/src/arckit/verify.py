"""The orchestrated verification suite.

Each criterion function returns (name, passed, detail).  `run_all` executes
the requested scope and produces a machine-readable report; the CLI `verify`
subcommand and the acceptance test module both drive this code.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import categorify as C
from . import diagrams as D
from . import karc as K
from . import klr
from . import specht as SP
from . import stretched as S
from .laurent import LaurentPoly
from .linalg import rank
from .surgery import FormalSum
from .weights import (
    Bipartition,
    Block,
    Params,
    Weight,
    all_blocks,
    block_of,
    bruhat_leq,
    bruhat_raises,
    crystal_component_of_ground_state,
    defect,
    from_bipartition,
    ground_state_block,
    linked,
    max_defect_set,
)


@dataclass
class Scope:
    max_vertices: int = 6       # number-line length bound for block-level checks
    max_transition_vertices: int = 5
    max_height: int = 4
    max_mn: int = 2
    klr_max_isize: int = 3

    def param_sets(self, max_vertices=None):
        out = []
        bound = max_vertices or self.max_vertices
        for m in range(0, self.max_mn + 1):
            for n in range(0, self.max_mn + 1):
                for isize in range(1, bound):
                    if m <= isize + 1 and n <= isize + 1 and isize + 1 <= bound:
                        out.append(Params(m, n, 1, isize))
        return out

    def klr_param_sets(self):
        out = []
        for mn in range(1, self.max_mn + 1):
            for isize in range(1, self.klr_max_isize + 1):
                if mn <= isize + 1:
                    out.append(Params(mn, mn, 1, isize))
        return out


Result = tuple[str, bool, str]


# ---------------------------------------------------------------------------
# criterion 1: the worked numbers


def fig2_vector() -> S.EVec:
    p = Params(2, 2, 1, 2)
    gammas = (("x", "x", "o"), ("x", "v", "^"), ("x", "o", "x"), ("^", "v", "x"))
    deltas = (("x", "x", "o"), ("x", "^", "v"), ("^", "x", "v"), ("^", "v", "x"))
    return S.EVec(p, (2, 2, 1), gammas, (2, 1, 2), deltas)


def worked_cap_example() -> D.OrientedCap:
    p = Params(2, 2, 1, 4)
    gammas = (
        ("x", "x", "o", "o", "o"),
        ("x", "v", "^", "o", "o"),
        ("x", "v", "o", "^", "o"),
        ("x", "v", "o", "o", "^"),
        ("v", "x", "o", "o", "^"),
        ("v", "^", "v", "o", "^"),
        ("v", "o", "x", "o", "^"),
        ("v", "o", "v", "^", "^"),
        ("o", "v", "v", "^", "^"),
    )
    return D.OrientedCap(p, (2, 3, 4, 1, 2, 2, 3, 1), gammas)


def criterion_1(scope: Scope) -> Result:
    problems = []
    # (a) the displayed block has defect two
    p = Params(5, 4, 1, 8)
    weight = Weight(p, tuple("xo^vvx^ov"))
    if defect(block_of(weight)) != 2:
        problems.append("defect of the displayed block is not 2")
    # (b) the stretched circle diagram of the figure has degree one
    if fig2_vector().degree() != 1:
        problems.append("displayed stretched circle diagram degree != 1")
    # (c) the worked cap diagram matches its bitableau
    oc = worked_cap_example()
    p4 = oc.params
    if D.cap_degree(oc) != 1:
        problems.append("worked cap diagram degree != 1")
    tab = D.to_bitableau(oc)
    if (tab.first, tab.second) != (((5,), (8,)), ((1, 2, 3), (4, 6, 7))):
        problems.append("bitableau mismatch")
    if D.residue_sequence(p4, tab) != (2, 3, 4, 1, 2, 2, 3, 1):
        problems.append("residue sequence mismatch")
    if D.tableau_type(p4, tab) != {1: 2, 2: 3, 3: 2, 4: 1}:
        problems.append("type mismatch")
    if D.from_bitableau(p4, tab) != oc:
        problems.append("bitableau reconstruction mismatch")
    # (d) the closing worked example
    lam = from_bipartition(p4, Bipartition((1, 1), (3, 3)))
    G = SP.gram(lam)
    iseq = (2, 3, 4, 1, 2, 2, 3, 1)
    q = LaurentPoly.q
    if G.irreducible_graded_dimension(iseq) != q(-1) + q(1):
        problems.append("irreducible weight-space graded dimension mismatch")
    expected_rad = LaurentPoly.from_int(2) + q(1) + 2 * q(2) + q(3)
    if G.radical_graded_dimension(iseq) != expected_rad:
        problems.append("radical weight-space graded dimension mismatch")
    return ("1 worked numbers", not problems, "; ".join(problems) or "all reproduced")


# ---------------------------------------------------------------------------
# criterion 2: algebra soundness


def _k_soundness(block: Block) -> list[str]:
    problems = []
    basis = K.basis(block)
    index = {v: k for k, v in enumerate(basis)}
    table = {}
    for a in basis:
        for b in basis:
            table[(a, b)] = K.mult(a, b)
    # grading
    for (a, b), prod in table.items():
        for t, _ in prod.items():
            if D.deg_circle(t) != D.deg_circle(a) + D.deg_circle(b):
                problems.append(f"grading fails at {a}*{b}")
    # unit and idempotents
    unit = K.unit(block)
    for a in basis:
        fa = FormalSum.single(a)
        if K.mult_sums(unit, fa) != fa or K.mult_sums(fa, unit) != fa:
            problems.append(f"unit fails at {a}")
    ws = block.weights()
    for w1 in ws:
        for w2 in ws:
            e1, e2 = D.idempotent_diagram(w1), D.idempotent_diagram(w2)
            expected = FormalSum.single(e1) if w1 == w2 else FormalSum.zero()
            if table[(e1, e2)] != expected:
                problems.append(f"idempotents fail at {w1},{w2}")
    # associativity through left-multiplication matrices
    mats = {}
    for a in basis:
        mat: dict[int, dict[int, int]] = {}
        for j, b in enumerate(basis):
            for t, c in table[(a, b)].items():
                mat.setdefault(index[t], {})[j] = c
        mats[a] = mat
    def matmul(x, y):
        out: dict[int, dict[int, int]] = {}
        for i, xi in x.items():
            row: dict[int, int] = {}
            for k, f in xi.items():
                yk = y.get(k)
                if yk:
                    for j, g in yk.items():
                        row[j] = row.get(j, 0) + f * g
            row = {j: v for j, v in row.items() if v}
            if row:
                out[i] = row
        return out
    for a in basis:
        for b in basis:
            lhs: dict[int, dict[int, int]] = {}
            for t, c in table[(a, b)].items():
                for i, row in mats[t].items():
                    dest = lhs.setdefault(i, {})
                    for j, v in row.items():
                        dest[j] = dest.get(j, 0) + c * v
            lhs = {i: {j: v for j, v in row.items() if v}
                   for i, row in lhs.items()}
            lhs = {i: row for i, row in lhs.items() if row}
            if lhs != matmul(mats[a], mats[b]):
                problems.append(f"associativity fails at {a}*{b}")
                return problems
    # cellularity
    problems += K.cellularity_check(block)
    return problems


def _e_soundness(params: Params, alpha) -> list[str]:
    problems = []
    basis = S.E_basis(params, alpha)
    if not basis:
        return problems
    index = {v: k for k, v in enumerate(basis)}
    table = {}
    for a in basis:
        for b in basis:
            table[(a, b)] = S.e_mult(a, b)
    for (a, b), prod in table.items():
        for t, _ in prod.items():
            if t.degree() != a.degree() + b.degree():
                problems.append(f"E grading fails at {a}*{b}")
                return problems
    unit = S.identity_element(params, alpha)
    for a in basis:
        fa = FormalSum.single(a)
        if S.e_mult_sums(unit, fa) != fa or S.e_mult_sums(fa, unit) != fa:
            problems.append(f"E unit fails at {a}")
            return problems
    mats = {}
    for a in basis:
        mat: dict[int, dict[int, int]] = {}
        for j, b in enumerate(basis):
            for t, c in table[(a, b)].items():
                mat.setdefault(index[t], {})[j] = c
        mats[a] = mat
    def matmul(x, y):
        out: dict[int, dict[int, int]] = {}
        for i, xi in x.items():
            row: dict[int, int] = {}
            for k, f in xi.items():
                yk = y.get(k)
                if yk:
                    for j, g in yk.items():
                        row[j] = row.get(j, 0) + f * g
            row = {j: v for j, v in row.items() if v}
            if row:
                out[i] = row
        return out
    for a in basis:
        for b in basis:
            lhs: dict[int, dict[int, int]] = {}
            for t, c in table[(a, b)].items():
                for i, row in mats[t].items():
                    dest = lhs.setdefault(i, {})
                    for j, v in row.items():
                        dest[j] = dest.get(j, 0) + c * v
            lhs = {i: {j: v for j, v in row.items() if v} for i, row in lhs.items()}
            lhs = {i: row for i, row in lhs.items() if row}
            if lhs != matmul(mats[a], mats[b]):
                problems.append(f"E associativity fails at {a}*{b}")
                return problems
    # cellularity with the Bruhat order on boundary weights
    def cell_of(v: S.EVec):
        return (Weight(params, v.gammas[-1]),
                (v.jseq, v.deltas), (v.iseq, v.gammas))
    problems += K.check_cellularity(
        basis, cell_of,
        lambda x, y: table[(x, y)],
        bruhat_leq,
    )
    return problems


def criterion_2(scope: Scope) -> Result:
    problems = []
    for params in scope.param_sets():
        for block in all_blocks(params):
            issues = _k_soundness(block)
            if issues:
                problems.append(f"K[{block}]: {issues[0]}")
    for params in scope.klr_param_sets():
        for alpha in S.all_alphas(params, scope.max_height):
            issues = _e_soundness(params, alpha)
            if issues:
                problems.append(f"E[{params},{alpha}]: {issues[0]}")
    return ("2 algebra soundness", not problems, "; ".join(problems[:4]) or
            "associativity, unit, idempotents, grading, cellularity verified")


# ---------------------------------------------------------------------------
# criterion 3: basis-transition consistency


def criterion_3(scope: Scope) -> Result:
    problems = []
    for params in scope.param_sets(scope.max_transition_vertices):
        for block in all_blocks(params):
            bases = C.block_bases(block)
            ws = block.weights()
            for w in ws:
                if bases.dual_canonical(w) != bases.dual_canonical_by_lusztig(w):
                    problems.append(f"L[{w}] disagreement")
            # the four characterising properties of bar
            minimal = [w for w in ws
                       if all(not bruhat_leq(v, w) or v == w for v in ws)]
            for w in minimal:
                if bases.bar(C.TensorVector.monomial(w)) != C.TensorVector.monomial(w):
                    problems.append(f"bar does not fix minimal {w}")
            for w in ws:
                v = C.TensorVector.monomial(w)
                if bases.bar(bases.bar(v)) != v:
                    problems.append(f"bar^2 fails at {w}")
                image = bases.bar(v)
                for u, coeff in image.items():
                    if u != w and not (bruhat_leq(u, w) and u != w):
                        problems.append(f"bar not unitriangular at {w}")
                if image.coeff(w) != LaurentPoly.one():
                    problems.append(f"bar diagonal not 1 at {w}")
            for i in params.index_set:
                for w in ws:
                    v = C.TensorVector.monomial(w)
                    lhs = C.act_F(i, bases.bar(v))
                    rhs_vec = C.act_F(i, v)
                    rhs = C.TensorVector()
                    for u, coeff in rhs_vec.items():
                        col = C.block_bases(block_of(u)).bar(
                            C.TensorVector.monomial(u))
                        rhs = rhs + col.scale(coeff.bar())
                    if lhs != rhs:
                        problems.append(f"bar does not commute with F_{i} at {w}")
            # duality and the Cartan pairing
            for a in ws:
                for b in ws:
                    pl = bases.form(bases.quasi_canonical(a), bases.dual_canonical(b))
                    if pl != (LaurentPoly.one() if a == b else LaurentPoly.zero()):
                        problems.append(f"<P,L> fails at {a},{b}")
                    cart = bases.form(bases.quasi_canonical(a), bases.quasi_canonical(b))
                    if cart != K.hom_space_graded_dim(a, b):
                        problems.append(f"Cartan pairing fails at {a},{b}")
    return ("3 basis transitions", not problems, "; ".join(problems[:4]) or
            "Lusztig-lemma, bar properties, dualities, Cartan pairing verified")


# ---------------------------------------------------------------------------
# criterion 4: the crystal-path identity


def criterion_4(scope: Scope) -> Result:
    problems = []
    for params in scope.param_sets(scope.max_transition_vertices):
        for block in all_blocks(params):
            for w in block.weights():
                if not C.cgt_check(w):
                    problems.append(f"crystal-path identity fails at {w}")
    return ("4 crystal-path identity", not problems,
            "; ".join(problems[:4]) or "identity holds on every weight in scope")


# ---------------------------------------------------------------------------
# criterion 5: crystal coherence


def criterion_5(scope: Scope) -> Result:
    problems = []
    for params in scope.param_sets():
        component = crystal_component_of_ground_state(params)
        union = set()
        for block in all_blocks(params):
            union.update(max_defect_set(block))
        if component != union:
            problems.append(f"{params}: component != union of maximal-defect sets")
    return ("5 crystal coherence", not problems,
            "; ".join(problems[:4]) or "ground-state component matches")


# ---------------------------------------------------------------------------
# criteria 6 and 7: KLR and Hecke certification


def criterion_6(scope: Scope) -> Result:
    problems = []
    for params in scope.klr_param_sets():
        for alpha in S.all_alphas(params, scope.max_height):
            bad = klr.verify_relations(params, alpha)
            if bad:
                problems.append(f"{params} {alpha}: {bad[0]}")
            if not klr.surjectivity_check(params, alpha):
                problems.append(f"{params} {alpha}: span deficient")
            if not klr.dim_check(params, alpha):
                problems.append(f"{params} {alpha}: dimension mismatch")
            if not klr.graded_dim_check(params, alpha):
                problems.append(f"{params} {alpha}: graded dimension mismatch")
    return ("6 KLR certification", not problems,
            "; ".join(problems[:4]) or "relations, span, dimensions verified")


def criterion_7(scope: Scope) -> Result:
    problems = []
    for params in scope.klr_param_sets():
        for alpha in S.all_alphas(params, scope.max_height):
            bad = klr.verify_hecke(params, alpha)
            if bad:
                problems.append(f"{params} {alpha}: {bad[0]}")
    return ("7 Hecke certification", not problems,
            "; ".join(problems[:4]) or "degenerate affine and cyclotomic relations verified")


# ---------------------------------------------------------------------------
# criterion 8: Specht and irreducible coherence


def criterion_8(scope: Scope) -> Result:
    problems = []
    for params in scope.klr_param_sets():
        for alpha in S.all_alphas(params, scope.max_height):
            block = S.outer_block(params, alpha)
            if block is None:
                continue
            top = set(max_defect_set(block))
            for w in block.weights():
                G = SP.gram(w)
                mat = G.matrix()
                r = rank(mat)
                # rank vs the dimension-formula count
                if r != G.irreducible_graded_dimension().eval_at_one():
                    problems.append(f"rank/count mismatch at {w}")
                if (r > 0) != (w in top):
                    problems.append(f"nonvanishing criterion fails at {w}")
                if len(G.radical_basis()) + r != G.dimension:
                    problems.append(f"special-basis radical mismatch at {w}")
                for i, a in enumerate(G.basis):
                    for j, b in enumerate(G.basis):
                        if mat[i][j] and G.degree(a) + G.degree(b) != 0:
                            problems.append(f"form not degree zero at {w}")
    return ("8 Specht coherence", not problems,
            "; ".join(problems[:4]) or "Gram ranks, radicals, vanishing verified")


# ---------------------------------------------------------------------------
# criterion 9: theta / omega / star coherence


def criterion_9(scope: Scope) -> Result:
    problems = []
    for params in scope.klr_param_sets():
        for alpha in S.all_alphas(params, scope.max_height):
            for violation in klr.star_report(params, alpha):
                problems.append(
                    f"{params} {alpha}: star(omega({violation})) != omega({violation})")
            # the iterated-theta identity
            for iseq in S.admissible_sequences(params, alpha):
                current = S.theta_unit(params)
                for i in iseq:
                    current = S.theta_sum(i, current)
                if current != S.omega_e(params, iseq):
                    problems.append(f"{params}: iterated theta fails at {iseq}")
            # theta is a degree-preserving homomorphism
            if S.alpha_height(alpha) <= scope.max_height - 1:
                basis = S.E_basis(params, alpha)
                if basis and len(basis) <= 12:
                    for i in params.index_set:
                        for a in basis:
                            fa = FormalSum.single(a)
                            ta = S.theta_sum(i, fa)
                            for t, _ in ta.items():
                                if t.degree() != a.degree():
                                    problems.append(f"theta degree shift at {a}")
                            for b in basis:
                                lhs = S.theta_sum(i, S.e_mult(a, b))
                                rhs = S.e_mult_sums(ta, S.theta_sum(i, FormalSum.single(b)))
                                if lhs != rhs:
                                    problems.append(
                                        f"theta multiplicativity fails at {a},{b}")
            # the symmetrizing form
            basis = S.E_basis(params, alpha)
            block = S.outer_block(params, alpha)
            if basis and block is not None and len(basis) <= 40:
                dvalue = 2 * defect(block)
                gram_rows = []
                for a in basis:
                    if S.tau(a) and a.degree() != dvalue:
                        problems.append(f"tau not concentrated in degree {dvalue}")
                    fa = FormalSum.single(a)
                    row = []
                    for b in basis:
                        xy = S.e_mult(a, b)
                        yx = S.e_mult(b, a)
                        if S.tau_sum(xy) != S.tau_sum(yx):
                            problems.append(f"tau not symmetric at {a},{b}")
                        row.append(S.tau_sum(xy))
                    gram_rows.append(row)
                if rank(gram_rows) != len(basis):
                    problems.append(f"tau pairing degenerate for {params} {alpha}")
    return ("9 theta/omega/star coherence", not problems,
            "; ".join(problems[:4]) or "theta, star, symmetrizing form verified")


# ---------------------------------------------------------------------------
# criterion 10: the frozen micro-oracle


def criterion_10(scope: Scope) -> Result:
    problems = []
    p = Params(1, 1, 1, 1)
    block = Block(p, (1, 1))
    if K.dimension(block) != 5:
        problems.append("dim K != 5")
    alpha = ((1, 1),)
    q = LaurentPoly.q
    if S.graded_dimension(S.E_basis(p, alpha)) != LaurentPoly.one() + q(2):
        problems.append("graded dim E != 1+q^2")
    y1 = S.omega_y(p, alpha, 1)
    if not S.e_mult_sums(y1, y1).is_zero():
        problems.append("omega(y_1)^2 != 0")
    vd = Weight(p, ("v", "^"))
    if SP.gram(vd).irreducible_graded_dimension().eval_at_one() != 1:
        problems.append("dim D(v^) != 1")
    return ("10 micro-oracle", not problems, "; ".join(problems) or "golden values hold")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def run_all(scope: Scope | None = None, emit=print) -> dict:
    scope = scope or Scope()
    report = {"scope": vars(scope), "results": [], "passed": True}
    for criterion in CRITERIA:
        t0 = time.time()
        name, ok, detail = criterion(scope)
        elapsed = time.time() - t0
        report["results"].append({
            "criterion": name, "passed": ok, "detail": detail,
            "seconds": round(elapsed, 2),
        })
        report["passed"] = report["passed"] and ok
        emit(f"[{'PASS' if ok else 'FAIL'}] {name} ({elapsed:.1f}s): {detail}")
    return report
