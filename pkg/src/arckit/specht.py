"""Graded cell (Specht) modules of the stretched endomorphism algebra, their
Gram forms, radicals, and the graded dimensions of the irreducible quotients.

Two closely related spaces appear:

  * the cell module S(w) in the Graham-Lehrer sense, with basis the oriented
    stretched cup diagrams whose outer weight is exactly w (the action is
    computed through the dual tensor space and truncated);
  * the weight-space form: the dual tensor space cut by the idempotent of w,
    whose basis allows any outer weight orienting the cap diagram of w.
    The 0/1 Gram form of the cellular structure lives here, pairs mirror
    shapes with opposite internal circles and anticlockwise closed outer
    components, and its radical is spanned by basis vectors.

Both quotients by the radical realise the same irreducible module; the
second space is where the dimension formula counts diagrams.
"""

from __future__ import annotations

from functools import lru_cache

from .diagrams import (
    OrientedCap,
    cap_degree,
    cap_of,
    cup_of,
    enumerate_oriented_caps,
    half_geometry,
    idempotent_diagram,
    internal_circles,
    circle_orientation_of,
    orients_cap_side,
)
from .geometry import circle_is_anticlockwise
from .laurent import LaurentPoly
from .linalg import rank
from .surgery import FormalSum
from .stretched import (
    ThatVec,
    TVec,
    admissible_sequences,
    e_on_That_sums,
    omega_e,
    omega_psi,
    omega_y,
    phi,
    thatvec_stack,
)
from .weights import Params, Weight, block_of, ground_state_block, max_defect_set


def _alpha_below(w: Weight):
    """Lambda - block(w) as a canonical alpha, or raise."""
    params = w.params
    lam = ground_state_block(params)
    blk = block_of(w)
    alpha: dict[int, int] = {}
    acc = 0
    for v in params.vertices:
        acc += lam.entry(v) - blk.entry(v)
        if acc < 0:
            raise ValueError("weight does not lie under the ground-state block")
        if acc:
            alpha[v] = acc
    return tuple(sorted(alpha.items()))


class SpechtModule:
    """The graded cell module attached to an outer weight."""

    def __init__(self, w: Weight):
        self.weight = w
        self.params = w.params
        self.block = block_of(w)
        self.alpha = _alpha_below(w)
        self.basis: tuple[OrientedCap, ...] = tuple(
            oc
            for iseq in admissible_sequences(self.params, self.alpha)
            for oc in enumerate_oriented_caps(self.params, iseq)
            if oc.gammas[-1] == w.labels
        )
        self.index = {oc: k for k, oc in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def degree(self, oc: OrientedCap) -> int:
        return cap_degree(oc)

    def graded_dimension(self) -> LaurentPoly:
        total = LaurentPoly.zero()
        for oc in self.basis:
            total = total + LaurentPoly.q(cap_degree(oc))
        return total

    def _to_that(self, oc: OrientedCap) -> ThatVec:
        return ThatVec(self.params, oc.iseq, oc.gammas, self.weight)

    def act(self, x: FormalSum, oc: OrientedCap) -> FormalSum:
        """Act through the dual tensor space, then kill the terms whose top
        weight moved off w (they lie in higher cells)."""
        image = e_on_That_sums(x, FormalSum.single(self._to_that(oc)))
        out = {}
        for term, coeff in image.items():
            if term.deltas[-1] == self.weight.labels:
                key = OrientedCap(self.params, term.jseq, term.deltas)
                out[key] = out.get(key, 0) + coeff
        return FormalSum(out)

    def action_matrix(self, x: FormalSum) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for j, oc in enumerate(self.basis):
            for term, coeff in self.act(x, oc).items():
                out.setdefault(self.index[term], {})[j] = coeff
        return out

    def generator_elements(self) -> list[FormalSum]:
        d = sum(m for _, m in self.alpha)
        gens = [omega_e(self.params, iseq)
                for iseq in admissible_sequences(self.params, self.alpha)]
        gens += [omega_y(self.params, self.alpha, r) for r in range(1, d + 1)]
        gens += [omega_psi(self.params, self.alpha, r) for r in range(1, d)]
        return [g for g in gens if not g.is_zero()]


@lru_cache(maxsize=None)
def specht(w: Weight) -> SpechtModule:
    return SpechtModule(w)


# ---------------------------------------------------------------------------
# the weight-space form carrying the Gram matrix


class GramData:
    """The dual-tensor-space slice at one outer weight, with its 0/1 form."""

    def __init__(self, w: Weight):
        self.weight = w
        self.params = w.params
        self.block = block_of(w)
        self.alpha = _alpha_below(w)
        cap = cap_of(w)
        self.basis: tuple[OrientedCap, ...] = tuple(
            oc
            for iseq in admissible_sequences(self.params, self.alpha)
            for oc in enumerate_oriented_caps(self.params, iseq)
            if orients_cap_side(cap, oc.boundary())
        )
        self.index = {oc: k for k, oc in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def degree(self, oc: OrientedCap) -> int:
        return cap_degree(oc)

    def graded_dimension(self, iseq=None) -> LaurentPoly:
        total = LaurentPoly.zero()
        for oc in self.basis:
            if iseq is None or oc.iseq == tuple(iseq):
                total = total + LaurentPoly.q(cap_degree(oc))
        return total

    # -- the form -------------------------------------------------------------

    def entry(self, a: OrientedCap, b: OrientedCap) -> int:
        """The rule through the doubled diagram: outer weights exactly w
        (every other orientation of its cap diagram is strictly higher, so
        such terms die in the cell quotient), mirror pairs of internal
        circles opposite, every closed component through the shared outer
        line anticlockwise."""
        if a.iseq != b.iseq:
            return 0
        if a.gammas[-1] != self.weight.labels or b.gammas[-1] != self.weight.labels:
            return 0
        from .stretched import EVec, _boundary_circles, _boundary_circle_acw
        from .diagrams import mirror_circles_opposite

        doubled = EVec(self.params, b.iseq, b.gammas, a.iseq, a.gammas)
        if not mirror_circles_opposite(doubled.upper(), doubled.lower()):
            return 0
        if not all(_boundary_circle_acw(doubled, c)
                   for c in _boundary_circles(doubled)):
            return 0
        return 1

    def entry_by_pairing(self, a: OrientedCap, b: OrientedCap) -> int:
        """The same number extracted from the evaluation pairing: the
        coefficient of the idempotent of w in phi."""
        v = TVec(self.params, b.iseq, b.gammas, self.weight)
        wv = ThatVec(self.params, a.iseq, a.gammas, self.weight)
        return phi(v, wv).coeff(idempotent_diagram(self.weight))

    def matrix(self) -> list[list[int]]:
        return [[self.entry(a, b) for b in self.basis] for a in self.basis]

    def rank(self) -> int:
        return rank(self.matrix())

    # -- radical and irreducible dimensions ------------------------------------

    def good(self, oc: OrientedCap) -> bool:
        """The dimension-formula conditions: outer weight exactly w and all
        outer components of the bare half anticlockwise."""
        return oc.gammas[-1] == self.weight.labels and bare_outer_anticlockwise(oc)

    def irreducible_graded_dimension(self, iseq=None) -> LaurentPoly:
        if self.weight not in max_defect_set(self.block):
            return LaurentPoly.zero()
        total = LaurentPoly.zero()
        for oc in self.basis:
            if iseq is not None and oc.iseq != tuple(iseq):
                continue
            if self.good(oc):
                total = total + LaurentPoly.q(cap_degree(oc))
        return total

    def radical_graded_dimension(self, iseq=None) -> LaurentPoly:
        good = (set() if self.weight not in max_defect_set(self.block)
                else {oc for oc in self.basis if self.good(oc)})
        total = LaurentPoly.zero()
        for oc in self.basis:
            if iseq is not None and oc.iseq != tuple(iseq):
                continue
            if oc not in good:
                total = total + LaurentPoly.q(cap_degree(oc))
        return total

    def radical_basis(self) -> tuple[OrientedCap, ...]:
        if self.weight not in max_defect_set(self.block):
            return self.basis
        return tuple(oc for oc in self.basis if not self.good(oc))


def bare_outer_anticlockwise(oc: OrientedCap) -> bool:
    """Every generalised cap (component with both ends on the outer line)
    is anticlockwise; propagating strands carry no condition."""
    geometry = half_geometry(oc.params, oc.iseq)
    bottom = len(oc.gammas) - 1
    for comp in geometry.components():
        ends = [1 for (r, _) in comp.vertices if r == bottom]
        if len(ends) == 2 and not comp.ray_pins:
            symbols = {(r, p): oc.gammas[r][oc.params.pos(p)]
                       for (r, p) in comp.vertices}
            if not circle_is_anticlockwise(comp, symbols):
                return False
    return True


@lru_cache(maxsize=None)
def gram(w: Weight) -> GramData:
    return GramData(w)
