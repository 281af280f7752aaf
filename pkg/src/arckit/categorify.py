"""The Grothendieck-group model: exterior-power tensor space over Z[q,q^-1]
with its monomial, dual-canonical and quasi-canonical bases.

Vectors are finite maps weight -> LaurentPoly.  The divided operators act by
the coproduct rule: the first tensor factor collects the 'v'/'x' positions,
the second the '^'/'x' positions, and single-box moves carry q-powers from
the balancing factors.
"""

from __future__ import annotations

from functools import lru_cache

from .diagrams import arc_is_anticlockwise, cup_of, orientations
from .laurent import LaurentPoly, quantum_bracket
from .surgery import FormalSum  # reused as a plain linear-combination container
from .weights import (
    BOTH,
    Block,
    DOWN,
    EMPTY,
    Params,
    UP,
    Weight,
    block_of,
    bruhat_leq,
    crystal_path_to_max,
    linked,
)


class TensorVector:
    """A finite Z[q,q^-1]-linear combination of monomial basis vectors."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Weight, LaurentPoly] = {}
        for w, coeff in items:
            if not isinstance(coeff, LaurentPoly):
                coeff = LaurentPoly.from_int(coeff)
            if coeff:
                prev = acc.get(w)
                total = coeff if prev is None else prev + coeff
                if total:
                    acc[w] = total
                elif w in acc:
                    del acc[w]
        self._terms = acc

    @staticmethod
    def monomial(w: Weight, coeff: LaurentPoly | int = 1) -> "TensorVector":
        return TensorVector([(w, coeff)])

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, w: Weight) -> LaurentPoly:
        return self._terms.get(w, LaurentPoly.zero())

    def support(self):
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "TensorVector") -> "TensorVector":
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, LaurentPoly.zero()) + c
        return TensorVector(acc)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + other.scale(LaurentPoly.from_int(-1))

    def scale(self, poly: LaurentPoly | int) -> "TensorVector":
        if not isinstance(poly, LaurentPoly):
            poly = LaurentPoly.from_int(poly)
        return TensorVector({w: c * poly for w, c in self._terms.items()})

    def bar_coefficients(self) -> "TensorVector":
        return TensorVector({w: c.bar() for w, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted((w, c) for w, c in self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*V[{w}]" for w, c in self.items())


def _multiplicity(w: Weight, vertex: int) -> int:
    return {EMPTY: 0, DOWN: 1, UP: 1, BOTH: 2}[w.label(vertex)] if vertex in w.params.vertices else 0


def _down_count(w: Weight, vertex: int) -> int:
    return 1 if w.label(vertex) in (DOWN, BOTH) else 0


def _up_count(w: Weight, vertex: int) -> int:
    return 1 if w.label(vertex) in (UP, BOTH) else 0


def _move_label(w: Weight, vertex_from: int, vertex_to: int, side: str) -> Weight | None:
    """Move one marking of the given side between adjacent vertices."""
    has = _down_count if side == "down" else _up_count
    if not has(w, vertex_from) or has(w, vertex_to):
        return None
    changes = {}
    for v, delta in ((vertex_from, -1), (vertex_to, +1)):
        downs = _down_count(w, v) + (delta if side == "down" else 0)
        ups = _up_count(w, v) + (delta if side == "up" else 0)
        changes[v] = {(0, 0): EMPTY, (1, 0): DOWN, (0, 1): UP, (1, 1): BOTH}[(downs, ups)]
    return w.relabel(changes)


def act_F(i: int, vec: TensorVector) -> TensorVector:
    """F_i: first-factor move with no twist, second-factor move twisted by
    the inverse balancing power of the first factor."""
    out = TensorVector()
    for w, coeff in vec.items():
        if i not in w.params.index_set:
            raise ValueError(f"colour {i} outside I")
        first = _move_label(w, i, i + 1, "down")
        if first is not None:
            out = out + TensorVector.monomial(first, coeff)
        second = _move_label(w, i, i + 1, "up")
        if second is not None:
            power = _down_count(w, i + 1) - _down_count(w, i)
            out = out + TensorVector.monomial(second, coeff * LaurentPoly.q(power))
    return out


def act_E(i: int, vec: TensorVector) -> TensorVector:
    out = TensorVector()
    for w, coeff in vec.items():
        if i not in w.params.index_set:
            raise ValueError(f"colour {i} outside I")
        second = _move_label(w, i + 1, i, "up")
        if second is not None:
            out = out + TensorVector.monomial(second, coeff)
        first = _move_label(w, i + 1, i, "down")
        if first is not None:
            power = _up_count(w, i) - _up_count(w, i + 1)
            out = out + TensorVector.monomial(first, coeff * LaurentPoly.q(power))
    return out


def act_D(i: int, sign: int, vec: TensorVector) -> TensorVector:
    """D_i^{+-1} scales each monomial by q to the multiplicity of vertex i."""
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    out = TensorVector()
    for w, coeff in vec.items():
        out = out + TensorVector.monomial(w, coeff * LaurentPoly.q(sign * _multiplicity(w, i)))
    return out


def act_F_word(word, vec: TensorVector) -> TensorVector:
    for i in word:
        vec = act_F(i, vec)
    return vec


# ---------------------------------------------------------------------------
# transition matrices


@lru_cache(maxsize=None)
def d_poly(wl: Weight, wmu: Weight) -> LaurentPoly:
    """d_{lambda,mu}(q) = q^deg(cup(lambda) mu) when oriented, else 0."""
    if not linked(wl, wmu):
        return LaurentPoly.zero()
    a = cup_of(wl)
    for p, q in a.cups:
        if {wmu.label(p), wmu.label(q)} != {DOWN, UP}:
            return LaurentPoly.zero()
    if any(wmu.label(v) != sym for v, sym in a.rays):
        return LaurentPoly.zero()
    deg = sum(0 if arc_is_anticlockwise(wmu, p, q) else 1 for p, q in a.cups)
    return LaurentPoly.q(deg)


class BlockBases:
    """The d- and p-matrices of one block, plus bar and the form.

    Matrices are dicts keyed by weight pairs; columns of the inverse give
    the dual-canonical basis in monomial coordinates.
    """

    def __init__(self, block: Block):
        self.block = block
        self.weights = block.weights()
        self.d = {(a, b): d_poly(a, b) for a in self.weights for b in self.weights}
        self.d_inverse = self._invert_unitriangular(self.d)
        # bar matrix: columns express bar(V_mu) in the monomial basis
        self.bar_matrix = {}
        for mu in self.weights:
            column: dict[Weight, LaurentPoly] = {}
            for nu in self.weights:
                c = self.d[(nu, mu)].bar()
                if c:
                    for lam in self.weights:
                        t = self.d_inverse[(lam, nu)] * c
                        if t:
                            column[lam] = column.get(lam, LaurentPoly.zero()) + t
            self.bar_matrix[mu] = {k: v for k, v in column.items() if v}

    def _invert_unitriangular(self, mat):
        """Back-substitution; valid because d is unitriangular for Bruhat."""
        inv = {(a, b): LaurentPoly.zero() for a in self.weights for b in self.weights}
        order = sorted(self.weights, key=lambda w: sum(
            1 for v in self.weights if bruhat_leq(v, w)))
        for b in self.weights:
            inv[(b, b)] = LaurentPoly.one()
        for col in self.weights:
            for row in reversed(order):
                if row == col:
                    continue
                total = LaurentPoly.zero()
                for mid in self.weights:
                    if mid != row:
                        total = total + self.d[(row, mid)] * inv[(mid, col)]
                if self.d[(row, row)] != LaurentPoly.one():
                    raise AssertionError("d is not unitriangular")
                inv[(row, col)] = LaurentPoly.zero() - total
        # verify
        for a in self.weights:
            for b in self.weights:
                total = LaurentPoly.zero()
                for mid in self.weights:
                    total = total + self.d[(a, mid)] * inv[(mid, b)]
                expected = LaurentPoly.one() if a == b else LaurentPoly.zero()
                assert total == expected
        return inv

    def p_poly(self, a: Weight, b: Weight) -> LaurentPoly:
        """p_{a,b}(q); the inverse matrix entries are p_{a,b}(-q)."""
        entry = self.d_inverse[(a, b)]
        return LaurentPoly({d: (c if d % 2 == 0 else -c) for d, c in entry.items()})

    # -- distinguished vectors ----------------------------------------------

    def quasi_canonical(self, lam: Weight) -> TensorVector:
        """P_lambda = sum d_{lambda,mu}(q) V_mu."""
        return TensorVector({mu: self.d[(lam, mu)] for mu in self.weights})

    def dual_canonical(self, mu: Weight) -> TensorVector:
        """L_mu = sum p_{lambda,mu}(-q) V_lambda."""
        return TensorVector({lam: self.d_inverse[(lam, mu)] for lam in self.weights})

    # -- the bar involution --------------------------------------------------

    def bar(self, vec: TensorVector) -> TensorVector:
        out = TensorVector()
        for w, coeff in vec.items():
            column = self.bar_matrix[w]
            out = out + TensorVector({lam: c * coeff.bar() for lam, c in column.items()})
        return out

    def dual_canonical_by_lusztig(self, lam: Weight) -> TensorVector:
        """Solve for the bar-invariant vector V_lam + qZ[q]-combination."""
        order = [w for w in sorted(
            self.weights, key=lambda w: (sum(1 for v in self.weights if bruhat_leq(v, w)), w))
            if bruhat_leq(w, lam)]
        coeffs: dict[Weight, LaurentPoly] = {lam: LaurentPoly.one()}
        for mu in reversed(order[:-1]):
            # a_mu - bar(a_mu) = sum_{nu > mu} B[mu][nu] bar(a_nu)
            rhs = LaurentPoly.zero()
            for nu, a_nu in coeffs.items():
                if nu == mu:
                    continue
                b = self.bar_matrix[nu].get(mu, LaurentPoly.zero())
                rhs = rhs + b * a_nu.bar()
            if rhs.is_zero():
                a_mu = LaurentPoly.zero()
            else:
                assert rhs.coeff(0) == 0 and rhs + rhs.bar() == LaurentPoly.zero(), \
                    "bar matrix is not compatible with Lusztig's lemma"
                a_mu = LaurentPoly({d: c for d, c in rhs.items() if d > 0})
            if a_mu:
                coeffs[mu] = a_mu
        return TensorVector(coeffs)

    # -- the sesquilinear form ----------------------------------------------

    def form(self, left: TensorVector, right: TensorVector) -> LaurentPoly:
        """<.,.>: antilinear in the first slot, <V_a, bar V_b> = delta."""
        # express `right` in the basis {bar(V_mu)} by unitriangular solving
        residual = {w: right.coeff(w) for w in self.weights}
        coeffs: dict[Weight, LaurentPoly] = {}
        order = sorted(self.weights, key=lambda w: (sum(
            1 for v in self.weights if bruhat_leq(v, w)), w))
        for mu in reversed(order):
            c = residual.get(mu, LaurentPoly.zero())
            # bar(V_mu) = V_mu + lower terms, so the top coefficient is c
            if c:
                coeffs[mu] = c
                for lam, b in self.bar_matrix[mu].items():
                    residual[lam] = residual.get(lam, LaurentPoly.zero()) - b * c
        assert all(v.is_zero() for v in residual.values())
        total = LaurentPoly.zero()
        for mu, c in coeffs.items():
            total = total + left.coeff(mu).bar() * c
        return total


@lru_cache(maxsize=None)
def block_bases(block: Block) -> BlockBases:
    return BlockBases(block)


def bar(vec: TensorVector, block: Block) -> TensorVector:
    return block_bases(block).bar(vec)


def form(left: TensorVector, right: TensorVector, block: Block) -> LaurentPoly:
    return block_bases(block).form(left, right)


def commutator_check(i: int, j: int, w: Weight) -> bool:
    """[E_i, F_j] = delta_ij (D_i D_{i+1}^{-1} - D_{i+1} D_i^{-1})/(q - q^{-1})
    evaluated on one monomial vector."""
    v = TensorVector.monomial(w)
    lhs = act_E(i, act_F(j, v)) - act_F(j, act_E(i, v))
    if i != j:
        return lhs == TensorVector()
    a = _multiplicity(w, i) - _multiplicity(w, i + 1)
    return lhs == v.scale(quantum_bracket(a))


def cgt_check(lam: Weight) -> bool:
    """The crystal-path identity between iterated lowering operators applied
    to a Bruhat-maximal monomial vector and the quasi-canonical basis."""
    mu, path = crystal_path_to_max(lam)
    current = mu
    r = s = 0
    for i in path:
        pattern = (current.label(i), current.label(i + 1))
        if pattern == (DOWN, UP):
            r += 1
        elif pattern == (BOTH, EMPTY):
            s += 1
        from .weights import crystal_f

        current = crystal_f(i, current)
    assert current == lam
    lhs = act_F_word(path, TensorVector.monomial(mu))
    bases = block_bases(block_of(lam))
    factor = (LaurentPoly.q(1) + LaurentPoly.q(-1)) ** r * LaurentPoly.q(r - s)
    rhs = bases.quasi_canonical(lam).scale(factor)
    return lhs == rhs
