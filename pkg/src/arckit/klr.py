"""The level-two cyclotomic KLR presentation, realised through the images of
its generators inside the stretched-diagram endomorphism algebra.

The presentation is never built abstractly: the generator images (projections,
dots, crossings) get left-multiplication matrices on the diagram basis, every
defining relation is checked as an exact matrix/element identity, and
surjectivity plus the bitableau dimension count certify faithfulness.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .diagrams import standard_bitableaux
from .linalg import SpanTracker
from .laurent import LaurentPoly
from .surgery import FormalSum
from .stretched import (
    E_basis,
    EVec,
    admissible_sequences,
    alpha_height,
    alpha_pairing_with_lambda,
    e_mult_sums,
    graded_dimension,
    identity_element,
    omega_e,
    omega_psi,
    omega_y,
    outer_block,
    sequences_of_alpha,
    star_e,
)
from .weights import Params, to_bipartition

Matrix = dict[int, dict[int, Fraction]]  # sparse: row -> {col -> value}


def _swap(seq, r):
    out = list(seq)
    out[r - 1], out[r] = out[r], out[r - 1]
    return tuple(out)


class Realization:
    """Left-multiplication matrices of the generator images on the basis."""

    def __init__(self, params: Params, alpha):
        self.params = params
        self.alpha = alpha
        self.d = alpha_height(alpha)
        self.basis = E_basis(params, alpha)
        self.index = {v: k for k, v in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.sequences = sequences_of_alpha(params, alpha)
        self.admissible = admissible_sequences(params, alpha)

    # -- elements ------------------------------------------------------------

    def e(self, iseq) -> FormalSum:
        return omega_e(self.params, tuple(iseq))

    def y(self, r: int) -> FormalSum:
        return omega_y(self.params, self.alpha, r)

    def psi(self, r: int) -> FormalSum:
        return omega_psi(self.params, self.alpha, r)

    def one(self) -> FormalSum:
        return identity_element(self.params, self.alpha)

    def product(self, *elements: FormalSum) -> FormalSum:
        acc = elements[0]
        for x in elements[1:]:
            acc = e_mult_sums(acc, x)
        return acc

    # -- matrices -------------------------------------------------------------

    def vector(self, x: FormalSum) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for v, c in x.items():
            out[self.index[v]] += c
        return out

    def matrix(self, x: FormalSum) -> Matrix:
        out: Matrix = {}
        for j, v in enumerate(self.basis):
            image = e_mult_sums(x, FormalSum.single(v))
            for term, coeff in image.items():
                out.setdefault(self.index[term], {})[j] = Fraction(coeff)
        return out

    def element_degree(self, x: FormalSum) -> int | None:
        degs = {v.degree() for v, _ in x.items()}
        if not degs:
            return None
        assert len(degs) == 1, "inhomogeneous element"
        return degs.pop()


@lru_cache(maxsize=None)
def realization(params: Params, alpha) -> Realization:
    return Realization(params, alpha)


# ---------------------------------------------------------------------------
# the defining relations


def verify_relations(params: Params, alpha) -> list[str]:
    """Check every instance of the cyclotomic KLR relations on the images.

    Returns a list of violated instances (empty means all relations hold).
    """
    R = realization(params, alpha)
    d = R.d
    bad: list[str] = []
    zero = FormalSum.zero()

    def expect(name, lhs, rhs):
        if lhs != rhs:
            bad.append(f"{name}: {lhs!r} != {rhs!r}")

    # cyclotomic relation (vacuous at height zero)
    if d:
        for iseq in R.sequences:
            power = alpha_pairing_with_lambda(params, iseq[0])
            elem = R.e(iseq)
            for _ in range(power):
                elem = e_mult_sums(R.y(1), elem)
            expect(f"cyclotomic {iseq}", elem, zero)

    # idempotent relations
    for iseq in R.sequences:
        for jseq in R.sequences:
            prod = R.product(R.e(iseq), R.e(jseq))
            expect(f"orthogonality {iseq},{jseq}", prod,
                   R.e(iseq) if iseq == jseq else zero)
    total = R.one()
    for v in R.basis:
        fv = FormalSum.single(v)
        expect("unit-left", e_mult_sums(total, fv), fv)
        expect("unit-right", e_mult_sums(fv, total), fv)

    # commuting families
    for r in range(1, d + 1):
        for iseq in R.sequences:
            expect(f"y{r} e{iseq} = e{iseq} y{r}",
                   R.product(R.y(r), R.e(iseq)), R.product(R.e(iseq), R.y(r)))
        for s in range(1, d + 1):
            expect(f"y{r} y{s}", R.product(R.y(r), R.y(s)), R.product(R.y(s), R.y(r)))
    for r in range(1, d):
        for iseq in R.sequences:
            expect(f"psi{r} e{iseq}",
                   R.product(R.psi(r), R.e(iseq)),
                   R.product(R.e(_swap(iseq, r)), R.psi(r)))
        for s in range(1, d + 1):
            if s not in (r, r + 1):
                expect(f"psi{r} y{s}",
                       R.product(R.psi(r), R.y(s)), R.product(R.y(s), R.psi(r)))
        for s in range(1, d):
            if abs(r - s) > 1:
                expect(f"psi{r} psi{s}",
                       R.product(R.psi(r), R.psi(s)), R.product(R.psi(s), R.psi(r)))

    # dot-crossing relations
    for r in range(1, d):
        for iseq in R.sequences:
            e_i = R.e(iseq)
            lhs = R.product(R.psi(r), R.y(r + 1), e_i)
            rhs = R.product(R.y(r), R.psi(r), e_i)
            if iseq[r - 1] == iseq[r]:
                rhs = rhs + e_i
            expect(f"psi y_(r+1) at {iseq} r={r}", lhs, rhs)
            lhs = R.product(R.y(r + 1), R.psi(r), e_i)
            rhs = R.product(R.psi(r), R.y(r), e_i)
            if iseq[r - 1] == iseq[r]:
                rhs = rhs + e_i
            expect(f"y_(r+1) psi at {iseq} r={r}", lhs, rhs)

    # quadratic relations
    for r in range(1, d):
        for iseq in R.sequences:
            e_i = R.e(iseq)
            lhs = R.product(R.psi(r), R.psi(r), e_i)
            gap = iseq[r] - iseq[r - 1]
            if gap == 0:
                rhs = zero
            elif abs(gap) == 1:
                rhs = gap * (R.product(R.y(r + 1), e_i) - R.product(R.y(r), e_i))
            else:
                rhs = e_i
            expect(f"quadratic at {iseq} r={r}", lhs, rhs)

    # braid relations
    for r in range(1, d - 1):
        for iseq in R.sequences:
            e_i = R.e(iseq)
            lhs = R.product(R.psi(r), R.psi(r + 1), R.psi(r), e_i)
            rhs = R.product(R.psi(r + 1), R.psi(r), R.psi(r + 1), e_i)
            if iseq[r + 1] == iseq[r - 1] and abs(iseq[r] - iseq[r - 1]) == 1:
                rhs = rhs + (iseq[r] - iseq[r - 1]) * e_i
            expect(f"braid at {iseq} r={r}", lhs, rhs)

    # degrees of the generator images
    for iseq in R.admissible:
        deg = R.element_degree(R.e(iseq))
        if deg not in (None, 0):
            bad.append(f"deg e{iseq} = {deg}")
    for r in range(1, d + 1):
        deg = R.element_degree(R.y(r))
        if deg not in (None, 2):
            bad.append(f"deg y{r} = {deg}")
    for r in range(1, d):
        for iseq in R.sequences:
            img = R.product(R.psi(r), R.e(iseq))
            deg = R.element_degree(img)
            gap = abs(iseq[r] - iseq[r - 1]) if d > 1 else None
            expected = {0: -2, 1: 1}.get(gap, 0)
            if deg not in (None, expected):
                bad.append(f"deg psi{r} e{iseq} = {deg}, expected {expected}")
    return bad


# ---------------------------------------------------------------------------
# surjectivity and dimension


def surjectivity_check(params: Params, alpha) -> bool:
    """The span of all products of generator images equals the whole algebra."""
    R = realization(params, alpha)
    if R.dim == 0:
        return True
    generators = [R.e(iseq) for iseq in R.admissible]
    generators += [R.y(r) for r in range(1, R.d + 1)]
    generators += [R.psi(r) for r in range(1, R.d)]
    generators = [g for g in generators if not g.is_zero()]
    tracker = SpanTracker(R.dim)
    frontier: list[FormalSum] = []
    for g in generators:
        if tracker.add(R.vector(g)):
            frontier.append(g)
    while frontier:
        nxt: list[FormalSum] = []
        for x in frontier:
            for g in generators:
                prod = e_mult_sums(x, g)
                if not prod.is_zero() and tracker.add(R.vector(prod)):
                    nxt.append(prod)
        frontier = nxt
    return tracker.dimension == R.dim


def dim_check(params: Params, alpha) -> bool:
    """dim E equals the sum over shapes of squared bitableau counts."""
    block = outer_block(params, alpha)
    d = alpha_height(alpha)
    if block is None:
        return len(E_basis(params, alpha)) == 0
    total = 0
    for w in block.weights():
        shape = to_bipartition(w)
        total += len(standard_bitableaux(params, shape, d)) ** 2
    return total == len(E_basis(params, alpha))


def graded_dim_check(params: Params, alpha) -> bool:
    """Graded dim E equals the bitableau-pair degree sum (degrees taken from
    the diagram preimages under the bijection)."""
    from .diagrams import cap_degree, enumerate_oriented_caps

    by_boundary: dict = {}
    for iseq in admissible_sequences(params, alpha):
        for oc in enumerate_oriented_caps(params, iseq):
            by_boundary.setdefault(oc.gammas[-1], []).append(cap_degree(oc))
    total = LaurentPoly.zero()
    for degs in by_boundary.values():
        for a in degs:
            for b in degs:
                total = total + LaurentPoly.q(a + b)
    return total == graded_dimension(E_basis(params, alpha))


# ---------------------------------------------------------------------------
# the degenerate cyclotomic Hecke realization


# sparse matrices: row index -> {column index -> nonzero Fraction}


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    out: Matrix = {}
    for i, ai in a.items():
        row: dict = {}
        for k, f in ai.items():
            bk = b.get(k)
            if bk:
                for j, g in bk.items():
                    row[j] = row.get(j, 0) + f * g
        row = {j: v for j, v in row.items() if v}
        if row:
            out[i] = row
    return out


def _mat_add(a: Matrix, b: Matrix) -> Matrix:
    out = {i: dict(row) for i, row in a.items()}
    for i, row in b.items():
        dest = out.setdefault(i, {})
        for j, v in row.items():
            total = dest.get(j, 0) + v
            if total:
                dest[j] = total
            elif j in dest:
                del dest[j]
        if not dest:
            del out[i]
    return out


def _mat_scale(c, a: Matrix) -> Matrix:
    if not c:
        return {}
    return {i: {j: c * v for j, v in row.items()} for i, row in a.items()}


def _mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def _identity(n: int) -> Matrix:
    return {i: {i: Fraction(1)} for i in range(n)}


def _zero(n: int) -> Matrix:
    return {}


def _inv_on_summand(c: int, nil: Matrix, proj: Matrix, bound: int) -> Matrix:
    """(c * proj + nil)^{-1} on the image of proj, as a finite geometric
    series; nil must be nilpotent and commute with proj."""
    term = {i: dict(row) for i, row in proj.items()}
    total: Matrix = {}
    sign = 1
    for k in range(bound + 1):
        total = _mat_add(total, _mat_scale(Fraction(sign, c ** (k + 1)), term))
        term = _mat_mul(term, nil)
        if not term:
            break
        sign = -sign
    else:
        raise AssertionError("dot difference failed to be nilpotent")
    return total


class HeckeRealization:
    """Matrices of the degenerate affine Hecke generators x_r, s_r."""

    def __init__(self, params: Params, alpha):
        self.R = realization(params, alpha)
        self.params, self.alpha = params, alpha
        R = self.R
        n, d = R.dim, R.d
        self.proj = {iseq: R.matrix(R.e(iseq)) for iseq in R.sequences}
        self.ymat = {r: R.matrix(R.y(r)) for r in range(1, d + 1)}
        self.psimat = {r: R.matrix(R.psi(r)) for r in range(1, d)}
        self.x = {r: self._x_matrix(r) for r in range(1, d + 1)}
        self.s = {r: self._s_matrix(r) for r in range(1, d)}

    def _x_matrix(self, r: int) -> Matrix:
        n = self.R.dim
        total = _zero(n)
        for iseq in self.R.sequences:
            term = _mat_add(self.ymat[r], _mat_scale(Fraction(iseq[r - 1]), _identity(n)))
            total = _mat_add(total, _mat_mul(term, self.proj[iseq]))
        return total

    def _s_matrix(self, r: int) -> Matrix:
        n = self.R.dim
        total = _zero(n)
        for iseq in self.R.sequences:
            proj = self.proj[iseq]
            nil = _mat_mul(_mat_add(self.ymat[r + 1], _mat_scale(-1, self.ymat[r])), proj)
            gap = iseq[r] - iseq[r - 1]
            if gap == 0:
                p = proj
                q = _mat_add(proj, nil)
            else:
                p = _mat_scale(-1, _inv_on_summand(gap, nil, proj, n))
                if gap == 1:
                    # (2 + y_{r+1} - y_r)(1 + y_{r+1} - y_r)^{-2}; the square
                    # is forced by s_r^2 = 1 on adjacent colours
                    inv1 = _inv_on_summand(1, nil, proj, n)
                    q = _mat_mul(_mat_add(_mat_scale(2, proj), nil),
                                 _mat_mul(inv1, inv1))
                elif gap == -1:
                    q = proj
                else:
                    q = _mat_add(proj, _inv_on_summand(gap, nil, proj, n))
            term = _mat_add(_mat_mul(self.psimat[r], q), _mat_scale(-1, p))
            total = _mat_add(total, _mat_mul(term, proj))
        return total


@lru_cache(maxsize=None)
def hecke_realization(params: Params, alpha) -> HeckeRealization:
    return HeckeRealization(params, alpha)


def verify_hecke(params: Params, alpha) -> list[str]:
    """Degenerate affine relations, the level-two cyclotomic relation, and
    the weight-idempotent nilpotency, all as exact matrix identities."""
    H = hecke_realization(params, alpha)
    R = H.R
    n, d = R.dim, R.d
    bad: list[str] = []
    one = _identity(n)

    def expect(name, a, b):
        if not _mat_eq(a, b):
            bad.append(name)

    for r in range(1, d + 1):
        for s in range(1, d + 1):
            expect(f"x{r} x{s} commute", _mat_mul(H.x[r], H.x[s]), _mat_mul(H.x[s], H.x[r]))
    for r in range(1, d):
        expect(f"s{r}^2 = 1", _mat_mul(H.s[r], H.s[r]), one)
        expect(f"s{r} x{r+1} = x{r} s{r} + 1",
               _mat_mul(H.s[r], H.x[r + 1]),
               _mat_add(_mat_mul(H.x[r], H.s[r]), one))
        for rp in range(1, d + 1):
            if rp not in (r, r + 1):
                expect(f"s{r} x{rp} commute",
                       _mat_mul(H.s[r], H.x[rp]), _mat_mul(H.x[rp], H.s[r]))
        for s2 in range(1, d):
            if abs(r - s2) > 1:
                expect(f"s{r} s{s2} commute",
                       _mat_mul(H.s[r], H.s[s2]), _mat_mul(H.s[s2], H.s[r]))
    for r in range(1, d - 1):
        expect(f"braid s{r}",
               _mat_mul(H.s[r], _mat_mul(H.s[r + 1], H.s[r])),
               _mat_mul(H.s[r + 1], _mat_mul(H.s[r], H.s[r + 1])))
    if d >= 1:
        o = params.o
        cyc = _mat_mul(
            _mat_add(H.x[1], _mat_scale(-(o + params.m), one)),
            _mat_add(H.x[1], _mat_scale(-(o + params.n), one)))
        expect("(x1-o-m)(x1-o-n) = 0", cyc, _zero(n))
    # weight idempotents: e(i)(x_r - i_r)^N = 0 for N = dim
    for iseq in R.sequences:
        for r in range(1, d + 1):
            nil = _mat_mul(_mat_add(H.x[r], _mat_scale(-iseq[r - 1], one)),
                           H.proj[iseq])
            power = H.proj[iseq]
            for _ in range(max(n, 1)):
                power = _mat_mul(power, nil)
            expect(f"nilpotency e{iseq} x{r}", power, _zero(n))
    return bad


# ---------------------------------------------------------------------------
# compatibilities with the homomorphism


def star_report(params: Params, alpha) -> list[str]:
    """Violations of star(omega(g)) = omega(g*) over the generators.

    The identity holds for every projection and dot image.  For crossing
    images it fails on specific adjacent-colour branches: with the source
    text's sign conventions the identity is provably unsatisfiable jointly
    with the quadratic relations (see the decisions ledger), so the failures
    reported here are expected and documented rather than hidden.
    """
    R = realization(params, alpha)
    bad = []
    for iseq in R.admissible:
        if star_e(R.e(iseq)) != R.e(iseq):
            bad.append(f"e{iseq}")
    for r in range(1, R.d + 1):
        if star_e(R.y(r)) != R.y(r):
            bad.append(f"y{r}")
    for r in range(1, R.d):
        if star_e(R.psi(r)) != R.psi(r):
            bad.append(f"psi{r}")
    return bad


def star_compatibility(params: Params, alpha) -> bool:
    return not star_report(params, alpha)


def theta_compatibility(params: Params, alpha, i: int) -> bool:
    """Adding a level commutes with the generator images."""
    from .stretched import theta_sum

    R = realization(params, alpha)
    for iseq in R.admissible:
        if theta_sum(i, R.e(iseq)) != omega_e(params, iseq + (i,)):
            return False
        for r in range(1, R.d + 1):
            lhs = theta_sum(i, R.product(R.y(r), R.e(iseq)))
            rhs = e_mult_sums(omega_y(params, alpha_of_seq(iseq + (i,)), r),
                              omega_e(params, iseq + (i,)))
            if lhs != rhs:
                return False
        for r in range(1, R.d):
            lhs = theta_sum(i, R.product(R.psi(r), R.e(iseq)))
            rhs = e_mult_sums(omega_psi(params, alpha_of_seq(iseq + (i,)), r),
                              omega_e(params, iseq + (i,)))
            if lhs != rhs:
                return False
    return True


def alpha_of_seq(iseq):
    from .stretched import alpha_of

    return alpha_of(iseq)
