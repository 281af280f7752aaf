"""The graded arc algebra: diagram basis, multiplication, cell modules,
Cartan matrices and the distinguished idempotent subalgebra.

Basis vectors are oriented circle diagrams (a w b); multiplication stacks
the left factor under the right one and eliminates the mirror-symmetric
middle section by iterated surgery.
"""

from __future__ import annotations

from functools import lru_cache

from .diagrams import (
    OrientedCircleDiagram,
    arc_is_anticlockwise,
    cap_of,
    cup_of,
    deg_circle,
    idempotent_diagram,
    orientations,
    orients_cap_side,
    orients_cup_side,
)
from .laurent import LaurentPoly
from .surgery import FormalSum, OrientedStack, multiply
from .weights import Block, Weight, block_of, bruhat_leq, defect, max_defect_set


@lru_cache(maxsize=None)
def basis(block: Block) -> tuple[OrientedCircleDiagram, ...]:
    """All oriented circle diagrams (a w b) with w in the block."""
    out = []
    for w in block.weights():
        for wa in block.weights():
            if not orients_cup_side(cup_of(wa), w):
                continue
            for wb in block.weights():
                if orients_cap_side(cap_of(wb), w):
                    out.append(OrientedCircleDiagram(wa, w, wb))
    return tuple(sorted(out))


def dimension(block: Block) -> int:
    return len(basis(block))


def to_stack(d: OrientedCircleDiagram) -> OrientedStack:
    a, b = d.a, d.b
    arcs = [("cup", 0, p, q) for p, q in a.cups]
    arcs += [("raydown", v, sym) for v, sym in a.rays]
    arcs += [("cap", 0, p, q) for p, q in b.caps]
    arcs += [("rayup", v, sym) for v, sym in b.rays]
    return OrientedStack(d.middle.params, (d.middle.labels,), frozenset(arcs))


def _from_stack(stack: OrientedStack, a_weight: Weight, b_weight: Weight) -> OrientedCircleDiagram:
    assert len(stack.lines) == 1
    middle = Weight(a_weight.params, stack.lines[0])
    return OrientedCircleDiagram(a_weight, middle, b_weight)


@lru_cache(maxsize=None)
def mult(x: OrientedCircleDiagram, y: OrientedCircleDiagram) -> FormalSum:
    """(a w b)(c w' d): zero unless b and c mirror, else surgery."""
    if x.b_weight != y.a_weight:
        return FormalSum.zero()
    result = multiply(to_stack(y), to_stack(x))
    return result.map_keys(lambda s: _from_stack(s, x.a_weight, y.b_weight))


def mult_sums(x: FormalSum, y: FormalSum) -> FormalSum:
    acc = FormalSum.zero()
    for dx, cx in x.items():
        for dy, cy in y.items():
            acc = acc + (cx * cy) * mult(dx, dy)
    return acc


def star(x: OrientedCircleDiagram) -> OrientedCircleDiagram:
    return x.star()


def unit(block: Block) -> FormalSum:
    """The identity of the block algebra: the sum of the e_w."""
    return FormalSum((idempotent_diagram(w), 1) for w in block.weights())


@lru_cache(maxsize=None)
def mult_table(block: Block):
    """Structure constants as a dict (i, j) -> FormalSum over basis diagrams."""
    diagrams = basis(block)
    table = {}
    for i, x in enumerate(diagrams):
        for j, y in enumerate(diagrams):
            if x.b_weight != y.a_weight:
                continue
            product = mult(x, y)
            if product:
                table[(i, j)] = product
    return table


# ---------------------------------------------------------------------------
# cell (standard) modules


class CellModule:
    """V(w) realised as the quotient of K e_w by the span of the basis
    vectors (a mu \bar w) with mu strictly above w."""

    def __init__(self, w: Weight):
        self.weight = w
        self.block = block_of(w)
        self.basis = tuple(
            wa for wa in self.block.weights() if orients_cup_side(cup_of(wa), w)
        )
        self._index = {wa: k for k, wa in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def degree(self, wa: Weight) -> int:
        total = 0
        for p, q in cup_of(wa).cups:
            total += 0 if arc_is_anticlockwise(self.weight, p, q) else 1
        return total

    def act(self, x: OrientedCircleDiagram, wa: Weight) -> FormalSum:
        """Action of a basis element of K on the class of (a w \bar w)."""
        vector = OrientedCircleDiagram(wa, self.weight, self.weight)
        out = {}
        for term, coeff in mult(x, vector).items():
            assert term.b_weight == self.weight
            if term.middle == self.weight:
                out[term.a_weight] = out.get(term.a_weight, 0) + coeff
            else:
                assert bruhat_leq(self.weight, term.middle) and term.middle != self.weight, \
                    "cell filtration violated"
        return FormalSum(out)

    def action_matrix(self, x: OrientedCircleDiagram) -> list[list[int]]:
        cols = []
        for wa in self.basis:
            image = self.act(x, wa)
            cols.append([image.coeff(wb) for wb in self.basis])
        return [[cols[j][i] for j in range(len(self.basis))] for i in range(len(self.basis))]


def cell_module(w: Weight) -> CellModule:
    return CellModule(w)


# ---------------------------------------------------------------------------
# graded Cartan matrix and the idempotent subalgebra


def hom_space_graded_dim(wl: Weight, wr: Weight) -> LaurentPoly:
    """Graded dimension of e_wl K e_wr."""
    block = block_of(wl)
    total = LaurentPoly.zero()
    for w in orientations(cup_of(wl), cap_of(wr)):
        d = OrientedCircleDiagram(wl, w, wr)
        total = total + LaurentPoly.q(deg_circle(d))
    return total


def graded_cartan(block: Block) -> dict[tuple[Weight, Weight], LaurentPoly]:
    ws = block.weights()
    return {(a, b): hom_space_graded_dim(a, b) for a in ws for b in ws}


def khovanov_subalgebra(block: Block):
    """e K e for e the sum of the maximal-defect idempotents."""
    top = set(max_defect_set(block))
    sub = tuple(d for d in basis(block)
                if d.a_weight in top and d.b_weight in top)
    e = FormalSum((idempotent_diagram(w), 1) for w in sorted(top))
    return e, sub


def graded_dimension(diagrams) -> LaurentPoly:
    total = LaurentPoly.zero()
    for d in diagrams:
        total = total + LaurentPoly.q(deg_circle(d))
    return total


# ---------------------------------------------------------------------------
# Graham-Lehrer cellularity (generic checker, reused for both algebras)


def check_cellularity(elements, cell_of, mult_fn, leq, report_limit: int = 10):
    """Verify the cellular axiom for a basis with cell datum.

    ``elements``: the basis list; ``cell_of``: basis vector -> (cell, a, b);
    ``mult_fn``: (x, y) -> FormalSum; ``leq``: partial order on cells.
    Checks that x * C^cell_{a,b} lies in span{C^cell_{a',b}} plus strictly
    higher cells, with coefficients r(a', a; x) independent of b.  Returns a
    list of human-readable violations (empty = cellular).
    """
    violations = []
    by_cell: dict = {}
    for v in elements:
        cell, a, b = cell_of(v)
        by_cell.setdefault(cell, {}).setdefault(a, {})[b] = v
    for x in elements:
        for cell, rows in by_cell.items():
            a_list = sorted(rows)
            b_lists = {a: sorted(rows[a]) for a in a_list}
            b_all = b_lists[a_list[0]]
            coeffs_by_b: dict = {}
            for a in a_list:
                for b in b_lists[a]:
                    product = mult_fn(x, rows[a][b])
                    r: dict = {}
                    for term, coeff in product.items():
                        tcell, ta, tb = cell_of(term)
                        if tcell == cell:
                            if tb != b:
                                violations.append(
                                    f"{x} * C[{cell}][{a},{b}]: same-cell term changes b")
                                continue
                            r[ta] = coeff
                        else:
                            if not (leq(cell, tcell) and tcell != cell):
                                violations.append(
                                    f"{x} * C[{cell}][{a},{b}]: term in non-higher cell {tcell}")
                    coeffs_by_b.setdefault(a, {})[b] = tuple(sorted(r.items()))
                if len(violations) > report_limit:
                    return violations
            for a in a_list:
                seen = set(coeffs_by_b[a].values())
                if len(seen) > 1:
                    violations.append(
                        f"{x}: coefficients r(-, {a}) depend on the second index in cell {cell}")
                    if len(violations) > report_limit:
                        return violations
    return violations


def cellularity_check(block: Block) -> list[str]:
    """The Graham-Lehrer axiom for the block algebra."""
    elements = basis(block)
    return check_cellularity(
        elements,
        cell_of=lambda d: (d.middle, d.a_weight, d.b_weight),
        mult_fn=mult,
        leq=bruhat_leq,
    )
