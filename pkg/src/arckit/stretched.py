"""Tensor space over the ground state, its dual, and the stretched-diagram
endomorphism algebra with its local moves.

Basis elements:
  * TVec:    an oriented upper-stretched circle diagram (a t[gamma]| -- a
    stretched cap diagram with the ground state pinned on top and a cup
    diagram glued under its bottom line;
  * ThatVec: the mirror image |u*[delta*] b);
  * EVec:    an oriented stretched circle diagram |u*[delta*] . t[gamma]|,
    upper half on top, shared boundary weight in the middle.

All products route through the surgery engine; the level moves (positive
circle, negative circle, crossing, height) act directly on the stored
diagrams, with signs given by the dot-count parity of the block at the level
below the move.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .diagrams import (
    OrientedCap,
    OrientedCircleDiagram,
    arc_is_anticlockwise,
    cap_degree,
    cup_of,
    enumerate_oriented_caps,
    iota_ray_arcs,
    level_arcs_of_half,
    mirror_circles_opposite,
    orients_cup_side,
    stretched_blocks,
    upper_reduction,
    _strip_arcs,
)
from .geometry import arc_vertices, circle_is_anticlockwise
from .laurent import LaurentPoly
from .surgery import (
    FormalSum,
    ONE,
    OrientedStack,
    X,
    component_label,
    multiply,
    reorient,
    _geometry,
)
from .weights import Block, DOWN, Params, UP, Weight, admissible, block_of, ground_state_block

TOP, BOTTOM = "top", "bottom"

# ---------------------------------------------------------------------------
# alpha bookkeeping


def alpha_of(iseq) -> tuple[tuple[int, int], ...]:
    """Canonical form of a nonnegative root-lattice element."""
    acc: dict[int, int] = {}
    for i in iseq:
        acc[i] = acc.get(i, 0) + 1
    return tuple(sorted(acc.items()))


def alpha_height(alpha) -> int:
    return sum(m for _, m in alpha)


def alpha_pairing_with_lambda(params: Params, colour: int) -> int:
    """(alpha_i, Lambda) for Lambda the ground-state weight."""
    return int(colour == params.o + params.m) + int(colour == params.o + params.n)


def outer_block(params: Params, alpha) -> Block | None:
    """Lambda - alpha, or None when it leaves the weight set."""
    sig = list(ground_state_block(params).signature)
    for colour, mult in alpha:
        sig[params.pos(colour)] -= mult
        sig[params.pos(colour + 1)] += mult
    if any(s < 0 or s > 2 for s in sig):
        return None
    try:
        return Block(params, tuple(sig))
    except ValueError:
        return None


@lru_cache(maxsize=None)
def sequences_of_alpha(params: Params, alpha) -> tuple[tuple[int, ...], ...]:
    letters = [c for c, m in alpha for _ in range(m)]
    return tuple(sorted(set(itertools.permutations(letters))))


@lru_cache(maxsize=None)
def admissible_sequences(params: Params, alpha) -> tuple[tuple[int, ...], ...]:
    return tuple(s for s in sequences_of_alpha(params, alpha)
                 if stretched_blocks(params, s) is not None)


@lru_cache(maxsize=None)
def all_alphas(params: Params, max_height: int) -> tuple:
    """Every alpha of height <= max_height with Lambda - alpha a block."""
    out = []
    frontier = {(): ground_state_block(params)}
    seen = {(): ground_state_block(params)}
    for _ in range(max_height):
        next_frontier = {}
        for alpha, block in frontier.items():
            for i in params.index_set:
                step = admissible(block, i)
                if step is None:
                    continue
                new_alpha = alpha_of([c for c, m in alpha for _ in range(m)] + [i])
                if new_alpha not in seen:
                    seen[new_alpha] = step[0]
                    next_frontier[new_alpha] = step[0]
        frontier = next_frontier
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# basis element types


@dataclass(frozen=True, order=True)
class TVec:
    params: Params
    iseq: tuple[int, ...]
    gammas: tuple[tuple[str, ...], ...]
    cup: Weight  # the outer cup diagram, through its parametrising weight

    def cap_half(self) -> OrientedCap:
        return OrientedCap(self.params, self.iseq, self.gammas)

    def boundary(self) -> Weight:
        return Weight(self.params, self.gammas[-1])

    def degree(self) -> int:
        total = cap_degree(self.cap_half())
        w = self.boundary()
        for p, q in cup_of(self.cup).cups:
            total += 0 if arc_is_anticlockwise(w, p, q) else 1
        return total

    def __str__(self) -> str:
        return f"({self.cup}|{self.cap_half()}"


@dataclass(frozen=True, order=True)
class ThatVec:
    params: Params
    jseq: tuple[int, ...]
    deltas: tuple[tuple[str, ...], ...]
    cap: Weight

    def cup_half(self) -> OrientedCap:
        return OrientedCap(self.params, self.jseq, self.deltas)

    def boundary(self) -> Weight:
        return Weight(self.params, self.deltas[-1])

    def degree(self) -> int:
        total = cap_degree(self.cup_half())
        w = self.boundary()
        for p, q in cup_of(self.cap).cups:
            total += 0 if arc_is_anticlockwise(w, p, q) else 1
        return total

    def __str__(self) -> str:
        return f"{self.cup_half()}|{self.cap})"


@dataclass(frozen=True, order=True)
class EVec:
    params: Params
    iseq: tuple[int, ...]  # upper stretched cap half
    gammas: tuple[tuple[str, ...], ...]
    jseq: tuple[int, ...]  # lower stretched cup half
    deltas: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.gammas[-1] != self.deltas[-1]:
            raise ValueError("halves must share the boundary weight")

    @property
    def height(self) -> int:
        return len(self.iseq)

    def upper(self) -> OrientedCap:
        return OrientedCap(self.params, self.iseq, self.gammas)

    def lower(self) -> OrientedCap:
        return OrientedCap(self.params, self.jseq, self.deltas)

    def boundary(self) -> Weight:
        return Weight(self.params, self.gammas[-1])

    def degree(self) -> int:
        return cap_degree(self.upper()) + cap_degree(self.lower())

    def star(self) -> "EVec":
        return EVec(self.params, self.jseq, self.deltas, self.iseq, self.gammas)

    def __str__(self) -> str:
        return f"|{self.jseq}:{_w(self.deltas)}~{self.iseq}:{_w(self.gammas)}|"


def _w(lines) -> str:
    return " ".join("".join(l) for l in lines)


# ---------------------------------------------------------------------------
# stack construction


def flip_arcs(arcs, nlines: int):
    """Mirror a stack of arcs in a horizontal axis."""
    out = []
    for arc in arcs:
        kind = arc[0]
        if kind == "cup":
            out.append(("cap", nlines - 1 - arc[1], arc[2], arc[3]))
        elif kind == "cap":
            out.append(("cup", nlines - 1 - arc[1], arc[2], arc[3]))
        elif kind == "seg":
            out.append(("seg", nlines - 2 - arc[1], arc[3], arc[2]))
        elif kind == "rayup":
            out.append(("raydown", arc[1], arc[2]))
        else:
            out.append(("rayup", arc[1], arc[2]))
    return out


def _shift_down(arcs, offset: int):
    out = []
    for arc in arcs:
        kind = arc[0]
        if kind in ("cup", "cap", "seg"):
            out.append((kind, arc[1] + offset, arc[2], arc[3]))
        else:
            out.append(arc)
    return out


@lru_cache(maxsize=None)
def _half_arcs(params: Params, iseq) -> tuple:
    blocks = stretched_blocks(params, iseq)
    arcs = _strip_arcs(blocks, iseq)
    arcs += iota_ray_arcs(params, mirrored=False)
    return tuple(arcs)


def _outer_cup_arcs(line: int, w: Weight):
    a = cup_of(w)
    arcs = [("cup", line, p, q) for p, q in a.cups]
    arcs += [("raydown", v, sym) for v, sym in a.rays]
    return arcs


def _outer_cap_arcs(w: Weight):
    a = cup_of(w)
    arcs = [("cap", 0, p, q) for p, q in a.cups]
    arcs += [("rayup", v, sym) for v, sym in a.rays]
    return arcs


@lru_cache(maxsize=None)
def _evec_arcs(params: Params, iseq, jseq) -> tuple:
    d = len(iseq)
    arcs = list(_half_arcs(params, iseq))
    lower = flip_arcs(_half_arcs(params, jseq), d + 1)
    arcs += _shift_down(lower, d)
    return tuple(arcs)


def tvec_stack(v: TVec) -> OrientedStack:
    arcs = list(_half_arcs(v.params, v.iseq))
    arcs += _outer_cup_arcs(len(v.gammas) - 1, v.cup)
    return OrientedStack(v.params, v.gammas, frozenset(arcs))


def thatvec_stack(w: ThatVec) -> OrientedStack:
    nlines = len(w.deltas)
    arcs = flip_arcs(_half_arcs(w.params, w.jseq), nlines)
    arcs += _outer_cap_arcs(w.cap)
    return OrientedStack(w.params, tuple(reversed(w.deltas)), frozenset(arcs))


def evec_stack(e: EVec) -> OrientedStack:
    lines = e.gammas + tuple(reversed(e.deltas))[1:]
    return OrientedStack(e.params, lines, frozenset(_evec_arcs(e.params, e.iseq, e.jseq)))


def upper_half_stack(params, iseq, gammas, bottom_cup: Weight) -> OrientedStack:
    """t[gamma] with a cup diagram glued under its bottom line."""
    arcs = list(_half_arcs(params, iseq))
    arcs += _outer_cup_arcs(len(gammas) - 1, bottom_cup)
    return OrientedStack(params, gammas, frozenset(arcs))


def lower_half_stack(params, jseq, deltas, top_cap: Weight) -> OrientedStack:
    """u*[delta*] with a cap diagram glued over its top line."""
    nlines = len(deltas)
    arcs = flip_arcs(_half_arcs(params, jseq), nlines)
    arcs += _outer_cap_arcs(top_cap)
    return OrientedStack(params, tuple(reversed(deltas)), frozenset(arcs))


def _evec_from_lines(params, iseq, jseq, lines) -> EVec:
    d = len(iseq)
    gammas = tuple(lines[: d + 1])
    deltas = tuple(reversed(lines[d:]))
    return EVec(params, iseq, gammas, jseq, deltas)


# ---------------------------------------------------------------------------
# bases


@lru_cache(maxsize=None)
def T_basis(params: Params, alpha) -> tuple[TVec, ...]:
    out = []
    for iseq in admissible_sequences(params, alpha):
        for oc in enumerate_oriented_caps(params, iseq):
            boundary = oc.boundary()
            for w in block_of(boundary).weights():
                if orients_cup_side(cup_of(w), boundary):
                    out.append(TVec(params, iseq, oc.gammas, w))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def That_basis(params: Params, alpha) -> tuple[ThatVec, ...]:
    out = []
    for jseq in admissible_sequences(params, alpha):
        for oc in enumerate_oriented_caps(params, jseq):
            boundary = oc.boundary()
            for w in block_of(boundary).weights():
                if orients_cup_side(cup_of(w), boundary):
                    out.append(ThatVec(params, jseq, oc.gammas, w))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def E_basis(params: Params, alpha) -> tuple[EVec, ...]:
    out = []
    for iseq in admissible_sequences(params, alpha):
        uppers = enumerate_oriented_caps(params, iseq)
        for jseq in admissible_sequences(params, alpha):
            for up in uppers:
                for low in enumerate_oriented_caps(params, jseq):
                    if up.gammas[-1] == low.gammas[-1]:
                        out.append(EVec(params, iseq, up.gammas, jseq, low.gammas))
    return tuple(sorted(out))


def graded_dimension(vectors) -> LaurentPoly:
    total = LaurentPoly.zero()
    for v in vectors:
        total = total + LaurentPoly.q(v.degree())
    return total


# ---------------------------------------------------------------------------
# products and module actions


def k_on_T(x: OrientedCircleDiagram, v: TVec) -> FormalSum:
    """Left action of the arc algebra on tensor space."""
    if x.b_weight != v.cup:
        return FormalSum.zero()
    from .karc import to_stack as ocd_stack

    result = multiply(tvec_stack(v), ocd_stack(x))
    return result.map_keys(lambda s: TVec(v.params, v.iseq, s.lines, x.a_weight))


def k_on_That(w: ThatVec, x: OrientedCircleDiagram) -> FormalSum:
    """Right action of the arc algebra on the dual tensor space."""
    if x.a_weight != w.cap:
        return FormalSum.zero()
    from .karc import to_stack as ocd_stack

    result = multiply(ocd_stack(x), thatvec_stack(w))
    return result.map_keys(
        lambda s: ThatVec(w.params, w.jseq, tuple(reversed(s.lines)), x.b_weight))


def phi(v: TVec, w: ThatVec) -> FormalSum:
    """The evaluation pairing into the arc algebra."""
    if v.iseq != w.jseq:
        return FormalSum.zero()
    if not mirror_circles_opposite(v.cap_half(), w.cup_half()):
        return FormalSum.zero()
    from .karc import mult as k_mult

    c = upper_reduction(v.params, v.iseq)
    left = OrientedCircleDiagram(v.cup, v.boundary(), c)
    right = OrientedCircleDiagram(c, w.boundary(), w.cap)
    return k_mult(left, right)


def e_mult(x: EVec, y: EVec) -> FormalSum:
    """Multiplication of the endomorphism algebra on basis vectors."""
    if x.params != y.params or x.iseq != y.jseq:
        return FormalSum.zero()
    if not mirror_circles_opposite(x.upper(), y.lower()):
        return FormalSum.zero()
    b = upper_reduction(x.params, x.iseq)
    upper = upper_half_stack(x.params, y.iseq, y.gammas, b)
    lower = lower_half_stack(x.params, x.jseq, x.deltas, b)
    result = multiply(upper, lower)
    return result.map_keys(lambda s: _evec_from_lines(x.params, y.iseq, x.jseq, s.lines))


def e_on_T(v: TVec, x: EVec) -> FormalSum:
    """Right action of the endomorphism algebra on tensor space."""
    if v.iseq != x.jseq:
        return FormalSum.zero()
    if not mirror_circles_opposite(v.cap_half(), x.lower()):
        return FormalSum.zero()
    from .karc import to_stack as ocd_stack

    b = upper_reduction(v.params, v.iseq)
    bottom = OrientedCircleDiagram(v.cup, v.boundary(), b)
    upper = upper_half_stack(v.params, x.iseq, x.gammas, b)
    result = multiply(upper, ocd_stack(bottom))
    return result.map_keys(lambda s: TVec(v.params, x.iseq, s.lines, v.cup))


def e_on_That(x: EVec, w: ThatVec) -> FormalSum:
    """Left action of the endomorphism algebra on the dual tensor space."""
    if x.iseq != w.jseq:
        return FormalSum.zero()
    if not mirror_circles_opposite(x.upper(), w.cup_half()):
        return FormalSum.zero()
    from .karc import to_stack as ocd_stack

    b = upper_reduction(x.params, x.iseq)
    top = OrientedCircleDiagram(b, w.boundary(), w.cap)
    lower = lower_half_stack(x.params, x.jseq, x.deltas, b)
    result = multiply(ocd_stack(top), lower)
    return result.map_keys(
        lambda s: ThatVec(w.params, x.jseq, tuple(reversed(s.lines)), w.cap))


def _bilinear(pairwise):
    def onsums(x: FormalSum, y: FormalSum) -> FormalSum:
        acc = FormalSum.zero()
        for dx, cx in x.items():
            for dy, cy in y.items():
                acc = acc + (cx * cy) * pairwise(dx, dy)
        return acc

    return onsums


e_mult_sums = _bilinear(e_mult)
e_on_T_sums = _bilinear(e_on_T)
e_on_That_sums = _bilinear(e_on_That)
k_on_T_sums = _bilinear(k_on_T)
phi_sums = _bilinear(phi)


# ---------------------------------------------------------------------------
# idempotents, symmetrizing form, star


def _boundary_circles(e: EVec):
    stack = evec_stack(e)
    d = e.height
    return [c for c in stack.geometry().components()
            if c.is_circle and any(r == d for (r, _) in c.vertices)]


def _boundary_circle_acw(e: EVec, comp) -> bool:
    stack = evec_stack(e)
    symbols = {v: stack.symbol(v) for v in comp.vertices}
    return circle_is_anticlockwise(comp, symbols)


@lru_cache(maxsize=None)
def omega_e(params: Params, iseq: tuple[int, ...]) -> FormalSum:
    """The image of the shape-iseq idempotent: the sum over orientations with
    anticlockwise boundary circles and opposite mirror pairs."""
    if stretched_blocks(params, iseq) is None:
        return FormalSum.zero()
    acc = FormalSum.zero()
    for up in enumerate_oriented_caps(params, iseq):
        for low in enumerate_oriented_caps(params, iseq):
            if up.gammas[-1] != low.gammas[-1]:
                continue
            if not mirror_circles_opposite(up, low):
                continue
            e = EVec(params, iseq, up.gammas, iseq, low.gammas)
            if all(_boundary_circle_acw(e, c) for c in _boundary_circles(e)):
                acc = acc + FormalSum.single(e)
    return acc


def identity_element(params: Params, alpha) -> FormalSum:
    acc = FormalSum.zero()
    for iseq in admissible_sequences(params, alpha):
        acc = acc + omega_e(params, iseq)
    return acc


def tau(e: EVec) -> int:
    """The symmetrizing form: 1 on mirror-symmetric shapes with all boundary
    circles clockwise and mirror circle pairs opposite, else 0."""
    if e.iseq != e.jseq:
        return 0
    if not mirror_circles_opposite(e.upper(), e.lower()):
        return 0
    if any(_boundary_circle_acw(e, c) for c in _boundary_circles(e)):
        return 0
    return 1


def tau_sum(x: FormalSum) -> int:
    return sum(c * tau(v) for v, c in x.items())


def star_e(x: FormalSum) -> FormalSum:
    return x.map_keys(lambda e: e.star())


# ---------------------------------------------------------------------------
# the level moves


def _parity(block: Block, i: int) -> int:
    """The number of dots at or left of vertex i in the block, mod 2."""
    return sum(1 for v in block.params.vertices
               if v <= i and block.entry(v) == 1) % 2


def _sign(block: Block, i: int) -> int:
    return -1 if _parity(block, i) else 1


def y_branch_sign(params: Params, seq: tuple[int, ...], r: int) -> int:
    """Sign of the dot move on the branch with sequence ``seq`` at level r."""
    block = stretched_blocks(params, seq)[r - 1]
    return _sign(block, seq[r - 1])


def psi_branch_sign(params: Params, seq: tuple[int, ...], r: int) -> int:
    """Sign of the crossing-family move on the branch ``seq`` at levels
    r, r+1: negative circle and ascending neighbour moves carry the
    dot-count parity sign, the other moves are unsigned."""
    i_r, i_r1 = seq[r - 1], seq[r]
    if i_r1 == i_r or i_r1 == i_r + 1:
        block = stretched_blocks(params, seq)[r - 1]
        return -_sign(block, i_r)
    return 1


def _side_seq(obj, side: str) -> tuple[int, ...]:
    if isinstance(obj, EVec):
        return obj.iseq if side == TOP else obj.jseq
    if isinstance(obj, TVec):
        assert side == TOP
        return obj.iseq
    assert isinstance(obj, ThatVec) and side == BOTTOM
    return obj.jseq


def _object_stack(obj) -> OrientedStack:
    if isinstance(obj, EVec):
        return evec_stack(obj)
    if isinstance(obj, TVec):
        return tvec_stack(obj)
    return thatvec_stack(obj)


def _map_half_arc(obj, side: str, arc):
    """Map a half-coordinate arc into the object's stack coordinates."""
    if isinstance(obj, EVec) and side == BOTTOM:
        d = obj.height
        kind = arc[0]
        if kind == "cup":
            return ("cap", 2 * d - arc[1], arc[2], arc[3])
        if kind == "cap":
            return ("cup", 2 * d - arc[1], arc[2], arc[3])
        return ("seg", 2 * d - arc[1] - 1, arc[3], arc[2])
    if isinstance(obj, ThatVec):
        d = len(obj.jseq)
        kind = arc[0]
        if kind == "cup":
            return ("cap", d - arc[1], arc[2], arc[3])
        if kind == "cap":
            return ("cup", d - arc[1], arc[2], arc[3])
        return ("seg", d - arc[1] - 1, arc[3], arc[2])
    return arc


def _distinguished_arc(obj, side: str, level: int, seq=None):
    params = obj.params
    seq = seq if seq is not None else _side_seq(obj, side)
    return _map_half_arc(obj, side, level_arcs_of_half(params, seq)[level - 1])


def _changed_line(obj, side: str, r: int) -> int:
    """Stack index of the single line whose block changes under a move
    swapping levels r and r+1 of the given side."""
    if isinstance(obj, EVec):
        return r if side == TOP else 2 * obj.height - r
    if isinstance(obj, TVec):
        return r
    return len(obj.jseq) - r


def _rebuild(obj, lines, side: str, new_seq):
    if isinstance(obj, EVec):
        iseq = new_seq if side == TOP else obj.iseq
        jseq = new_seq if side == BOTTOM else obj.jseq
        return _evec_from_lines(obj.params, iseq, jseq, lines)
    if isinstance(obj, TVec):
        return TVec(obj.params, new_seq, tuple(lines), obj.cup)
    return ThatVec(obj.params, new_seq, tuple(reversed(lines)), obj.cap)


def _stack_arcs_with_seq(obj, side: str, seq) -> tuple[tuple, int]:
    """(arcs, nlines) of the object's stack with one side's sequence replaced."""
    params = obj.params
    if isinstance(obj, EVec):
        iseq = seq if side == TOP else obj.iseq
        jseq = seq if side == BOTTOM else obj.jseq
        return _evec_arcs(params, iseq, jseq), 2 * obj.height + 1
    if isinstance(obj, TVec):
        arcs = list(_half_arcs(params, seq))
        arcs += _outer_cup_arcs(len(obj.gammas) - 1, obj.cup)
        return tuple(arcs), len(obj.gammas)
    arcs = flip_arcs(_half_arcs(params, seq), len(obj.deltas))
    arcs += _outer_cap_arcs(obj.cap)
    return tuple(arcs), len(obj.deltas)


def _stack_blocks_with_seq(obj, side: str, seq) -> tuple[Block, ...]:
    params = obj.params
    if isinstance(obj, EVec):
        upper = stretched_blocks(params, seq if side == TOP else obj.iseq)
        lower = stretched_blocks(params, seq if side == BOTTOM else obj.jseq)
        return tuple(upper) + tuple(reversed(lower[:-1]))
    if isinstance(obj, TVec):
        return tuple(stretched_blocks(params, seq))
    return tuple(reversed(stretched_blocks(params, seq)))


def _flip_component(stack: OrientedStack, comp) -> tuple:
    grid = [list(line) for line in stack.lines]
    for (lr, p) in comp.vertices:
        idx = stack.params.pos(p)
        grid[lr][idx] = UP if grid[lr][idx] == DOWN else DOWN
    return tuple(tuple(row) for row in grid)


def y_move(obj, side: str, r: int) -> FormalSum:
    """The signed positive circle move at one level of one side."""
    seq = _side_seq(obj, side)
    if not (1 <= r <= len(seq)):
        raise ValueError(f"level {r} out of range")
    stack = _object_stack(obj)
    arc = _distinguished_arc(obj, side, r)
    comp = stack.geometry().component_of_arc(arc)
    if component_label(stack, comp) != ONE:
        return FormalSum.zero()
    new_lines = _flip_component(stack, comp)
    sign = y_branch_sign(obj.params, seq, r)
    return FormalSum.single(_rebuild(obj, new_lines, side, seq), sign)


def psi_move(obj, side: str, r: int) -> FormalSum:
    """Negative circle, crossing, or height move at levels r and r+1.

    The sign belongs to the branch being multiplied: acting on the right of
    a vector with upper sequence s picks out the branch with the swapped
    word, acting on the left the branch with the lower word itself.
    """
    seq = _side_seq(obj, side)
    if not (1 <= r < len(seq)):
        raise ValueError(f"level {r} out of range")
    params = obj.params
    i_r, i_r1 = seq[r - 1], seq[r]

    if i_r1 == i_r:
        # negative circle move on the small circle at levels r, r+1
        sign = psi_branch_sign(params, seq, r)
        stack = _object_stack(obj)
        comp = stack.geometry().component_of_arc(_distinguished_arc(obj, side, r))
        assert comp.is_circle, "equal neighbouring colours always give a small circle"
        if component_label(stack, comp) != X:
            return FormalSum.zero()
        new_lines = _flip_component(stack, comp)
        return FormalSum.single(_rebuild(obj, new_lines, side, seq), sign)

    new_seq = list(seq)
    new_seq[r - 1], new_seq[r] = new_seq[r], new_seq[r - 1]
    new_seq = tuple(new_seq)
    if stretched_blocks(params, new_seq) is None:
        return FormalSum.zero()
    branch = new_seq if side == TOP else seq
    sign = psi_branch_sign(params, branch, r)

    stack = _object_stack(obj)
    old_geometry = stack.geometry()
    affected_old = []
    for level in (r, r + 1):
        comp = old_geometry.component_of_arc(_distinguished_arc(obj, side, level))
        if all(comp is not c for c, _ in affected_old):
            affected_old.append((comp, component_label(stack, comp)))

    new_arcs, nlines = _stack_arcs_with_seq(obj, side, new_seq)
    new_geometry = _geometry(nlines, frozenset(new_arcs))
    affected_vertices = frozenset(
        v
        for level in (r, r + 1)
        for v in arc_vertices(_distinguished_arc(obj, side, level, seq=new_seq), nlines)
    )
    changed = _changed_line(obj, side, r)
    terms = reorient(
        params,
        new_geometry,
        _stack_blocks_with_seq(obj, side, new_seq),
        affected_old,
        affected_vertices,
        vmap=lambda v: None if v[0] == changed else v,
        old_symbol=stack.symbol,
    )
    # crossing moves are homogeneous of degree 1, height moves of degree 0
    expected = obj.degree() + (1 if abs(i_r - i_r1) == 1 else 0)
    acc = FormalSum.zero()
    for lines, coeff in terms:
        out = _rebuild(obj, lines, side, new_seq)
        if out.degree() == expected:
            acc = acc + FormalSum.single(out, sign * coeff)
    return acc


def move_on_sum(x: FormalSum, move, side: str, r: int) -> FormalSum:
    return x.map_terms(lambda v: move(v, side, r))


# ---------------------------------------------------------------------------
# the generator images as algebra elements


@lru_cache(maxsize=None)
def omega_y(params: Params, alpha, r: int) -> FormalSum:
    """Image of the r-th dot generator: right positive circle moves applied
    to the idempotent sum."""
    acc = FormalSum.zero()
    for iseq in admissible_sequences(params, alpha):
        acc = acc + move_on_sum(omega_e(params, iseq), y_move, TOP, r)
    return acc


@lru_cache(maxsize=None)
def omega_psi(params: Params, alpha, r: int) -> FormalSum:
    """Image of the r-th crossing generator: right moves applied to the
    swapped idempotents."""
    acc = FormalSum.zero()
    for iseq in admissible_sequences(params, alpha):
        swapped = list(iseq)
        swapped[r - 1], swapped[r] = swapped[r], swapped[r - 1]
        acc = acc + move_on_sum(omega_e(params, tuple(swapped)), psi_move, TOP, r)
    return acc


# ---------------------------------------------------------------------------
# addition of a simple root


def theta(i: int, e: EVec) -> FormalSum:
    """Insert the elementary matching of colour i and its mirror at the
    boundary; a degree-preserving non-unital algebra map."""
    params = e.params
    boundary_block = block_of(e.boundary())
    step = admissible(boundary_block, i)
    if step is None:
        return FormalSum.zero()
    kind = step[1]
    d = e.height
    new_iseq = e.iseq + (i,)
    new_jseq = e.jseq + (i,)
    new_arcs, nlines = _evec_arcs(params, new_iseq, new_jseq), 2 * d + 3
    new_geometry = _geometry(nlines, frozenset(new_arcs))
    new_blocks = _stack_blocks_of(params, new_iseq, new_jseq)
    stack = evec_stack(e)

    def vmap(v):
        r, p = v
        if r <= d:
            return (r, p)
        if r == d + 1:
            return None
        return (r - 2, p)

    if kind in ("right-shift", "left-shift"):
        terms = reorient(params, new_geometry, new_blocks, [], frozenset(),
                         vmap=vmap, old_symbol=stack.symbol)
    elif kind == "cap":
        circle_arc = ("cap", d + 1, i, i + 1)
        comp = new_geometry.component_of_arc(circle_arc)
        assert comp.is_circle
        terms = reorient(params, new_geometry, new_blocks, [], frozenset(comp.vertices),
                         vmap=vmap, old_symbol=stack.symbol,
                         explicit_specs=[[(comp, ONE)]])
    else:  # cup: a genuine merge or split at the old boundary dots
        old_geometry = stack.geometry()
        affected_old = []
        for p in (i, i + 1):
            comp = _component_through(old_geometry, (d, p))
            if all(comp is not c for c, _ in affected_old):
                affected_old.append((comp, component_label(stack, comp)))
        affected_vertices = frozenset({(d, i), (d, i + 1), (d + 2, i), (d + 2, i + 1)})
        terms = reorient(params, new_geometry, new_blocks, affected_old,
                         affected_vertices, vmap=vmap, old_symbol=stack.symbol)
    acc = FormalSum.zero()
    for lines, coeff in terms:
        out = _evec_from_lines(params, new_iseq, new_jseq, lines)
        if out.degree() == e.degree():  # level addition is degree-preserving
            acc = acc + FormalSum.single(out, coeff)
    return acc


def _component_through(geometry, vertex):
    for comp in geometry.components():
        if vertex in comp.vertices:
            return comp
    raise KeyError(vertex)


def _stack_blocks_of(params, iseq, jseq) -> tuple[Block, ...]:
    upper = stretched_blocks(params, iseq)
    lower = stretched_blocks(params, jseq)
    return tuple(upper) + tuple(reversed(lower[:-1]))


def theta_sum(i: int, x: FormalSum) -> FormalSum:
    return x.map_terms(lambda e: theta(i, e))


def theta_unit(params: Params) -> FormalSum:
    """The identity of the height-zero algebra, the seed for iterating theta."""
    iota = tuple(ground_state_block(params).weights())[0]
    return FormalSum.single(EVec(params, (), (iota.labels,), (), (iota.labels,)))
