"""Cup, cap, circle and stretched diagrams, with degrees and the
bitableau bijection.

Conventions (pinned by the forced identities tested in the suite):
  * cup diagrams live below their number line, cap diagrams above it;
  * an anticlockwise cup or cap reads 'v' at its left end and '^' at its
    right end, clockwise is the reverse;
  * stacks are drawn with the ground-state line at the top and grow
    downwards as operators are applied, so a stretched cap diagram has its
    outer (deep) block on the bottom line.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .geometry import Geometry, Component, circle_is_anticlockwise
from .weights import (
    BOTH,
    Bipartition,
    Block,
    DOWN,
    EMPTY,
    Params,
    UP,
    Weight,
    admissible,
    admissible_sequence_blocks,
    block_of,
    defect,
    ground_state,
    ground_state_block,
    to_bipartition,
)

# ---------------------------------------------------------------------------
# cup and cap diagrams on a single line


@dataclass(frozen=True, order=True)
class CupDiagram:
    """Planar matching below a number line: cups plus decorated rays."""

    block: Block
    cups: tuple[tuple[int, int], ...]
    rays: tuple[tuple[int, str], ...]

    def __post_init__(self):
        used = [v for pair in self.cups for v in pair] + [v for v, _ in self.rays]
        dots = self.block.dot_vertices()
        if sorted(used) != sorted(dots):
            raise ValueError("cups and rays must use each dot exactly once")
        for (p, q), (r, s) in itertools.combinations(self.cups, 2):
            if (p < r < q < s) or (r < p < s < q):
                raise ValueError("crossing cups")
        for p, q in self.cups:
            for v, _ in self.rays:
                if p < v < q:
                    raise ValueError("ray trapped under a cup")

    def mirror(self) -> "CapDiagram":
        return CapDiagram(self.block, self.cups, self.rays)


@dataclass(frozen=True, order=True)
class CapDiagram:
    """Mirror image of a cup diagram: caps above the line."""

    block: Block
    caps: tuple[tuple[int, int], ...]
    rays: tuple[tuple[int, str], ...]

    def __post_init__(self):
        CupDiagram(self.block, self.caps, self.rays)  # reuse the checks

    def mirror(self) -> CupDiagram:
        return CupDiagram(self.block, self.caps, self.rays)


@lru_cache(maxsize=None)
def cup_of(w: Weight) -> CupDiagram:
    """The cup diagram of a weight: repeatedly join each 'v' to the nearest
    unmatched '^' to its right, leftovers become decorated rays."""
    stack: list[int] = []
    cups: list[tuple[int, int]] = []
    rays: list[tuple[int, str]] = []
    for v in w.params.vertices:
        if w.label(v) == DOWN:
            stack.append(v)
        elif w.label(v) == UP:
            if stack:
                cups.append((stack.pop(), v))
            else:
                rays.append((v, UP))
    rays.extend((v, DOWN) for v in stack)
    # leftover rays read ^...^ v...v from left to right
    return CupDiagram(block_of(w), tuple(sorted(cups)), tuple(sorted(rays)))


def cap_of(w: Weight) -> CapDiagram:
    return cup_of(w).mirror()


def cup_diagrams_of_block(block: Block) -> tuple[CupDiagram, ...]:
    """All cup diagrams over a block; the map w -> cup_of(w) is a bijection."""
    return tuple(cup_of(w) for w in block.weights())


def cup_weight(diagram: CupDiagram) -> Weight:
    """Recover the weight w with cup_of(w) == diagram."""
    labels = {}
    for p, q in diagram.cups:
        labels[p], labels[q] = DOWN, UP
    for v, sym in diagram.rays:
        labels[v] = sym
    params = diagram.block.params
    full = []
    for v in params.vertices:
        e = diagram.block.entry(v)
        full.append(labels[v] if e == 1 else (EMPTY if e == 0 else BOTH))
    w = Weight(params, tuple(full))
    assert cup_of(w) == diagram, "diagram is not of cup-of-weight shape"
    return w


def cap_weight(diagram: CapDiagram) -> Weight:
    return cup_weight(diagram.mirror())


def orients_cup_side(a: CupDiagram, w: Weight) -> bool:
    """True iff a w is an oriented diagram: cups get one 'v' one '^',
    ray symbols match the weight."""
    if a.block != block_of(w):
        return False
    for p, q in a.cups:
        if {w.label(p), w.label(q)} != {DOWN, UP}:
            return False
    return all(w.label(v) == sym for v, sym in a.rays)


def orients_cap_side(b: CapDiagram, w: Weight) -> bool:
    return orients_cup_side(b.mirror(), w)


def orientations(a: CupDiagram, b: CapDiagram | None = None) -> tuple[Weight, ...]:
    """All weights orienting a (and b when given)."""
    out = [w for w in a.block.weights() if orients_cup_side(a, w)]
    if b is not None:
        if b.block != a.block:
            raise ValueError("cup and cap diagrams over different blocks")
        out = [w for w in out if orients_cap_side(b, w)]
    return tuple(out)


def arc_is_anticlockwise(w: Weight, p: int, q: int) -> bool:
    """Orientation of a cup or cap with endpoints p < q against a weight."""
    return w.label(p) == DOWN and w.label(q) == UP


@dataclass(frozen=True, order=True)
class OrientedCircleDiagram:
    """A basis vector (a lambda b) of the arc algebra, with a = cup diagram
    of a_weight and b = cap diagram of b_weight."""

    a_weight: Weight
    middle: Weight
    b_weight: Weight

    def __post_init__(self):
        if not orients_cup_side(cup_of(self.a_weight), self.middle):
            raise ValueError("lower half not oriented")
        if not orients_cap_side(cap_of(self.b_weight), self.middle):
            raise ValueError("upper half not oriented")

    @property
    def a(self) -> CupDiagram:
        return cup_of(self.a_weight)

    @property
    def b(self) -> CapDiagram:
        return cap_of(self.b_weight)

    def star(self) -> "OrientedCircleDiagram":
        return OrientedCircleDiagram(self.b_weight, self.middle, self.a_weight)

    def __str__(self) -> str:
        return f"({self.a_weight}|{self.middle}|{self.b_weight})"


def deg_circle(d: OrientedCircleDiagram) -> int:
    """Total number of clockwise cups and caps."""
    total = 0
    for p, q in d.a.cups:
        total += 0 if arc_is_anticlockwise(d.middle, p, q) else 1
    for p, q in d.b.caps:
        total += 0 if arc_is_anticlockwise(d.middle, p, q) else 1
    return total


def idempotent_diagram(w: Weight) -> OrientedCircleDiagram:
    """e_w = (cup_of(w) w cap_of(w)); anticlockwise everywhere, degree 0."""
    return OrientedCircleDiagram(w, w, w)


# ---------------------------------------------------------------------------
# composite matchings


@dataclass(frozen=True)
class CompositeMatching:
    """The stack of elementary matchings of an admissible sequence, with the
    starting block on the top line."""

    start: Block
    iseq: tuple[int, ...]

    def __post_init__(self):
        if self.blocks() is None:
            raise ValueError(f"{self.iseq} is not admissible from {self.start}")

    def blocks(self) -> tuple[Block, ...] | None:
        blocks = [self.start]
        for i in self.iseq:
            step = admissible(blocks[-1], i)
            if step is None:
                return None
            blocks.append(step[0])
        return tuple(blocks)

    @property
    def height(self) -> int:
        return len(self.iseq)

    def level_kinds(self) -> tuple[str, ...]:
        blocks = self.blocks()
        return tuple(admissible(blocks[r], self.iseq[r])[1] for r in range(self.height))


def composite(iseq: tuple[int, ...], start: Block) -> CompositeMatching | None:
    """The composite matching of an admissible sequence, or None."""
    if admissible_sequence_blocks_from(start, iseq) is None:
        return None
    return CompositeMatching(start, tuple(iseq))


def admissible_sequence_blocks_from(start: Block, iseq) -> list[Block] | None:
    blocks = [start]
    for i in iseq:
        step = admissible(blocks[-1], i)
        if step is None:
            return None
        blocks.append(step[0])
    return blocks


def _strip_arcs(blocks: tuple[Block, ...], iseq: tuple[int, ...], offset: int = 0):
    """Arcs of the stack of elementary strips, with line r at index r+offset."""
    arcs = []
    for r, i in enumerate(iseq):
        upper, lower = blocks[r], blocks[r + 1]
        kind = admissible(upper, i)[1]
        consumed_upper: set[int] = set()
        if kind == "cup":
            arcs.append(("cup", offset + r, i, i + 1))
            consumed_upper = {i, i + 1}
        elif kind == "cap":
            arcs.append(("cap", offset + r + 1, i, i + 1))
        elif kind == "right-shift":
            arcs.append(("seg", offset + r, i, i + 1))
            consumed_upper = {i}
        else:  # left-shift
            arcs.append(("seg", offset + r, i + 1, i))
            consumed_upper = {i + 1}
        for p in upper.dot_vertices():
            if p not in consumed_upper:
                assert lower.entry(p) == 1
                arcs.append(("seg", offset + r, p, p))
    return arcs


def matching_geometry(t: CompositeMatching) -> Geometry:
    blocks = t.blocks()
    return Geometry(t.height + 1, _strip_arcs(blocks, t.iseq))


def _distinguished_arc(t: CompositeMatching, level: int, offset: int = 0):
    """The non-identity piece of a level (1-indexed)."""
    blocks = t.blocks()
    r, i = level - 1, t.iseq[level - 1]
    kind = admissible(blocks[r], i)[1]
    if kind == "cup":
        return ("cup", offset + r, i, i + 1)
    if kind == "cap":
        return ("cap", offset + r + 1, i, i + 1)
    if kind == "right-shift":
        return ("seg", offset + r, i, i + 1)
    return ("seg", offset + r, i + 1, i)


def components(t: CompositeMatching) -> list[tuple[str, int]]:
    """Connected components as (kind, height) pairs.

    Kinds: 'cup' touches only the top line, 'cap' only the bottom line,
    'line' both, 'circle' neither.  The height counts the levels at which
    the component carries the level's distinguished piece.
    """
    geometry = matching_geometry(t)
    distinguished = [_distinguished_arc(t, level) for level in range(1, t.height + 1)]
    out = []
    for comp in geometry.components():
        lines_touched = {r for (r, _) in comp.vertices}
        top, bottom = 0 in lines_touched, t.height in lines_touched
        if top and bottom:
            kind = "line"
        elif top:
            kind = "cup"
        elif bottom:
            kind = "cap"
        else:
            kind = "circle"
        height = sum(1 for arc in distinguished if arc in comp.arcs)
        out.append((kind, height))
    return out


@dataclass(frozen=True)
class Matching:
    """An ordinary two-line crossingless matching (a reduction)."""

    top: Block
    bottom: Block
    cups: tuple[tuple[int, int], ...]  # pairs joined below the top line
    caps: tuple[tuple[int, int], ...]  # pairs joined above the bottom line
    segs: tuple[tuple[int, int], ...]  # (top vertex, bottom vertex)


def is_proper(t: CompositeMatching) -> bool:
    """True iff the matching admits at least one orientation."""
    return bool(enumerate_matching_orientations(t))


def reduce_matching(t: CompositeMatching) -> tuple[Matching, int]:
    """Collapse internal lines: keep top/bottom connectivity, count circles."""
    geometry = matching_geometry(t)
    blocks = t.blocks()
    cups, caps, segs = [], [], []
    circles = 0
    for comp in geometry.components():
        tops = sorted(p for (r, p) in comp.open_ends if r == 0)
        bottoms = sorted(p for (r, p) in comp.open_ends if r == t.height)
        if not tops and not bottoms:
            circles += 1
        elif len(tops) == 2:
            cups.append((tops[0], tops[1]))
        elif len(bottoms) == 2:
            caps.append((bottoms[0], bottoms[1]))
        else:
            assert len(tops) == 1 and len(bottoms) == 1
            segs.append((tops[0], bottoms[0]))
    return (
        Matching(blocks[0], blocks[-1], tuple(sorted(cups)), tuple(sorted(caps)),
                 tuple(sorted(segs))),
        circles,
    )


def enumerate_matching_orientations(t: CompositeMatching) -> list[tuple[tuple[str, ...], ...]]:
    """All weight sequences orienting the composite matching.

    No ground-state pinning here: used for properness of general matchings.
    """
    geometry = matching_geometry(t)
    return _orientation_product(geometry, t.blocks())


def _orientation_product(geometry: Geometry, blocks) -> list[tuple[tuple[str, ...], ...]]:
    """Combine per-component orientations, filtering by per-line content."""
    comps = geometry.components()
    choices = [geometry.component_orientations(c) for c in comps]
    if any(not ch for ch in choices):
        return []
    params = blocks[0].params
    out = []
    for pick in itertools.product(*choices):
        lines = []
        ok = True
        for r, block in enumerate(blocks):
            labels = []
            for v in params.vertices:
                e = block.entry(v)
                if e == 0:
                    labels.append(EMPTY)
                elif e == 2:
                    labels.append(BOTH)
                else:
                    labels.append(None)
            for assignment in pick:
                for (lr, p), sym in assignment.items():
                    if lr == r:
                        labels[params.pos(p)] = sym
            ups = sum(1 for l in labels if l == UP)
            if ups + block.num_crosses() != params.n:
                ok = False
                break
            assert all(l is not None for l in labels)
            lines.append(tuple(labels))
        if ok:
            out.append(tuple(lines))
    return sorted(out)


# ---------------------------------------------------------------------------
# stretched diagrams (composite matchings over the ground-state block)


def iota_ray_arcs(params: Params, mirrored: bool):
    """Decorated rays pinning the outer ground-state line."""
    iota = ground_state(params)
    kind = "raydown" if mirrored else "rayup"
    return [(kind, v, iota.label(v)) for v in params.vertices
            if iota.label(v) in (DOWN, UP)]


@lru_cache(maxsize=None)
def stretched_blocks(params: Params, iseq: tuple[int, ...]) -> tuple[Block, ...] | None:
    blocks = admissible_sequence_blocks_from(ground_state_block(params), iseq)
    return None if blocks is None else tuple(blocks)


@lru_cache(maxsize=None)
def half_geometry(params: Params, iseq: tuple[int, ...]) -> Geometry:
    """A standalone stretched cap diagram: ground state pinned at the top."""
    blocks = stretched_blocks(params, iseq)
    if blocks is None:
        raise ValueError(f"{iseq} not admissible from the ground state")
    arcs = _strip_arcs(blocks, iseq)
    arcs += iota_ray_arcs(params, mirrored=False)
    return Geometry(len(blocks), arcs)


@dataclass(frozen=True, order=True)
class OrientedCap:
    """An oriented stretched cap diagram t[gamma]; gamma[0] is the ground state
    and gamma[-1] sits on the bottom (outer) line."""

    params: Params
    iseq: tuple[int, ...]
    gammas: tuple[tuple[str, ...], ...]

    @property
    def height(self) -> int:
        return len(self.iseq)

    def blocks(self) -> tuple[Block, ...]:
        return stretched_blocks(self.params, self.iseq)

    def boundary(self) -> Weight:
        return Weight(self.params, self.gammas[-1])

    def weights(self) -> tuple[Weight, ...]:
        return tuple(Weight(self.params, g) for g in self.gammas)

    def __str__(self) -> str:
        return f"[{','.join(map(str, self.iseq))};{' '.join(''.join(g) for g in self.gammas)}]"


# an oriented stretched cup diagram is the mirror image of an OrientedCap;
# the same data describes it, so we reuse the class through this alias
OrientedCup = OrientedCap


@lru_cache(maxsize=None)
def enumerate_oriented_caps(params: Params, iseq: tuple[int, ...]) -> tuple[OrientedCap, ...]:
    """All orientations of the stretched cap diagram of iseq (possibly none)."""
    blocks = stretched_blocks(params, iseq)
    if blocks is None:
        return ()
    geometry = half_geometry(params, iseq)
    lines = _orientation_product(geometry, blocks)
    return tuple(OrientedCap(params, iseq, ls) for ls in lines)


def level_arcs_of_half(params: Params, iseq: tuple[int, ...]):
    """Distinguished (non-identity) arc of each level, 1-indexed list."""
    t = CompositeMatching(ground_state_block(params), iseq)
    return [_distinguished_arc(t, level) for level in range(1, len(iseq) + 1)]


def cap_degree(oc: OrientedCap) -> int:
    """deg(t[gamma]) = #(clockwise caps) - #(anticlockwise cups).

    The same number computes the degree of the mirrored oriented stretched
    cup diagram in its own convention, so this is the single degree function
    for both halves.
    """
    total = 0
    for arc in half_geometry(oc.params, oc.iseq).arcs:
        if arc[0] == "cap":
            _, r, p, q = arc
            w = Weight(oc.params, oc.gammas[r])
            if not arc_is_anticlockwise(w, p, q):
                total += 1
        elif arc[0] == "cup":
            _, r, p, q = arc
            w = Weight(oc.params, oc.gammas[r])
            if arc_is_anticlockwise(w, p, q):
                total -= 1
    return total


cup_degree = cap_degree


def internal_circles(params: Params, iseq: tuple[int, ...]) -> list[Component]:
    """Internal circles of the stretched cap diagram, canonically ordered."""
    geometry = half_geometry(params, iseq)
    return [c for c in geometry.components() if c.is_circle]


def circle_orientation_of(oc: OrientedCap, comp: Component) -> bool:
    """True when the circle is anticlockwise inside this orientation."""
    symbols = {(r, p): oc.gammas[r][oc.params.pos(p)] for (r, p) in comp.vertices}
    return circle_is_anticlockwise(comp, symbols)


def mirror_circles_opposite(upper: OrientedCap, lower: OrientedCap) -> bool:
    """Check the coupling condition for products: every mirror-image pair of
    internal circles is oriented one clockwise, one anticlockwise."""
    assert upper.iseq == lower.iseq
    for comp in internal_circles(upper.params, upper.iseq):
        if circle_orientation_of(upper, comp) == circle_orientation_of(lower, comp):
            return False
    return True


@lru_cache(maxsize=None)
def upper_reduction(params: Params, iseq: tuple[int, ...]) -> Weight:
    """The cap diagram on the bottom line after deleting everything else,
    returned through its parametrising weight.

    Generalised caps become caps; propagating strands become rays whose
    symbols are forced by the ground-state pins; circles and generalised
    cups are discarded.
    """
    blocks = stretched_blocks(params, iseq)
    if blocks is None:
        raise ValueError("inadmissible sequence has no reduction")
    geometry = half_geometry(params, iseq)
    bottom_line = len(blocks) - 1
    caps, rays = [], []
    for comp in geometry.components():
        ends = sorted(p for (r, p) in comp.vertices if r == bottom_line)
        if len(ends) == 2:
            caps.append((ends[0], ends[1]))
        elif len(ends) == 1:
            assert len(comp.ray_pins) == 1, "propagating strand without its pin"
            seed, sym = comp.ray_pins[0]
            assignment = geometry.propagate(comp, seed, sym)
            assert assignment is not None
            rays.append((ends[0], assignment[(bottom_line, ends[0])]))
    diagram = CapDiagram(blocks[-1], tuple(sorted(caps)), tuple(sorted(rays)))
    return cap_weight(diagram)


# ---------------------------------------------------------------------------
# the bijection with standard bitableaux


@dataclass(frozen=True)
class Bitableau:
    """A pair of Young tableaux jointly filled by 1..d, rows and columns
    strictly increasing in each."""

    first: tuple[tuple[int, ...], ...]
    second: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = [e for rows in (self.first, self.second) for row in rows for e in row]
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError("entries must be exactly 1..d")
        for rows in (self.first, self.second):
            for row in rows:
                if any(a >= b for a, b in zip(row, row[1:])):
                    raise ValueError("rows must increase")
            for upper, lower in zip(rows, rows[1:]):
                if len(lower) > len(upper):
                    raise ValueError("shape must be a partition")
                if any(upper[c] >= lower[c] for c in range(len(lower))):
                    raise ValueError("columns must increase")

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.first) + sum(len(r) for r in self.second)

    def shape(self) -> Bipartition:
        return Bipartition(tuple(len(r) for r in self.first),
                           tuple(len(r) for r in self.second))

    def position_of(self, entry: int) -> tuple[int, int, int]:
        """(component, row, column), all 0-based except component in {1, 2}."""
        for comp_index, rows in ((1, self.first), (2, self.second)):
            for r, row in enumerate(rows):
                for c, value in enumerate(row):
                    if value == entry:
                        return comp_index, r, c
        raise KeyError(entry)


def node_residue(params: Params, component: int, row: int, col: int) -> int:
    base = params.o + (params.m if component == 1 else params.n)
    return base + (col + 1) - (row + 1)


def residue_sequence(params: Params, tab: Bitableau) -> tuple[int, ...]:
    return tuple(node_residue(params, *tab.position_of(k)) for k in range(1, tab.size + 1))


def tableau_type(params: Params, tab: Bitableau) -> dict[int, int]:
    """The type as a colour -> multiplicity mapping."""
    alpha: dict[int, int] = {}
    for i in residue_sequence(params, tab):
        alpha[i] = alpha.get(i, 0) + 1
    return alpha


def _addable_cells(rows: tuple[tuple[int, ...], ...]) -> list[tuple[int, int]]:
    out = []
    for r, row in enumerate(rows):
        if r == 0 or len(rows[r - 1]) > len(row):
            out.append((r, len(row)))
    out.append((len(rows), 0))
    return out


def _add_entry(rows, r, c, entry):
    rows = [list(x) for x in rows]
    if r == len(rows):
        rows.append([])
    assert c == len(rows[r])
    rows[r].append(entry)
    return tuple(tuple(x) for x in rows)


def to_bitableau(oc: OrientedCap) -> Bitableau:
    """Insert nodes level by level; a cap level goes to the first tableau
    when the cap is clockwise, to the second when anticlockwise."""
    params = oc.params
    blocks = oc.blocks()
    first: tuple[tuple[int, ...], ...] = ()
    second: tuple[tuple[int, ...], ...] = ()
    for k, i in enumerate(oc.iseq, start=1):
        kind = admissible(blocks[k - 1], i)[1]
        options = []
        for comp_index, rows in ((1, first), (2, second)):
            for r, c in _addable_cells(rows):
                if node_residue(params, comp_index, r, c) == i:
                    options.append((comp_index, r, c))
        if kind == "cap":
            assert len(options) == 2, "cap levels admit exactly two placements"
            w = Weight(params, oc.gammas[k])
            clockwise = not arc_is_anticlockwise(w, i, i + 1)
            comp_index, r, c = options[0] if clockwise else options[1]
            assert (comp_index == 1) == clockwise
        else:
            assert len(options) == 1, f"level {k} should have a unique placement"
            comp_index, r, c = options[0]
        if comp_index == 1:
            first = _add_entry(first, r, c, k)
        else:
            second = _add_entry(second, r, c, k)
    tab = Bitableau(first, second)
    assert tab.shape().normalised() == to_bipartition(oc.boundary())
    return tab


def from_bitableau(params: Params, tab: Bitableau) -> OrientedCap:
    """Inverse of to_bitableau: rebuild the oriented stretched cap diagram."""
    iseq = residue_sequence(params, tab)
    blocks = stretched_blocks(params, iseq)
    if blocks is None:
        raise ValueError("residue sequence is not admissible")
    geometry = half_geometry(params, iseq)
    # fix the orientation of each component from the cap-level choices and
    # the ground-state pins, then fill in forced labels
    forced: dict[tuple[int, int], str] = {}
    iota = ground_state(params)
    for v in params.vertices:
        if iota.label(v) in (DOWN, UP):
            forced[(0, v)] = iota.label(v)
    for k, i in enumerate(iseq, start=1):
        kind = admissible(blocks[k - 1], i)[1]
        if kind == "cap":
            comp_index, _, _ = tab.position_of(k)
            clockwise = comp_index == 1
            forced[(k, i)] = UP if clockwise else DOWN
            forced[(k, i + 1)] = DOWN if clockwise else UP
    assignment: dict[tuple[int, int], str] = {}
    for comp in geometry.components():
        anchors = [v for v in comp.vertices if v in forced]
        done = None
        for choice in geometry.component_orientations(comp):
            if all(choice[v] == forced[v] for v in anchors):
                assert done is None, "ambiguous reconstruction"
                done = choice
        assert done is not None, "no compatible orientation"
        assignment.update(done)
    lines = []
    for r, block in enumerate(blocks):
        labels = []
        for v in params.vertices:
            e = block.entry(v)
            if e == 0:
                labels.append(EMPTY)
            elif e == 2:
                labels.append(BOTH)
            else:
                labels.append(assignment[(r, v)])
        lines.append(tuple(labels))
    oc = OrientedCap(params, iseq, tuple(lines))
    assert to_bitableau(oc) == tab
    return oc


def standard_bitableaux(params: Params, shape: Bipartition, size: int) -> tuple[Bitableau, ...]:
    """All standard bitableaux of the given shape, by direct filling."""
    first_shape = tuple(p for p in shape.first if p)
    second_shape = tuple(p for p in shape.second if p)
    total = sum(first_shape) + sum(second_shape)
    if total != size:
        raise ValueError("shape size mismatch")

    out: list[Bitableau] = []

    def extend(first, second, k):
        if k > total:
            out.append(Bitableau(first, second))
            return
        for comp_index, rows, target in ((1, first, first_shape), (2, second, second_shape)):
            for r, c in _addable_cells(rows):
                if r >= len(target) or c >= target[r]:
                    continue
                grown = _add_entry(rows, r, c, k)
                if comp_index == 1:
                    extend(grown, second, k + 1)
                else:
                    extend(first, grown, k + 1)

    extend((), (), 1)
    return tuple(out)
