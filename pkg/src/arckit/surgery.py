"""The Frobenius-algebra surgery engine.

All products in the package (arc algebra multiplication, the module actions
on tensor space, the endomorphism algebra multiplication, the level-adding
homomorphism) funnel through the routines here: stack two oriented layered
diagrams, eliminate the cap-cup pairs of the symmetric middle section one at
a time, and re-orient components according to the rank-two Frobenius algebra
with 1 (anticlockwise) and x (clockwise), x**2 = 0.

Rules for moves involving lines come from the companion calculus and are
treated as configuration validated by the associativity, unit, grading and
cellularity test suites:
  * merging an anticlockwise circle into a line leaves the line unchanged,
    a clockwise circle kills the term;
  * splitting a circle off a line produces the line together with a
    clockwise circle;
  * merging or reconnecting lines keeps the single consistent orientation
    and yields zero when none exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .geometry import Component, Geometry, arc_vertices, circle_is_anticlockwise
from .weights import BOTH, DOWN, EMPTY, Params, UP

ONE, X = "1", "x"  # anticlockwise / clockwise circle labels


# ---------------------------------------------------------------------------
# formal sums


class FormalSum:
    """A finite integer-linear combination of hashable diagrams."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, coeff in items:
            if coeff:
                acc[key] = acc.get(key, 0) + coeff
                if not acc[key]:
                    del acc[key]
        self._terms = acc

    @staticmethod
    def zero() -> "FormalSum":
        return FormalSum()

    @staticmethod
    def single(key, coeff: int = 1) -> "FormalSum":
        return FormalSum({key: coeff})

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: repr(kv[0]))

    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, key) -> int:
        return self._terms.get(key, 0)

    def map_keys(self, fn) -> "FormalSum":
        return FormalSum((fn(k), c) for k, c in self._terms.items())

    def map_terms(self, fn: Callable[[object], "FormalSum"]) -> "FormalSum":
        """Linear extension of a key -> FormalSum map."""
        acc: dict = {}
        for key, coeff in self._terms.items():
            for k2, c2 in fn(key)._terms.items():
                acc[k2] = acc.get(k2, 0) + coeff * c2
        return FormalSum(acc)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return FormalSum(acc)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "FormalSum":
        return FormalSum({k: scalar * c for k, c in self._terms.items()})

    __mul__ = __rmul__

    def __neg__(self) -> "FormalSum":
        return (-1) * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{k}" for k, c in self.items())


# ---------------------------------------------------------------------------
# the local Frobenius rules on labels


def merge(l1: str, l2: str) -> FormalSum:
    """m: 1*1 -> 1, 1*x -> x, x*x -> 0."""
    if l1 == ONE and l2 == ONE:
        return FormalSum.single(ONE)
    if X in (l1, l2) and ONE in (l1, l2):
        return FormalSum.single(X)
    return FormalSum.zero()


def split(label: str) -> FormalSum:
    """delta: 1 -> 1 (x) x + x (x) 1, x -> x (x) x."""
    if label == ONE:
        return FormalSum.single((ONE, X)) + FormalSum.single((X, ONE))
    return FormalSum.single((X, X))


def counit(label: str) -> int:
    """eps: 1 -> 0, x -> 1."""
    return 1 if label == X else 0


# ---------------------------------------------------------------------------
# oriented stacks


@dataclass(frozen=True)
class OrientedStack:
    """A layered diagram together with a weight on every number line."""

    params: Params
    lines: tuple[tuple[str, ...], ...]
    arcs: frozenset

    def geometry(self) -> Geometry:
        return _geometry(len(self.lines), self.arcs)

    def symbol(self, vertex: tuple[int, int]) -> str:
        r, p = vertex
        return self.lines[r][self.params.pos(p)]

    def validate(self) -> None:
        geometry = self.geometry()
        for arc in self.arcs:
            kind = arc[0]
            ends = arc_vertices(arc, len(self.lines))
            if kind in ("cup", "cap"):
                if {self.symbol(ends[0]), self.symbol(ends[1])} != {DOWN, UP}:
                    raise ValueError(f"{kind} {arc} not oriented")
            elif kind == "seg":
                if self.symbol(ends[0]) != self.symbol(ends[1]):
                    raise ValueError(f"segment {arc} not oriented")
            else:
                if self.symbol(ends[0]) != arc[2]:
                    raise ValueError(f"ray {arc} clashes with its line")
        for (r, p), incident in geometry.adjacency.items():
            if self.lines[r][self.params.pos(p)] not in (DOWN, UP):
                raise ValueError(f"arc endpoint ({r},{p}) is not a dot")


_GEOMETRY_CACHE: dict = {}


def _geometry(nlines: int, arcs: frozenset) -> Geometry:
    key = (nlines, arcs)
    hit = _GEOMETRY_CACHE.get(key)
    if hit is None:
        hit = Geometry(nlines, arcs)
        _GEOMETRY_CACHE[key] = hit
    return hit


def component_label(stack: OrientedStack, comp: Component) -> str:
    """'1'/'x' for circles, 'line' for open components."""
    if not comp.is_circle:
        return "line"
    symbols = {v: stack.symbol(v) for v in comp.vertices}
    return ONE if circle_is_anticlockwise(comp, symbols) else X


def _line_content_ok(params: Params, labels: tuple[str, ...]) -> bool:
    ups = sum(1 for l in labels if l in (UP, BOTH))
    downs = sum(1 for l in labels if l in (DOWN, BOTH))
    return ups == params.n and downs == params.m


def reorient(
    params: Params,
    new_geometry: Geometry,
    new_blocks,
    affected_old: list[tuple[Component, str]],
    affected_vertices: frozenset,
    vmap: Callable[[tuple[int, int]], tuple[int, int] | None],
    old_symbol: Callable[[tuple[int, int]], str],
    explicit_specs: list[list[tuple[Component, str]]] | None = None,
) -> list[tuple[tuple[tuple[str, ...], ...], int]]:
    """Re-orient after a local modification of the underlying diagram.

    ``affected_old`` lists the old components meeting the modification site
    with their labels; ``affected_vertices`` are the new vertices at the
    site.  Unaffected components keep their orientation (anchored through
    ``vmap``); the affected ones follow the Frobenius rules, unless the
    caller supplies ``explicit_specs`` directly.  Returns a list of
    (lines, coefficient) pairs; coefficients are 1, terms that cannot be
    oriented are dropped (pinned lines only).
    """
    comps = new_geometry.components()
    unaffected = [c for c in comps if not (c.vertices & affected_vertices)]
    affected_new = [c for c in comps if c.vertices & affected_vertices]

    base: dict[tuple[int, int], str] = {}
    for comp in unaffected:
        anchors = {}
        for v in comp.vertices:
            old = vmap(v)
            if old is not None:
                anchors[v] = old_symbol(old)
        choice = None
        for cand in new_geometry.component_orientations(comp):
            if all(cand[v] == anchors[v] for v in anchors):
                assert choice is None, "ambiguous orientation of untouched component"
                choice = cand
        if choice is None:
            return []  # pinned line made inconsistent: the whole product dies
        base.update(choice)

    labels = [label for _, label in affected_old]
    n_old, n_new = len(affected_old), len(affected_new)
    circles_only = "line" not in labels and all(c.is_circle for c in affected_new)

    def forced(comp: Component) -> dict | None:
        options = new_geometry.component_orientations(comp)
        assert not comp.is_circle
        return options[0] if len(options) == 1 else None

    out_specs: list[list[tuple[Component, str | dict]]] = []
    if explicit_specs is not None:
        out_specs = explicit_specs
    elif circles_only:
        # pure circle moves follow the Frobenius rules on the nose
        if n_old == 2 and n_new == 1:
            if labels.count(X) == 2:
                return []
            out_specs.append([(affected_new[0], X if X in labels else ONE)])
        elif n_old == 1 and n_new == 2:
            c1, c2 = affected_new
            if labels[0] == ONE:
                out_specs.append([(c1, ONE), (c2, X)])
                out_specs.append([(c1, X), (c2, ONE)])
            else:
                out_specs.append([(c1, X), (c2, X)])
        else:
            # a rearrangement keeping the component count (height moves):
            # transport the orientations through the anchored vertices
            assert n_old == n_new
            spec = []
            for comp in affected_new:
                anchors = {}
                for v in comp.vertices:
                    old = vmap(v)
                    if old is not None:
                        anchors[v] = old_symbol(old)
                assert anchors, "affected circle with no anchors"
                chosen = None
                for cand in new_geometry.component_orientations(comp):
                    if all(cand[v] == anchors[v] for v in anchors):
                        assert chosen is None
                        chosen = cand
                assert chosen is not None, "height move broke an orientation"
                spec.append((comp, chosen))
            out_specs.append(spec)
    else:
        # a move involving lines: pinned parts are forced, any freshly
        # created circle is tried both ways; the caller's degree filter
        # keeps exactly the degree-preserving outcomes
        fixed: list[tuple[Component, dict]] = []
        free_circles: list[Component] = []
        for comp in affected_new:
            if comp.is_circle:
                free_circles.append(comp)
            else:
                fc = forced(comp)
                if fc is None:
                    return []
                fixed.append((comp, fc))
        assert len(free_circles) <= 1
        if free_circles:
            for sense in (ONE, X):
                out_specs.append(fixed + [(free_circles[0], sense)])
        else:
            out_specs.append(list(fixed))

    results = []
    for spec in out_specs:
        assignment = dict(base)
        for comp, how in spec:
            if isinstance(how, str):
                chosen = None
                for cand in new_geometry.component_orientations(comp):
                    symbols = {v: cand[v] for v in comp.vertices}
                    if (ONE if circle_is_anticlockwise(comp, symbols) else X) == how:
                        chosen = cand
                        break
                assert chosen is not None
                assignment.update(chosen)
            else:
                assignment.update(how)
        lines = _lines_from_assignment(params, new_blocks, assignment)
        if lines is not None:
            results.append((lines, 1))
    return results


def _lines_from_assignment(params, new_blocks, assignment):
    """Fill each line from its block pattern plus the dot assignment.

    Returns None when a line's up-count disagrees with (m, n): the term is
    not an oriented diagram and dies.
    """
    grid: list[list[str | None]] = []
    for block in new_blocks:
        row: list[str | None] = []
        for v in params.vertices:
            e = block.entry(v)
            row.append(EMPTY if e == 0 else (BOTH if e == 2 else None))
        grid.append(row)
    for (r, p), sym in assignment.items():
        idx = params.pos(p)
        assert grid[r][idx] is None, f"vertex ({r},{p}) is not a dot"
        grid[r][idx] = sym
    lines = []
    for row in grid:
        assert all(l is not None for l in row), "dot without an orientation"
        line = tuple(row)
        if not _line_content_ok(params, line):
            return None
        lines.append(line)
    return tuple(lines)


# ---------------------------------------------------------------------------
# stacking and iterated surgery


def fuse(upper: OrientedStack, lower: OrientedStack):
    """Glue lower under upper, pairing the boundary attachments.

    The bottom attachments of ``upper`` (cups and decorated down-rays on its
    last line) must mirror the top attachments of ``lower``; mismatched arcs
    mean the product is zero (returns None).  Returns (stack, middle, sites).
    """
    if upper.params != lower.params:
        raise ValueError("stacks over different Params")
    n_up = len(upper.lines)
    mid = n_up - 1
    upper_cups = {(a[2], a[3]) for a in upper.arcs if a[0] == "cup" and a[1] == mid}
    lower_caps = {(a[2], a[3]) for a in lower.arcs if a[0] == "cap" and a[1] == 0}
    upper_rays = {a[1]: a[2] for a in upper.arcs if a[0] == "raydown"}
    lower_rays = {a[1]: a[2] for a in lower.arcs if a[0] == "rayup"}
    if upper_cups != lower_caps or set(upper_rays) != set(lower_rays):
        return None
    if any(upper_rays[p] != lower_rays[p] for p in upper_rays):
        return None
    arcs = []
    for arc in upper.arcs:
        if arc[0] == "raydown":
            arcs.append(("seg", mid, arc[1], arc[1]))
        else:
            arcs.append(arc)
    for arc in lower.arcs:
        if arc[0] == "rayup":
            continue  # already added as a segment
        kind = arc[0]
        if kind in ("cup", "cap"):
            arcs.append((kind, arc[1] + n_up, arc[2], arc[3]))
        elif kind == "seg":
            arcs.append(("seg", arc[1] + n_up, arc[2], arc[3]))
        else:  # raydown of the lower part
            arcs.append(arc)
    stack = OrientedStack(upper.params, upper.lines + lower.lines, frozenset(arcs))
    sites = tuple(sorted(upper_cups))
    return stack, mid, sites


def line_blocks(params: Params, lines) -> tuple:
    """The block of every line of an oriented stack."""
    from .weights import Block

    convert = {EMPTY: 0, DOWN: 1, UP: 1, BOTH: 2}
    return tuple(Block(params, tuple(convert[l] for l in line)) for line in lines)


def raw_degree(stack: OrientedStack) -> int:
    """Total number of clockwise cups and caps; surgery preserves it."""
    total = 0
    for arc in stack.arcs:
        if arc[0] in ("cup", "cap"):
            _, r, p, q = arc
            if not (stack.symbol((r, p)) == DOWN and stack.symbol((r, q)) == UP):
                total += 1
    return total


def surgery_step(stack: OrientedStack, mid: int, site: tuple[int, int]) -> FormalSum:
    """One surgery: replace the cap-cup pair at ``site`` by two segments."""
    p, q = site
    cup_arc = ("cup", mid, p, q)
    cap_arc = ("cap", mid + 1, p, q)
    if cup_arc not in stack.arcs or cap_arc not in stack.arcs:
        raise ValueError("site does not name a symmetric cap-cup pair")
    old_geometry = stack.geometry()
    comp_cup = old_geometry.component_of_arc(cup_arc)
    comp_cap = old_geometry.component_of_arc(cap_arc)
    new_arcs = (stack.arcs - {cup_arc, cap_arc}) | {("seg", mid, p, p), ("seg", mid, q, q)}
    new_geometry = _geometry(len(stack.lines), frozenset(new_arcs))

    affected_old = [(comp_cup, component_label(stack, comp_cup))]
    if comp_cap is not comp_cup:
        affected_old.append((comp_cap, component_label(stack, comp_cap)))
    affected_vertices = frozenset({(mid, p), (mid, q), (mid + 1, p), (mid + 1, q)})
    terms = reorient(
        stack.params,
        new_geometry,
        line_blocks(stack.params, stack.lines),
        affected_old,
        affected_vertices,
        vmap=lambda v: v,
        old_symbol=stack.symbol,
    )
    before = raw_degree(stack)
    out = []
    for lines, coeff in terms:
        candidate = OrientedStack(stack.params, lines, frozenset(new_arcs))
        if raw_degree(candidate) == before:
            out.append((candidate, coeff))
    return FormalSum(out)


def run_surgeries(stack: OrientedStack, mid: int, sites: tuple[tuple[int, int], ...]) -> FormalSum:
    total = FormalSum.single(stack)
    for site in sites:
        total = total.map_terms(lambda s, site=site: surgery_step(s, mid, site))
    return total


def collapse(stack: OrientedStack, mid: int) -> OrientedStack:
    """Delete the lower of the two identified middle lines."""
    assert stack.lines[mid] == stack.lines[mid + 1], "middle lines disagree"
    arcs = []
    for arc in stack.arcs:
        kind = arc[0]
        if kind in ("cup", "cap"):
            _, r, p, q = arc
            arcs.append((kind, r - 1 if r > mid else r, p, q))
        elif kind == "seg":
            _, r, p, q = arc
            if r == mid:
                assert p == q, "unresolved middle arc at collapse time"
                continue
            arcs.append(("seg", r - 1 if r > mid else r, p, q))
        else:
            arcs.append(arc)
    lines = stack.lines[:mid + 1] + stack.lines[mid + 2:]
    return OrientedStack(stack.params, lines, frozenset(arcs))


def multiply(upper: OrientedStack, lower: OrientedStack) -> FormalSum:
    """Stack, run all surgeries in canonical order, collapse.

    Returns a FormalSum of OrientedStacks; zero when the interfaces do not
    mirror-match or every term dies.
    """
    fused = fuse(upper, lower)
    if fused is None:
        return FormalSum.zero()
    stack, mid, sites = fused
    return run_surgeries(stack, mid, sites).map_keys(lambda s: collapse(s, mid))
