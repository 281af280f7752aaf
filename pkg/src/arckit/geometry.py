"""Layered diagram graphs: number lines, arcs, components, orientations.

Every picture in this package (circle diagrams, composite matchings,
stretched diagrams, transient multiplication stacks) is a stack of number
lines with planar arcs between them.  This module holds the shared graph
machinery: connected components, traversal-consistent orientation
propagation, and circle orientation labels.

Arc encoding (lines indexed 0 at the top, increasing downwards):
    ('cup', r, p, q)      arc below line r joining vertices p < q of line r
    ('cap', r, p, q)      arc above line r joining vertices p < q of line r
    ('seg', r, p, q)      segment joining (r, p) to (r+1, q), |p - q| <= 1
    ('rayup', p, s)       decorated ray above line 0 at vertex p, symbol s
    ('raydown', p, s)     decorated ray below the last line at vertex p

A vertex is a pair (line, position).  Orientation data lives outside this
module as a tuple of label tuples, one per line.
"""

from __future__ import annotations

from dataclasses import dataclass

from .weights import DOWN, UP

Vertex = tuple[int, int]
Arc = tuple


def arc_vertices(arc: Arc, nlines: int) -> tuple[Vertex, ...]:
    kind = arc[0]
    if kind == "cup" or kind == "cap":
        _, r, p, q = arc
        return ((r, p), (r, q))
    if kind == "seg":
        _, r, p, q = arc
        return ((r, p), (r + 1, q))
    if kind == "rayup":
        return ((0, arc[1]),)
    if kind == "raydown":
        return ((nlines - 1, arc[1]),)
    raise ValueError(f"unknown arc {arc!r}")


def flips_direction(arc: Arc) -> bool:
    """Cups and caps turn the strand around; segments do not."""
    return arc[0] in ("cup", "cap")


@dataclass(frozen=True)
class Component:
    arcs: frozenset
    vertices: frozenset
    ray_pins: tuple[tuple[Vertex, str], ...]  # ray-decorated endpoints
    open_ends: tuple[Vertex, ...]  # undecorated boundary endpoints

    @property
    def is_circle(self) -> bool:
        return not self.open_ends and not self.ray_pins


class Geometry:
    """The unoriented arc graph of a layered diagram."""

    def __init__(self, nlines: int, arcs):
        self.nlines = nlines
        self.arcs = frozenset(arcs)
        adj: dict[Vertex, list[Arc]] = {}
        for arc in self.arcs:
            for v in arc_vertices(arc, nlines):
                adj.setdefault(v, []).append(arc)
        for v, incident in adj.items():
            if len(incident) > 2:
                raise ValueError(f"vertex {v} has {len(incident)} incident arcs")
        self.adjacency = adj
        self._components: list[Component] | None = None

    def components(self) -> list[Component]:
        if self._components is not None:
            return self._components
        seen_arcs: set[Arc] = set()
        out: list[Component] = []
        for start in sorted(self.arcs, key=repr):
            if start in seen_arcs:
                continue
            comp_arcs = {start}
            comp_vertices = set(arc_vertices(start, self.nlines))
            frontier = list(comp_vertices)
            while frontier:
                v = frontier.pop()
                for arc in self.adjacency[v]:
                    if arc not in comp_arcs:
                        comp_arcs.add(arc)
                        for w in arc_vertices(arc, self.nlines):
                            if w not in comp_vertices:
                                comp_vertices.add(w)
                                frontier.append(w)
            seen_arcs |= comp_arcs
            pins = []
            open_ends = []
            for v in comp_vertices:
                incident = self.adjacency[v]
                rays = [a for a in incident if a[0] in ("rayup", "raydown")]
                for ray in rays:
                    pins.append((v, ray[2]))
                if len(incident) == 1 and not rays:
                    open_ends.append(v)
            out.append(Component(frozenset(comp_arcs), frozenset(comp_vertices),
                                 tuple(sorted(pins)), tuple(sorted(open_ends))))
        out.sort(key=lambda c: min(c.vertices))
        self._components = out
        return out

    def component_of_arc(self, arc: Arc) -> Component:
        for comp in self.components():
            if arc in comp.arcs:
                return comp
        raise KeyError(f"arc {arc!r} not in geometry")

    # -- orientation propagation -------------------------------------------

    def propagate(self, comp: Component, seed: Vertex, symbol: str) -> dict[Vertex, str] | None:
        """Assign strand symbols over the component from one seed choice.

        Returns None when the assignment contradicts a decorated ray.
        Cups and caps flip the symbol between their endpoints, segments
        preserve it; this is exactly traversal-direction consistency.
        """
        assignment = {seed: symbol}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            for arc in self.adjacency[v]:
                if arc[0] in ("rayup", "raydown"):
                    continue
                ends = arc_vertices(arc, self.nlines)
                if len(ends) != 2:
                    continue
                w = ends[0] if ends[1] == v else ends[1]
                expected = _other(assignment[v]) if flips_direction(arc) else assignment[v]
                if w in assignment:
                    if assignment[w] != expected:
                        # parity conflict; cannot happen for diagrams built
                        # by this package
                        raise AssertionError(f"inconsistent orientation parity at {w}")
                else:
                    assignment[w] = expected
                    frontier.append(w)
        for v, sym in comp.ray_pins:
            if assignment.get(v) != sym:
                return None
        return assignment

    def component_orientations(self, comp: Component) -> list[dict[Vertex, str]]:
        """All traversal-consistent symbol assignments of one component."""
        seed = min(comp.vertices)
        out = []
        for sym in (DOWN, UP):
            assignment = self.propagate(comp, seed, sym)
            if assignment is not None:
                out.append(assignment)
        return out


def _other(symbol: str) -> str:
    return UP if symbol == DOWN else DOWN


def circle_is_anticlockwise(comp: Component, symbols: dict[Vertex, str]) -> bool:
    """A circle is anticlockwise iff it crosses its leftmost position downward."""
    leftmost = min(p for (_, p) in comp.vertices)
    picks = {symbols[(r, p)] for (r, p) in comp.vertices if p == leftmost}
    assert len(picks) == 1, "circle crosses its leftmost position both ways"
    return picks.pop() == DOWN


def orient_circle(geometry: Geometry, comp: Component, anticlockwise: bool) -> dict[Vertex, str]:
    """The unique symbol assignment with the requested rotation sense."""
    for assignment in geometry.component_orientations(comp):
        if circle_is_anticlockwise(comp, assignment) == anticlockwise:
            return assignment
    raise AssertionError("circle admits no orientation of the requested sense")
