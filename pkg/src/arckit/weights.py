"""Diagrammatic weights, blocks, Bruhat order, crystal structure.

A weight is a number line with vertices indexed by the interval I+ and
labelled 'o' (empty), 'v' (down), '^' (up) or 'x' (both).  Blocks are the
equivalence classes under permuting the 'v' and '^' labels, encoded by
signatures over {0,1,2}.  Everything downstream (diagrams, algebras, module
bases) is indexed by this combinatorics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

EMPTY, DOWN, UP, BOTH = "o", "v", "^", "x"
LABELS = (EMPTY, DOWN, UP, BOTH)

# pretty aliases used by the renderer
PRETTY = {EMPTY: "o", DOWN: "v", UP: "^", BOTH: "x"}


@dataclass(frozen=True, order=True)
class Params:
    """The ambient data (m, n, I); I is the integer interval [lo, hi]."""

    m: int
    n: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("index interval I must be nonempty")
        if not (0 <= self.m <= self.isize + 1 and 0 <= self.n <= self.isize + 1):
            raise ValueError(f"need 0 <= m,n <= |I|+1, got m={self.m}, n={self.n}")

    @property
    def isize(self) -> int:
        return self.hi - self.lo + 1

    @property
    def o(self) -> int:
        """The offset o = min(I) - 1."""
        return self.lo - 1

    @property
    def index_set(self) -> range:
        """I, the colours of crystal/functor operators."""
        return range(self.lo, self.hi + 1)

    @property
    def vertices(self) -> range:
        """I+ = I u (I+1), the vertex positions of the number line."""
        return range(self.lo, self.hi + 2)

    def pos(self, vertex: int) -> int:
        """0-based position of a vertex on the number line."""
        if not (self.lo <= vertex <= self.hi + 1):
            raise ValueError(f"vertex {vertex} outside I+ = [{self.lo},{self.hi + 1}]")
        return vertex - self.lo


@dataclass(frozen=True, order=True)
class Weight:
    params: Params
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != self.params.isize + 1:
            raise ValueError("label sequence must cover I+")
        if any(l not in LABELS for l in self.labels):
            raise ValueError(f"bad labels {self.labels}")
        m = sum(1 for l in self.labels if l in (DOWN, BOTH))
        n = sum(1 for l in self.labels if l in (UP, BOTH))
        if (m, n) != (self.params.m, self.params.n):
            raise ValueError(
                f"weight has (m,n)=({m},{n}), params say ({self.params.m},{self.params.n})"
            )

    def label(self, vertex: int) -> str:
        return self.labels[self.params.pos(vertex)]

    def relabel(self, changes: dict[int, str]) -> "Weight":
        labels = list(self.labels)
        for vertex, lab in changes.items():
            labels[self.params.pos(vertex)] = lab
        return Weight(self.params, tuple(labels))

    def __str__(self) -> str:
        return "".join(self.labels)


@dataclass(frozen=True, order=True)
class Block:
    params: Params
    signature: tuple[int, ...]

    def __post_init__(self):
        if len(self.signature) != self.params.isize + 1:
            raise ValueError("signature must cover I+")
        if any(s not in (0, 1, 2) for s in self.signature):
            raise ValueError("signature entries must lie in {0,1,2}")
        if sum(self.signature) != self.params.m + self.params.n:
            raise ValueError("signature entries must sum to m+n")
        if sum(1 for s in self.signature if s == 2) > min(self.params.m, self.params.n):
            raise ValueError("too many doubled vertices for (m,n)")

    def entry(self, vertex: int) -> int:
        return self.signature[self.params.pos(vertex)]

    def dot_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.params.vertices if self.entry(v) == 1)

    def num_crosses(self) -> int:
        return sum(1 for s in self.signature if s == 2)

    def fundamental_pairing(self, j: int) -> int:
        """(Gamma, Lambda_j): the prefix sum of the signature up to vertex j."""
        return sum(self.entry(v) for v in self.params.vertices if v <= j)

    def self_pairing(self) -> int:
        """(Gamma, Gamma) under the standard pairing on signatures."""
        return sum(s * s for s in self.signature)

    def weights(self) -> tuple[Weight, ...]:
        """All weights of the block, in canonical (lexicographic) order."""
        return _block_weights(self)

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.signature)


# ---------------------------------------------------------------------------
# dictionaries


@dataclass(frozen=True)
class LieWeight:
    """The rho-shifted coordinates ((lambda+rho, eps_j)); rho is absorbed."""

    params: Params
    down_values: tuple[int, ...]
    up_values: tuple[int, ...]

    def __post_init__(self):
        if len(self.down_values) != self.params.m or len(self.up_values) != self.params.n:
            raise ValueError("tuple lengths must be (m, n)")
        for tup in (self.down_values, self.up_values):
            if any(a <= b for a, b in zip(tup, tup[1:])):
                raise ValueError(f"{tup} is not strictly decreasing")
            for value in tup:
                if not (self.params.lo <= value <= self.params.hi + 1):
                    raise ValueError(f"entry {value} outside I+")


@dataclass(frozen=True)
class Bipartition:
    first: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self):
        for part in (self.first, self.second):
            if any(a < b for a, b in zip(part, part[1:])) or any(p < 0 for p in part):
                raise ValueError(f"{part} is not a partition")

    def normalised(self) -> "Bipartition":
        strip = lambda t: tuple(p for p in t if p)
        return Bipartition(strip(self.first), strip(self.second))


def dict_to_weight(lie: LieWeight) -> Weight:
    """Label vertex i by membership of i in the two coordinate sets."""
    downs, ups = set(lie.down_values), set(lie.up_values)
    labels = []
    for i in lie.params.vertices:
        if i in downs and i in ups:
            labels.append(BOTH)
        elif i in downs:
            labels.append(DOWN)
        elif i in ups:
            labels.append(UP)
        else:
            labels.append(EMPTY)
    return Weight(lie.params, tuple(labels))


def weight_to_dict(w: Weight) -> LieWeight:
    downs = tuple(sorted((v for v in w.params.vertices if w.label(v) in (DOWN, BOTH)), reverse=True))
    ups = tuple(sorted((v for v in w.params.vertices if w.label(v) in (UP, BOTH)), reverse=True))
    return LieWeight(w.params, downs, ups)


def to_bipartition(w: Weight) -> Bipartition:
    """Row lengths i_r - o - m + r - 1 and j_s - o - n + s - 1."""
    lie = weight_to_dict(w)
    p, o = w.params, w.params.o
    first = tuple(lie.down_values[r - 1] - o - p.m + r - 1 for r in range(1, p.m + 1))
    second = tuple(lie.up_values[s - 1] - o - p.n + s - 1 for s in range(1, p.n + 1))
    return Bipartition(first, second).normalised()


def from_bipartition(params: Params, bp: Bipartition) -> Weight:
    first = tuple(bp.first) + (0,) * (params.m - len(bp.first))
    second = tuple(bp.second) + (0,) * (params.n - len(bp.second))
    if len(first) > params.m or len(second) > params.n:
        raise ValueError("bipartition has too many nonzero parts for (m,n)")
    o = params.o
    downs = tuple(first[r - 1] + o + params.m - r + 1 for r in range(1, params.m + 1))
    ups = tuple(second[s - 1] + o + params.n - s + 1 for s in range(1, params.n + 1))
    return dict_to_weight(LieWeight(params, downs, ups))


# ---------------------------------------------------------------------------
# blocks, defect, linkage


def block_of(w: Weight) -> Block:
    convert = {EMPTY: 0, DOWN: 1, UP: 1, BOTH: 2}
    return Block(w.params, tuple(convert[l] for l in w.labels))


def defect(block: Block) -> int:
    return min(block.params.m, block.params.n) - block.num_crosses()


def linked(a: Weight, b: Weight) -> bool:
    if a.params != b.params:
        raise ValueError("weights live over different Params")
    return block_of(a) == block_of(b)


def ground_state(params: Params) -> Weight:
    """min(m,n) crosses, then |m-n| rays of the majority symbol, then empties."""
    k = min(params.m, params.n)
    tail = DOWN if params.m >= params.n else UP
    labels = [BOTH] * k + [tail] * abs(params.m - params.n)
    labels += [EMPTY] * (params.isize + 1 - len(labels))
    return Weight(params, tuple(labels))


def ground_state_block(params: Params) -> Block:
    return block_of(ground_state(params))


@lru_cache(maxsize=None)
def all_blocks(params: Params) -> tuple[Block, ...]:
    """Every block over the given Params, canonically ordered."""
    total = params.m + params.n
    nverts = params.isize + 1
    out = []
    for sig in itertools.product((0, 1, 2), repeat=nverts):
        if sum(sig) != total:
            continue
        if sum(1 for s in sig if s == 2) > min(params.m, params.n):
            continue
        out.append(Block(params, sig))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _block_weights(block: Block) -> tuple[Weight, ...]:
    params = block.params
    dots = block.dot_vertices()
    ndown = params.m - block.num_crosses()
    base = {v: {0: EMPTY, 2: BOTH}[block.entry(v)] for v in params.vertices if block.entry(v) != 1}
    out = []
    for down_positions in itertools.combinations(dots, ndown):
        assignment = dict(base)
        for v in dots:
            assignment[v] = DOWN if v in down_positions else UP
        out.append(Weight(params, tuple(assignment[v] for v in params.vertices)))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Bruhat order


def _up_prefix_counts(w: Weight) -> tuple[int, ...]:
    count, out = 0, []
    for l in w.labels:
        if l == UP:
            count += 1
        out.append(count)
    return tuple(out)


def bruhat_leq(a: Weight, b: Weight) -> bool:
    """a <= b iff b is reachable from a by swaps moving an up-label leftward.

    Implemented by pointwise dominance of prefix up-counts within the block;
    the elementary-move closure oracle in the test-suite guards this
    characterisation.
    """
    if not linked(a, b):
        raise ValueError("Bruhat order only compares linked weights")
    return all(x <= y for x, y in zip(_up_prefix_counts(a), _up_prefix_counts(b)))


def bruhat_raises(w: Weight) -> list[Weight]:
    """All weights obtained by one elementary move v...^ -> ^...v."""
    dots = [v for v in w.params.vertices if w.label(v) in (DOWN, UP)]
    out = []
    for p, q in itertools.combinations(dots, 2):
        if w.label(p) == DOWN and w.label(q) == UP:
            out.append(w.relabel({p: UP, q: DOWN}))
    return out


def bruhat_maximal(block: Block) -> Weight:
    """The unique weight with all up-labels as far left as possible."""
    dots = block.dot_vertices()
    nup = block.params.n - block.num_crosses()
    assignment = {}
    for k, v in enumerate(dots):
        assignment[v] = UP if k < nup else DOWN
    labels = []
    for v in block.params.vertices:
        e = block.entry(v)
        labels.append(assignment[v] if e == 1 else {0: EMPTY, 2: BOTH}[e])
    return Weight(block.params, tuple(labels))


def bruhat_minimal(block: Block) -> Weight:
    dots = block.dot_vertices()
    ndown = block.params.m - block.num_crosses()
    assignment = {}
    for k, v in enumerate(dots):
        assignment[v] = DOWN if k < ndown else UP
    labels = []
    for v in block.params.vertices:
        e = block.entry(v)
        labels.append(assignment[v] if e == 1 else {0: EMPTY, 2: BOTH}[e])
    return Weight(block.params, tuple(labels))


def is_bruhat_maximal(w: Weight) -> bool:
    return w == bruhat_maximal(block_of(w))


# ---------------------------------------------------------------------------
# admissibility and the crystal graph

# local patterns (entry_i, entry_{i+1}) -> (kind, new pattern)
_ADMISSIBLE_PATTERNS = {
    (1, 1): ("cup", (0, 2)),
    (2, 0): ("cap", (1, 1)),
    (1, 0): ("right-shift", (0, 1)),
    (2, 1): ("left-shift", (1, 2)),
}


def admissible(block: Block, i: int) -> tuple[Block, str] | None:
    """Gamma - alpha_i if it exists, together with the matching kind."""
    if i not in block.params.index_set:
        raise ValueError(f"colour {i} outside I")
    pattern = (block.entry(i), block.entry(i + 1))
    hit = _ADMISSIBLE_PATTERNS.get(pattern)
    if hit is None:
        return None
    kind, new = hit
    sig = list(block.signature)
    sig[block.params.pos(i)], sig[block.params.pos(i + 1)] = new
    try:
        return Block(block.params, tuple(sig)), kind
    except ValueError:
        return None  # the cup pattern at defect 0 overflows the cross count


def admissible_sequence_blocks(params: Params, iseq: tuple[int, ...]) -> list[Block] | None:
    """Block sequence Gamma_0..Gamma_d for iseq applied to the ground state."""
    blocks = [ground_state_block(params)]
    for i in iseq:
        step = admissible(blocks[-1], i)
        if step is None:
            return None
        blocks.append(step[0])
    return blocks


# crystal table: local pattern of the source -> local pattern of the target
_CRYSTAL_TABLE = {
    (DOWN, EMPTY): (EMPTY, DOWN),
    (UP, EMPTY): (EMPTY, UP),
    (BOTH, DOWN): (DOWN, BOTH),
    (BOTH, UP): (UP, BOTH),
    (BOTH, EMPTY): (DOWN, UP),
    (DOWN, UP): (EMPTY, BOTH),
}
_CRYSTAL_INVERSE = {v: k for k, v in _CRYSTAL_TABLE.items()}


def crystal_f(i: int, w: Weight) -> Weight | None:
    """The Kashiwara-style operator given by the six local moves, or None."""
    if i not in w.params.index_set:
        raise ValueError(f"colour {i} outside I")
    pattern = (w.label(i), w.label(i + 1))
    target = _CRYSTAL_TABLE.get(pattern)
    if target is None:
        return None
    return w.relabel({i: target[0], i + 1: target[1]})


def crystal_e(i: int, w: Weight) -> Weight | None:
    """Partial inverse of crystal_f."""
    if i not in w.params.index_set:
        raise ValueError(f"colour {i} outside I")
    pattern = (w.label(i), w.label(i + 1))
    source = _CRYSTAL_INVERSE.get(pattern)
    if source is None:
        return None
    return w.relabel({i: source[0], i + 1: source[1]})


def crystal_path_to_max(w: Weight) -> tuple[Weight, tuple[int, ...]]:
    """A Bruhat-maximal mu and colours (i_1..i_k) with w = f_{i_k}...f_{i_1}(mu).

    Greedily un-applies crystal moves; each step lowers the height of
    Lambda - Gamma, so this terminates at a weight of the sorted shape
    x..x^..^v..v o..o, which is maximal in its own block.
    """
    path: list[int] = []
    current = w
    while True:
        for i in current.params.index_set:
            up = crystal_e(i, current)
            if up is not None:
                path.append(i)
                current = up
                break
        else:
            break
    assert is_bruhat_maximal(current)
    return current, tuple(reversed(path))


def crystal_component_of_ground_state(params: Params) -> set[Weight]:
    """All weights reachable from the ground-state by crystal moves."""
    seen = {ground_state(params)}
    frontier = [ground_state(params)]
    while frontier:
        w = frontier.pop()
        for i in params.index_set:
            nxt = crystal_f(i, w)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def max_defect_set(block: Block) -> tuple[Weight, ...]:
    """The weights of the block whose cup diagram has defect-many cups."""
    from . import diagrams  # local import to avoid a cycle

    d = defect(block)
    return tuple(w for w in block.weights() if len(diagrams.cup_of(w).cups) == d)
