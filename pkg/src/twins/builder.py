"""Constructive twin builders with proven size guarantees.

``build_twin_general`` finds a twin of size >= floor(n/(r^2+1)) in any
r-coloring by climbing a ladder of candidate endpoint sets: each level
picks, inside a fresh interval, a popular subset whose pairs are all
matchable to pairs of the previous level. ``build_twin_binary`` improves
the constant to floor(n/4) for two colors by keeping a triangle of
mutually-reachable endpoints and exposing only four new indices per
step.

Both builders record parent pointers per (level, endpoint pair) so a
witness twin is reconstructed by back-chaining and repeated extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .core import (
    EMPTY_TWIN,
    EdgeColoring,
    MatchOrientation,
    TwinPair,
    extend_twin,
    validate_twin,
)


@dataclass(frozen=True)
class BipartiteColoring:
    """An edge coloring of a complete bipartite graph between two index sets."""

    a_side: tuple[int, ...]
    b_side: tuple[int, ...]
    r: int
    grid: tuple[tuple[int, ...], ...]  # grid[ai][bi] = color of {a_side[ai], b_side[bi]}

    def __post_init__(self):
        object.__setattr__(self, "a_side", tuple(self.a_side))
        object.__setattr__(self, "b_side", tuple(self.b_side))
        object.__setattr__(self, "grid", tuple(tuple(row) for row in self.grid))
        if set(self.a_side) & set(self.b_side):
            raise ValueError("sides must be disjoint")
        if len(self.grid) != len(self.a_side):
            raise ValueError("grid must have one row per a-side vertex")
        for row in self.grid:
            if len(row) != len(self.b_side):
                raise ValueError("grid rows must have one entry per b-side vertex")
            for col in row:
                if not 1 <= col <= self.r:
                    raise ValueError(f"color {col} outside palette [1..{self.r}]")

    def color(self, a: int, b: int) -> int:
        return self.grid[self.a_side.index(a)][self.b_side.index(b)]

    @classmethod
    def from_coloring(
        cls, c: EdgeColoring, a_side: Sequence[int], b_side: Sequence[int]
    ) -> "BipartiteColoring":
        grid = tuple(tuple(c.color(a, b) for b in b_side) for a in a_side)
        return cls(tuple(a_side), tuple(b_side), c.r, grid)

    @classmethod
    def from_function(
        cls, a_side: Sequence[int], b_side: Sequence[int], r: int, fn: Callable[[int, int], int]
    ) -> "BipartiteColoring":
        grid = tuple(tuple(fn(a, b) for b in b_side) for a in a_side)
        return cls(tuple(a_side), tuple(b_side), r, grid)


@dataclass
class PopularSubset:
    """Output of the popular-subset step: a color, the vertices popular in it,
    and two same-colored a-side neighbors per member."""

    color: int
    members: tuple[int, ...]
    witnesses: dict[int, tuple[int, int]]


def popular_subset(bc: BipartiteColoring, r: int, k: int) -> PopularSubset:
    """Find a color i and >= k+1 b-side vertices that are all i-popular.

    Requires |A| = r+1 and |B| = rk+1. Every member has two distinct
    a-side neighbors joined to it by color i, so every pair of members is
    matchable via a pair of distinct a-side vertices. Ties are broken
    toward the smallest color and the smallest vertex indices.
    """
    if len(bc.a_side) != r + 1:
        raise ValueError(f"need |A| = r+1 = {r + 1}, got {len(bc.a_side)}")
    if len(bc.b_side) != r * k + 1:
        raise ValueError(f"need |B| = rk+1 = {r * k + 1}, got {len(bc.b_side)}")
    if bc.r > r:
        raise ValueError(f"bipartite palette {bc.r} exceeds r = {r}")
    popular_color: dict[int, int] = {}
    witnesses: dict[int, tuple[int, int]] = {}
    for bi, b in enumerate(bc.b_side):
        by_color: dict[int, list[int]] = {}
        for ai, a in enumerate(bc.a_side):
            by_color.setdefault(bc.grid[ai][bi], []).append(a)
        # r+1 edges into r colors: some color repeats.
        hit = min(col for col, avs in by_color.items() if len(avs) >= 2)
        popular_color[b] = hit
        witnesses[b] = (by_color[hit][0], by_color[hit][1])
    counts: dict[int, int] = {}
    for col in popular_color.values():
        counts[col] = counts.get(col, 0) + 1
    chosen = min(col for col, cnt in counts.items() if cnt > k)
    members = tuple(b for b in bc.b_side if popular_color[b] == chosen)
    return PopularSubset(chosen, members, {b: witnesses[b] for b in members})


def matchable_pair_via(
    subset: PopularSubset, b1: int, b2: int
) -> tuple[int, int, MatchOrientation]:
    """Distinct a-side vertices matching b1 and b2 through the subset's color.

    b2's witness is chosen to avoid b1's, so the returned pair is a
    genuine 2-set and (a1, a2), (b1, b2) is a c-matching.
    """
    if b1 == b2:
        raise ValueError("b1 and b2 must be distinct")
    for b in (b1, b2):
        if b not in subset.witnesses:
            raise ValueError(f"{b} is not in the popular subset")
    a1 = subset.witnesses[b1][0]
    cands = subset.witnesses[b2]
    a2 = cands[0] if cands[0] != a1 else cands[1]
    return a1, a2, MatchOrientation((a1, a2), (b1, b2))


@dataclass
class LadderLevel:
    """One builder level: the candidate endpoint set and, for every pair of
    it, the previous-level pair and orientation that extend a twin onto it."""

    level: int
    members: tuple[int, ...]
    parents: dict[tuple[int, int], tuple[tuple[int, int], MatchOrientation]] = field(
        default_factory=dict
    )

    def pairs(self) -> list[tuple[int, int]]:
        ms = self.members
        return [(ms[i], ms[j]) for i in range(len(ms)) for j in range(i + 1, len(ms))]


@dataclass
class LadderState:
    """The full ladder; `reconstruct` back-chains a witness twin."""

    levels: list[LadderLevel]

    @property
    def depth(self) -> int:
        return len(self.levels)

    def reconstruct(self, c: EdgeColoring, pair: tuple[int, int] | None = None) -> TwinPair:
        """Back-chain from an endpoint pair of the top level (default: the
        lexicographically first) and rebuild the twin by repeated extension."""
        if not self.levels:
            return EMPTY_TWIN
        top = self.levels[-1]
        if pair is None:
            pair = top.pairs()[0]
        chain: list[tuple[tuple[int, int], MatchOrientation]] = []
        for level in reversed(self.levels[1:]):
            parent, orientation = level.parents[pair]
            chain.append((pair, orientation))
            pair = parent
        twin = TwinPair((pair[0],), (pair[1],))
        for new_pair, orientation in reversed(chain):
            twin = extend_twin(c, twin, new_pair, orientation)
        return twin

    def check(self, c: EdgeColoring) -> None:
        """Witness soundness: every pair at every level reconstructs to a valid
        twin of that level's size ending at that pair. Debug/test use."""
        for t, level in enumerate(self.levels, start=1):
            partial = LadderState(self.levels[:t])
            for pair in level.pairs():
                twin = partial.reconstruct(c, pair)
                verdict = validate_twin(c, twin)
                if not verdict:
                    raise AssertionError(
                        f"level {t} pair {pair}: invalid twin ({verdict.reason})"
                    )
                if twin.size != t:
                    raise AssertionError(f"level {t} pair {pair}: size {twin.size} != {t}")
                if {twin.first[-1], twin.second[-1]} != set(pair):
                    raise AssertionError(f"level {t} pair {pair}: wrong chain ends")


def build_general_ladder(c: EdgeColoring, check: bool = False) -> LadderState:
    """Climb floor(n/(r^2+1)) levels using the popular-subset step.

    Level t lives in the interval E_t = {t(r^2+1)-r^2, ..., t(r^2+1)};
    the popular subset found there is truncated to its r+1 smallest
    members so the next step sees an (r+1)-sided left part again.
    """
    n, r = c.n, c.r
    span = r * r + 1
    depth = n // span
    if depth == 0:
        return LadderState([])
    state = LadderState([LadderLevel(1, tuple(range(1, r + 2)))])
    for t in range(2, depth + 1):
        interval = tuple(range(t * span - r * r, t * span + 1))
        prev = state.levels[-1].members
        bc = BipartiteColoring.from_coloring(c, prev, interval)
        subset = popular_subset(bc, r, r)
        members = subset.members[: r + 1]
        level = LadderLevel(t, members)
        for b1, b2 in level.pairs():
            a1, a2, orientation = matchable_pair_via(subset, b1, b2)
            parent = (a1, a2) if a1 < a2 else (a2, a1)
            level.parents[(b1, b2)] = (parent, orientation)
        state.levels.append(level)
    if check:
        state.check(c)
    return state


def build_twin_general(c: EdgeColoring, check: bool = False) -> TwinPair:
    """Twin of size >= max(floor(n/(r^2+1)), min(1, floor(n/2))) in any coloring."""
    state = build_general_ladder(c, check=check)
    if state.depth == 0:
        return TwinPair((1,), (2,)) if c.n >= 2 else EMPTY_TWIN
    return state.reconstruct(c)


def _binary_step(
    c: EdgeColoring, members: tuple[int, int, int]
) -> tuple[tuple[int, ...], dict]:
    """One step of the two-color builder: from a triangle {x<y<z} of reachable
    endpoint pairs, pick the next triangle inside {z, ..., z+4}."""
    x, y, z = members
    window = list(range(z, z + 5))
    ones = [l for l in window if c.color(x, l) == 1 and c.color(y, l) == 1]
    twos = [l for l in window if c.color(x, l) == 2 and c.color(y, l) == 2]
    split = [l for l in window if c.color(x, l) != c.color(y, l)]

    parents: dict[tuple[int, int], tuple[tuple[int, int], MatchOrientation]] = {}

    def via_xy(p: int, q: int) -> None:
        # both p and q lie in one constant class: c({x,p}) = c({y,q}), min(p,q) >= z > y
        parents[(p, q)] = ((x, y), MatchOrientation((x, y), (p, q)))

    if not split:
        cls = ones if len(ones) >= len(twos) else twos
        chosen = tuple(cls[:3])
        for i in range(3):
            for j in range(i + 1, 3):
                via_xy(chosen[i], chosen[j])
        return chosen, parents

    if len(split) <= 2:
        target, cls = (1, ones) if len(ones) >= len(twos) else (2, twos)
        a1, a2 = cls[0], cls[1]
        s = split[0]
        chosen = tuple(sorted((a1, a2, s)))
        via_xy(a1, a2)
        for a in (a1, a2):
            o = x if c.color(x, s) == target else y
            o_star = y if o == x else x
            pair = (min(s, a), max(s, a))
            parents[pair] = ((x, y), MatchOrientation((o, o_star), (s, a)))
        return chosen, parents

    rest = [l for l in split if l != z]
    s1, s2 = rest[0], rest[1]
    extra = min(l for l in window if l not in (s1, s2, z))
    chosen = tuple(sorted((s1, s2, extra)))
    rest_set = set(rest)
    for i in range(3):
        for j in range(i + 1, 3):
            p, q = chosen[i], chosen[j]
            si, other = (p, q) if p in rest_set else (q, p)
            col = c.color(z, other)
            o = x if c.color(x, si) == col else y
            parents[(p, q)] = ((o, z), MatchOrientation((o, z), (si, other)))
    return chosen, parents


def build_binary_ladder(c: EdgeColoring, check: bool = False) -> LadderState:
    """Triangle ladder for 2-colorings; each step exposes at most 4 new indices."""
    if c.r != 2:
        raise ValueError(f"binary builder needs palette size 2, got {c.r}")
    n = c.n
    if n < 3:
        return LadderState([])
    state = LadderState([LadderLevel(1, (1, 2, 3))])
    members: tuple[int, ...] = (1, 2, 3)
    t = 1
    while members[-1] + 4 <= n:
        t += 1
        members, parents = _binary_step(c, members)  # type: ignore[arg-type]
        level = LadderLevel(t, members)
        level.parents = parents
        state.levels.append(level)
    if check:
        state.check(c)
    return state


def build_twin_binary(c: EdgeColoring, check: bool = False) -> TwinPair:
    """Twin of size >= floor(n/4) (n >= 4) in any 2-coloring."""
    if c.r != 2:
        raise ValueError(f"binary builder needs palette size 2, got {c.r}")
    state = build_binary_ladder(c, check=check)
    if state.depth == 0:
        return TwinPair((1,), (2,)) if c.n >= 2 else EMPTY_TWIN
    return state.reconstruct(c)
