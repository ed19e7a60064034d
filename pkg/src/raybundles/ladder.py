"""Exact model of the bad ladder and of its cubulated re-cellulation.

The ladder has two bi-infinite sides with a vertex at every integer index
(levels TOP and BOT, consecutive indices joined by unit edges) and one
rung per index: the unit path TOP -- MID -- BOT, so each rung has length 2
with a midpoint vertex.  The cubulated variant additionally joins
consecutive midpoints, splitting every hexagonal cell into two unit
squares.

Distances have closed forms (cross-validated against BFS in the tests),
so the set of vertices lying on some geodesic ray from a vertex toward
either end can be evaluated exactly on any index window: a vertex belongs
to the bundle iff it lies on a geodesic to a far target on some lane
(TOP, BOT, and MID when cubulated), and membership must agree for two
consecutive target margins, which is asserted on every call.

Only truncation bookkeeping is stateful-looking; all functions are pure
and :class:`LadderGraph` is immutable, so concurrent use is unrestricted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import MarginError, StabilizationError, TruncationError

TOP = "TOP"
MID = "MID"
BOT = "BOT"
LEVELS = (TOP, MID, BOT)
SIDES = (TOP, BOT)

#: The two ends of the ladder, as index signs.
POS_END = 1
NEG_END = -1


class LadderCoord(NamedTuple):
    """Position in the ladder: integer rung index plus level."""

    index: int
    level: str


def coord(index: int, level: str) -> LadderCoord:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}, got {level!r}")
    return LadderCoord(int(index), level)


@dataclass(frozen=True)
class LadderGraph:
    """Ladder truncated to indices in [-truncation, truncation]."""

    truncation: int
    cubulated: bool = False

    def __post_init__(self) -> None:
        if self.truncation < 1:
            raise ValueError(f"truncation must be >= 1, got {self.truncation}")

    def contains(self, c: LadderCoord) -> bool:
        return c.level in LEVELS and abs(c.index) <= self.truncation

    def check(self, c: LadderCoord) -> None:
        if not self.contains(c):
            raise TruncationError(f"{c} outside truncation {self.truncation}")

    def vertices(self) -> Iterator[LadderCoord]:
        for i in range(-self.truncation, self.truncation + 1):
            for level in LEVELS:
                yield LadderCoord(i, level)

    def neighbors(self, c: LadderCoord) -> tuple[LadderCoord, ...]:
        self.check(c)
        out = []
        if c.level in SIDES:
            out.append(LadderCoord(c.index, MID))
            steps = (-1, 1)
        else:
            out.append(LadderCoord(c.index, TOP))
            out.append(LadderCoord(c.index, BOT))
            steps = (-1, 1) if self.cubulated else ()
        for step in steps:
            nb = LadderCoord(c.index + step, c.level)
            if self.contains(nb):
                out.append(nb)
        return tuple(out)

    def distance(self, u: LadderCoord, v: LadderCoord) -> int:
        self.check(u)
        self.check(v)
        return self._dist(u, v)

    def _dist(self, u: LadderCoord, v: LadderCoord) -> int:
        # Closed form for the infinite ladder; truncation never shortens
        # geodesics between in-range vertices because no geodesic overshoots
        # the index range of its endpoints.
        k = abs(u.index - v.index)
        if u.level == v.level:
            if u.level != MID or self.cubulated:
                return k
            return 0 if k == 0 else k + 2  # midpoints connect only through a side
        if MID in (u.level, v.level):
            return k + 1
        return k + 2  # opposite sides: cross one full rung


def ladder_distance(graph: LadderGraph, u: LadderCoord, v: LadderCoord) -> int:
    """Graph distance between two in-truncation ladder vertices."""
    return graph.distance(u, v)


def _lanes(graph: LadderGraph) -> tuple[str, ...]:
    # Every geodesic ray eventually runs along one of these levels; the
    # midline only becomes a lane once midpoint edges exist.
    return (TOP, MID, BOT) if graph.cubulated else (TOP, BOT)


def _validate_window(graph: LadderGraph, window: tuple[int, int]) -> tuple[int, int]:
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise ValueError(f"empty window {window}")
    if max(abs(lo), abs(hi)) > graph.truncation - 2:
        raise MarginError(
            f"window {window} needs margin >= 2 below truncation {graph.truncation}"
        )
    return lo, hi


def ray_bundle_exact(
    graph: LadderGraph,
    x: LadderCoord,
    end: int,
    window: tuple[int, int],
) -> frozenset[LadderCoord]:
    """Vertices in the window lying on some geodesic ray from x to an end.

    A window vertex w is a member iff it lies on a geodesic from x to a
    target on some lane at the truncation margin; the computation is run
    for two consecutive margins and aborts with StabilizationError if they
    disagree, so a returned set is never a boundary artifact.
    """
    if end not in (POS_END, NEG_END):
        raise ValueError(f"end must be +1 or -1, got {end!r}")
    graph.check(x)
    lo, hi = _validate_window(graph, window)
    n = graph.truncation
    if end * x.index > n - 2:
        raise MarginError(f"source {x} too close to the {end:+d} end for truncation {n}")

    lanes = _lanes(graph)
    dist = graph._dist

    def bundle_at(margin: int) -> set[LadderCoord]:
        targets = [LadderCoord(end * margin, lane) for lane in lanes]
        d_to = [(t, dist(x, t)) for t in targets]
        members = set()
        for i in range(lo, hi + 1):
            for level in LEVELS:
                w = LadderCoord(i, level)
                for t, dxt in d_to:
                    if dist(x, w) + dist(w, t) == dxt:
                        members.add(w)
                        break
        return members

    first, second = bundle_at(n - 1), bundle_at(n)
    if first != second:
        raise StabilizationError(
            f"bundle membership changed between margins {n - 1} and {n} "
            f"for x={x}, end={end:+d}, window={window}"
        )
    return frozenset(first)


def sym_diff_exact(
    graph: LadderGraph,
    x: LadderCoord,
    y: LadderCoord,
    end: int,
    window: tuple[int, int],
) -> frozenset[LadderCoord]:
    """Symmetric difference of the two ray bundles, restricted to the window."""
    bx = ray_bundle_exact(graph, x, end, window)
    by = ray_bundle_exact(graph, y, end, window)
    return bx ^ by


def sym_diff_window_counts(
    graph: LadderGraph,
    x: LadderCoord,
    y: LadderCoord,
    end: int,
    n_max: int,
) -> list[tuple[int, int]]:
    """Sizes of the symmetric difference over the growing windows [0, n].

    Returns (n, size) for 1 <= n <= n_max, computed from a single bundle
    evaluation: membership depends only on the vertex, so restricting the
    [0, n_max] result to [0, n] equals the [0, n] computation.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    diff = sym_diff_exact(graph, x, y, end, (0, n_max))
    per_index = [0] * (n_max + 1)
    for c in diff:
        per_index[abs(c.index)] += 1
    counts = []
    running = per_index[0]
    for n in range(1, n_max + 1):
        running += per_index[n]
        counts.append((n, running))
    return counts


def bundle_rows(
    graph: LadderGraph,
    x: LadderCoord,
    y: LadderCoord,
    end: int,
    window: tuple[int, int],
) -> list[tuple[int, str, int, int, int]]:
    """Per-vertex membership table: (index, level, in_bundle_x, in_bundle_y, in_symdiff)."""
    bx = ray_bundle_exact(graph, x, end, window)
    by = ray_bundle_exact(graph, y, end, window)
    lo, hi = _validate_window(graph, window)
    rows = []
    for i in range(lo, hi + 1):
        for level in LEVELS:
            c = LadderCoord(i, level)
            in_x = int(c in bx)
            in_y = int(c in by)
            rows.append((i, level, in_x, in_y, int(in_x != in_y)))
    return rows
