"""Empirical slim-triangle constants on finite graphs built by this package.

For a triple (u, v, w) whose pairwise distances are trustworthy, every
vertex of the full geodesic interval between one pair must lie within
delta of the union of the other two intervals; the estimate over a sample
of triples is the maximum such delta.  Using whole intervals (the union of
all geodesics) makes the estimate independent of geodesic choices: it is
an upper bound over geodesic selections for the sampled triples and a
lower bound for the graph's true constant over all triples.

Triples are evaluated symmetrically (each of the three sides against the
other two), so permuting a triple never changes its contribution.

Two sample spaces are provided: Cayley balls (triples valid when all three
pairwise distances are certified) and truncated ladders (triples valid
when all indices keep margin 2 from the truncation).  Sampling is either
exhaustive over valid triples or seeded-random, and random sequences are
prefix-stable so a larger count extends a smaller one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .cayley import CayleyBall
from .errors import NotCertifiedError, TruncationError
from .ladder import LEVELS, LadderCoord, LadderGraph


@dataclass(frozen=True)
class TriangleSample:
    """Vertex triples plus the way they were drawn (for the report line)."""

    triples: tuple[tuple[int, int, int], ...]
    mode: str  # "exhaustive" or "random"
    seed: Optional[int] = None

    def describe(self) -> str:
        if self.mode == "random":
            return f"mode=random seed={self.seed}"
        return "mode=exhaustive seed=-"


class BallSpace:
    """Slim-triangle sample space over a Cayley ball (vertex-id triples)."""

    def __init__(self, ball: CayleyBall):
        self.ball = ball

    def _cap(self, u: int) -> int:
        bd = self.ball.base_dist[u]
        return min(self.ball.radius - bd, (self.ball.radius + bd) // 2)

    def _certified(self, du: dict[int, int], u: int, v: int) -> Optional[int]:
        d = du.get(v)
        bound = self.ball.radius - max(self.ball.base_dist[u], self.ball.base_dist[v])
        return d if d is not None and d <= bound else None

    def check_triple(self, t: Sequence[int]) -> None:
        for a, b in combinations(t, 2):
            if not self.ball.distance(a, b).certified:
                raise NotCertifiedError(f"pair ({a}, {b}) of triple {tuple(t)} not certified")

    def exhaustive_sample(self) -> TriangleSample:
        """Every vertex triple whose three pairwise distances are certified."""
        ball = self.ball
        partners: list[set[int]] = []
        for u in range(ball.vertex_count):
            du = ball.bfs(u, self._cap(u))
            partners.append(
                {v for v in du if v != u and self._certified(du, u, v) is not None}
            )
        triples = []
        for u in range(ball.vertex_count):
            for v in sorted(p for p in partners[u] if p > u):
                common = partners[u] & partners[v]
                triples.extend((u, v, w) for w in sorted(c for c in common if c > v))
        return TriangleSample(tuple(triples), "exhaustive")

    def random_sample(self, count: int, seed: int) -> TriangleSample:
        """Seeded triples from the radius-R/3 core, where certification is guaranteed.

        Within base distance m = R // 3 every pairwise distance is at most
        2m <= R - m, so the sample invariant holds by construction.
        """
        if count < 1:
            raise ValueError(f"count must be positive, got {count}")
        ball = self.ball
        m = ball.radius // 3
        if m < 1:
            raise ValueError("radius too small for a guaranteed-certified core")
        pool = [v for v in range(ball.vertex_count) if ball.base_dist[v] <= m]
        rng = random.Random(seed)
        triples = []
        while len(triples) < count:
            t = tuple(rng.sample(pool, 3))
            triples.append(t)
        return TriangleSample(tuple(triples), "random", seed)

    def interval(self, u: int, v: int) -> frozenset[int]:
        return self.ball.interval(u, v)

    def set_distance(self, points: Iterable[int], targets: frozenset[int]) -> int:
        """max over points of the in-ball distance to the target set."""
        points = set(points)
        if points <= targets:
            return 0
        dist = {t: 0 for t in targets}
        frontier = list(targets)
        d = 0
        worst = 0
        pending = points - targets
        while pending:
            d += 1
            nxt = []
            for v in frontier:
                for _, w in self.ball.neighbors(v):
                    if w not in dist:
                        dist[w] = d
                        nxt.append(w)
                        if w in pending:
                            pending.discard(w)
                            worst = d
            if not nxt:
                raise NotCertifiedError("target set unreachable inside the ball")
            frontier = nxt
        return worst


class LadderSpace:
    """Slim-triangle sample space over a truncated ladder.

    Vertices are indexed 0..3*(2N+1)-1 in (index, level) order; triples are
    valid when all coordinates keep margin 2 from the truncation, where the
    closed-form distances agree with the truncated graph.
    """

    def __init__(self, graph: LadderGraph):
        self.graph = graph
        self.coords: list[LadderCoord] = list(graph.vertices())
        self.ids = {c: i for i, c in enumerate(self.coords)}
        n = len(self.coords)
        dist = self.graph._dist
        self._dist_rows = [
            [dist(self.coords[a], self.coords[b]) for b in range(n)] for a in range(n)
        ]

    def _in_margin(self, vid: int) -> bool:
        return abs(self.coords[vid].index) <= self.graph.truncation - 2

    def check_triple(self, t: Sequence[int]) -> None:
        for vid in t:
            if not self._in_margin(vid):
                raise TruncationError(f"{self.coords[vid]} too close to the truncation")

    def _core_ids(self) -> list[int]:
        return [i for i in range(len(self.coords)) if self._in_margin(i)]

    def exhaustive_sample(self) -> TriangleSample:
        return TriangleSample(tuple(combinations(self._core_ids(), 3)), "exhaustive")

    def random_sample(self, count: int, seed: int) -> TriangleSample:
        if count < 1:
            raise ValueError(f"count must be positive, got {count}")
        pool = self._core_ids()
        rng = random.Random(seed)
        triples = []
        while len(triples) < count:
            triples.append(tuple(rng.sample(pool, 3)))
        return TriangleSample(tuple(triples), "random", seed)

    def interval(self, u: int, v: int) -> frozenset[int]:
        cu, cv = self.coords[u], self.coords[v]
        lo = min(cu.index, cv.index)
        hi = max(cu.index, cv.index)
        d = self._dist_rows[u][v]
        members = []
        for i in range(lo, hi + 1):  # ladder geodesics never overshoot their endpoints
            for level in LEVELS:
                w = self.ids[LadderCoord(i, level)]
                if self._dist_rows[u][w] + self._dist_rows[w][v] == d:
                    members.append(w)
        return frozenset(members)

    def set_distance(self, points: Iterable[int], targets: frozenset[int]) -> int:
        rows = self._dist_rows
        tlist = list(targets)
        worst = 0
        for x in points:
            row = rows[x]
            nearest = min(map(row.__getitem__, tlist))
            if nearest > worst:
                worst = nearest
        return worst


def triple_delta(space, u: int, v: int, w: int) -> int:
    """Slimness of one triple: worst distance from any side to the other two."""
    iu_v = space.interval(u, v)
    iv_w = space.interval(v, w)
    iw_u = space.interval(w, u)
    return max(
        space.set_distance(iu_v, iv_w | iw_u),
        space.set_distance(iv_w, iw_u | iu_v),
        space.set_distance(iw_u, iu_v | iv_w),
    )


def slim_constant(space, sample: TriangleSample) -> int:
    """Largest slimness over the sampled triples (0 for an empty sample)."""
    best = 0
    for u, v, w in sample.triples:
        space.check_triple((u, v, w))
        if len({u, v, w}) < 3:
            continue  # degenerate triples contribute 0
        d = triple_delta(space, u, v, w)
        if d > best:
            best = d
    return best


def report_line(delta_hat: int, sample: TriangleSample) -> str:
    return f"delta_hat={delta_hat} triples={len(sample.triples)} {sample.describe()}"
