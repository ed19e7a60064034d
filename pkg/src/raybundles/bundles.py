"""Ladder geometry inside a Cayley ball: convexity and ray-bundle growth.

The ball of the default presentation contains a distinguished ladder
through the identity: index n maps to the normal forms

    TOP_n = p^n,   MID_n = p^n s,   BOT_n = p^n s^2,

with TOP edges labelled p, rung halves labelled s, and BOT edges labelled
q (a step toward +infinity multiplies by q^-1).  This module locates that
subgraph, audits that it is convex (no geodesic between ladder vertices
leaves it), and computes truncated ray bundles toward a ladder end from
any ladder vertex.

A boundary point is operationalized by far targets on the two side lanes:
a vertex belongs to the bundle iff it lies on a certified geodesic from
the source to a lane target at the largest certified margin.  Every report
recomputes membership at the previous margin and hard-fails on any
disagreement (StabilizationError), and hard-fails if any member escapes
the ladder (ConfinementError); neither situation is ever patched over.

All computations are pure reads of an immutable ball and use only
certified distances; uncertified pairs are counted and surfaced, never
guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cayley import CayleyBall
from .errors import ConfinementError, MarginError, StabilizationError, StructuralLadderError
from .ladder import BOT, LEVELS, MID, NEG_END, POS_END, TOP, LadderCoord
from .words import apply_gen

_RELATOR_CHAIN = ("S", "S", "p", "s", "s", "q")  # trace of the defining relation


def _coord_word(c: LadderCoord) -> str:
    base = "p" * c.index if c.index >= 0 else "P" * (-c.index)
    if c.level == TOP:
        return base
    if c.level == MID:
        return base + "s"
    return base + "ss"


@dataclass
class EmbeddedLadder:
    """Ladder coordinates mapped to ball vertex ids (and back)."""

    to_vertex: dict[LadderCoord, int]
    to_coord: dict[int, LadderCoord]
    base: int  # vertex id of TOP_0, always the identity

    def __len__(self) -> int:
        return len(self.to_vertex)

    def ids(self) -> frozenset[int]:
        return frozenset(self.to_coord)

    def vertex(self, c: LadderCoord) -> int:
        return self.to_vertex[c]

    def coord_of(self, v: int) -> LadderCoord:
        return self.to_coord[v]

    def max_index(self, level: str, sign: int) -> int:
        """Largest m >= 0 such that (sign*m, level) is embedded."""
        m = 0
        while LadderCoord(sign * (m + 1), level) in self.to_vertex:
            m += 1
        return m


def locate_ladder(ball: CayleyBall) -> EmbeddedLadder:
    """Find every ladder coordinate present in the ball and verify its wiring.

    Checks the labelled adjacencies (p along TOP, s on rung halves, q
    toward -infinity along BOT) and that the defining relation closes up as
    a loop at every TOP vertex; any missing edge means the word engine and
    the ball disagree and raises StructuralLadderError.
    """
    to_vertex: dict[LadderCoord, int] = {}
    for n in range(-ball.radius, ball.radius + 1):
        for level in LEVELS:
            c = LadderCoord(n, level)
            v = ball.vertex_of(_coord_word(c))
            if v is not None:
                to_vertex[c] = v
    ladder = EmbeddedLadder(
        to_vertex=to_vertex,
        to_coord={v: c for c, v in to_vertex.items()},
        base=to_vertex[LadderCoord(0, TOP)],
    )
    if ladder.base != 0:
        raise StructuralLadderError("identity vertex is not id 0")

    def expect_edge(a: LadderCoord, b: LadderCoord, letter: str) -> None:
        va, vb = to_vertex.get(a), to_vertex.get(b)
        if va is None or vb is None:
            return
        if ball.neighbor(va, letter) != vb:
            raise StructuralLadderError(f"missing edge {a} --{letter}-> {b}")

    for c, v in to_vertex.items():
        n = c.index
        if c.level == TOP:
            expect_edge(c, LadderCoord(n + 1, TOP), "p")
            expect_edge(c, LadderCoord(n, MID), "s")
        elif c.level == MID:
            expect_edge(c, LadderCoord(n, BOT), "s")
        else:
            expect_edge(LadderCoord(n + 1, BOT), c, "q")

    for n in range(-ball.radius, ball.radius + 1):
        c = LadderCoord(n, TOP)
        if c not in to_vertex:
            continue
        w = _coord_word(c)
        for ch in _RELATOR_CHAIN:
            w = apply_gen(w, ch, ball.spec)
        if w != _coord_word(c):
            raise StructuralLadderError(f"relator loop does not close at {c}")
    return ladder


@dataclass
class ConvexityReport:
    """Exhaustive audit of geodesic-interval containment in the ladder."""

    pairs_checked: int
    violations: list[tuple[int, int, int]]
    uncertified_pairs: int

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "pairs_checked": self.pairs_checked,
            "uncertified_pairs": self.uncertified_pairs,
            "violations": [list(v) for v in self.violations],
        }


def _source_cap(ball: CayleyBall, u: int) -> int:
    # Any certified pair (u, v) has d <= R - base_dist(u) and, since
    # base_dist(v) >= d - base_dist(u), also 2d <= R + base_dist(u).
    bd = ball.base_dist[u]
    return min(ball.radius - bd, (ball.radius + bd) // 2)


def check_convexity(ball: CayleyBall, ladder: EmbeddedLadder) -> ConvexityReport:
    """Audit every certified ladder pair: does interval(u, v) stay in the ladder?

    Exhaustive over certified pairs (the ladder meets the ball in O(R)
    vertices); uncertified pairs are skipped and counted.  Any interval
    member outside the ladder is recorded as a violation (u, v, w).
    """
    ids = sorted(ladder.to_coord)
    maps = {u: ball.bfs(u, _source_cap(ball, u)) for u in ids}
    bd = ball.base_dist
    radius = ball.radius
    ladder_ids = set(ids)
    violations: list[tuple[int, int, int]] = []
    pairs_checked = 0
    uncertified = 0
    for a, u in enumerate(ids):
        du = maps[u]
        for v in ids[a + 1 :]:
            d = du.get(v)
            if d is None or d > radius - max(bd[u], bd[v]):
                uncertified += 1
                continue
            pairs_checked += 1
            dv = maps[v]
            small, other = (du, dv) if len(du) <= len(dv) else (dv, du)
            for w, dw in small.items():
                if dw <= d and other.get(w, d + 1) + dw == d and w not in ladder_ids:
                    violations.append((u, v, w))
    return ConvexityReport(pairs_checked, violations, uncertified)


@dataclass
class RayBundleReport:
    """Truncated ray bundle from one source toward one ladder end.

    ``per_radius[k]`` lists the members within distance k of the source,
    for every k up to k_max; the sets are nested by construction.  The
    full union of certified target intervals is kept for symmetric
    difference computations, whose per-radius restriction keeps them
    inside the two-margin-stable region.
    """

    source: int
    source_coord: LadderCoord
    end: int
    margins: dict[str, int]
    stabilization_margin: int
    k_max: int
    per_radius: tuple[tuple[int, ...], ...]
    bundle_full: frozenset[int] = field(repr=False)
    dist_from_source: dict[int, int] = field(repr=False)

    @property
    def bundle(self) -> tuple[int, ...]:
        return self.per_radius[self.k_max]

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "source_coord": [self.source_coord.index, self.source_coord.level],
            "end": "+" if self.end == POS_END else "-",
            "margins": dict(sorted(self.margins.items())),
            "stabilization_margin": self.stabilization_margin,
            "k_max": self.k_max,
            "bundle": list(self.bundle),
            "per_radius": [list(s) for s in self.per_radius],
        }


def _interval_members(
    ball: CayleyBall, du: dict[int, int], target: int, d_xt: int
) -> set[int]:
    dt = ball.bfs(target, d_xt)
    return {w for w, a in dt.items() if a <= d_xt and du.get(w, d_xt + 1) + a == d_xt}


def truncated_ray_bundle(
    ball: CayleyBall, ladder: EmbeddedLadder, x: int, end: int
) -> RayBundleReport:
    """Bundle of vertices on certified geodesics from x toward a ladder end.

    For each side lane the target sits at the largest certified margin; the
    bundle is the union of the certified intervals from x to the targets.
    Membership within radius k_max is recomputed with both lane margins
    lowered by one and must agree (StabilizationError otherwise), and every
    member must be a ladder vertex (ConfinementError otherwise).
    """
    if end not in (POS_END, NEG_END):
        raise ValueError(f"end must be +1 or -1, got {end!r}")
    if x not in ladder.to_coord:
        raise ValueError(f"vertex {x} is not on the embedded ladder")
    xc = ladder.coord_of(x)
    bd = ball.base_dist
    radius = ball.radius
    du = ball.bfs(x, _source_cap(ball, x))

    ahead_min = end * xc.index + 1  # targets must lie strictly toward the end
    margins: dict[str, int] = {}
    for lane in (TOP, BOT):
        best = None
        m = ladder.max_index(lane, end)
        while m >= ahead_min:
            t = ladder.to_vertex.get(LadderCoord(end * m, lane))
            if t is not None:
                d = du.get(t)
                if d is not None and d <= radius - max(bd[x], bd[t]):
                    best = m
                    break
            m -= 1
        if best is None or best < ahead_min + 1:
            raise MarginError(
                f"no certified {lane} target toward end {end:+d} from {xc} "
                f"at radius {radius}; enlarge the ball"
            )
        margins[lane] = best

    def bundle_at(offset: int) -> frozenset[int]:
        members: set[int] = set()
        for lane, m in margins.items():
            t = ladder.vertex(LadderCoord(end * (m - offset), lane))
            d = du.get(t)
            if d is None or d > radius - max(bd[x], bd[t]):
                raise MarginError(
                    f"target {lane} at margin {m - offset} not certified from {xc}"
                )
            members |= _interval_members(ball, du, t, d)
        return frozenset(members)

    full = bundle_at(0)
    shifted = bundle_at(1)
    k_max = min(margins.values()) - end * xc.index
    if k_max < 1:
        raise MarginError(f"usable bundle radius from {xc} is empty at radius {radius}")

    per_radius = []
    for k in range(k_max + 1):
        now = frozenset(w for w in full if du.get(w, k + 1) <= k)
        before = frozenset(w for w in shifted if du.get(w, k + 1) <= k)
        if now != before:
            raise StabilizationError(
                f"bundle from {xc} toward {end:+d} changed between margins "
                f"{margins} and one less within radius {k}"
            )
        per_radius.append(tuple(sorted(now)))

    stray = full - ladder.ids()
    if stray:
        raise ConfinementError(
            f"bundle members {sorted(stray)[:8]} from {xc} leave the ladder"
        )
    return RayBundleReport(
        source=x,
        source_coord=xc,
        end=end,
        margins=margins,
        stabilization_margin=min(margins.values()),
        k_max=k_max,
        per_radius=tuple(per_radius),
        bundle_full=full,
        dist_from_source=du,
    )


@dataclass
class GrowthReport:
    """Per-radius symmetric-difference counts of two ray bundles."""

    x_report: RayBundleReport
    y_report: RayBundleReport
    k_max: int
    counts: list[tuple[int, int]]
    symdiff: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "k_max": self.k_max,
            "symdiff_counts": [list(c) for c in self.counts],
            "symdiff": list(self.symdiff),
        }


def symdiff_growth(
    ball: CayleyBall,
    ladder: EmbeddedLadder,
    x: int,
    y: int,
    end: int,
    x_report: Optional[RayBundleReport] = None,
    y_report: Optional[RayBundleReport] = None,
) -> GrowthReport:
    """Table k -> |(bundle(x) ^ bundle(y)) within distance k of x|.

    The difference is taken between the full margin bundles (so a vertex
    missing from one side only because it sits past that side's per-radius
    cut cannot masquerade as divergence) and then restricted to radii where
    both reports are margin-stable; counts are monotone in k.
    """
    rx = x_report or truncated_ray_bundle(ball, ladder, x, end)
    ry = y_report or truncated_ray_bundle(ball, ladder, y, end)
    k_max = min(rx.k_max, ry.k_max)
    diff = rx.bundle_full ^ ry.bundle_full
    du = rx.dist_from_source
    counts = []
    members: set[int] = set()
    for k in range(k_max + 1):
        members = {w for w in diff if du.get(w, k + 1) <= k}
        counts.append((k, len(members)))
    return GrowthReport(
        x_report=rx,
        y_report=ry,
        k_max=k_max,
        counts=counts,
        symdiff=tuple(sorted(members)),
    )
