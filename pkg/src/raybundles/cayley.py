"""Finite balls of a labelled Cayley graph, with certified distances.

A ball of radius R holds every group element at word-metric distance <= R
from the identity, discovered by breadth-first search in a fixed generator
order so that vertex ids (and therefore every downstream report) are
deterministic.  Normal-form strings are interned in a dict, which makes
element equality a single hash lookup during construction.

Distances inside a truncated ball are only trusted when no shorter path
could leave the ball.  The certification rule is deliberately
conservative: d_ball(u, v) is certified iff

    d_ball(u, v) <= R - max(base_dist(u), base_dist(v)),

since any path leaving the ball must reach past radius R and back, which
is strictly longer than the certified value.  Certified values therefore
equal distances in the infinite Cayley graph, and every geodesic between
the endpoints stays inside the ball, so betweenness sets computed in-ball
are complete.

The ball is immutable after construction; queries allocate only local
scratch and may run concurrently.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import IO, Iterator, Optional

from .errors import NotCertifiedError, VertexCapExceeded
from .words import GAMMA, PresentationSpec

DEFAULT_RADIUS = 10
DEFAULT_VERTEX_CAP = 50_000_000

_INV = {"p": "P", "P": "p", "s": "S", "S": "s"}


class DistanceCert:
    """A distance that either is certified exact or carries no number at all.

    Accessing ``value`` on an uncertified result raises NotCertifiedError,
    so a truncation artifact can never silently flow into a report.
    """

    __slots__ = ("_value",)

    def __init__(self, value: Optional[int]):
        self._value = value

    @classmethod
    def not_certified(cls) -> "DistanceCert":
        return cls(None)

    @property
    def certified(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> int:
        if self._value is None:
            raise NotCertifiedError("distance not certified at this radius")
        return self._value

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DistanceCert) and self._value == other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __repr__(self) -> str:
        return f"DistanceCert({self._value!r})" if self.certified else "DistanceCert(NOT_CERTIFIED)"


@dataclass
class GeodesicPaths:
    """Result of geodesic enumeration; ``truncated`` marks a hit cap."""

    paths: tuple[tuple[int, ...], ...]
    truncated: bool


class CayleyBall:
    """Radius-R ball around the identity, with labelled adjacency.

    Attributes:
        spec: the presentation the ball was built from.
        radius: certification radius R.
        words: vertex id -> normal form (id 0 is the identity).
        index: normal form -> vertex id (the interning table).
        base_dist: vertex id -> distance from the identity.
        gen_letters: generator letters in slot order, e.g. (p, P, q, Q, s, S).
        adj: flat adjacency, adj[k*v + slot] = neighbor id or < 0 if the
            neighbor falls outside the ball.
    """

    def __init__(
        self,
        spec: PresentationSpec,
        radius: int,
        words: list[str],
        index: dict[str, int],
        adj: array,
        base_dist: bytearray,
    ):
        self.spec = spec
        self.radius = radius
        self.words = words
        self.index = index
        self.adj = adj
        self.base_dist = base_dist
        self.gen_letters = spec.gen_letters()
        self.degree = len(self.gen_letters)

    def __len__(self) -> int:
        return len(self.words)

    @property
    def vertex_count(self) -> int:
        return len(self.words)

    @property
    def edge_count(self) -> int:
        return sum(1 for w in self.adj if w >= 0) // 2

    def word_of(self, v: int) -> str:
        return self.words[v]

    def vertex_of(self, word: str) -> Optional[int]:
        return self.index.get(word)

    def neighbor(self, v: int, letter: str) -> Optional[int]:
        w = self.adj[self.degree * v + self.gen_letters.index(letter)]
        return w if w >= 0 else None

    def neighbors(self, v: int) -> Iterator[tuple[str, int]]:
        base = self.degree * v
        for slot, letter in enumerate(self.gen_letters):
            w = self.adj[base + slot]
            if w >= 0:
                yield letter, w

    # -- breadth-first search ------------------------------------------------

    def bfs(self, source: int, depth_cap: int, stop_at: Optional[int] = None) -> dict[int, int]:
        """Distances from ``source`` out to ``depth_cap`` inside the ball."""
        dist = {source: 0}
        if depth_cap <= 0 or source == stop_at:
            return dist
        adj = self.adj
        k = self.degree
        frontier = [source]
        d = 0
        while frontier and d < depth_cap:
            d += 1
            nxt = []
            for v in frontier:
                base = k * v
                for slot in range(k):
                    w = adj[base + slot]
                    if w >= 0 and w not in dist:
                        dist[w] = d
                        if w == stop_at:
                            return dist
                        nxt.append(w)
            frontier = nxt
        return dist

    def certification_bound(self, u: int, v: int) -> int:
        """Largest distance the conservative rule can certify for this pair."""
        return self.radius - max(self.base_dist[u], self.base_dist[v])

    def distance(self, u: int, v: int) -> DistanceCert:
        """Certified distance, or NOT_CERTIFIED when the ball cannot prove it."""
        if u == v:
            return DistanceCert(0)
        cap = self.certification_bound(u, v)
        if cap < 1:
            return DistanceCert.not_certified()
        dist = self.bfs(u, cap, stop_at=v)
        d = dist.get(v)
        return DistanceCert(d) if d is not None else DistanceCert.not_certified()

    def interval(self, u: int, v: int) -> frozenset[int]:
        """All vertices on some geodesic from u to v (certified pairs only).

        Certification guarantees no geodesic leaves the ball, and the
        triangle inequality forces the two in-ball BFS values of any member
        to equal its true distances, so the returned set is exact.
        """
        d = self.distance(u, v).value
        du = self.bfs(u, d)
        dv = self.bfs(v, d)
        if len(dv) < len(du):
            du, dv = dv, du
        return frozenset(w for w, a in du.items() if a + dv.get(w, d + 1) == d)

    def enumerate_geodesics(self, u: int, v: int, cap: int = 100_000) -> GeodesicPaths:
        """All geodesic vertex paths from u to v, in generator order, up to cap."""
        if cap < 1:
            raise ValueError(f"cap must be positive, got {cap}")
        d = self.distance(u, v).value
        dv = self.bfs(v, d)
        adj = self.adj
        k = self.degree
        paths: list[tuple[int, ...]] = []
        truncated = False
        stack: list[tuple[int, ...]] = [(u,)]
        while stack:
            path = stack.pop()
            last = path[-1]
            if last == v:
                if len(paths) == cap:
                    truncated = True
                    break
                paths.append(path)
                continue
            remaining = dv[last]
            base = k * last
            # Reversed slot order: the stack then pops extensions in
            # generator order, making the output order deterministic.
            for slot in range(k - 1, -1, -1):
                w = adj[base + slot]
                if w >= 0 and dv.get(w, d + 1) == remaining - 1:
                    stack.append(path + (w,))
        return GeodesicPaths(paths=tuple(paths), truncated=truncated)


def build_ball(
    spec: PresentationSpec = GAMMA,
    radius: int = DEFAULT_RADIUS,
    cap: int = DEFAULT_VERTEX_CAP,
) -> CayleyBall:
    """Breadth-first closure of the identity out to the given radius.

    Deterministic: vertices are numbered in BFS discovery order, expanding
    each vertex's generator slots in the fixed order given by the
    presentation (positive then negative letter per generator).  Raises
    VertexCapExceeded as soon as the vertex count would pass ``cap``.
    """
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    letters = spec.gen_letters()
    k = len(letters)
    images = [spec.letter_image(ch) for ch in letters]
    # Slot of the inverse letter: letter pairs sit in adjacent slots.
    inv_slot = [slot ^ 1 for slot in range(k)]

    words: list[str] = [""]
    index: dict[str, int] = {"": 0}
    base_dist = bytearray([0])
    adj = array("i", [-1] * k)
    if cap < 1:
        raise VertexCapExceeded("vertex cap must allow at least the identity")

    single = [im if len(im) == 1 else None for im in images]
    inv_char = [_INV[im] if im is not None else None for im in single]

    v = 0
    while v < len(words):
        if base_dist[v] >= radius:
            break  # ids are in BFS order; boundary vertices spawn nothing
        w = words[v]
        vbase = k * v
        d_new = base_dist[v] + 1
        for slot in range(k):
            if adj[vbase + slot] >= 0:
                continue  # reverse edge already recorded by an earlier vertex
            ch = single[slot]
            if ch is not None:
                w2 = w[:-1] if w and w[-1] == inv_char[slot] else w + ch
            else:
                img = images[slot]
                i = len(w)
                j = 0
                nimg = len(img)
                while i > 0 and j < nimg and w[i - 1] == _INV[img[j]]:
                    i -= 1
                    j += 1
                w2 = w[:i] + img[j:]
            t = index.get(w2)
            if t is None:
                t = len(words)
                if t >= cap:
                    raise VertexCapExceeded(
                        f"radius {radius} needs more than {cap} vertices"
                    )
                index[w2] = t
                words.append(w2)
                base_dist.append(d_new)
                adj.extend([-1] * k)
            adj[vbase + slot] = t
            adj[k * t + inv_slot[slot]] = v
        v += 1
    return CayleyBall(spec, radius, words, index, adj, base_dist)


def write_edge_list(ball: CayleyBall, stream: IO[str]) -> int:
    """Write ``radius=R vertices=N`` then one ``src dst label`` line per edge.

    Each unordered edge appears once, labelled by the generator letter read
    from the smaller vertex id (the opposite label is its inverse).
    Returns the number of edge lines written.
    """
    stream.write(f"radius={ball.radius} vertices={ball.vertex_count}\n")
    adj = ball.adj
    k = ball.degree
    letters = ball.gen_letters
    n = 0
    for v in range(ball.vertex_count):
        base = k * v
        for slot in range(k):
            w = adj[base + slot]
            if w > v:
                stream.write(f"{v} {w} {letters[slot]}\n")
                n += 1
    return n
