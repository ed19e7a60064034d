"""Independent brute-force oracles used to pin expected values in tests.

Everything here recomputes results from definitions (naive reduction to a
fixpoint, dict-based BFS over explicitly constructed adjacency) without
going through the package's ball or closed-form code paths, so agreement
is a genuine two-route check.
"""

from collections import deque
from itertools import combinations

from raybundles.ladder import BOT, LEVELS, MID, TOP, LadderCoord
from raybundles.words import multiply

_INV = {"p": "P", "P": "p", "s": "S", "S": "s"}


def naive_reduce(word):
    """Free reduction by repeated single-pass cancellation to a fixpoint."""
    current = list(word)
    while True:
        for i in range(len(current) - 1):
            if _INV[current[i]] == current[i + 1]:
                del current[i : i + 2]
                break
        else:
            return "".join(current)


def naive_ball(spec, radius):
    """(dist, adj) of the radius-R ball, built by plain word-level BFS.

    dist maps normal form -> distance from the identity; adj maps normal
    form -> {letter: neighbor normal form} restricted to the ball.
    """
    letters = spec.gen_letters()
    dist = {"": 0}
    frontier = [""]
    for d in range(1, radius + 1):
        nxt = []
        for w in frontier:
            for ch in letters:
                w2 = multiply(w, spec.letter_image(ch))
                if w2 not in dist:
                    dist[w2] = d
                    nxt.append(w2)
        frontier = nxt
    adj = {}
    for w in dist:
        adj[w] = {}
        for ch in letters:
            w2 = multiply(w, spec.letter_image(ch))
            if w2 in dist:
                adj[w][ch] = w2
    return dist, adj


def bfs_all(adj, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v].values() if isinstance(adj[v], dict) else adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def naive_interval(adj, u, v):
    du = bfs_all(adj, u)
    dv = bfs_all(adj, v)
    d = du[v]
    return frozenset(w for w in du if du[w] + dv.get(w, d + 1) == d)


def naive_geodesics(adj, u, v):
    dv = bfs_all(adj, v)
    paths = []

    def extend(path):
        last = path[-1]
        if last == v:
            paths.append(tuple(path))
            return
        nbrs = adj[last].values() if isinstance(adj[last], dict) else adj[last]
        for w in nbrs:
            if dv.get(w, dv[u] + 1) == dv[last] - 1:
                extend(path + [w])

    extend([u])
    return paths


def ladder_adjacency(truncation, cubulated):
    """Truncated-ladder adjacency written out directly from the edge rules."""
    adj = {}
    rng = range(-truncation, truncation + 1)
    for i in rng:
        for level in LEVELS:
            adj[LadderCoord(i, level)] = set()
    for i in rng:
        if i + 1 <= truncation:
            adj[LadderCoord(i, TOP)].add(LadderCoord(i + 1, TOP))
            adj[LadderCoord(i + 1, TOP)].add(LadderCoord(i, TOP))
            adj[LadderCoord(i, BOT)].add(LadderCoord(i + 1, BOT))
            adj[LadderCoord(i + 1, BOT)].add(LadderCoord(i, BOT))
            if cubulated:
                adj[LadderCoord(i, MID)].add(LadderCoord(i + 1, MID))
                adj[LadderCoord(i + 1, MID)].add(LadderCoord(i, MID))
        adj[LadderCoord(i, TOP)].add(LadderCoord(i, MID))
        adj[LadderCoord(i, MID)].add(LadderCoord(i, TOP))
        adj[LadderCoord(i, MID)].add(LadderCoord(i, BOT))
        adj[LadderCoord(i, BOT)].add(LadderCoord(i, MID))
    return adj


def ladder_bundle_oracle(truncation, cubulated, x, end, window):
    """Bundle membership via BFS distances to margin targets (two margins)."""
    adj = ladder_adjacency(truncation, cubulated)
    dx = bfs_all(adj, x)
    lanes = (TOP, MID, BOT) if cubulated else (TOP, BOT)
    results = []
    for margin in (truncation - 1, truncation):
        members = set()
        for lane in lanes:
            t = LadderCoord(end * margin, lane)
            dt = bfs_all(adj, t)
            for i in range(window[0], window[1] + 1):
                for level in LEVELS:
                    w = LadderCoord(i, level)
                    if dx[w] + dt[w] == dx[t]:
                        members.add(w)
        results.append(members)
    assert results[0] == results[1], "oracle bundle unstable between margins"
    return frozenset(results[0])


def ladder_slim_oracle(truncation, cubulated):
    """Exhaustive slim constant over the in-margin core, all via BFS."""
    adj = ladder_adjacency(truncation, cubulated)
    core = [c for c in adj if abs(c.index) <= truncation - 2]
    core.sort()
    dist = {c: bfs_all(adj, c) for c in adj}

    def interval(u, v):
        d = dist[u][v]
        return [w for w in adj if dist[u][w] + dist[w][v] == d]

    best = 0
    for u, v, w in combinations(core, 3):
        sides = [interval(u, v), interval(v, w), interval(w, u)]
        for i in range(3):
            other = set(sides[(i + 1) % 3]) | set(sides[(i + 2) % 3])
            for x in sides[i]:
                nearest = min(dist[x][y] for y in other)
                if nearest > best:
                    best = nearest
    return best
