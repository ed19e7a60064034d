import random
from itertools import combinations

import pytest

from raybundles.errors import MarginError, StabilizationError, TruncationError
from raybundles.ladder import (
    BOT,
    MID,
    NEG_END,
    POS_END,
    TOP,
    LadderCoord,
    LadderGraph,
    bundle_rows,
    coord,
    ladder_distance,
    ray_bundle_exact,
    sym_diff_exact,
    sym_diff_window_counts,
)
from oracle import bfs_all, ladder_adjacency, ladder_bundle_oracle


def test_distance_along_a_side():
    g = LadderGraph(9)
    assert ladder_distance(g, coord(0, TOP), coord(7, TOP)) == 7


def test_distance_across_one_rung():
    g = LadderGraph(5)
    assert ladder_distance(g, coord(0, TOP), coord(0, BOT)) == 2


def test_midpoint_distance_plain_vs_cubulated():
    assert ladder_distance(LadderGraph(8), coord(0, MID), coord(5, MID)) == 7
    assert ladder_distance(LadderGraph(8, cubulated=True), coord(0, MID), coord(5, MID)) == 5


@pytest.mark.parametrize("cubulated", [False, True])
def test_closed_form_agrees_with_bfs(cubulated):
    n = 8
    g = LadderGraph(n, cubulated=cubulated)
    adj = ladder_adjacency(n, cubulated)
    core = [c for c in adj if abs(c.index) <= n - 2]
    dist_maps = {c: bfs_all(adj, c) for c in core}
    for u, v in combinations(core, 2):
        assert g.distance(u, v) == dist_maps[u][v], (u, v)


def test_out_of_truncation_raises():
    g = LadderGraph(5)
    with pytest.raises(TruncationError):
        g.distance(coord(0, TOP), coord(6, TOP))


def test_truncation_must_be_positive():
    with pytest.raises(ValueError):
        LadderGraph(0)


def test_neighbors_structure():
    g = LadderGraph(3)
    assert set(g.neighbors(coord(0, MID))) == {coord(0, TOP), coord(0, BOT)}
    gc = LadderGraph(3, cubulated=True)
    assert set(gc.neighbors(coord(0, MID))) == {
        coord(0, TOP),
        coord(0, BOT),
        coord(-1, MID),
        coord(1, MID),
    }
    assert set(g.neighbors(coord(3, TOP))) == {coord(2, TOP), coord(3, MID)}


def test_side_bundle_contains_everything_ahead():
    g = LadderGraph(25)
    bundle = ray_bundle_exact(g, coord(0, TOP), POS_END, (0, 20))
    expected = {coord(i, level) for i in range(21) for level in (TOP, MID, BOT)}
    assert bundle == expected


def test_midpoint_bundle_avoids_later_rungs():
    g = LadderGraph(25)
    bundle = ray_bundle_exact(g, coord(0, MID), POS_END, (0, 20))
    expected = {coord(0, MID)} | {coord(i, lv) for i in range(21) for lv in (TOP, BOT)}
    assert bundle == expected


def test_cubulated_midpoint_bundle_keeps_the_midline():
    g = LadderGraph(25, cubulated=True)
    bundle = ray_bundle_exact(g, coord(0, MID), POS_END, (0, 20))
    assert {coord(i, MID) for i in range(21)} <= bundle


def test_nothing_behind_the_source():
    g = LadderGraph(12)
    bundle = ray_bundle_exact(g, coord(0, TOP), POS_END, (-8, 8))
    assert all(c.index >= 0 for c in bundle)


@pytest.mark.parametrize("cubulated", [False, True])
@pytest.mark.parametrize("source", [coord(0, TOP), coord(0, MID), coord(2, BOT)])
@pytest.mark.parametrize("end", [POS_END, NEG_END])
def test_bundles_match_bfs_oracle(cubulated, source, end):
    n = 12
    window = (-8, 8)
    got = ray_bundle_exact(LadderGraph(n, cubulated=cubulated), source, end, window)
    assert got == ladder_bundle_oracle(n, cubulated, source, end, window)


def test_end_symmetry():
    g = LadderGraph(15)
    pos = ray_bundle_exact(g, coord(0, MID), POS_END, (0, 10))
    neg = ray_bundle_exact(g, coord(0, MID), NEG_END, (-10, 0))
    assert {LadderCoord(-c.index, c.level) for c in pos} == neg


def test_symdiff_is_exactly_the_later_midpoints():
    g = LadderGraph(30)
    for n in (1, 5, 26):
        diff = sym_diff_exact(g, coord(0, TOP), coord(0, MID), POS_END, (0, n))
        assert diff == {coord(i, MID) for i in range(1, n + 1)}


def test_symdiff_same_source_empty():
    g = LadderGraph(10)
    assert sym_diff_exact(g, coord(0, TOP), coord(0, TOP), POS_END, (0, 6)) == frozenset()


def test_cubulated_symdiff_empty():
    g = LadderGraph(30, cubulated=True)
    diff = sym_diff_exact(g, coord(0, TOP), coord(0, MID), POS_END, (0, 26))
    assert diff == frozenset()


def test_window_counts_grow_with_slope_one():
    g = LadderGraph(20)
    counts = sym_diff_window_counts(g, coord(0, TOP), coord(0, MID), POS_END, 16)
    assert counts == [(n, n) for n in range(1, 17)]


def test_window_counts_cubulated_all_zero():
    g = LadderGraph(20, cubulated=True)
    counts = sym_diff_window_counts(g, coord(0, TOP), coord(0, MID), POS_END, 16)
    assert counts == [(n, 0) for n in range(1, 17)]


def test_window_margin_violation():
    g = LadderGraph(10)
    with pytest.raises(MarginError):
        ray_bundle_exact(g, coord(0, TOP), POS_END, (0, 9))


def test_source_too_close_to_end():
    g = LadderGraph(10)
    with pytest.raises(MarginError):
        ray_bundle_exact(g, coord(9, TOP), POS_END, (0, 8))


def test_empty_window_rejected():
    g = LadderGraph(10)
    with pytest.raises(ValueError):
        ray_bundle_exact(g, coord(0, TOP), POS_END, (3, 2))


def test_bad_end_rejected():
    g = LadderGraph(10)
    with pytest.raises(ValueError):
        ray_bundle_exact(g, coord(0, TOP), 2, (0, 5))


class _MarginSensitive(LadderGraph):
    """Distance model rigged to disagree between the two check margins."""

    def _dist(self, u, v):
        d = super()._dist(u, v)
        if self.truncation in (abs(u.index), abs(v.index)):
            return d + 1
        return d


def test_unstable_membership_is_a_hard_error():
    g = _MarginSensitive(10)
    with pytest.raises(StabilizationError):
        ray_bundle_exact(g, coord(0, TOP), POS_END, (0, 6))


def test_bundle_rows_layout():
    g = LadderGraph(8)
    rows = bundle_rows(g, coord(0, TOP), coord(0, MID), POS_END, (0, 3))
    assert len(rows) == 12  # 4 indices x 3 levels
    assert rows[0] == (0, TOP, 1, 1, 0)
    by_coord = {(r[0], r[1]): r for r in rows}
    assert by_coord[(2, MID)] == (2, MID, 1, 0, 1)
    for r in rows:
        assert r[4] == (r[2] != r[3])


def test_random_windows_monotone_counts():
    rng = random.Random(77)
    g = LadderGraph(18)
    for _ in range(20):
        n = rng.randrange(1, 15)
        counts = sym_diff_window_counts(g, coord(0, TOP), coord(0, MID), POS_END, n)
        sizes = [c for _, c in counts]
        assert sizes == sorted(sizes)
