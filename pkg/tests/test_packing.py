"""Exact packer, enumeration, greedy, rotations, connections."""

from __future__ import annotations

import pytest

from tripack.extremal import ExtremalSpec, build
from tripack.graph import build_graph, complete_graph, max_matching
from tripack.packing import (
    PACKING_CAP,
    check_packing,
    connection_stats,
    connects,
    enumerate_max_packings,
    greedy_packing,
    is_kp1_k3_free,
    max_packing_exact,
    packing_number,
    rotation_improve,
)

from .conftest import random_graph
from .oracles import brute_max_packings, brute_packing_number


def spoiler_graph():
    """Three disjoint triangles plus one triangle that meets all three."""
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (6, 7), (6, 8), (7, 8)]
    edges += [(2, 3), (2, 6), (3, 6)]
    return build_graph(9, edges)


class TestExact:
    @pytest.mark.parametrize(
        "make,expect",
        [
            (lambda: complete_graph(6), 2),
            (lambda: complete_graph(9), 3),
            (lambda: build(ExtremalSpec("E3", 8, 1)), 1),
            (lambda: build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]), 0),
        ],
    )
    def test_frozen_sizes(self, make, expect):
        g = make()
        res = max_packing_exact(g)
        assert res.size == expect and res.exact
        check_packing(g, res.triangles)
        assert len(res.triangles) == expect

    def test_all_graphs_up_to_5(self):
        from .oracles import all_graphs

        for g in all_graphs(5):
            assert max_packing_exact(g).size == brute_packing_number(g)

    @pytest.mark.parametrize("seed", range(10))
    def test_random_matches_oracle(self, seed):
        g = random_graph(9, 0.5, seed)
        assert max_packing_exact(g).size == brute_packing_number(g)

    def test_witness_is_lex_least(self):
        g = spoiler_graph()
        res = max_packing_exact(g)
        assert res.triangles == enumerate_max_packings(g)[0]

    def test_cap(self):
        with pytest.raises(ValueError):
            max_packing_exact(build_graph(PACKING_CAP + 1, []))

    def test_packing_number_petersen(self, petersen):
        assert packing_number(petersen) == 0

    def test_allowed_mask(self):
        g = complete_graph(9)
        assert max_packing_exact(g, allowed=(1 << 6) - 1).size == 2


class TestEnumerate:
    def test_k6_has_ten_max_packings(self, k6):
        packs = enumerate_max_packings(k6)
        assert len(packs) == 10
        assert packs == sorted(packs)
        for p in packs:
            assert len(p) == 2
            check_packing(k6, p)

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_oracle(self, seed):
        g = random_graph(8, 0.55, seed)
        assert enumerate_max_packings(g) == brute_max_packings(g)

    def test_cap_exceeded(self):
        with pytest.raises(ValueError, match="more than 5"):
            enumerate_max_packings(complete_graph(9), cap=5)

    def test_spoiler_unique_optimum(self):
        packs = enumerate_max_packings(spoiler_graph())
        assert packs == [((0, 1, 2), (3, 4, 5), (6, 7, 8))]


class TestFreeness:
    def test_boundaries(self, k6):
        assert not is_kp1_k3_free(k6, 1)
        assert is_kp1_k3_free(k6, 2)

    def test_families(self):
        g = build(ExtremalSpec("E2", 13, 2))
        assert is_kp1_k3_free(g, 2) and not is_kp1_k3_free(g, 1)


class TestGreedyAndRotation:
    def test_greedy_is_valid_and_maximal(self):
        g = spoiler_graph()
        for seed in range(8):
            p = greedy_packing(g, seed)
            used = check_packing(g, p)
            # maximal: no triangle fits in the rest
            rest = [v for v in range(g.n) if not used >> v & 1]
            assert max_packing_exact(g, allowed=sum(1 << v for v in rest)).size == 0

    def test_greedy_deterministic(self):
        g = random_graph(10, 0.6, 4)
        assert greedy_packing(g, 7) == greedy_packing(g, 7)

    def test_rotation_reaches_optimum_from_spoiler(self):
        g = spoiler_graph()
        seed = next(s for s in range(50) if len(greedy_packing(g, s)) == 1)
        packing = greedy_packing(g, seed)
        matching = max_matching(g, (1 << g.n) - 1 & ~check_packing(g, packing))
        improved = rotation_improve(g, packing, matching, radius=1)
        assert improved is not None
        packing, matching = improved
        assert packing == ((0, 1, 2), (3, 4, 5), (6, 7, 8))
        assert rotation_improve(g, packing, matching, radius=2) is None

    def test_rotation_improves_outside_matching(self):
        # two triangles through vertex 0; the second frees two pendant
        # pairs, the first only the other triangle's leftover edge
        g = build_graph(
            9,
            [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (1, 7), (2, 8)],
        )
        packing = ((0, 1, 2),)
        matching = max_matching(g, (1 << 9) - 1 & ~check_packing(g, packing))
        assert len(matching) == 1
        improved = rotation_improve(g, packing, matching, radius=1)
        assert improved is not None
        new_packing, new_matching = improved
        assert new_packing == ((0, 3, 4),)
        assert new_matching == ((1, 7), (2, 8))

    def test_radius_validated(self, k6):
        with pytest.raises(ValueError):
            rotation_improve(k6, (), (), radius=3)

    def test_rejects_bad_matching(self, k6):
        with pytest.raises(ValueError):
            rotation_improve(k6, ((0, 1, 2),), ((2, 3),), radius=1)


class TestConnections:
    @staticmethod
    def _three_triangles(t_edges, tp_edges):
        """Disjoint triangles A=(0,1,2), B=(3,4,5), via=(6,7,8) with the
        requested number of edges from via to A and to B."""
        edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (6, 7), (6, 8), (7, 8)]
        pairs_a = [(u, v) for u in (6, 7, 8) for v in (0, 1, 2)]
        pairs_b = [(u, v) for u in (6, 7, 8) for v in (3, 4, 5)]
        edges += pairs_a[:t_edges] + pairs_b[:tp_edges]
        return build_graph(9, edges)

    def test_symmetric_clause(self):
        g = self._three_triangles(8, 8)
        assert connects(g, (6, 7, 8), (0, 1, 2), (3, 4, 5))
        assert connects(g, (6, 7, 8), (3, 4, 5), (0, 1, 2))

    def test_favour_is_asymmetric(self):
        g = self._three_triangles(9, 7)
        assert connects(g, (6, 7, 8), (0, 1, 2), (3, 4, 5))
        assert not connects(g, (6, 7, 8), (3, 4, 5), (0, 1, 2))

    def test_below_threshold(self):
        g = self._three_triangles(7, 9)
        assert not connects(g, (6, 7, 8), (0, 1, 2), (3, 4, 5))

    def test_overlap_rejected(self, k6):
        with pytest.raises(ValueError):
            connects(k6, (0, 1, 2), (2, 3, 4), (1, 3, 5))

    def test_stats_in_k9(self):
        g = complete_graph(9)
        tset = [(0, 1, 2), (3, 4, 5), (6, 7, 8)]
        stats = connection_stats(g, tset, (0, 1, 2), (3, 4, 5))
        assert stats.count == 1 and stats.connectors == ((6, 7, 8),)

    def test_stats_validation(self, k6):
        with pytest.raises(ValueError):
            connection_stats(k6, [(0, 1, 2)], (0, 1, 2), (3, 4, 5))
