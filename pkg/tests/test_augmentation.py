"""Cycle/matching augmentation moves, boost sets, and the sprinkle drivers."""

from __future__ import annotations

import numpy as np
import pytest

from rpgsim.augment import (
    LongCycleError,
    SprinkleConfig,
    SprinkleTrace,
    apply_cycle_boost,
    apply_matching_boost,
    build_oriented_cycle,
    cycle_boost_set,
    exchange_extension,
    find_long_cycle,
    free_insertion,
    matching_boost_set,
    sprinkle_hamiltonian,
    sprinkle_pm,
)
from rpgsim.graph import Graph, is_2_connected, min_degree, union
from rpgsim.models import (
    RandomSource,
    complete_bipartite,
    decode_edge_codes,
    gnm,
    pair_count,
    two_cliques,
)
from rpgsim.oracles import (
    MatchingCert,
    hamiltonian_exact,
    longest_cycle_exact,
    max_matching,
)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def canonical_cycle_order(d: int) -> list[int]:
    order = []
    for i in range(d):
        order += [i, d + i]
    return order


def rebuild_final_graph(h: Graph, trace: SprinkleTrace) -> Graph:
    """Reconstruct G_k from the host and the trace contents."""
    g = h.copy()
    for a, b in decode_edge_codes(h.n, trace.initial_codes):
        if not g.has_edge(int(a), int(b)):
            g.add_edge(int(a), int(b))
    for rd in trace.rounds:
        u, v = rd.hit
        if u >= 0 and not g.has_edge(u, v):
            g.add_edge(u, v)
    return g


class TestOrientedCycle:
    def test_succ_pred_wrap(self):
        c = build_oriented_cycle(cycle_graph(5), [0, 1, 2, 3, 4])
        assert c.succ(4) == 0
        assert c.pred(0) == 4
        assert c.length == 5

    def test_invalid_sequence_rejected(self):
        g = complete_bipartite(2, 5)
        with pytest.raises(ValueError):
            build_oriented_cycle(g, [0, 1, 2])

    def test_repeated_vertex_rejected(self):
        with pytest.raises(ValueError):
            build_oriented_cycle(complete_graph(4), [0, 1, 2, 1])

    def test_canonical_bipartite_cycle(self):
        g = complete_bipartite(4, 10)
        c = build_oriented_cycle(g, canonical_cycle_order(4))
        assert c.length == 8
        assert sorted(c.off_cycle().tolist()) == [8, 9]


class TestFreeInsertion:
    def test_complete_graph_insertion(self):
        g = complete_graph(4)
        c = build_oriented_cycle(g, [0, 1, 2])
        c2 = free_insertion(g, c, 3)
        assert c2 is not None and c2.length == 4

    def test_bipartite_stuck(self):
        g = complete_bipartite(4, 10)
        c = build_oriented_cycle(g, canonical_cycle_order(4))
        assert free_insertion(g, c, 8) is None

    def test_isolated_vertex(self):
        g = Graph(6, [(i, (i + 1) % 5) for i in range(5)])
        c = build_oriented_cycle(g, [0, 1, 2, 3, 4])
        assert free_insertion(g, c, 5) is None

    def test_rejects_on_cycle_vertex(self):
        g = complete_graph(4)
        c = build_oriented_cycle(g, [0, 1, 2])
        with pytest.raises(ValueError):
            free_insertion(g, c, 1)


class TestExchangeExtension:
    def test_bipartite_stuck(self):
        g = complete_bipartite(4, 10)
        c = build_oriented_cycle(g, canonical_cycle_order(4))
        assert exchange_extension(g, c, 8) is None

    def test_exchange_applies(self):
        # C_8 + chord {2,4}; vertex 8 sees 1 and 3 but not 2, so w=2 is a
        # witness and the chord provides the interior edge pair
        g = cycle_graph(8)
        n9 = Graph(9, g.edge_array())
        n9.add_edge(8, 1)
        n9.add_edge(8, 3)
        n9.add_edge(2, 4)
        c = build_oriented_cycle(n9, list(range(8)))
        assert free_insertion(n9, c, 8) is None
        c2 = exchange_extension(n9, c, 8)
        assert c2 is not None and c2.length == 9
        assert c2.contains(8)

    def test_randomized_outputs_validate(self):
        rng = RandomSource(41)
        applied = 0
        for i in range(300):
            g = union(Graph(14, complete_graph(8).edge_array()), gnm(14, 30, rng.child(i)))
            if not is_2_connected(g) or min_degree(g) < 5:
                continue
            cert = longest_cycle_exact(g)
            if cert.length == 14:
                continue
            c = build_oriented_cycle(g, cert.vertices)
            for v in c.off_cycle():
                if free_insertion(g, c, int(v)) is not None:
                    continue
                out = exchange_extension(g, c, int(v))
                if out is not None:
                    out.validate(g)
                    assert out.length == c.length + 1
                    applied += 1
        # longest cycles admit no enlargement move, so successes come only
        # from non-maximal inputs; mostly this exercises validation paths
        assert applied == 0


class TestCycleBoostSet:
    def test_extremal_count_k31_33(self):
        g = complete_bipartite(31, 64)
        c = build_oriented_cycle(g, canonical_cycle_order(31))
        bs = cycle_boost_set(g, c, 62)
        assert bs.size == 465  # C(31, 2)
        assert bs.size >= 64 * 64 / 8 - 4 * 64 * 1

    def test_every_edge_augments_k46(self):
        g = complete_bipartite(4, 10)
        c = build_oriented_cycle(g, canonical_cycle_order(4))
        bs = cycle_boost_set(g, c, 8)
        assert bs.size == 6  # C(4, 2) pairs of on-cycle B vertices
        for (a, b), tag in bs.items():
            assert not g.has_edge(a, b)
            g2, c2 = apply_cycle_boost(g, c, tag)
            assert c2.length == 9
            assert longest_cycle_exact(g2).length == 9

    def test_membership_queries(self):
        g = complete_bipartite(4, 10)
        c = build_oriented_cycle(g, canonical_cycle_order(4))
        bs = cycle_boost_set(g, c, 8)
        (a, b), tag = next(iter(bs.items()))
        assert bs.contains(a, b) and bs.contains(b, a)
        assert bs.tag_for(a, b) == tag
        assert not bs.contains(0, 4)
        with pytest.raises(KeyError):
            bs.tag_for(0, 4)

    def test_precondition_free_move_rejected(self):
        g = complete_graph(5)
        c = build_oriented_cycle(g, [0, 1, 2, 3])
        with pytest.raises(ValueError, match="free insertion"):
            cycle_boost_set(g, c, 4)


class TestApplyCycleBoost:
    def _host_with_witness(self) -> tuple[Graph, list[int]]:
        g = Graph(9, cycle_graph(8).edge_array())
        g.add_edge(8, 1)
        g.add_edge(8, 3)
        return g, list(range(8))

    def test_degenerate_u_pred_equals_w_succ(self):
        # w=2, u=4: the tagged edge {w, u-} is the existing cycle edge {2,3}
        g, order = self._host_with_witness()
        g.add_edge(2, 4)
        c = build_oriented_cycle(g, order)
        g2, c2 = apply_cycle_boost(g, c, (8, 2, 4))
        assert c2.length == 9 and c2.contains(8)
        c2.validate(g2)

    def test_degenerate_u_equals_w_pred(self):
        # w=2, u=1 = w-: boost edge {2, 0}; recipe re-walks edge {2,1}
        g, order = self._host_with_witness()
        c = build_oriented_cycle(g, order)
        assert not g.has_edge(2, 0)
        g2, c2 = apply_cycle_boost(g, c, (8, 2, 1))
        assert g2.has_edge(2, 0)
        assert c2.length == 9 and c2.contains(8)
        c2.validate(g2)

    def test_stale_tag_rejected(self):
        g = complete_bipartite(4, 10)
        c = build_oriented_cycle(g, canonical_cycle_order(4))
        bs = cycle_boost_set(g, c, 8)
        (a, b), tag = next(iter(bs.items()))
        g.add_edge(a, b)  # someone already added the boost edge
        with pytest.raises(ValueError, match="stale"):
            apply_cycle_boost(g, c, tag)

    def test_tag_with_missing_recipe_edges_rejected(self):
        g = complete_bipartite(4, 10)
        c = build_oriented_cycle(g, canonical_cycle_order(4))
        with pytest.raises(ValueError):
            apply_cycle_boost(g, c, (8, 0, 1))  # w=0 is adjacent to v


class TestMatchingBoost:
    def _k46_setup(self) -> tuple[Graph, MatchingCert]:
        g = complete_bipartite(4, 10)
        m = MatchingCert(frozenset({(0, 4), (1, 5), (2, 6), (3, 7)}))
        m.validate(g)
        return g, m

    def test_boost_set_and_augment(self):
        g, m = self._k46_setup()
        bs = matching_boost_set(g, m, 8, 9)
        assert bs.size == 6  # non-edges among the 4 matched B vertices
        for (a, b), tag in bs.items():
            assert not g.has_edge(a, b)
            g2, m2 = apply_matching_boost(g, m, tag)
            assert m2.size == 5
            assert max_matching(g2).size == 5

    def test_extremal_count_n64(self):
        g = complete_bipartite(31, 64)
        pairs = frozenset((i, 31 + i) for i in range(31))
        m = MatchingCert(pairs)
        bs = matching_boost_set(g, m, 62, 63)
        assert bs.size == 465
        assert bs.size >= 406  # C(29, 2) from the n/2 - 3*eta bound

    def test_short_augmenting_path_rejected(self):
        g = complete_graph(4)
        m = MatchingCert(frozenset({(0, 1)}))
        with pytest.raises(ValueError, match="length <= 5"):
            matching_boost_set(g, m, 2, 3)

    def test_matched_witness_rejected(self):
        g, m = self._k46_setup()
        with pytest.raises(ValueError):
            matching_boost_set(g, m, 0, 9)

    def test_stale_tag_rejected(self):
        g, m = self._k46_setup()
        bs = matching_boost_set(g, m, 8, 9)
        (a, b), tag = next(iter(bs.items()))
        g.add_edge(a, b)
        with pytest.raises(ValueError, match="stale"):
            apply_matching_boost(g, m, tag)

    def test_repeated_boost_reaches_perfect_matching(self):
        g, m = self._k46_setup()
        while 2 * m.size < g.n:
            unmatched = np.flatnonzero(m.partner_array(g.n) < 0)
            bs = matching_boost_set(g, m, int(unmatched[0]), int(unmatched[1]))
            assert bs.size > 0
            (_, tag) = next(iter(bs.items()))
            g, m = apply_matching_boost(g, m, tag)
        assert m.size == 5


class TestFindLongCycle:
    def test_extremal_canonical(self):
        cert = find_long_cycle(complete_bipartite(4, 10), 8)
        assert cert.length == 8

    def test_cycle_itself(self):
        assert find_long_cycle(cycle_graph(9), 9).length == 9

    def test_unreachable_target(self):
        with pytest.raises(LongCycleError):
            find_long_cycle(complete_bipartite(4, 10), 9)

    def test_random_2_connected_reaches_2delta(self):
        rng = RandomSource(51)
        checked = 0
        for i in range(150):
            g = union(cycle_graph(16), gnm(16, 64, rng.child(i)))
            if min_degree(g) < 7:
                continue
            cert = find_long_cycle(g, 14)
            cert.validate(g)
            assert cert.length >= 14
            checked += 1
        assert checked > 30

    def test_greedy_beyond_exact_cap(self):
        # canonical layout broken by relabeling, forcing the greedy path
        g = complete_bipartite(15, 32)
        shuffled = Graph(32)
        perm = np.roll(np.arange(32), 5)
        for u, v in g.edges():
            shuffled.add_edge(int(perm[u]), int(perm[v]))
        cert = find_long_cycle(shuffled, 30)
        cert.validate(shuffled)
        assert cert.length >= 30


class TestSprinkleHamiltonian:
    def test_certified_success_small_eta(self):
        h = complete_bipartite(31, 64)
        trace = sprinkle_hamiltonian(h, SprinkleConfig(mode="certified"), RandomSource(3))
        assert trace.outcome == "success"
        assert trace.num_rounds <= 2  # 2 eta
        assert trace.total_samples == sum(rd.samples for rd in trace.rounds)
        sizes = [rd.size_before for rd in trace.rounds]
        assert sizes == sorted(set(sizes))
        final = rebuild_final_graph(h, trace)
        assert find_long_cycle(final, 64).length == 64

    def test_already_hamiltonian_host(self):
        trace = sprinkle_hamiltonian(
            cycle_graph(12), SprinkleConfig(mode="heuristic", m0=0), RandomSource(0)
        )
        assert trace.outcome == "success"
        assert trace.total_samples == 0

    def test_certified_rejects_degree_violation(self):
        with pytest.raises(ValueError, match="certified"):
            sprinkle_hamiltonian(cycle_graph(12), SprinkleConfig(), RandomSource(0))

    def test_precondition_failure_reported(self):
        h = two_cliques(10, 0)
        trace = sprinkle_hamiltonian(
            h, SprinkleConfig(mode="heuristic", m0=0), RandomSource(0)
        )
        assert trace.outcome == "precondition_failed"

    def test_heuristic_sound_at_small_n(self):
        rng = RandomSource(61)
        successes = 0
        for i in range(40):
            h = union(cycle_graph(14), gnm(14, 25, rng.child(i, 0)))
            trace = sprinkle_hamiltonian(
                h, SprinkleConfig(mode="heuristic"), rng.child(i, 1)
            )
            if trace.outcome != "success":
                continue
            final = rebuild_final_graph(h, trace)
            assert hamiltonian_exact(final) is not None
            successes += 1
        assert successes > 20

    def test_geometric_round_parameter(self):
        """First-round sample counts behave like Geometric(|E|/C(n,2))."""
        h = complete_bipartite(31, 64)
        cfg = SprinkleConfig(mode="certified", m0=0)
        first = []
        for i in range(800):
            trace = sprinkle_hamiltonian(h, cfg, RandomSource(71, (i,)))
            assert trace.outcome == "success"
            assert trace.rounds[0].boost_size == 465
            first.append(trace.rounds[0].samples)
        expected = pair_count(64) / 465
        assert abs(np.mean(first) - expected) / expected < 0.10


class TestSprinklePm:
    def test_certified_success(self):
        h = complete_bipartite(31, 64)
        trace = sprinkle_pm(h, SprinkleConfig(mode="certified"), RandomSource(5))
        assert trace.outcome == "success"
        assert trace.num_rounds <= 1  # eta = 1
        assert 2 * trace.final_size == 64

    def test_trivial_perfect_matching_host(self):
        trace = sprinkle_pm(
            complete_graph(4), SprinkleConfig(mode="heuristic", m0=0), RandomSource(0)
        )
        assert trace.outcome == "success"
        assert trace.total_samples == 0

    def test_odd_n_rejected(self):
        with pytest.raises(ValueError, match="even"):
            sprinkle_pm(cycle_graph(9), SprinkleConfig(mode="heuristic"), RandomSource(0))

    def test_heuristic_driver_at_n10(self):
        h = complete_bipartite(4, 10)
        trace = sprinkle_pm(h, SprinkleConfig(mode="heuristic"), RandomSource(8))
        assert trace.outcome == "success"
        assert 2 * trace.final_size == 10
        final = rebuild_final_graph(h, trace)
        assert max_matching(final).size == 5


class TestSprinkleConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            SprinkleConfig(mode="bogus")
        with pytest.raises(ValueError):
            SprinkleConfig(max_rounds=0)
        with pytest.raises(ValueError):
            SprinkleConfig(m0=-1)
        with pytest.raises(ValueError):
            SprinkleConfig(lam=-2)
