import math
import random
from fractions import Fraction

import networkx as nx
import pytest

from avec.errors import (
    DisconnectedGraph,
    InvalidArgument,
    InvalidEdge,
    InvalidVertex,
    InvalidWeights,
)
from avec.generators import classic
from avec.graph import (
    INFINITE_GIRTH,
    UNREACHABLE,
    ball,
    build_graph,
    distances_from,
    eccentricity_profile,
    edge_distance,
    forbidden_cycle_scan,
    girth,
    induced_subgraph,
    is_connected,
    line_graph,
    power_graph,
    weighted_avec,
)
from util import from_nx, girth_oracle, has_cycle_oracle, random_connected_graph, to_nx


def petersen():
    return from_nx(nx.petersen_graph())


class TestBuildGraph:
    def test_canonical_order_and_dedup(self):
        g = build_graph(4, [(2, 1), (0, 3), (1, 2), (3, 0), (0, 1)])
        assert g.edge_list == ((0, 1), (0, 3), (1, 2))
        assert g.adjacency == ((1, 3), (0, 2), (1,), (0,))
        assert g.m == 3

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidVertex):
            build_graph(3, [(0, 3)])
        with pytest.raises(InvalidVertex):
            build_graph(3, [(-1, 1)])

    def test_rejects_self_loop(self):
        with pytest.raises(InvalidEdge):
            build_graph(3, [(1, 1)])

    def test_immutable(self):
        g = build_graph(2, [(0, 1)])
        with pytest.raises(AttributeError):
            g.n = 5

    def test_has_edge_and_degree(self):
        g = build_graph(4, [(0, 1), (1, 2)])
        assert g.has_edge(0, 1) and g.has_edge(1, 0)
        assert not g.has_edge(0, 2)
        assert not g.has_edge(0, 0)
        assert not g.has_edge(0, 9)
        assert g.degree(1) == 2 and g.degree(3) == 0
        assert g.min_degree() == 0 and g.max_degree() == 2

    def test_eq_hash(self):
        a = build_graph(3, [(0, 1), (1, 2)])
        b = build_graph(3, [(1, 2), (0, 1)])
        c = build_graph(3, [(0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != c
        assert a != "not a graph"


class TestDistances:
    def test_single_source_matches_networkx(self):
        rng = random.Random(7)
        for _ in range(25):
            n = rng.randint(1, 20)
            g = random_connected_graph(rng, n, rng.randint(0, n))
            G = to_nx(g)
            s = rng.randrange(n)
            expect = nx.single_source_shortest_path_length(G, s)
            got = distances_from(g, (s,)).dist
            assert list(got) == [expect[v] for v in range(n)]

    def test_multi_source_is_min_over_sources(self):
        rng = random.Random(8)
        g = random_connected_graph(rng, 15, 6)
        sources = (0, 7, 12)
        singles = [distances_from(g, (s,)).dist for s in sources]
        multi = distances_from(g, sources).dist
        for v in range(g.n):
            assert multi[v] == min(d[v] for d in singles)

    def test_unreachable_sentinel(self):
        g = build_graph(4, [(0, 1)])
        d = distances_from(g, (0,)).dist
        assert d == (0, 1, UNREACHABLE, UNREACHABLE)
        assert d[2] is None

    def test_validation(self):
        g = build_graph(3, [(0, 1)])
        with pytest.raises(InvalidArgument):
            distances_from(g, ())
        with pytest.raises(InvalidVertex):
            distances_from(g, (5,))

    def test_is_connected(self):
        assert is_connected(build_graph(3, [(0, 1), (1, 2)]))
        assert not is_connected(build_graph(3, [(0, 1)]))
        assert not is_connected(build_graph(0, []))


class TestEccentricity:
    def test_path4_profile(self):
        p = eccentricity_profile(classic("path", 4))
        assert p.ecc == (3, 2, 2, 3)
        assert p.ex_total == 10
        assert p.avec == Fraction(10, 4) == Fraction(5, 2)
        assert p.diameter == 3 and p.radius == 2

    def test_single_vertex(self):
        p = eccentricity_profile(build_graph(1, []))
        assert p.ecc == (0,) and p.avec == 0

    def test_matches_networkx(self):
        rng = random.Random(9)
        for _ in range(20):
            n = rng.randint(1, 25)
            g = random_connected_graph(rng, n, rng.randint(0, 2 * n))
            expect = nx.eccentricity(to_nx(g))
            p = eccentricity_profile(g)
            assert list(p.ecc) == [expect[v] for v in range(n)]
            assert p.diameter == max(expect.values())
            assert p.radius == min(expect.values())

    def test_disconnected_raises(self):
        with pytest.raises(DisconnectedGraph):
            eccentricity_profile(build_graph(3, [(0, 1)]))

    def test_empty_raises(self):
        with pytest.raises(InvalidArgument):
            eccentricity_profile(build_graph(0, []))


class TestWeightedAvec:
    def test_path3_frozen(self):
        g = classic("path", 3)
        assert weighted_avec(g, [2, 1, 1]) == Fraction(7, 4)

    def test_all_ones_equals_avec(self):
        rng = random.Random(10)
        g = random_connected_graph(rng, 12, 5)
        assert weighted_avec(g, [1] * g.n) == eccentricity_profile(g).avec

    def test_fraction_weights(self):
        g = classic("path", 2)
        assert weighted_avec(g, [Fraction(1, 2), Fraction(1, 2)]) == 1

    def test_validation(self):
        g = classic("path", 3)
        with pytest.raises(InvalidWeights):
            weighted_avec(g, [1, 1])
        with pytest.raises(InvalidWeights):
            weighted_avec(g, [1, -1, 1])
        with pytest.raises(InvalidWeights):
            weighted_avec(g, [0, 0, 0])
        with pytest.raises(InvalidWeights):
            weighted_avec(g, [1.5, 1, 1])
        with pytest.raises(InvalidWeights):
            weighted_avec(g, [True, 1, 1])


class TestGirth:
    def test_frozen_values(self, reiman2):
        assert girth(classic("cycle", 5)) == 5
        assert girth(classic("complete", 4)) == 3
        assert girth(classic("path", 4)) == INFINITE_GIRTH
        assert girth(petersen()) == 5
        assert girth(reiman2.graph) == 6
        assert girth(build_graph(1, [])) == INFINITE_GIRTH

    def test_matches_edge_deletion_oracle(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(2, 14)
            g = random_connected_graph(rng, n, rng.randint(0, n))
            assert girth(g) == girth_oracle(g)


class TestForbiddenCycleScan:
    def test_triangle(self):
        s = forbidden_cycle_scan(classic("complete", 3))
        assert s.has_c3 and not s.has_c4 and not s.has_c5
        assert s.class_c4c5free and not s.class_girth6

    def test_c4_and_c5(self):
        s4 = forbidden_cycle_scan(classic("cycle", 4))
        assert s4.has_c4 and not s4.class_c4c5free and not s4.class_girth6
        s5 = forbidden_cycle_scan(classic("cycle", 5))
        assert s5.has_c5 and not s5.class_c4c5free and not s5.class_girth6

    def test_k4_contains_c4(self):
        # 0-2-1-3-0 is a 4-cycle subgraph of K4
        s = forbidden_cycle_scan(classic("complete", 4))
        assert s.has_c3 and s.has_c4
        assert not s.class_c4c5free

    def test_girth6_class(self, reiman2):
        s = forbidden_cycle_scan(reiman2.graph)
        assert not (s.has_c3 or s.has_c4 or s.has_c5)
        assert s.class_girth6 and s.class_c4c5free
        s6 = forbidden_cycle_scan(classic("cycle", 6))
        assert s6.class_girth6

    def test_petersen(self):
        s = forbidden_cycle_scan(petersen())
        assert not s.has_c3 and not s.has_c4 and s.has_c5

    def test_matches_brute_oracle(self):
        rng = random.Random(12)
        for _ in range(30):
            n = rng.randint(3, 10)
            g = random_connected_graph(rng, n, rng.randint(0, 2 * n))
            s = forbidden_cycle_scan(g)
            assert s.has_c3 == has_cycle_oracle(g, 3)
            assert s.has_c4 == has_cycle_oracle(g, 4)
            assert s.has_c5 == has_cycle_oracle(g, 5)


class TestBall:
    def test_matches_networkx_ego(self):
        rng = random.Random(13)
        for _ in range(15):
            n = rng.randint(1, 18)
            g = random_connected_graph(rng, n, rng.randint(0, n))
            G = to_nx(g)
            s = rng.randrange(n)
            for k in (0, 1, 2, 3):
                expect = {
                    v
                    for v, d in nx.single_source_shortest_path_length(G, s).items()
                    if d <= k
                }
                assert ball(g, (s,), k) == expect

    def test_multi_source(self):
        g = classic("path", 7)
        assert ball(g, (0, 6), 1) == {0, 1, 5, 6}

    def test_validation(self):
        g = classic("path", 3)
        with pytest.raises(InvalidArgument):
            ball(g, (0,), -1)
        with pytest.raises(InvalidArgument):
            ball(g, (), 1)
        with pytest.raises(InvalidVertex):
            ball(g, (9,), 1)


class TestEdgeDistance:
    def test_path_edges(self):
        g = classic("path", 5)
        assert edge_distance(g, (0, 1), (3, 4)) == 2
        assert edge_distance(g, (0, 1), (1, 2)) == 0
        assert edge_distance(g, (1, 0), (2, 1)) == 0

    def test_requires_edges(self):
        g = classic("path", 5)
        with pytest.raises(InvalidEdge):
            edge_distance(g, (0, 2), (3, 4))

    def test_unreachable(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert edge_distance(g, (0, 1), (2, 3)) is UNREACHABLE


class TestDerivedGraphs:
    def test_line_graph_matches_networkx(self):
        rng = random.Random(14)
        for _ in range(15):
            n = rng.randint(2, 12)
            g = random_connected_graph(rng, n, rng.randint(0, n))
            L, edge_of = line_graph(g)
            assert L.n == g.m
            assert edge_of == g.edge_list
            NL = nx.line_graph(to_nx(g))
            expect = {
                tuple(sorted((edge_of.index(tuple(sorted(a))), edge_of.index(tuple(sorted(b))))))
                for a, b in NL.edges
            }
            assert set(L.edge_list) == expect

    def test_line_graph_degrees(self):
        g = classic("star", 5)
        L, _ = line_graph(g)
        # edges of a star pairwise intersect at the centre
        assert L.edge_list == tuple(
            (i, j) for i in range(4) for j in range(i + 1, 4)
        )

    def test_power_graph_brute(self):
        rng = random.Random(15)
        for _ in range(10):
            n = rng.randint(2, 12)
            g = random_connected_graph(rng, n, rng.randint(0, n))
            for k in (1, 2, 3):
                pk = power_graph(g, k)
                for u in range(n):
                    du = distances_from(g, (u,)).dist
                    for v in range(u + 1, n):
                        assert pk.has_edge(u, v) == (du[v] is not None and du[v] <= k)

    def test_power_one_is_identity(self):
        g = petersen()
        assert power_graph(g, 1) == g

    def test_power_validation(self):
        with pytest.raises(InvalidArgument):
            power_graph(classic("path", 3), 0)

    def test_induced_subgraph(self):
        g = petersen()
        sub, orig = induced_subgraph(g, [9, 0, 3, 5])
        assert orig == (0, 3, 5, 9)
        expect = nx.subgraph(to_nx(g), [0, 3, 5, 9])
        relabel = {v: i for i, v in enumerate(orig)}
        assert set(sub.edge_list) == {
            tuple(sorted((relabel[u], relabel[v]))) for u, v in expect.edges
        }

    def test_induced_validation(self):
        with pytest.raises(InvalidVertex):
            induced_subgraph(classic("path", 3), [0, 7])
