import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle_graph, star
from toughwalks import (
    CapacitatedMatching,
    Cycle,
    CycleW,
    EdgeW,
    Graph,
    HallViolator,
    KWalk,
    ToughnessCertificate,
    VertexW,
    build_k_walk,
    capacitated_matching,
    find_edge_dominating_cycle,
    minimal_construction_k,
)
from toughwalks.errors import InvalidWitness, KTooSmall, NotDominating, PreconditionViolated
from toughwalks.kwalk import euler_circuit
from toughwalks.oracles import brute_force_toughness, check_k_walk

NET_TRIANGLE = CycleW(Cycle((1, 2, 4)))


def hall_ok(g, targets, outside, c) -> bool:
    tset = set(targets)
    for r in range(1, len(outside) + 1):
        for d0 in itertools.combinations(outside, r):
            nbh = {t for d in d0 for t in g.neighbors(d) if t in tset}
            if c * len(nbh) < len(d0):
                return False
    return True


@st.composite
def bipartite_instances(draw):
    nt = draw(st.integers(0, 5))
    nd = draw(st.integers(0, 6))
    pairs = [(t, nt + d) for t in range(nt) for d in range(nd)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(nt + nd, chosen), list(range(nt)), list(range(nt, nt + nd)), draw(st.integers(1, 3))


class TestCapacitatedMatching:
    def test_empty_outside(self, net):
        res = capacitated_matching(net, [1, 2, 4], [], 1)
        assert isinstance(res, CapacitatedMatching) and res.pairs == {}

    def test_net_perfect(self, net):
        res = capacitated_matching(net, [1, 2, 4], [0, 3, 5], 1)
        assert res.pairs == {0: 1, 3: 2, 5: 4}

    def test_net_violator(self, net):
        res = capacitated_matching(net, [1, 2], [0, 3, 5], 1)
        assert isinstance(res, HallViolator)
        assert res.vertices == {0, 3, 5}
        assert res.neighborhood == {1, 2}

    def test_outside_must_be_independent(self, net):
        with pytest.raises(PreconditionViolated):
            capacitated_matching(net, [2], [0, 1], 1)

    def test_overlap_rejected(self, net):
        with pytest.raises(PreconditionViolated):
            capacitated_matching(net, [1, 2], [2], 1)

    @settings(max_examples=300)
    @given(bipartite_instances())
    def test_agrees_with_hall(self, inst):
        g, targets, outside, c = inst
        res = capacitated_matching(g, targets, outside, c)
        feasible = hall_ok(g, targets, outside, c)
        assert isinstance(res, CapacitatedMatching) == feasible
        if feasible:
            assert set(res.pairs) == set(outside)
            assert all(g.has_edge(d, t) and t in targets for d, t in res.pairs.items())
            assert max(res.load().values(), default=0) <= c
        else:
            assert res.vertices <= set(outside)
            nbh = {t for d in res.vertices for t in g.neighbors(d) if t in targets}
            assert nbh == res.neighborhood
            assert c * len(nbh) < len(res.vertices)


class TestBuildKWalk:
    def test_c4(self):
        w = build_k_walk(cycle_graph(4), CycleW(Cycle((0, 1, 2, 3))), 2)
        assert w.edge_multiset == {(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): 1}
        assert w.degrees(4) == [2, 2, 2, 2]
        assert w.traversal == (0, 1, 2, 3, 0)

    def test_net(self, net):
        w = build_k_walk(net, NET_TRIANGLE, 2)
        assert check_k_walk(net, w)
        assert w.edge_multiset == {(0, 1): 2, (1, 2): 1, (1, 4): 1, (2, 3): 2, (2, 4): 1, (4, 5): 2}
        assert w.degrees(6) == [2, 4, 4, 2, 4, 2]

    def test_star_certificate(self):
        g = star(3)
        cert = build_k_walk(g, VertexW(0), 2)
        assert cert == ToughnessCertificate(frozenset({0}), 3, Fraction(1, 3))
        assert cert.is_valid_in(g)
        assert brute_force_toughness(g) == Fraction(1, 3)

    def test_star_k4(self):
        g = star(3)
        w = build_k_walk(g, VertexW(0), 4)
        assert w.edge_multiset == {(0, 1): 2, (0, 2): 2, (0, 3): 2}
        assert w.degrees(4)[0] == 6
        assert check_k_walk(g, w)

    def test_edge_witness(self):
        g = Graph(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
        w = build_k_walk(g, EdgeW((0, 1)), 3)
        assert w.edge_multiset[(0, 1)] == 2
        assert check_k_walk(g, w)

    def test_k_too_small(self, net):
        with pytest.raises(KTooSmall):
            build_k_walk(net, NET_TRIANGLE, 1)

    def test_invalid_witness(self, net):
        with pytest.raises(NotDominating):
            build_k_walk(net, VertexW(0), 2)
        with pytest.raises(InvalidWitness):
            build_k_walk(net, CycleW(Cycle((0, 1, 2))), 2)

    def test_degree_law_on_corpus(self, corpus_graphs):
        for label, g in corpus_graphs[:200]:
            w, _ = find_edge_dominating_cycle(g)
            for k in (2, 3, 5):
                res = build_k_walk(g, w, k)
                if isinstance(res, ToughnessCertificate):
                    assert res.is_valid_in(g) and res.bound < Fraction(1, k - 1), label
                    continue
                assert check_k_walk(g, res), label
                deg = res.degrees(g.n)
                if isinstance(w, CycleW):
                    for v in g.vertices():
                        if v not in w.vertex_set:
                            assert deg[v] == 2
                        else:
                            assert deg[v] <= 2 * k


class TestMinimalK:
    def test_c4(self):
        assert minimal_construction_k(cycle_graph(4), CycleW(Cycle((0, 1, 2, 3)))) == 2

    def test_net(self, net):
        assert minimal_construction_k(net, NET_TRIANGLE) == 2

    @pytest.mark.parametrize("leaves", [1, 2, 3, 6])
    def test_star(self, leaves):
        assert minimal_construction_k(star(leaves), VertexW(0)) == leaves + 1


class TestEuler:
    def test_doubled_edge(self):
        assert euler_circuit(2, {(0, 1): 2}, 0) == (0, 1, 0)

    def test_bowtie(self):
        ms = {(0, 1): 1, (1, 2): 1, (0, 2): 1, (2, 3): 1, (3, 4): 1, (2, 4): 1}
        t = euler_circuit(5, ms, 0)
        assert t[0] == t[-1] == 0 and len(t) == 7
        assert check_k_walk(Graph(5, ms), KWalk(2, ms, t))
