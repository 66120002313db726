import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph, cycle_graph, path_graph, star
from toughwalks import (
    CycleW,
    EdgeW,
    Graph,
    VertexW,
    find_edge_dominating_cycle,
    find_edge_dominating_cycle_with_triangle,
    find_triangle,
    gen_2k2_free_perturbed,
    gen_split_graph,
)
from toughwalks.domcycle import CASE_TAGS, undominated_count
from toughwalks.errors import Not2K2Free, NotATriangle, NotConnected
from toughwalks.graph_core import vertex_mask
from toughwalks.oracles import brute_force_dominating_cycle, check_edge_dominating
from toughwalks.recognition import Triangle


def dominated(g, cycle):
    s = set(cycle)
    return {e for e in g.edges if s & set(e)}


def assert_trace_sound(g, trace):
    steps = trace.growth_steps
    assert len(steps) <= g.m ** 2
    for s in trace.steps:
        assert s.case in CASE_TAGS
        assert s.t_after == undominated_count(g, vertex_mask(s.cycle_after))
    for s in steps:
        before = (len(s.cycle_before), -s.t_before)
        after = (len(s.cycle_after), -s.t_after)
        assert after > before
        if s.case == "C3b_i":
            assert dominated(g, s.cycle_before) < dominated(g, s.cycle_after)
    for a, b in zip(trace.steps, trace.steps[1:]):
        assert a.cycle_after == b.cycle_before


class TestPlain:
    def test_star(self):
        w, trace = find_edge_dominating_cycle(star(3))
        assert w == VertexW(0)
        assert trace.steps[0].case == "START_TREE"

    def test_double_star(self):
        g = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
        w, _ = find_edge_dominating_cycle(g)
        assert w == EdgeW((0, 1))

    def test_tiny(self):
        assert find_edge_dominating_cycle(Graph(1))[0] == VertexW(0)
        assert find_edge_dominating_cycle(Graph(2, [(0, 1)]))[0] == VertexW(0)

    def test_net(self, net):
        w, trace = find_edge_dominating_cycle(net)
        assert isinstance(w, CycleW) and w.cycle.vertices == (1, 2, 4)
        assert check_edge_dominating(net, w)
        assert len(trace) == 0

    def test_split_40(self):
        g = gen_split_graph(40, "1/2", 11)
        w, trace = find_edge_dominating_cycle(g)
        assert check_edge_dominating(g, w)
        assert_trace_sound(g, trace)

    def test_disconnected(self):
        with pytest.raises(NotConnected):
            find_edge_dominating_cycle(Graph(4, [(0, 1), (2, 3)]))
        with pytest.raises(NotConnected):
            find_edge_dominating_cycle(Graph(0))

    def test_long_path_tree_is_rejected(self):
        with pytest.raises(Not2K2Free) as exc:
            find_edge_dominating_cycle(path_graph(6))
        assert exc.value.witness.is_valid_in(path_graph(6))

    def test_dead_end_reports_induced_2k2(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)])
        with pytest.raises(Not2K2Free) as exc:
            find_edge_dominating_cycle(g)
        assert exc.value.witness.edges == ((0, 1), (3, 4))
        assert exc.value.witness.is_valid_in(g)

    def test_trace_json(self):
        g = gen_split_graph(20, "1/2", 5)
        _, trace = find_edge_dominating_cycle(g)
        doc = json.loads(json.dumps(trace.to_json()))
        assert doc[0]["case"] == "START_CYCLE"
        assert {d["case"] for d in doc} <= set(CASE_TAGS)


class TestTriangleVariant:
    def test_k3(self):
        g = complete_graph(3)
        c, _ = find_edge_dominating_cycle_with_triangle(g, Triangle((0, 1, 2)))
        assert c.vertices == (0, 1, 2)

    def test_net(self, net):
        c, _ = find_edge_dominating_cycle_with_triangle(net, find_triangle(net))
        assert set(c.vertices) == {1, 2, 4}
        assert check_edge_dominating(net, CycleW(c))

    def test_triangle_plus_edge(self):
        g = Graph(5, [(0, 1), (1, 2), (0, 2), (3, 4), (0, 3), (1, 4)])
        c, trace = find_edge_dominating_cycle_with_triangle(g, Triangle((0, 1, 2)))
        assert c.vertices == (0, 3, 4, 1, 2)  # cyclically 2,0,3,4,1
        assert (c.vertices[-2], c.vertices[-1], c.vertices[0]) == (1, 2, 0)
        assert [s.case for s in trace.growth_steps] == ["C2"]

    def test_not_a_triangle(self):
        with pytest.raises(NotATriangle):
            find_edge_dominating_cycle_with_triangle(cycle_graph(5), Triangle((0, 1, 2)))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(4, 30), st.sampled_from(["1/4", "1/2", "1"]), st.integers(0, 2**40))
    def test_triangle_stays_parked(self, n, density, seed):
        g = gen_2k2_free_perturbed(gen_split_graph(n, density, seed), 3, seed)
        tri = find_triangle(g)
        if tri is None or g.m == 0:
            return
        try:
            c, trace = find_edge_dominating_cycle_with_triangle(g, tri)
        except NotConnected:
            return
        assert check_edge_dominating(g, CycleW(c))
        assert_trace_sound(g, trace)
        for s in trace.steps:
            a, b, x = s.cycle_after[-2], s.cycle_after[-1], s.cycle_after[0]
            assert {a, b, x} == set(tri.vertices)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 35), st.sampled_from(["1/4", "1/2", "3/4", "1"]), st.integers(0, 2**40),
       st.integers(0, 6))
def test_random_split_graphs(n, density, seed, extra):
    g = gen_2k2_free_perturbed(gen_split_graph(n, density, seed), extra, seed + 1)
    try:
        w, trace = find_edge_dominating_cycle(g)
    except NotConnected:
        return
    assert check_edge_dominating(g, w)
    assert_trace_sound(g, trace)


def test_corpus_traces(corpus_graphs):
    for label, g in corpus_graphs:
        w, trace = find_edge_dominating_cycle(g)
        assert check_edge_dominating(g, w), label
        assert_trace_sound(g, trace)


def test_cross_oracle_small(corpus_graphs):
    checked = 0
    for label, g in corpus_graphs:
        if g.n > 9:
            continue
        w, _ = find_edge_dominating_cycle(g)
        if len(w.vertex_set) >= 3:
            best = brute_force_dominating_cycle(g)
            assert best is not None and len(best) <= len(w.vertex_set), label
            checked += 1
    assert checked > 50
