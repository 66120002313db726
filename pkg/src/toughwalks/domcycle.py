"""Edge-dominating cycles in 2K2-free graphs.

The cycle is grown one undominated edge at a time. Every step either makes
the cycle longer or keeps its length and strictly lowers the number ``t`` of
undominated edges, so at most ``|E|**2`` steps are taken.

Cycles are handled as lists ``L`` rotated so that the attachment vertex is
``L[0]`` (x1) and the vertex it is about to be separated from is ``L[1]``
(x2).  All growth operations only touch ``L[0:3]``, which is what lets the
triangle variant keep its triangle parked at ``L[-2], L[-1], L[0]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Not2K2Free, NotATriangle, NotConnected
from .graph_core import (
    Cycle,
    CycleW,
    DominatingWitness,
    EdgeW,
    Graph,
    VertexW,
    find_any_cycle,
    is_connected,
    iter_bits,
    lowest_bit,
    norm_edge,
    vertex_mask,
)
from .recognition import InducedMatchingWitness, Triangle, find_induced_lk2

CASE_TAGS = ("C1", "C2", "C3a", "C3b_i", "C3b_ii",
             "START_TREE", "START_CYCLE", "START_TRIANGLE")


@dataclass(frozen=True)
class GrowthStep:
    case: str
    cycle_before: tuple[int, ...] | None
    undominated_edge: tuple[int, int] | None
    cycle_after: tuple[int, ...]
    t_before: int | None
    t_after: int

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "cycle_before": None if self.cycle_before is None else list(self.cycle_before),
            "undominated_edge": None if self.undominated_edge is None else list(self.undominated_edge),
            "cycle_after": list(self.cycle_after),
            "t_before": self.t_before,
            "t_after": self.t_after,
        }


@dataclass
class GrowthTrace:
    steps: list[GrowthStep] = field(default_factory=list)

    @property
    def growth_steps(self) -> list[GrowthStep]:
        return [s for s in self.steps if not s.case.startswith("START")]

    def __len__(self) -> int:
        return len(self.growth_steps)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


def undominated_count(g: Graph, on: int) -> int:
    rest = g.all_mask & ~on
    return sum((g.adj(u) & rest).bit_count() for u in iter_bits(rest)) // 2


def smallest_undominated_edge(g: Graph, on: int) -> tuple[int, int] | None:
    # The smallest vertex off the cycle with a neighbour off the cycle is the
    # smaller endpoint of the lexicographically smallest undominated edge.
    rest = g.all_mask & ~on
    for u in iter_bits(rest):
        nb = g.adj(u) & rest
        if nb:
            return u, lowest_bit(nb)
    return None


def _witness(e1, e2) -> InducedMatchingWitness:
    return InducedMatchingWitness((norm_edge(*e1), norm_edge(*e2)))


def _grow(g: Graph, L: list[int], on: int, v1: int, v2: int):
    """One step of the case analysis with x1 = L[0] adjacent to v1, x2 = L[1].

    Returns ``(case, new_list)``, or ``(None, witness)`` if the analysis
    dead-ends, which exhibits an induced 2K2.
    """
    has = g.has_edge
    x1, x2, x3 = L[0], L[1], L[2]
    if has(x2, v1):
        return "C1", [x1, v1] + L[1:]
    if has(x2, v2):
        return "C2", [x1, v1, v2] + L[1:]
    # x2 sees neither endpoint; the pair {v1v2, x2x3} forces x3 to see one.
    if has(x3, v2):
        return "C3a", [x1, v1, v2] + L[2:]
    if not has(x3, v1):
        return None, _witness((v1, v2), (x2, x3))
    off_cycle = g.adj(x2) & ~on
    if not off_cycle:
        return "C3b_i", [x1, v1] + L[2:]
    z = lowest_bit(off_cycle)
    if has(z, v1):
        return "C3b_ii", [x1, v1, z] + L[1:]
    if has(z, v2):
        return "C3b_ii", [x1, v1, v2, z] + L[1:]
    return None, _witness((v1, v2), (x2, z))


def _rotate(L: list[int], i: int, forward: bool) -> list[int]:
    """Relabel the cycle so position ``i`` comes first, walking forward or
    backward."""
    if forward:
        return L[i:] + L[:i]
    R = L[i::-1] + L[:i:-1]
    return R


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnected("input graph must be connected and nonempty")


def _tree_witness(g: Graph) -> DominatingWitness:
    for v in g.vertices():
        if g.degree(v) == g.n - 1:
            return VertexW(v)
    for u, v in g.edges:
        if g.degree(u) + g.degree(v) - 1 == g.m:
            return EdgeW((u, v))
    raise Not2K2Free(find_induced_lk2(g, 2, budget=None))


def _record(trace, case, before, edge, after, t_before, t_after):
    if before is not None:
        grew = len(after) > len(before)
        assert grew or (len(after) == len(before) and t_after < t_before), (
            f"no progress at step {case}")
    trace.steps.append(GrowthStep(case, None if before is None else tuple(before),
                                  edge, tuple(after), t_before, t_after))


def find_edge_dominating_cycle(g: Graph) -> tuple[DominatingWitness, GrowthTrace]:
    """An edge-dominating cycle, edge or vertex of a connected 2K2-free graph.

    Raises :class:`Not2K2Free` with an induced 2K2 if the growth procedure
    gets stuck, which can only happen when the input is not 2K2-free.
    """
    _require_connected(g)
    trace = GrowthTrace()
    start = find_any_cycle(g)
    if start is None:
        w = _tree_witness(g)
        _record(trace, "START_TREE", None, None, sorted(w.vertex_set), None,
                undominated_count(g, vertex_mask(w.vertex_set)))
        return w, trace

    L = list(start.vertices)
    on = vertex_mask(L)
    t = undominated_count(g, on)
    _record(trace, "START_CYCLE", None, None, L, None, t)
    while True:
        edge = smallest_undominated_edge(g, on)
        if edge is None:
            return CycleW(Cycle(tuple(L))), trace
        result = None
        failure = None
        for a, b in (edge, edge[::-1]):
            pos = next((i for i, x in enumerate(L) if g.has_edge(x, a)), None)
            if pos is None:
                continue
            for forward in (True, False):
                case, out = _grow(g, _rotate(L, pos, forward), on, a, b)
                if case is not None:
                    result = case, out
                    break
                failure = failure or out
            if result:
                break
        if result is None:
            raise Not2K2Free(failure or _witness(edge, (L[0], L[1])))
        case, new_L = result
        new_on = vertex_mask(new_L)
        new_t = undominated_count(g, new_on)
        _record(trace, case, L, edge, new_L, t, new_t)
        L, on, t = new_L, new_on, new_t


def _is_parked(g: Graph, L: list[int], tri: frozenset[int]) -> bool:
    a, b, c = L[-2], L[-1], L[0]
    return {a, b, c} == tri and g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)


def _triangle_labelings(g: Graph, L: list[int], v1: int, v2: int):
    """Candidate relabelings ``(list, a, b)`` that keep the triangle at
    ``L[-2], L[-1], L[0]`` and attach ``a`` to ``L[0]``."""
    has = g.has_edge
    if len(L) == 3:
        # Any rotation of a bare triangle is parked; pick one where x2 is also
        # attached so that only the inserting cases C1/C2 fire.
        for a, b in ((v1, v2), (v2, v1)):
            for forward in (True, False):
                for i in range(3):
                    R = _rotate(L, i, forward)
                    if has(R[0], a) and (has(R[1], a) or has(R[1], b)):
                        yield R, a, b
        return
    reflected = L[::-1]
    reflected = reflected[1:] + reflected[:1]
    for R in (L, reflected):
        for a, b in ((v1, v2), (v2, v1)):
            if has(R[0], a):
                yield R, a, b


def find_edge_dominating_cycle_with_triangle(g: Graph, t: Triangle
                                             ) -> tuple[Cycle, GrowthTrace]:
    """An edge-dominating cycle through triangle ``t`` whose three vertices
    stay consecutive; in the returned cycle they sit at positions -2, -1, 0.
    """
    if not t.is_valid_in(g):
        raise NotATriangle(f"{t.vertices} is not a triangle of the graph")
    _require_connected(g)
    tri = frozenset(t.vertices)
    trace = GrowthTrace()
    L = list(t.vertices)
    on = vertex_mask(L)
    cnt = undominated_count(g, on)
    _record(trace, "START_TRIANGLE", None, None, L, None, cnt)
    while True:
        edge = smallest_undominated_edge(g, on)
        if edge is None:
            return Cycle(tuple(L)), trace
        result = failure = None
        for R, a, b in _triangle_labelings(g, L, *edge):
            case, out = _grow(g, R, on, a, b)
            if case is not None:
                result = case, out
                break
            failure = failure or out
        if result is None:
            if failure is None:
                failure = _dead_triangle_witness(g, L, edge)
            raise Not2K2Free(failure)
        case, new_L = result
        assert _is_parked(g, new_L, tri), "triangle left positions (k-1, k, 1)"
        new_on = vertex_mask(new_L)
        new_cnt = undominated_count(g, new_on)
        _record(trace, case, L, edge, new_L, cnt, new_cnt)
        L, on, cnt = new_L, new_on, new_cnt


def _dead_triangle_witness(g: Graph, L: list[int], edge) -> InducedMatchingWitness:
    # Neither endpoint of ``edge`` sees X' or X'' (or, at k = 3, two triangle
    # vertices are unattached); that triangle edge and ``edge`` form a 2K2.
    v1, v2 = edge
    tri = (L[-2], L[-1], L[0])
    for i in range(3):
        p, q = tri[i], tri[(i + 1) % 3]
        if not any(g.has_edge(x, y) for x in (p, q) for y in (v1, v2)):
            return _witness(edge, (p, q))
    return find_induced_lk2(g, 2, budget=None)
