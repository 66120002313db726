"""k-walks built from an edge-dominating witness and a capacitated matching.

Everything off the witness is an independent set ``D``.  Matching ``D`` into
the witness with every witness vertex used at most ``k - 1`` times and
doubling the matched edges gives a k-walk.  When no such matching exists the
Hall violator becomes an explicit cutset whose toughness ratio is below
``1/(k-1)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    InvalidWitness,
    KTooSmall,
    NoNeighborInWitness,
    NotConnected,
    NotDominating,
    PreconditionViolated,
)
from .graph_core import (
    CycleW,
    DominatingWitness,
    Edge,
    EdgeW,
    Graph,
    count_components_without,
    is_connected,
    norm_edge,
)


@dataclass(frozen=True)
class CapacitatedMatching:
    pairs: dict[int, int]
    capacity: int

    def edges(self) -> list[Edge]:
        return sorted(norm_edge(d, t) for d, t in self.pairs.items())

    def load(self) -> Counter:
        return Counter(self.pairs.values())


@dataclass(frozen=True)
class HallViolator:
    """Outside vertices ``D0`` with ``capacity * |N(D0) & targets| < |D0|``."""

    vertices: frozenset[int]
    neighborhood: frozenset[int]
    capacity: int


@dataclass(frozen=True)
class ToughnessCertificate:
    cutset: frozenset[int]
    components: int
    bound: Fraction

    @classmethod
    def from_cutset(cls, g: Graph, cutset: Iterable[int]) -> "ToughnessCertificate":
        s = frozenset(cutset)
        c = count_components_without(g, s)
        if c < 2:
            raise ValueError(f"removing {sorted(s)} leaves {c} component(s)")
        return cls(s, c, Fraction(len(s), c))

    def is_valid_in(self, g: Graph) -> bool:
        if not all(0 <= v < g.n for v in self.cutset):
            return False
        c = count_components_without(g, self.cutset)
        return c == self.components and c >= 2 and self.bound == Fraction(len(self.cutset), c)

    def to_json(self) -> dict:
        return {
            "cutset": sorted(self.cutset),
            "components": self.components,
            "bound": str(self.bound),
        }


@dataclass(frozen=True)
class KWalk:
    k: int
    edge_multiset: dict[Edge, int]
    traversal: tuple[int, ...]

    def degrees(self, n: int) -> list[int]:
        deg = [0] * n
        for (u, v), mult in self.edge_multiset.items():
            deg[u] += mult
            deg[v] += mult
        return deg

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "edges": [[u, v, m] for (u, v), m in sorted(self.edge_multiset.items())],
            "traversal": list(self.traversal),
        }


def capacitated_matching(g: Graph, targets: Iterable[int], outside: Iterable[int],
                         c: int) -> CapacitatedMatching | HallViolator:
    """Saturate ``outside`` into ``targets`` with at most ``c`` partners per
    target, or return a Hall violator.

    This is a max flow on source -> outside (unit) -> targets -> sink
    (capacity ``c``), computed by augmenting paths.  Neighbours of outside
    vertices that are not targets are ignored.  The violator is the outside
    part of the largest min-cut source side: everything that cannot reach
    the sink in the residual network.
    """
    if c < 1:
        raise ValueError("capacity must be positive")
    tset = frozenset(targets)
    dlist = sorted(set(outside))
    if tset & set(dlist):
        raise PreconditionViolated("targets and outside vertices overlap")
    for i, a in enumerate(dlist):
        for b in dlist[i + 1:]:
            if g.has_edge(a, b):
                raise PreconditionViolated(f"outside set is not independent: edge {a}-{b}")

    nbrs = {d: [t for t in g.neighbors(d) if t in tset] for d in dlist}
    assigned: dict[int, list[int]] = {t: [] for t in tset}
    match: dict[int, int] = {}

    def augment(d: int, seen: set[int]) -> bool:
        for t in nbrs[d]:
            if t in seen:
                continue
            seen.add(t)
            if len(assigned[t]) < c:
                assigned[t].append(d)
                match[d] = t
                return True
            for other in list(assigned[t]):
                if augment(other, seen):
                    assigned[t].remove(other)
                    assigned[t].append(d)
                    match[d] = t
                    return True
        return False

    for d in dlist:
        augment(d, set())

    if len(match) == len(dlist):
        return CapacitatedMatching(dict(sorted(match.items())), c)

    # Backward search from the sink in the residual network.
    reach_t = {t for t in tset if len(assigned[t]) < c}
    reach_d: set[int] = set()
    frontier = list(reach_t)
    while frontier:
        t = frontier.pop()
        for d in dlist:
            if d not in reach_d and t in nbrs[d]:
                reach_d.add(d)
                t2 = match.get(d)
                if t2 is not None and t2 not in reach_t:
                    reach_t.add(t2)
                    frontier.append(t2)
    d0 = frozenset(d for d in dlist if d not in reach_d)
    nd0 = frozenset(t for d in d0 for t in nbrs[d])
    assert c * len(nd0) < len(d0)
    return HallViolator(d0, nd0, c)


def _check_witness(g: Graph, w: DominatingWitness) -> frozenset[int]:
    if not w.is_valid_in(g):
        raise InvalidWitness(f"{w} is not a subgraph of the graph")
    vs = w.vertex_set
    for u, v in g.edges:
        if u not in vs and v not in vs:
            raise NotDominating(f"edge ({u}, {v}) is not dominated by {w}")
    return vs


def euler_circuit(n: int, multiset: dict[Edge, int], start: int) -> tuple[int, ...]:
    """Hierholzer's algorithm on an edge multiset; neighbours are taken in
    ascending order so the result is canonical."""
    remaining = {e: m for e, m in multiset.items() if m > 0}
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(remaining):
        adj[u].append(v)
        adj[v].append(u)
    ptr = [0] * n
    stack = [start]
    circuit = []
    while stack:
        u = stack[-1]
        while ptr[u] < len(adj[u]) and remaining.get(norm_edge(u, adj[u][ptr[u]]), 0) == 0:
            ptr[u] += 1
        if ptr[u] == len(adj[u]):
            circuit.append(stack.pop())
        else:
            v = adj[u][ptr[u]]
            remaining[norm_edge(u, v)] -= 1
            stack.append(v)
    return tuple(reversed(circuit))


def violator_certificate(g: Graph, hv: HallViolator, extra: Iterable[int] = ()
                         ) -> ToughnessCertificate:
    """Cut out ``N(D0)`` (plus ``extra``), isolating every vertex of ``D0``."""
    return ToughnessCertificate.from_cutset(g, hv.neighborhood | frozenset(extra))


def _prepare(g: Graph, w: DominatingWitness) -> tuple[frozenset[int], list[int]]:
    if g.n < 2:
        raise PreconditionViolated("k-walks need at least two vertices")
    if not is_connected(g):
        raise NotConnected("input graph must be connected")
    vs = _check_witness(g, w)
    return vs, [v for v in g.vertices() if v not in vs]


def build_k_walk(g: Graph, w: DominatingWitness, k: int) -> KWalk | ToughnessCertificate:
    if k < 2:
        raise KTooSmall("k must be at least 2")
    targets, outside = _prepare(g, w)
    res = capacitated_matching(g, targets, outside, k - 1)
    if isinstance(res, HallViolator):
        cert = violator_certificate(g, res)
        assert cert.bound < Fraction(1, k - 1)
        return cert

    mult: Counter = Counter()
    if isinstance(w, CycleW):
        for e in w.cycle.edges():
            mult[e] += 1
    elif isinstance(w, EdgeW):
        mult[w.edge] += 2
    for e in res.edges():
        mult[e] += 2
    multiset = dict(sorted(mult.items()))
    return KWalk(k, multiset, euler_circuit(g.n, multiset, 0))


def minimal_construction_k(g: Graph, w: DominatingWitness) -> int:
    """Smallest k >= 2 for which :func:`build_k_walk` yields a walk."""
    targets, outside = _prepare(g, w)
    for d in outside:
        if not any(t in targets for t in g.neighbors(d)):
            raise NoNeighborInWitness(f"vertex {d} has no neighbour in the witness")
    k = 2
    while isinstance(capacitated_matching(g, targets, outside, k - 1), HallViolator):
        k += 1
    return k
