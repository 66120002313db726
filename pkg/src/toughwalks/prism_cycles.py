"""Hamiltonian cycles in the prism over a graph.

A prism cycle is a tuple of ``(vertex, layer)`` pairs.  Both templates walk
the edge-dominating cycle ``C`` in the two layers; every vertex ``u`` off the
cycle is matched to a cycle vertex ``v`` whose rung ``(v,0)-(v,1)`` is on the
template, and that rung is replaced by the detour ``(v,0) (u,0) (u,1) (v,1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domcycle import find_edge_dominating_cycle_with_triangle
from .errors import (
    EvenCycle,
    Not2K2Free,
    NotConnected,
    NotDominating,
    OddCycle,
    PreconditionViolated,
    TriangleMissing,
)
from .graph_core import Cycle, Graph, is_connected
from .kwalk import HallViolator, ToughnessCertificate, capacitated_matching, violator_certificate
from .oracles import DEFAULT_HAM_BUDGET, brute_force_hamiltonian
from .recognition import find_triangle, is_2k2_free

Node = tuple[int, int]


@dataclass(frozen=True)
class PrismCycle:
    nodes: tuple[Node, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def rungs(self) -> list[int]:
        """Vertices whose rung is used by the cycle."""
        seq = self.nodes
        out = []
        for i, (v, layer) in enumerate(seq):
            w, other = seq[(i + 1) % len(seq)]
            if v == w and layer != other:
                out.append(v)
        return out

    def to_json(self) -> list[list[int]]:
        return [[v, layer] for v, layer in self.nodes]


@dataclass(frozen=True)
class Failure:
    reason: str
    certificate: ToughnessCertificate | None = None

    def to_json(self) -> dict:
        out: dict = {"reason": self.reason}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def _check_cycle(g: Graph, c: Cycle) -> list[int]:
    if not c.is_valid_in(g):
        raise PreconditionViolated(f"{c.vertices} is not a cycle of the graph")
    if not is_connected(g):
        raise NotConnected("input graph must be connected")
    on = set(c.vertices)
    for u, v in g.edges:
        if u not in on and v not in on:
            raise NotDominating(f"edge ({u}, {v}) is not dominated by the cycle")
    return [v for v in g.vertices() if v not in on]


def _splice(template: list[Node], pairs: dict[int, int]) -> PrismCycle:
    host = {v: u for u, v in pairs.items()}
    out: list[Node] = []
    size = len(template)
    for i, (v, layer) in enumerate(template):
        out.append((v, layer))
        w, other = template[(i + 1) % size]
        if w == v and v in host:
            u = host[v]
            out.extend([(u, layer), (u, other)])
    return PrismCycle(tuple(out))


def even_template(vs: list[int]) -> list[Node]:
    """v1 v1' v2' v2 v3 v3' v4' v4 ... v_{2p} (then back to v1)."""
    out: list[Node] = []
    for i in range(0, len(vs), 2):
        a, b = vs[i], vs[i + 1]
        out += [(a, 0), (a, 1), (b, 1), (b, 0)]
    return out


def odd_template(vs: list[int], q: int) -> list[Node]:
    """v1 v2 v2' v3' v3 ... v_{2q} v_{2q}' v1' v_{2q+1}' v_{2q+1} ... v_{2p+1}.

    ``vs`` is 0-based, so ``v_j`` is ``vs[j - 1]``.
    """
    v = lambda j: vs[j - 1]  # noqa: E731
    p = (len(vs) - 1) // 2
    out: list[Node] = [(v(1), 0)]
    for j in range(2, 2 * q, 2):
        out += [(v(j), 0), (v(j), 1), (v(j + 1), 1), (v(j + 1), 0)]
    out += [(v(2 * q), 0), (v(2 * q), 1), (v(1), 1), (v(2 * q + 1), 1), (v(2 * q + 1), 0)]
    for j in range(2 * q + 2, 2 * p + 1, 2):
        out += [(v(j), 0), (v(j), 1), (v(j + 1), 1), (v(j + 1), 0)]
    return out


def prism_ham_even(g: Graph, c: Cycle) -> PrismCycle | ToughnessCertificate:
    if len(c) % 2:
        raise OddCycle(f"cycle has odd length {len(c)}")
    outside = _check_cycle(g, c)
    res = capacitated_matching(g, c.vertices, outside, 1)
    if isinstance(res, HallViolator):
        return violator_certificate(g, res)
    return _splice(even_template(list(c.vertices)), res.pairs)


def prism_ham_odd(g: Graph, c: Cycle, q: int) -> PrismCycle | ToughnessCertificate:
    """Odd template; needs ``v1, v_{2q}, v_{2q+1}`` pairwise adjacent.

    The rung at ``v1`` is not on the template, so off-cycle vertices are
    matched into the other ``2p`` cycle vertices only.
    """
    k = len(c)
    if k % 2 == 0:
        raise EvenCycle(f"cycle has even length {k}")
    p = (k - 1) // 2
    if not 1 <= q <= p:
        raise PreconditionViolated(f"q must lie in 1..{p}")
    vs = list(c.vertices)
    outside = _check_cycle(g, c)
    if not g.has_edge(vs[0], vs[2 * q - 1]) or not g.has_edge(vs[0], vs[2 * q]):
        raise TriangleMissing(f"v1, v_{2 * q}, v_{2 * q + 1} do not form a triangle")
    res = capacitated_matching(g, vs[1:], outside, 1)
    if isinstance(res, HallViolator):
        # Cutting v1 as well isolates D0: |S| <= |D0| <= components.
        return violator_certificate(g, res, extra=(vs[0],))
    return _splice(odd_template(vs, q), res.pairs)


def _odd_labelings(g: Graph, vs: list[int]):
    """(relabelled cycle, q) for each triangle vertex as v1 and both
    orientations, preferring q = p."""
    k = len(vs)
    p = (k - 1) // 2
    tri = (vs[0], vs[-2], vs[-1])  # X', X'', X as left by the growth step
    seen = set()
    for v1 in tri:
        i = vs.index(v1)
        for forward in (True, False):
            R = vs[i:] + vs[:i] if forward else vs[i::-1] + vs[:i:-1]
            qs = [q for q in range(p, 0, -1)
                  if g.has_edge(R[0], R[2 * q - 1]) and g.has_edge(R[0], R[2 * q])]
            if qs and (tuple(R), qs[0]) not in seen:
                seen.add((tuple(R), qs[0]))
                yield R, qs[0]


def _doubled(cycle: tuple[int, ...]) -> PrismCycle:
    """Layer 0 along the cycle, across, layer 1 back, across again."""
    return PrismCycle(tuple((v, 0) for v in cycle) + tuple((v, 1) for v in reversed(cycle)))


def prism_hamiltonian(g: Graph, ham_budget: int = DEFAULT_HAM_BUDGET
                      ) -> PrismCycle | Failure:
    """Hamiltonian cycle in the prism over a connected 2K2-free graph.

    Graphs with a triangle go through the triangle-preserving dominating
    cycle and one of the two templates.  Triangle-free inputs are handed to
    an exact backtracking search for a Hamiltonian cycle of ``g`` itself.
    """
    if g.n < 2 or not is_connected(g):
        raise NotConnected("input graph must be connected with at least two vertices")
    check = is_2k2_free(g)
    if not check:
        raise Not2K2Free(check.witness)
    if g.n == 2:
        return PrismCycle(((0, 0), (1, 0), (1, 1), (0, 1)))

    tri = find_triangle(g)
    if tri is None:
        ham = brute_force_hamiltonian(g, budget=ham_budget)
        if ham is None:
            return Failure("exact-search-exhausted")
        if len(ham) % 2 == 0:
            return _splice(even_template(list(ham)), {})
        return _doubled(ham)

    c, _ = find_edge_dominating_cycle_with_triangle(g, tri)
    if len(c) % 2 == 0:
        res = prism_ham_even(g, c)
        return res if isinstance(res, PrismCycle) else Failure("hall-violation", res)

    best: ToughnessCertificate | None = None
    for R, q in _odd_labelings(g, list(c.vertices)):
        res = prism_ham_odd(g, Cycle(tuple(R)), q)
        if isinstance(res, PrismCycle):
            return res
        if best is None or res.bound < best.bound:
            best = res
    assert best is not None and best.bound <= Fraction(1)
    return Failure("hall-violation", best)
