"""Brute-force verifiers and exact small-instance solvers.

These are deliberately naive and share no code with the constructive
modules beyond reading ``Graph.n`` and ``Graph.edges``: they are the ground
truth the rest of the package is tested against.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from fractions import Fraction
from itertools import combinations

from .errors import BudgetExceeded

DEFAULT_HAM_BUDGET = 1_000_000
DEFAULT_DOMCYCLE_BUDGET = 5_000_000
TOUGHNESS_MAX_N = 20
DOMCYCLE_MAX_N = 14

#: Toughness of complete graphs, which have no separating set.
INFINITE = math.inf


def env_budget(default: int) -> int:
    raw = os.environ.get("TOUGHWALKS_BUDGET")
    return int(raw) if raw else default


def _adjacency(g) -> list[set[int]]:
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _count_components(adj: list[set[int]], alive: set[int]) -> int:
    seen: set[int] = set()
    count = 0
    for s in alive:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in alive and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def _witness_vertices_and_edges(w):
    """Vertex set and required edges of a dominating witness, duck-typed."""
    if hasattr(w, "cycle"):
        vs = list(w.cycle.vertices)
        return set(vs), [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))], len(vs) >= 3
    if hasattr(w, "edge"):
        return set(w.edge), [tuple(w.edge)], w.edge[0] != w.edge[1]
    return {w.vertex}, [], True


def check_edge_dominating(g, w) -> bool:
    vs, needed, ok = _witness_vertices_and_edges(w)
    if not ok or not all(0 <= v < g.n for v in vs):
        return False
    if hasattr(w, "cycle") and len(vs) != len(w.cycle.vertices):
        return False
    edges = set(g.edges)
    if any((min(a, b), max(a, b)) not in edges for a, b in needed):
        return False
    return all(u in vs or v in vs for u, v in g.edges)


def check_k_walk(g, w) -> bool:
    """Validate a KWalk: spanning, connected, even degrees at most 2k,
    multiplicities at most 2k, and a traversal that uses every copy of
    every edge exactly once."""
    k = w.k
    if k < 1:
        return False
    edges = set(g.edges)
    deg = [0] * g.n
    adj = [set() for _ in range(g.n)]
    for (u, v), mult in w.edge_multiset.items():
        if (min(u, v), max(u, v)) not in edges or not 1 <= mult <= 2 * k:
            return False
        deg[u] += mult
        deg[v] += mult
        adj[u].add(v)
        adj[v].add(u)
    if g.n >= 2 and any(d < 2 for d in deg):
        return False
    if any(d % 2 or d > 2 * k for d in deg):
        return False
    if _count_components(adj, set(range(g.n))) != (1 if g.n else 0):
        return False

    t = list(w.traversal)
    if not t or t[0] != t[-1] or set(t) != set(range(g.n)):
        return False
    used = Counter((min(a, b), max(a, b)) for a, b in zip(t, t[1:]))
    if used != Counter({(min(u, v), max(u, v)): m for (u, v), m in w.edge_multiset.items()}):
        return False
    visits = Counter(t[:-1])
    return all(c <= k for c in visits.values())


def check_prism_cycle(g, pc) -> bool:
    nodes = list(pc.nodes)
    want = {(v, layer) for v in range(g.n) for layer in (0, 1)}
    if len(nodes) != 2 * g.n or set(nodes) != want:
        return False
    if len(nodes) < 3:
        return False
    edges = set(g.edges)
    for i, (v, a) in enumerate(nodes):
        w, b = nodes[(i + 1) % len(nodes)]
        if v == w:
            if a == b:
                return False
        elif a != b or (min(v, w), max(v, w)) not in edges:
            return False
    return True


def brute_force_toughness(g, force: bool = False) -> Fraction | float:
    """min |S| / c(G - S) over all S with at least two components left."""
    if g.n > TOUGHNESS_MAX_N and not force:
        raise BudgetExceeded(f"toughness brute force limited to n <= {TOUGHNESS_MAX_N}")
    adj = _adjacency(g)
    everything = set(range(g.n))
    best: Fraction | float = INFINITE
    for size in range(g.n - 1):
        if best != INFINITE and Fraction(size, g.n - size) >= best:
            break  # c(G - S) <= n - |S|, so larger S cannot improve
        for s in combinations(range(g.n), size):
            c = _count_components(adj, everything - set(s))
            if c >= 2 and Fraction(size, c) < best:
                best = Fraction(size, c)
    return best


def brute_force_hamiltonian(g, budget: int | None = DEFAULT_HAM_BUDGET
                            ) -> tuple[int, ...] | None:
    """Exact backtracking; a Hamiltonian cycle starting at 0, or None.

    Prunes on (a) every unvisited vertex keeping two usable neighbours and
    (b) the unvisited vertices staying connected to both path ends.  Moves
    with the fewest onward options are tried first.
    """
    n = g.n
    if n < 3:
        return None
    nb = [0] * n
    for u, v in g.edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    if any(x.bit_count() < 2 for x in nb):
        return None
    full = (1 << n) - 1
    nodes = 0
    path = [0]

    def bits(mask):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def feasible(head: int, free: int) -> bool:
        if not free:
            return bool(nb[head] & 1)
        ends = (1 << head) | 1
        for v in bits(free):
            if (nb[v] & (free | ends)).bit_count() < 2:
                return False
        # free vertices must form one piece reachable from the head
        seen = low = free & -free
        frontier = low
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= nb[v]
            frontier = grow & free & ~seen
            seen |= frontier
        return seen == free and bool(nb[head] & free) and bool(nb[0] & free)

    def extend(head: int, free: int) -> bool:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"Hamiltonian search exceeded {budget} nodes")
        if not free:
            return bool(nb[head] & 1)
        options = sorted(bits(nb[head] & free), key=lambda w: (nb[w] & free).bit_count())
        for w in options:
            rest = free & ~(1 << w)
            if feasible(w, rest):
                path.append(w)
                if extend(w, rest):
                    return True
                path.pop()
        return False

    return tuple(path) if extend(0, full & ~1) else None


def brute_force_dominating_cycle(g, budget: int | None = DEFAULT_DOMCYCLE_BUDGET
                                 ) -> tuple[int, ...] | None:
    """A shortest edge-dominating cycle, by enumerating cycles of length
    3, 4, ... each rooted at its smallest vertex."""
    n = g.n
    if n > DOMCYCLE_MAX_N:
        raise BudgetExceeded(f"dominating-cycle brute force limited to n <= {DOMCYCLE_MAX_N}")
    adj = [sorted(s) for s in _adjacency(g)]
    nodes = 0

    def dominates(cyc) -> bool:
        s = set(cyc)
        return all(u in s or v in s for u, v in g.edges)

    def paths(length: int, path: list[int]):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded(f"dominating-cycle search exceeded {budget} nodes")
        if len(path) == length:
            # orient so each cycle is seen once
            if path[0] in adj[path[-1]] and path[1] < path[-1]:
                yield tuple(path)
            return
        for w in adj[path[-1]]:
            if w > path[0] and w not in path:
                path.append(w)
                yield from paths(length, path)
                path.pop()

    for length in range(3, n + 1):
        for root in range(n):
            for cyc in paths(length, [root]):
                if dominates(cyc):
                    return cyc
    return None


def _min_connectivity_ok(g, need: int) -> bool:
    """True iff g stays connected after deleting any < need vertices."""
    if need <= 0:
        return True
    if g.n <= need:
        return False
    adj = _adjacency(g)
    everything = set(range(g.n))
    for size in range(need):
        for s in combinations(range(g.n), size):
            if _count_components(adj, everything - set(s)) != 1:
                return False
    return True


def veldman_condition(g, l: int, budget: int | None = 1_000_000) -> bool:
    """(l-1)-connected, and every induced lK2 has degree sum at least
    (l-1)(n-l+1)/2."""
    from .recognition import iter_induced_lk2

    if l < 2:
        raise ValueError("l must be at least 2")
    if not _min_connectivity_ok(g, l - 1):
        return False
    adj = _adjacency(g)
    threshold = (l - 1) * (g.n - l + 1)
    for h in iter_induced_lk2(g, l, budget=budget):
        if 2 * sum(len(adj[v]) for e in h.edges for v in e) < threshold:
            return False
    return True
