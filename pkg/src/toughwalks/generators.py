"""Fixtures and seeded families of 2K2-free and 3K2-free graphs.

Randomness comes from SplitMix64 with a 64-bit seed so a corpus is
reproducible bit-for-bit on any platform.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .graph_core import Graph, is_connected, iter_bits

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def bernoulli(self, p: Fraction) -> bool:
        # exact: u / 2**64 < p
        return self.next_u64() * p.denominator < p.numerator << 64

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def fixture_net() -> Graph:
    """Triangle b-c-e with pendants a-b, d-c, f-e; a..f are 0..5."""
    return Graph(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (4, 5)])


def gen_split_graph(n: int, density, seed: int) -> Graph:
    """Random clique/independent split; cross edges kept with ``density``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    p = Fraction(density)
    if not 0 <= p <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = SplitMix64(seed)
    in_clique = [rng.next_u64() >> 63 == 1 for _ in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if in_clique[u] and in_clique[v]:
                edges.append((u, v))
            elif in_clique[u] or in_clique[v]:
                if rng.bernoulli(p):
                    edges.append((u, v))
    return Graph(n, edges)


def gen_complete_multipartite(part_sizes) -> Graph:
    sizes = list(part_sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("need at least one part, all of positive size")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]])


def _creates_2k2(adj: list[int], u: int, v: int) -> bool:
    # A new induced 2K2 must use the new edge uv; look for an edge among the
    # vertices that see neither u nor v.
    far = ((1 << len(adj)) - 1) & ~(adj[u] | adj[v] | (1 << u) | (1 << v))
    return any(adj[x] & far for x in iter_bits(far))


def gen_2k2_free_perturbed(base: Graph, extra_edges: int, seed: int) -> Graph:
    """Add up to ``extra_edges`` random non-edges, each kept only if the
    graph stays 2K2-free."""
    rng = SplitMix64(seed)
    adj = [base.adj(v) for v in base.vertices()]
    candidates = [(u, v) for u in range(base.n) for v in range(u + 1, base.n)
                  if not base.has_edge(u, v)]
    added = 0
    progress = True
    while added < extra_edges and candidates and progress:
        rng.shuffle(candidates)
        progress = False
        rejected = []
        for u, v in candidates:
            if added < extra_edges and not _creates_2k2(adj, u, v):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                added += 1
                progress = True
            else:
                rejected.append((u, v))
        candidates = rejected
    return Graph.from_adjacency(adj)


def gen_3k2_free(block_a: Graph, block_b: Graph, clique: int) -> Graph:
    """Disjoint union of two 2K2-free blocks plus ``clique`` universal
    vertices wired to each other and to everything else.

    An induced matching takes at most one edge from each block and none
    through a universal vertex, so the result is 3K2-free.
    """
    na, nb = block_a.n, block_b.n
    n = na + nb + clique
    edges = list(block_a.edges) + [(u + na, v + na) for u, v in block_b.edges]
    for k in range(na + nb, n):
        edges += [(x, k) for x in range(k)]
    return Graph(n, edges)


DENSITIES = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


def corpus(count: int = 500, seed: int = 2024, n_min: int = 4, n_max: int = 40,
           small_share: Fraction = Fraction(1, 2), small_max: int = 12
           ) -> Iterator[tuple[str, Graph]]:
    """Connected 2K2-free graphs from the three families, labelled.

    ``small_share`` of the draws use ``n <= small_max`` so the exhaustive
    oracles get a decent sample.
    """
    rng = SplitMix64(seed)
    made = 0
    while made < count:
        hi = small_max if rng.bernoulli(small_share) else n_max
        n = n_min + rng.below(hi - n_min + 1)
        family = rng.below(3)
        sub = rng.next_u64()
        if family == 0:
            density = DENSITIES[rng.below(len(DENSITIES))]
            g = gen_split_graph(n, density, sub)
            label = f"split(n={n},d={density},seed={sub})"
        elif family == 1:
            sizes = _random_parts(rng, n)
            g = gen_complete_multipartite(sizes)
            label = f"multipartite({','.join(map(str, sizes))})"
        else:
            base_density = DENSITIES[rng.below(len(DENSITIES))]
            base = gen_split_graph(n, base_density, sub)
            extra = 1 + rng.below(n)
            g = gen_2k2_free_perturbed(base, extra, sub ^ 0x5DEECE66D)
            label = f"perturbed(split(n={n},d={base_density},seed={sub}),+{extra})"
        if is_connected(g):
            made += 1
            yield label, g


def _random_parts(rng: SplitMix64, n: int) -> list[int]:
    parts = 2 + rng.below(max(1, n - 1))
    parts = min(parts, n)
    sizes = [1] * parts
    for _ in range(n - parts):
        sizes[rng.below(parts)] += 1
    return sizes


def corpus_3k2(count: int, seed: int, n_max: int = 10) -> Iterator[tuple[str, Graph]]:
    """3K2-free graphs from :func:`gen_3k2_free` with split blocks."""
    rng = SplitMix64(seed)
    for _ in range(count):
        clique = 1 + rng.below(3)
        room = n_max - clique
        na = 1 + rng.below(room - 1)
        nb = 1 + rng.below(room - na)
        sa, sb = rng.next_u64(), rng.next_u64()
        da = DENSITIES[rng.below(len(DENSITIES))]
        db = DENSITIES[rng.below(len(DENSITIES))]
        g = gen_3k2_free(gen_split_graph(na, da, sa), gen_split_graph(nb, db, sb), clique)
        yield f"3k2(split({na},{da},{sa}),split({nb},{db},{sb}),K{clique})", g
