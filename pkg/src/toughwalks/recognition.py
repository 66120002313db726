"""Induced matchings (lK2), 2K2-freeness and triangles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceeded
from .graph_core import Edge, Graph, iter_bits, lowest_bit, norm_edge

DEFAULT_LK2_BUDGET = 5_000_000


@dataclass(frozen=True)
class InducedMatchingWitness:
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple(sorted(norm_edge(u, v) for u, v in self.edges))
        )

    def vertices(self) -> list[int]:
        return [v for e in self.edges for v in e]

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices()
        if len(set(vs)) != len(vs) or not all(0 <= v < g.n for v in vs):
            return False
        listed = set(self.edges)
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                if g.has_edge(a, b) != (norm_edge(a, b) in listed):
                    return False
        return True

    def to_json(self) -> list[list[int]]:
        return [list(e) for e in self.edges]


@dataclass(frozen=True)
class Triangle:
    vertices: tuple[int, int, int]

    def is_valid_in(self, g: Graph) -> bool:
        a, b, c = self.vertices
        return len({a, b, c}) == 3 and g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)


def iter_induced_lk2(g: Graph, l: int, budget: int | None = DEFAULT_LK2_BUDGET
                     ) -> Iterator[InducedMatchingWitness]:
    """Yield every induced lK2 exactly once, in lexicographic order of the
    sorted edge tuple.

    The search extends a partial matching by edges whose smaller endpoint
    exceeds every previous smaller endpoint, restricted to vertices outside
    the closed neighbourhoods already used.
    """
    if l < 1:
        raise ValueError("l must be a positive integer")
    nodes = 0
    chosen: list[Edge] = []

    def extend(free: int) -> Iterator[InducedMatchingWitness]:
        nonlocal nodes
        for a in iter_bits(free):
            for b in iter_bits(g.adj(a) & free & ~((2 << a) - 1)):
                nodes += 1
                if budget is not None and nodes > budget:
                    raise BudgetExceeded(f"induced {l}K2 search exceeded {budget} nodes")
                chosen.append((a, b))
                if len(chosen) == l:
                    yield InducedMatchingWitness(tuple(chosen))
                else:
                    closed = g.adj(a) | g.adj(b) | (1 << a) | (1 << b)
                    yield from extend(free & ~closed & ~((2 << a) - 1))
                chosen.pop()

    yield from extend(g.all_mask)


def find_induced_lk2(g: Graph, l: int, budget: int | None = DEFAULT_LK2_BUDGET
                     ) -> InducedMatchingWitness | None:
    """Lexicographically smallest induced lK2, or None."""
    return next(iter_induced_lk2(g, l, budget), None)


@dataclass(frozen=True)
class FreenessCheck:
    free: bool
    witness: InducedMatchingWitness | None = None

    def __bool__(self) -> bool:
        return self.free


def is_2k2_free(g: Graph) -> FreenessCheck:
    w = find_induced_lk2(g, 2, budget=None)
    return FreenessCheck(w is None, w)


def find_triangle(g: Graph) -> Triangle | None:
    """The lexicographically smallest triangle (u < v < w), or None."""
    for u, v in g.edges:
        common = g.adj(u) & g.adj(v) & ~((2 << v) - 1)
        if common:
            return Triangle((u, v, lowest_bit(common)))
    return None
