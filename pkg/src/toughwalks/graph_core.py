"""Immutable simple graphs on vertices 0..n-1, cycles, dominating witnesses
and the prism product.

Adjacency is kept as one Python int per vertex used as a bitset, so
neighbourhood intersections are single ``&`` operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import InvalidWitness

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Simple undirected graph with canonical vertex ids ``0..n-1``.

    Instances are immutable and hashable. ``edges`` is the sorted tuple of
    normalized pairs ``(u, v)`` with ``u < v``.
    """

    __slots__ = ("_n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._edges = tuple(sorted(seen))

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        """Build from symmetric bitset rows (no validation beyond symmetry)."""
        rows = list(adj)
        edges = [(u, v) for u, row in enumerate(rows) for v in iter_bits(row) if u < v]
        return cls(len(rows), edges)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def adj(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitset."""
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (self._adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def vertices(self) -> range:
        return range(self._n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)})"


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("cycle vertices must be distinct")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [norm_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        return all(0 <= v < g.n for v in vs) and all(
            g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))
        )


@dataclass(frozen=True)
class CycleW:
    cycle: Cycle

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.cycle.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        return self.cycle.is_valid_in(g)

    def to_json(self) -> dict:
        return {"type": "cycle", "vertices": list(self.cycle.vertices)}


@dataclass(frozen=True)
class EdgeW:
    edge: Edge

    def __post_init__(self):
        u, v = self.edge
        if u == v:
            raise ValueError("edge witness needs two distinct endpoints")
        object.__setattr__(self, "edge", norm_edge(u, v))

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.edge)

    def is_valid_in(self, g: Graph) -> bool:
        u, v = self.edge
        return 0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)

    def to_json(self) -> dict:
        return {"type": "edge", "vertices": list(self.edge)}


@dataclass(frozen=True)
class VertexW:
    vertex: int

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset((self.vertex,))

    def is_valid_in(self, g: Graph) -> bool:
        return 0 <= self.vertex < g.n

    def to_json(self) -> dict:
        return {"type": "vertex", "vertices": [self.vertex]}


DominatingWitness = Union[CycleW, EdgeW, VertexW]


def witness_from_json(obj: dict) -> DominatingWitness:
    kind, vs = obj.get("type"), obj.get("vertices")
    if not isinstance(vs, list) or not all(isinstance(v, int) for v in vs):
        raise InvalidWitness(f"malformed witness vertices: {vs!r}")
    try:
        if kind == "cycle":
            return CycleW(Cycle(tuple(vs)))
        if kind == "edge" and len(vs) == 2:
            return EdgeW((vs[0], vs[1]))
        if kind == "vertex" and len(vs) == 1:
            return VertexW(vs[0])
    except ValueError as exc:
        raise InvalidWitness(str(exc)) from exc
    raise InvalidWitness(f"unknown witness shape: {obj!r}")


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def components_mask(g: Graph, alive: int) -> list[int]:
    """Connected components of the subgraph induced by ``alive``, as bitsets
    ordered by smallest member."""
    out = []
    rest = alive
    while rest:
        frontier = comp = rest & -rest
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= g.adj(v)
            frontier = grown & alive & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(c)) for c in components_mask(g, g.all_mask)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components_mask(g, g.all_mask)) == 1


def count_components_without(g: Graph, removed: Iterable[int]) -> int:
    return len(components_mask(g, g.all_mask & ~vertex_mask(removed)))


class PrismGraph:
    """The Cartesian product of ``base`` with K2.

    Vertex ``(v, layer)`` has id ``v + layer * n`` in :attr:`graph`.
    """

    def __init__(self, base: Graph):
        self.base = base
        n = base.n
        edges = [(v, v + n) for v in range(n)]
        for u, v in base.edges:
            edges.append((u, v))
            edges.append((u + n, v + n))
        self.graph = Graph(2 * n, edges)

    def encode(self, v: int, layer: int) -> int:
        if layer not in (0, 1) or not 0 <= v < self.base.n:
            raise ValueError(f"no prism vertex ({v}, {layer})")
        return v + layer * self.base.n

    def decode(self, vid: int) -> tuple[int, int]:
        return divmod(vid, self.base.n)[::-1]


def prism(g: Graph) -> PrismGraph:
    return PrismGraph(g)


def find_any_cycle(g: Graph) -> Cycle | None:
    """Return a cycle closed by the first DFS back edge, or None for forests."""
    parent = [-1] * g.n
    depth = [-1] * g.n
    for root in g.vertices():
        if depth[root] >= 0:
            continue
        depth[root] = 0
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            u, it = stack[-1]
            for w in it:
                if depth[w] < 0:
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    stack.append((w, iter(g.neighbors(w))))
                    break
                if w != parent[u] and depth[w] < depth[u]:
                    path = [u]
                    while path[-1] != w:
                        path.append(parent[path[-1]])
                    return Cycle(tuple(reversed(path)))
            else:
                stack.pop()
    return None
