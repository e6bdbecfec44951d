"""Simple undirected graphs on vertices ``0..n-1``.

Graphs are immutable and hashable so that derived structures (contractions,
orientation tables, cone data) can be cached per graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph input."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        canon = set()
        for e in edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge {(i, j)} out of range for n={n}")
            canon.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "_index", {e: k for k, e in enumerate(self.edges)})

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, i: int, j: int) -> int:
        try:
            return self._index[(min(i, j), max(i, j))]
        except KeyError:
            raise GraphError(f"{(i, j)} is not an edge") from None

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._index

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)


def cliques(g: Graph) -> list[tuple[int, ...]]:
    """All vertex sets of size >= 2 inducing a complete subgraph.

    Sorted by size, then lexicographically.
    """
    adj = g.adjacency
    out: list[tuple[int, ...]] = []

    def grow(clique: tuple[int, ...], candidates: int) -> None:
        if len(clique) >= 2:
            out.append(clique)
        c = candidates
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            # only extend with larger vertices so each clique is produced once
            grow(clique + (v,), candidates & adj[v] & ~((1 << (v + 1)) - 1))

    for v in range(g.n):
        grow((v,), adj[v] & ~((1 << (v + 1)) - 1))
    out.sort(key=lambda c: (len(c), c))
    return out


def clique_count(g: Graph) -> int:
    return len(cliques(g))


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for i, j in g.edges:
        common = g.adjacency[i] & g.adjacency[j] & ~((1 << (j + 1)) - 1)
        while common:
            k = (common & -common).bit_length() - 1
            common &= common - 1
            out.append((i, j, k))
    out.sort()
    return out


def triangles_containing(g: Graph, edge: Edge) -> list[tuple[int, int, int]]:
    i, j = edge
    common = g.adjacency[i] & g.adjacency[j]
    return [tuple(sorted((i, j, k))) for k in range(g.n) if common >> k & 1]


def is_triangle_free(g: Graph) -> bool:
    return not triangles(g)


def is_k4_free(g: Graph) -> bool:
    return all(len(c) < 4 for c in cliques(g))


def _normalize_blocks(g: Graph, blocks: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for b in blocks:
        b = tuple(sorted(set(int(v) for v in b)))
        if not b:
            raise GraphError("empty block")
        for v in b:
            if not 0 <= v < g.n:
                raise GraphError(f"block vertex {v} out of range for n={g.n}")
            if v in seen:
                raise GraphError(f"vertex {v} appears in two blocks")
            seen.add(v)
        out.append(b)
    return out


def complete_partition(g: Graph, blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Complete disjoint blocks with singletons; blocks ordered by least element."""
    blocks = _normalize_blocks(g, blocks)
    covered = {v for b in blocks for v in b}
    blocks += [(v,) for v in range(g.n) if v not in covered]
    return tuple(sorted(blocks))


@dataclass(frozen=True)
class Contraction:
    """``g`` with each block of ``partition`` merged into a single vertex."""

    graph: Graph
    partition: tuple[tuple[int, ...], ...]
    vertex_map: tuple[int, ...]
    # index of the contracted edge carrying each original edge, None if internal
    edge_map: tuple[int | None, ...]


@lru_cache(maxsize=4096)
def _contraction(g: Graph, partition: tuple[tuple[int, ...], ...]) -> Contraction:
    vmap = [0] * g.n
    for b, block in enumerate(partition):
        for v in block:
            vmap[v] = b
    pairs = {(min(vmap[i], vmap[j]), max(vmap[i], vmap[j]))
             for i, j in g.edges if vmap[i] != vmap[j]}
    h = Graph(len(partition), pairs)
    emap = tuple(None if vmap[i] == vmap[j] else h.edge_index(vmap[i], vmap[j])
                 for i, j in g.edges)
    return Contraction(h, partition, tuple(vmap), emap)


def contraction(g: Graph, blocks: Iterable[Iterable[int]]) -> Contraction:
    return _contraction(g, complete_partition(g, blocks))


def contract(g: Graph, blocks: Iterable[Iterable[int]]) -> Graph:
    """Merge each block into one vertex; the result is again a simple graph.

    Vertices of the result are the blocks of the singleton-completed partition,
    numbered by increasing least element.
    """
    return contraction(g, blocks).graph


def restrict(g: Graph, blocks: Iterable[Iterable[int]]) -> Graph:
    """Keep the vertex set, keep only edges lying inside one block."""
    blocks = _normalize_blocks(g, blocks)
    where = {v: b for b, block in enumerate(blocks) for v in block}
    return Graph(g.n, [(i, j) for i, j in g.edges
                       if i in where and where.get(j) == where[i]])


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= g.adjacency[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(tuple(v for v in range(g.n) if comp >> v & 1))
    return comps


# -- named families ---------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def bi_triangle() -> Graph:
    """Two triangles glued along the edge {1, 2}."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def triangle_chain(k: int) -> Graph:
    """Strip of ``k`` triangles, consecutive ones sharing an edge."""
    if k < 1:
        raise GraphError("triangle_chain needs k >= 1")
    n = k + 2
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(n - 2)])


def cyc3_graph(n: int) -> Graph:
    """Graph of the 3-dimensional cyclic polytope on ``n`` vertices.

    A path on ``1..n-2`` plus two apexes ``0`` and ``n-1`` joined to each other
    and to every path vertex.
    """
    if n < 4:
        raise GraphError("cyc3 needs n >= 4")
    last = n - 1
    edges = [(i, i + 1) for i in range(1, n - 2)]
    edges += [(0, i) for i in range(1, n - 1)] + [(i, last) for i in range(1, n - 1)]
    edges.append((0, last))
    return Graph(n, edges)


def wedge_k4(n: int) -> Graph:
    """``n - 3`` copies of K4 glued along the triangle {0, 1, 2}."""
    if n < 4:
        raise GraphError("wedge_k4 needs n >= 4")
    edges = [(0, 1), (0, 2), (1, 2)]
    edges += [(i, k) for k in range(3, n) for i in range(3)]
    return Graph(n, edges)


_GENERATORS = {
    "complete": (complete, 1),
    "k": (complete, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "bipartite": (complete_bipartite, 2),
    "bitriangle": (bi_triangle, 0),
    "chain": (triangle_chain, 1),
    "cyc3": (cyc3_graph, 1),
    "wedge_k4": (wedge_k4, 1),
}


def from_name(source: str) -> Graph:
    """Build a named graph, e.g. ``cyc3:6``, ``bipartite:2,3``, ``bitriangle``."""
    name, _, args = source.strip().partition(":")
    name = name.lower().replace("-", "_")
    if name == "bi_triangle":
        name = "bitriangle"
    if name not in _GENERATORS:
        raise GraphError(f"unknown graph family {name!r}")
    fn, arity = _GENERATORS[name]
    params = [int(a) for a in re.split(r"[,x]", args) if a.strip()] if args else []
    if len(params) != arity:
        raise GraphError(f"{name} takes {arity} integer parameter(s), got {source!r}")
    return fn(*params)


def parse_graph_text(text: str) -> Graph:
    """Parse ``n`` on the first line, then one ``i j`` pair per line; ``#`` starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 1:
        raise GraphError("first line must hold the vertex count")
    try:
        n = int(rows[0][0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"bad graph text: {exc}") from None
    return Graph(n, edges)


def format_graph_text(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{i} {j}" for i, j in g.edges]) + "\n"


def load_graph(source: str) -> Graph:
    """Accept either a path to a graph text file or a generator name."""
    p = Path(source)
    if p.is_file():
        return parse_graph_text(p.read_text())
    return from_name(source)
