"""Acyclic orientations of a graph, flips between them, and zonotope vertices.

An orientation is a bitmask over the graph's canonical edge order: bit ``k``
clear means edge ``(i, j)`` (``i < j``) points ``i -> j``, set means ``j -> i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import EffortCapExceeded
from .graphs import Contraction, Graph

MAX_EDGES = 24


@dataclass(frozen=True)
class AcyclicOrientation:
    graph: Graph
    bits: int

    def arcs(self) -> list[tuple[int, int]]:
        return arcs(self.graph, self.bits)

    def head(self, k: int) -> int:
        i, j = self.graph.edges[k]
        return i if self.bits >> k & 1 else j


def arcs(g: Graph, bits: int) -> list[tuple[int, int]]:
    return [(j, i) if bits >> k & 1 else (i, j) for k, (i, j) in enumerate(g.edges)]


def is_acyclic(g: Graph, bits: int) -> bool:
    succ = [0] * g.n
    indeg = [0] * g.n
    for u, v in arcs(g, bits):
        succ[u] |= 1 << v
        indeg[v] += 1
    stack = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        s = succ[u]
        while s:
            v = (s & -s).bit_length() - 1
            s &= s - 1
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    return seen == g.n


@lru_cache(maxsize=1024)
def acyclic_bits(g: Graph, max_edges: int = MAX_EDGES) -> tuple[int, ...]:
    """Bitmasks of all acyclic orientations, lexicographic in edge order."""
    if g.m > max_edges:
        raise EffortCapExceeded(
            f"{g.m} edges exceeds the orientation enumeration cap of {max_edges}")
    out: list[int] = []
    edges = g.edges

    # reach[x]: vertices reachable from x along arcs chosen so far
    def extend(k: int, bits: int, reach: list[int]) -> None:
        if k == len(edges):
            out.append(bits)
            return
        i, j = edges[k]
        for bit, (u, v) in ((0, (i, j)), (1, (j, i))):
            if reach[v] >> u & 1:
                continue
            new = reach[:]
            gain = reach[v] | (1 << v)
            for x in range(g.n):
                if x == u or reach[x] >> u & 1:
                    new[x] |= gain
            extend(k + 1, bits | (bit << k), new)

    extend(0, 0, [0] * g.n)
    return tuple(out)


def enumerate_acyclic(g: Graph, max_edges: int = MAX_EDGES) -> list[AcyclicOrientation]:
    return [AcyclicOrientation(g, b) for b in acyclic_bits(g, max_edges)]


def flip_neighbors(o: AcyclicOrientation) -> list[tuple[tuple[int, int], AcyclicOrientation]]:
    g = o.graph
    out = []
    for k, e in enumerate(g.edges):
        b = o.bits ^ (1 << k)
        if is_acyclic(g, b):
            out.append((e, AcyclicOrientation(g, b)))
    return out


def vertex_point(o: AcyclicOrientation) -> tuple[int, ...]:
    """In-degree vector: the vertex of the graphical zonotope selected by ``o``."""
    x = [0] * o.graph.n
    for _, v in o.arcs():
        x[v] += 1
    return tuple(x)


def contract_orientation(g: Graph, bits: int, c: Contraction) -> int | None:
    """Orientation induced on the contracted graph, or None if two original
    edges carried by the same contracted edge disagree."""
    h = c.graph
    vmap = c.vertex_map
    assigned: dict[int, int] = {}
    for k, (i, j) in enumerate(g.edges):
        t = c.edge_map[k]
        if t is None:
            continue
        u, v = (j, i) if bits >> k & 1 else (i, j)
        a, _ = h.edges[t]
        bit = 0 if vmap[u] == a else 1
        if assigned.setdefault(t, bit) != bit:
            return None
    return sum(bit << t for t, bit in assigned.items())


def lift_orientation(g: Graph, c: Contraction, rho: int, inner: dict[int, int]) -> int:
    """Orientation of ``g`` agreeing with ``rho`` across blocks.

    ``inner`` gives the bit of every edge lying inside a block.
    """
    h = c.graph
    vmap = c.vertex_map
    bits = 0
    for k, (i, j) in enumerate(g.edges):
        t = c.edge_map[k]
        if t is None:
            bit = inner[k]
        else:
            a, b = h.edges[t]
            tail = b if rho >> t & 1 else a
            bit = 0 if vmap[i] == tail else 1
        bits |= bit << k
    return bits
