"""Rebuild the polytope described by an edge-length vector.

Vertices of Z_G are acyclic orientations; walking the flip graph from a base
orientation and moving by ``l(e, rho) * (e_v - e_u)`` whenever the flipped
edge becomes ``u -> v`` places every vertex of the deformed polytope.
With all lengths equal to one this reproduces the in-degree vertices of Z_G.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .cone import rank
from .defcone import build_defcone
from .errors import NotADeformation
from .faces import EdgeLabel, edge_label_of, label_index, third_edge_toward, zonotope_edges
from .graphs import Edge, Graph, triangles
from .orientations import acyclic_bits, arcs, is_acyclic

LengthVector = tuple[Fraction, ...]


class Summand(NamedTuple):
    """One of the named deformations: ``segment``, ``plus``/``minus`` triangle, ``zonotope``."""

    kind: str
    support: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "zonotope":
            return "Z"
        name = {"segment": "e", "plus": "+t", "minus": "-t"}[self.kind]
        return f"{name}({','.join(map(str, self.support))})"


ZONOTOPE = Summand("zonotope")


def segment(e: Edge) -> Summand:
    return Summand("segment", tuple(sorted(e)))


def plus_triangle(t) -> Summand:
    return Summand("plus", tuple(sorted(t)))


def minus_triangle(t) -> Summand:
    return Summand("minus", tuple(sorted(t)))


def as_lengths(g: Graph, values: Sequence) -> LengthVector:
    n = len(zonotope_edges(g))
    if len(values) != n:
        raise ValueError(f"length vector has {len(values)} entries, the zonotope has {n} Edges")
    return tuple(Fraction(v) for v in values)


def is_deformation(g: Graph, lengths: Sequence) -> bool:
    lengths = as_lengths(g, lengths)
    return build_defcone(g).cone.contains(lengths)


def summand_lengths(g: Graph, s: Summand) -> LengthVector:
    labels = zonotope_edges(g)
    if s.kind == "zonotope":
        return tuple(Fraction(1) for _ in labels)
    if s.kind == "segment":
        e = s.support
        if not g.has_edge(*e):
            raise ValueError(f"{e} is not an edge")
        return tuple(Fraction(int(lab.edge == e)) for lab in labels)
    if s.kind in ("plus", "minus"):
        t = s.support
        if t not in triangles(g):
            raise ValueError(f"{t} is not a triangle")
        want = s.kind == "plus"
        return tuple(Fraction(int(set(lab.edge) <= set(t) and third_edge_toward(g, lab, t) == want))
                     for lab in labels)
    raise ValueError(f"unknown summand kind {s.kind!r}")


# -- flip graph -------------------------------------------------------------

class _Flip(NamedTuple):
    src: int     # index into the orientation list
    dst: int
    label: int   # index of the crossed Edge of Z_G
    tail: int    # the flipped edge reads tail -> head in dst
    head: int


@dataclass(frozen=True)
class FlipGraph:
    graph: Graph
    orientations: tuple[int, ...]
    flips: tuple[_Flip, ...]


@lru_cache(maxsize=64)
def flip_graph(g: Graph) -> FlipGraph:
    ors = acyclic_bits(g)
    where = {b: k for k, b in enumerate(ors)}
    idx = label_index(g)
    flips = []
    for a, bits in enumerate(ors):
        for k in range(g.m):
            nb = bits ^ (1 << k)
            b = where.get(nb)
            if b is None or b < a:
                continue
            lab = idx[edge_label_of(g, k, bits)]
            i, j = g.edges[k]
            tail, head = (j, i) if nb >> k & 1 else (i, j)
            flips.append(_Flip(a, b, lab, tail, head))
    return FlipGraph(g, ors, tuple(flips))


@dataclass(frozen=True)
class DeformedPolytope:
    graph: Graph
    positions: dict[int, tuple[Fraction, ...]]  # orientation bits -> point
    vertices: tuple[tuple[Fraction, ...], ...]  # distinct points, sorted

    def to_json(self) -> dict:
        return {
            "vertices": [[str(x) for x in v] for v in self.vertices],
            "dim": polytope_dim(self),
        }


def build_polytope(g: Graph, lengths: Sequence, base: int | None = None) -> DeformedPolytope:
    """Place the vertex of every acyclic orientation, starting at the origin.

    ``base`` is the bitmask of the starting orientation (default: the first,
    all edges ``i -> j`` with ``i < j``). Raises :class:`NotADeformation` if
    two walks reach the same orientation at different points.
    """
    ell = as_lengths(g, lengths)
    if any(v < 0 for v in ell):
        raise NotADeformation("negative edge length")
    fg = flip_graph(g)
    ors = fg.orientations
    start = 0 if base is None else ors.index(base)
    adj: list[list[tuple[int, Fraction, int, int]]] = [[] for _ in ors]
    for f in fg.flips:
        w = ell[f.label]
        adj[f.src].append((f.dst, w, f.tail, f.head))
        adj[f.dst].append((f.src, w, f.head, f.tail))
    pos: list[list[Fraction] | None] = [None] * len(ors)
    pos[start] = [Fraction(0)] * g.n
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b, w, tail, head in adj[a]:
            if pos[b] is None:
                p = list(pos[a])
                p[head] += w
                p[tail] -= w
                pos[b] = p
                queue.append(b)
    for f in fg.flips:
        w = ell[f.label]
        p, q = pos[f.src], pos[f.dst]
        for v in range(g.n):
            expect = w if v == f.head else -w if v == f.tail else 0
            if q[v] - p[v] != expect:
                raise NotADeformation(f"walk around the flip graph does not close at Edge {f.label}")
    positions = {ors[k]: tuple(p) for k, p in enumerate(pos)}
    return DeformedPolytope(g, positions, tuple(sorted(set(positions.values()))))


def polytope_dim(p: DeformedPolytope) -> int:
    if len(p.vertices) < 2:
        return 0
    v0 = p.vertices[0]
    return rank([[a - b for a, b in zip(v, v0)] for v in p.vertices[1:]])


def _upsets(g: Graph, bits: int) -> list[int]:
    """Vertex sets closed under following arcs of the orientation."""
    succ = [0] * g.n
    for u, v in arcs(g, bits):
        succ[u] |= 1 << v
    return [s for s in range(1 << g.n)
            if all(not (s >> u & 1) or (succ[u] & ~s) == 0 for u in range(g.n))]


@lru_cache(maxsize=64)
def _upset_table(g: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(_upsets(g, b)) for b in acyclic_bits(g))


def edges_are_graph_dilates(p: DeformedPolytope) -> bool:
    """Whether every edge of the polytope is parallel to ``e_i - e_j`` for a graph edge.

    Checked through the equivalent normal fan statement: for every acyclic
    orientation ``o`` the point placed at ``o`` maximises every linear
    functional of the normal cone ``{x : x_u <= x_v for arcs u -> v}``.
    That cone is generated (modulo constants on components) by indicators of
    arc-closed vertex sets, so it suffices that the point maximises each such
    indicator over all vertices.
    """
    g = p.graph
    if g.n > 16:
        raise ValueError("subset table too large")
    sums = {v: [sum(v[i] for i in range(g.n) if s >> i & 1) for s in range(1 << g.n)]
            for v in p.vertices}
    best = [max(sv[s] for sv in sums.values()) for s in range(1 << g.n)]
    ors = acyclic_bits(g)
    for bits, ups in zip(ors, _upset_table(g)):
        sv = sums[p.positions[bits]]
        if any(sv[s] != best[s] for s in ups):
            return False
    return True


def polytope_to_json(p: DeformedPolytope) -> str:
    return json.dumps(p.to_json())
