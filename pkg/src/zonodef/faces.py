"""Edges and 2-faces of a graphical zonotope, labelled by ordered partitions.

An Edge of the zonotope is a pair ``(e, rho)``: a graph edge ``e`` and an
acyclic orientation ``rho`` (bitmask) of the graph with ``e`` contracted.
A 2-face is a rank-2 flat (a triangle, or a pair of edges not lying in a
common triangle) together with an acyclic orientation of the graph with the
flat contracted. Triangles give hexagons, pairs give parallelograms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .graphs import Edge, Graph, contraction, triangles
from .orientations import (
    AcyclicOrientation,
    acyclic_bits,
    contract_orientation,
    lift_orientation,
)


class EdgeLabel(NamedTuple):
    edge: Edge
    rho: int


@dataclass(frozen=True)
class TwoFaceLabel:
    # (i, j, k) for a hexagon, ((i, j), (k, l)) for a parallelogram
    flat: tuple
    rho: int

    @property
    def is_hexagon(self) -> bool:
        return isinstance(self.flat[0], int)

    def blocks(self) -> list[tuple[int, ...]]:
        if self.is_hexagon:
            return [self.flat]
        e, f = self.flat
        if set(e) & set(f):
            return [tuple(sorted(set(e) | set(f)))]
        return [e, f]


@dataclass(frozen=True)
class HexSides:
    """For each edge ``a`` of the triangle: the Edge where the contracted
    third edge points toward ``a`` and the one where it points away."""

    triangle: tuple[int, int, int]
    sides: tuple[tuple[Edge, EdgeLabel, EdgeLabel], ...]

    def labels(self) -> list[EdgeLabel]:
        return [lab for _, tw, aw in self.sides for lab in (tw, aw)]


def _triangle_edges(t: tuple[int, int, int]) -> list[Edge]:
    i, j, k = t
    return [(i, j), (i, k), (j, k)]


@lru_cache(maxsize=256)
def _edge_labels(g: Graph) -> tuple[EdgeLabel, ...]:
    out = []
    for e in g.edges:
        h = contraction(g, [e]).graph
        out.extend(EdgeLabel(e, rho) for rho in acyclic_bits(h))
    return tuple(out)


def zonotope_edges(g: Graph) -> list[EdgeLabel]:
    """All Edges of Z_G, ordered by graph edge then orientation enumeration order."""
    return list(_edge_labels(g))


@lru_cache(maxsize=256)
def label_index(g: Graph) -> dict[EdgeLabel, int]:
    return {lab: k for k, lab in enumerate(_edge_labels(g))}


def edge_label_of(g: Graph, k: int, bits: int) -> EdgeLabel:
    """Edge of Z_G crossed when flipping graph edge ``k`` in orientation ``bits``."""
    e = g.edges[k]
    rho = contract_orientation(g, bits, contraction(g, [e]))
    if rho is None:
        raise ValueError(f"edge {e} is not flippable in orientation {bits:b}")
    return EdgeLabel(e, rho)


def edge_endpoints(g: Graph, label: EdgeLabel) -> tuple[AcyclicOrientation, AcyclicOrientation]:
    c = contraction(g, [label.edge])
    k = g.edge_index(*label.edge)
    lo = lift_orientation(g, c, label.rho, {k: 0})
    hi = lift_orientation(g, c, label.rho, {k: 1})
    return AcyclicOrientation(g, lo), AcyclicOrientation(g, hi)


def rank2_flats(g: Graph) -> list[tuple]:
    """Triangles, then pairs of edges that share no triangle."""
    tris = triangles(g)
    cotri = {frozenset((a, b)) for t in tris for a, b in combinations(_triangle_edges(t), 2)}
    pairs = [(e, f) for e, f in combinations(g.edges, 2) if frozenset((e, f)) not in cotri]
    return list(tris) + pairs


@lru_cache(maxsize=256)
def _two_faces(g: Graph) -> tuple[TwoFaceLabel, ...]:
    out = []
    for flat in rank2_flats(g):
        probe = TwoFaceLabel(flat, 0)
        h = contraction(g, probe.blocks()).graph
        out.extend(TwoFaceLabel(flat, rho) for rho in acyclic_bits(h))
    return tuple(out)


def two_faces(g: Graph) -> list[TwoFaceLabel]:
    return list(_two_faces(g))


def _edge_label_in_face(g: Graph, face: TwoFaceLabel, inner: dict[Edge, int], e: Edge) -> EdgeLabel:
    c = contraction(g, face.blocks())
    bits = lift_orientation(g, c, face.rho, {g.edge_index(*x): b for x, b in inner.items()})
    return edge_label_of(g, g.edge_index(*e), bits)


def parallelogram_sides(g: Graph, face: TwoFaceLabel) -> tuple[tuple[EdgeLabel, EdgeLabel], tuple[EdgeLabel, EdgeLabel]]:
    """The two pairs of opposite Edges of a parallelogram face, one pair per graph edge."""
    if face.is_hexagon:
        raise ValueError("parallelogram_sides called on a hexagonal face")
    e, f = face.flat
    out = []
    for this, other in ((e, f), (f, e)):
        out.append(tuple(_edge_label_in_face(g, face, {this: 0, other: b}, this) for b in (0, 1)))
    return out[0], out[1]


def hexagon_sides(g: Graph, face: TwoFaceLabel) -> HexSides:
    if not face.is_hexagon:
        raise ValueError("hexagon_sides called on a parallelogram face")
    t = face.flat
    sides = []
    for a in _triangle_edges(t):
        (k,) = set(t) - set(a)
        i, j = a
        toward = {(i, j): 0, (min(i, k), max(i, k)): int(k > i), (min(j, k), max(j, k)): int(k > j)}
        away = {(i, j): 0, (min(i, k), max(i, k)): int(k < i), (min(j, k), max(j, k)): int(k < j)}
        sides.append((a,
                      _edge_label_in_face(g, face, toward, a),
                      _edge_label_in_face(g, face, away, a)))
    return HexSides(t, tuple(sides))


def third_edge_toward(g: Graph, label: EdgeLabel, t: tuple[int, int, int]) -> bool:
    """Whether ``label.rho`` points the contracted rest of triangle ``t`` toward ``label.edge``."""
    e = label.edge
    (k,) = set(t) - set(e)
    c = contraction(g, [e])
    h = c.graph
    be, bk = c.vertex_map[e[0]], c.vertex_map[k]
    idx = h.edge_index(be, bk)
    a, b = h.edges[idx]
    head = a if label.rho >> idx & 1 else b
    return head == be
