"""The edge-length deformation cone of a graphical zonotope.

Coordinates are indexed by the Edges of Z_G (see :mod:`zonodef.faces`). A
length vector is in the cone when it is nonnegative and satisfies the
polygonal equation of every 2-face:

* parallelogram: opposite Edges have equal length;
* hexagon on triangle ``t``: ``d_a = d_b = d_c`` where for each edge ``x`` of
  ``t``, ``d_x = l(toward_x) - l(away_x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import cone as ce
from .errors import NotK4Free
from .faces import (
    EdgeLabel,
    hexagon_sides,
    label_index,
    parallelogram_sides,
    two_faces,
    zonotope_edges,
)
from .graphs import Graph, clique_count, is_k4_free, triangles, triangles_containing


@dataclass(frozen=True)
class DefCone:
    graph: Graph
    labels: tuple[EdgeLabel, ...]
    cone: ce.ConeH

    @property
    def ambient_dim(self) -> int:
        return self.cone.ambient_dim


def _row(n: int, coeffs: dict[int, int]) -> tuple[int, ...]:
    row = [0] * n
    for k, v in coeffs.items():
        row[k] += v
    return tuple(row)


@lru_cache(maxsize=64)
def build_defcone(g: Graph) -> DefCone:
    labels = tuple(zonotope_edges(g))
    idx = label_index(g)
    n = len(labels)
    rows = []
    for face in two_faces(g):
        if face.is_hexagon:
            sides = hexagon_sides(g, face).sides
            d = [{idx[tw]: 1, idx[aw]: -1} for _, tw, aw in sides]
            for x, y in ((d[0], d[1]), (d[1], d[2])):
                coeffs = dict(x)
                for k, v in y.items():
                    coeffs[k] = coeffs.get(k, 0) - v
                rows.append(_row(n, coeffs))
        else:
            for a, b in parallelogram_sides(g, face):
                rows.append(_row(n, {idx[a]: 1, idx[b]: -1}))
    return DefCone(g, labels, ce.ConeH(n, tuple(rows)))


@dataclass
class ConeReport:
    graph: Graph
    ambient_dim: int
    dimension: int
    facets: int
    rays: list[tuple[int, ...]]
    clique_count: int
    expected_facets: int

    @property
    def dim_ok(self) -> bool:
        return self.dimension == self.clique_count

    @property
    def facets_ok(self) -> bool:
        return self.facets == self.expected_facets


def expected_facet_count(g: Graph) -> int:
    """Sum over edges of 2^(number of triangles containing the edge)."""
    return sum(2 ** len(triangles_containing(g, e)) for e in g.edges)


@lru_cache(maxsize=64)
def _rays(g: Graph, max_dim: int, max_rays: int) -> tuple[tuple[int, ...], ...]:
    return tuple(ce.extreme_rays(build_defcone(g).cone, max_dim=max_dim, max_rays=max_rays))


def defcone_rays(g: Graph, max_dim: int = ce.MAX_DD_DIM, max_rays: int = ce.MAX_RAYS) -> list[tuple[int, ...]]:
    """Extreme rays as primitive integer length vectors (canonical label order)."""
    return list(_rays(g, max_dim, max_rays))


def analyze(g: Graph, max_dim: int = ce.MAX_DD_DIM, max_rays: int = ce.MAX_RAYS) -> ConeReport:
    dc = build_defcone(g)
    rays = defcone_rays(g, max_dim, max_rays)
    return ConeReport(
        graph=g,
        ambient_dim=dc.ambient_dim,
        dimension=ce.cone_dimension(dc.cone, rays),
        facets=ce.facet_count(dc.cone, rays),
        rays=rays,
        clique_count=clique_count(g),
        expected_facets=expected_facet_count(g),
    )


def validate_formulas(g: Graph, **caps) -> dict:
    rep = analyze(g, **caps)
    return {
        "dim": rep.dimension,
        "omega": rep.clique_count,
        "dim_ok": rep.dim_ok,
        "facets": rep.facets,
        "expected_facets": rep.expected_facets,
        "facets_ok": rep.facets_ok,
    }


def defcone_f_vector(g: Graph, max_rays: int = ce.MAX_FVECTOR_RAYS) -> list[int]:
    return ce.f_vector(build_defcone(g).cone, defcone_rays(g), max_rays=max_rays)


def two_face_count(g: Graph) -> tuple[int, int]:
    """(2-faces counted in the face lattice, closed-form value) for K4-free graphs."""
    if not is_k4_free(g):
        raise NotK4Free("two_face_count needs a K4-free graph")
    fv = defcone_f_vector(g)
    t = len(triangles(g))
    formula = comb(g.m + 2 * t, 2) - t
    return (fv[1] if len(fv) > 1 else 0), formula


def cone_to_json(dc: DefCone) -> dict:
    return {
        "graph": {"n": dc.graph.n, "edges": [list(e) for e in dc.graph.edges]},
        "labels": [[list(lab.edge), lab.rho] for lab in dc.labels],
        "equalities": [[str(v) for v in row] for row in dc.cone.equalities],
    }


def cone_from_json(data: dict) -> DefCone:
    g = Graph(data["graph"]["n"], data["graph"]["edges"])
    labels = tuple(EdgeLabel(tuple(e), int(r)) for e, r in data["labels"])
    eqs = tuple(tuple(Fraction(v) for v in row) for row in data["equalities"])
    return DefCone(g, labels, ce.ConeH(len(labels), eqs))
