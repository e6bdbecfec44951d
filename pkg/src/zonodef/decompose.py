"""Minkowski decomposition of deformations of Z_G for K4-free graphs.

Every point of the deformation cone of a K4-free graph is uniquely
``sum_e w(e) * segment(e) + sum_t |w(t)| * (+/- triangle(t))`` with
``w(e) >= 0`` and the sign of ``w(t)`` picking the triangle's orientation.
The coefficients are read directly off the edge lengths:

* ``w(e)`` is the least length among the Edges labelled by ``e``;
* ``w(t)`` is ``l(toward) - l(away)`` on any side of any hexagon of ``t``.

Choosing the Edge of least length and reading which way it points the rest
of ``t`` gives the same value: a minimum at a "toward" Edge means
``toward < away``, i.e. a negative ``w(t)``, which is the minus triangle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cone import primitive, rank
from .defcone import build_defcone, defcone_rays
from .deformation import (
    LengthVector,
    Summand,
    as_lengths,
    minus_triangle,
    plus_triangle,
    segment,
    summand_lengths,
)
from .errors import NotADeformation, NotK4Free
from .faces import hexagon_sides, label_index, third_edge_toward, two_faces, zonotope_edges
from .graphs import Edge, Graph, is_k4_free, triangles, triangles_containing

Triangle = tuple[int, int, int]


@dataclass
class Decomposition:
    omega_edge: dict[Edge, Fraction]
    omega_tri: dict[Triangle, Fraction] = field(default_factory=dict)

    def epsilon(self) -> dict[Triangle, int]:
        return {t: (w > 0) - (w < 0) for t, w in self.omega_tri.items()}

    def terms(self) -> list[tuple[Fraction, Summand]]:
        out = [(w, segment(e)) for e, w in self.omega_edge.items() if w]
        for t, w in self.omega_tri.items():
            if w > 0:
                out.append((w, plus_triangle(t)))
            elif w < 0:
                out.append((-w, minus_triangle(t)))
        return out

    def to_json(self, verified: bool = True) -> dict:
        return {
            "omega_edge": {f"{i},{j}": str(w) for (i, j), w in self.omega_edge.items()},
            "omega_tri": {",".join(map(str, t)): str(w) for t, w in self.omega_tri.items()},
            "epsilon": {",".join(map(str, t)): s for t, s in self.epsilon().items()},
            "verified": verified,
        }


def _check_inputs(g: Graph, lengths: Sequence) -> LengthVector:
    if not is_k4_free(g):
        raise NotK4Free("decomposition is only defined for K4-free graphs")
    ell = as_lengths(g, lengths)
    if not build_defcone(g).cone.contains(ell):
        raise NotADeformation("length vector is not in the deformation cone")
    return ell


def _signed_steps(g: Graph, ell: LengthVector) -> dict[Triangle, Fraction]:
    """``toward - away`` per triangle, checked equal on every side of every hexagon."""
    idx = label_index(g)
    out: dict[Triangle, Fraction] = {}
    for face in two_faces(g):
        if not face.is_hexagon:
            continue
        for _, tw, aw in hexagon_sides(g, face).sides:
            d = ell[idx[tw]] - ell[idx[aw]]
            prev = out.setdefault(face.flat, d)
            if prev != d:
                raise NotADeformation(f"hexagons of triangle {face.flat} have different steps")
    return out


def step_delta(g: Graph, lengths: Sequence, t: Triangle) -> Fraction:
    ell = _check_inputs(g, lengths)
    t = tuple(sorted(t))
    steps = _signed_steps(g, ell)
    if t not in steps:
        raise ValueError(f"{t} is not a triangle")
    return abs(steps[t])


def recompose(g: Graph, dec: Decomposition) -> LengthVector:
    """Edge lengths ``w(e) + sum |w(t)|`` over triangles of ``e`` whose sign agrees with the Edge."""
    out = []
    for lab in zonotope_edges(g):
        v = dec.omega_edge[lab.edge]
        for t in triangles_containing(g, lab.edge):
            w = dec.omega_tri[t]
            if w and (w > 0) == third_edge_toward(g, lab, t):
                v += abs(w)
        out.append(v)
    return tuple(out)


def decompose(g: Graph, lengths: Sequence) -> Decomposition:
    ell = _check_inputs(g, lengths)
    omega_edge: dict[Edge, Fraction] = {}
    for lab, v in zip(zonotope_edges(g), ell):
        if lab.edge not in omega_edge or v < omega_edge[lab.edge]:
            omega_edge[lab.edge] = v
    steps = _signed_steps(g, ell)
    dec = Decomposition(omega_edge, {t: steps[t] for t in triangles(g)})
    if recompose(g, dec) != ell:
        raise RuntimeError("decomposition does not reproduce the edge lengths")
    return dec


def locate_simplex(g: Graph, lengths: Sequence) -> dict[Triangle, int]:
    """Sign of each triangle's coefficient; 0 means the point is on the wall
    between the two cells differing at that triangle."""
    return decompose(g, lengths).epsilon()


def named_rays(g: Graph) -> dict[tuple[int, ...], Summand]:
    """Primitive length vectors of the segments and signed triangles."""
    kinds = [segment(e) for e in g.edges]
    for t in triangles(g):
        kinds += [plus_triangle(t), minus_triangle(t)]
    return {primitive(summand_lengths(g, s)): s for s in kinds}


def identify_ray(g: Graph, ray: Sequence[int]) -> Summand | None:
    return named_rays(g).get(primitive(ray))


def verify_triangulation(g: Graph, **caps) -> dict:
    if not is_k4_free(g):
        raise NotK4Free("the triangulation is only established for K4-free graphs")
    rays = defcone_rays(g, **caps)
    expected = named_rays(g)
    nt = len(triangles(g))
    dim = rank(rays) if rays else 0
    report = {
        "rays": len(rays),
        "expected_rays": g.m + 2 * nt,
        "rays_match": set(rays) == set(expected),
        "dim": dim,
        "expected_dim": g.m + nt,
    }
    report["verified"] = (report["rays_match"] and report["rays"] == report["expected_rays"]
                          and dim == report["expected_dim"])
    return report
