from itertools import combinations
from math import comb

import pytest

from zonodef import cone as ce
from zonodef.defcone import (
    analyze,
    build_defcone,
    cone_from_json,
    cone_to_json,
    defcone_f_vector,
    defcone_rays,
    expected_facet_count,
    two_face_count,
    validate_formulas,
)
from zonodef.deformation import is_deformation, minus_triangle, plus_triangle, segment, summand_lengths
from zonodef.errors import NotK4Free
from zonodef.graphs import (
    Graph,
    bi_triangle,
    clique_count,
    complete,
    complete_bipartite,
    cycle,
    path,
    triangle_chain,
    triangles,
)

TRIANGLE_FREE = [path(3), path(5), cycle(4), cycle(5), complete_bipartite(2, 3)]
SMALL = [complete(3), bi_triangle(), complete(4), triangle_chain(2), triangle_chain(3),
         Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)]), Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])]


def test_build_examples():
    p3 = build_defcone(path(3))
    assert p3.ambient_dim == 4 and len(p3.cone.equalities) == 2
    k3 = build_defcone(complete(3))
    assert k3.ambient_dim == 6 and len(k3.cone.equalities) == 2 and ce.rank(k3.cone.equalities) == 2
    assert build_defcone(bi_triangle()).ambient_dim == 28


def test_row_count_invariant():
    g = bi_triangle()
    dc = build_defcone(g)
    # one row per opposite pair of a parallelogram, two per hexagon
    assert len(dc.cone.equalities) == 2 * 8 + 2 * 4


@pytest.mark.parametrize("g", [complete(3), bi_triangle()] + TRIANGLE_FREE)
def test_validate_formulas(g):
    rep = validate_formulas(g)
    assert rep["dim_ok"] and rep["facets_ok"]


@pytest.mark.parametrize("g", TRIANGLE_FREE)
def test_triangle_free_is_simplicial(g):
    rep = analyze(g)
    assert rep.dimension == rep.facets == len(rep.rays) == g.m
    assert set(rep.rays) == {summand_lengths(g, segment(e)) for e in g.edges}


def test_k3_and_k4_rays():
    assert len(defcone_rays(complete(3))) == 5
    assert len(defcone_rays(complete(4))) == 37


@pytest.mark.parametrize("g", SMALL + TRIANGLE_FREE)
def test_dimension_is_clique_count(g):
    assert analyze(g).dimension == clique_count(g)
    assert analyze(g).facets == expected_facet_count(g)


@pytest.mark.parametrize("g", SMALL)
def test_rays_are_deformations(g):
    for r in defcone_rays(g):
        assert is_deformation(g, r)


@pytest.mark.parametrize("g", [complete(3), bi_triangle(), triangle_chain(2)])
def test_k4_free_rays_are_summands(g):
    want = {summand_lengths(g, segment(e)) for e in g.edges}
    for t in triangles(g):
        want |= {summand_lengths(g, plus_triangle(t)), summand_lengths(g, minus_triangle(t))}
    assert set(defcone_rays(g)) == {ce.primitive(w) for w in want}


def test_two_face_counts():
    assert two_face_count(bi_triangle()) == (34, 34)
    assert two_face_count(complete(3)) == (9, 9)
    assert two_face_count(cycle(4))[0] == comb(4, 2)
    with pytest.raises(NotK4Free):
        two_face_count(complete(4))


@pytest.mark.parametrize("g", [complete(3), bi_triangle()])
def test_only_opposite_triangles_miss_a_common_two_face(g):
    dc = build_defcone(g)
    rays = defcone_rays(g)
    faces = ce.face_masks(dc.cone, rays)
    edges2 = [m for m, d in faces.items() if d == 2]
    opposite = {frozenset((ce.primitive(summand_lengths(g, plus_triangle(t))),
                           ce.primitive(summand_lengths(g, minus_triangle(t))))) for t in triangles(g)}
    for a, b in combinations(range(len(rays)), 2):
        together = any(m >> a & 1 and m >> b & 1 for m in edges2)
        assert together == (frozenset((rays[a], rays[b])) not in opposite)


def test_f_vectors():
    assert defcone_f_vector(complete(3)) == [5, 9, 6, 1]
    assert defcone_f_vector(bi_triangle()) == [9, 34, 68, 75, 44, 12, 1]


def test_json_round_trip():
    dc = build_defcone(bi_triangle())
    back = cone_from_json(cone_to_json(dc))
    assert back.graph == dc.graph and back.labels == dc.labels and back.cone == dc.cone
