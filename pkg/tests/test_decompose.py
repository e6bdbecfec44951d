from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import solve_exact
from zonodef.decompose import (
    decompose,
    identify_ray,
    locate_simplex,
    recompose,
    step_delta,
    verify_triangulation,
)
from zonodef.defcone import defcone_rays
from zonodef.deformation import ZONOTOPE, minus_triangle, plus_triangle, segment, summand_lengths
from zonodef.errors import NotADeformation, NotK4Free
from zonodef.faces import hexagon_sides, two_faces, zonotope_edges
from zonodef.graphs import Graph, bi_triangle, complete, cycle, path, triangle_chain, triangles

WHEEL = Graph(6, [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)])
K4_FREE = [complete(3), bi_triangle(), triangle_chain(3), WHEEL, path(4)]


def _k3_toward_away(tw, aw):
    g = complete(3)
    (face,) = two_faces(g)
    ell = {}
    for _, t, a in hexagon_sides(g, face).sides:
        ell[t], ell[a] = tw, aw
    return [ell[lab] for lab in zonotope_edges(g)]


def test_step_delta_examples():
    g = bi_triangle()
    for t in triangles(g):
        assert step_delta(g, summand_lengths(g, ZONOTOPE), t) == 0
        assert step_delta(g, summand_lengths(g, plus_triangle(t)), t) == 1
    assert step_delta(complete(3), _k3_toward_away(2, 1), (0, 1, 2)) == 1
    with pytest.raises(ValueError):
        step_delta(g, summand_lengths(g, ZONOTOPE), (0, 1, 3))


def test_decompose_examples():
    g = bi_triangle()
    dec = decompose(g, summand_lengths(g, ZONOTOPE))
    assert all(w == 1 for w in dec.omega_edge.values())
    assert all(w == 0 for w in dec.omega_tri.values())
    t = (1, 2, 3)
    dec = decompose(g, summand_lengths(g, plus_triangle(t)))
    assert all(w == 0 for w in dec.omega_edge.values())
    assert dec.omega_tri == {(0, 1, 2): 0, t: 1}
    dec = decompose(complete(3), _k3_toward_away(2, 1))
    assert dec.omega_edge == {(0, 1): 1, (0, 2): 1, (1, 2): 1}
    assert dec.omega_tri == {(0, 1, 2): 1}


def test_locate_simplex_examples():
    g = bi_triangle()
    assert locate_simplex(g, summand_lengths(g, ZONOTOPE)) == {(0, 1, 2): 0, (1, 2, 3): 0}
    assert locate_simplex(g, summand_lengths(g, plus_triangle((0, 1, 2)))) == {(0, 1, 2): 1, (1, 2, 3): 0}
    assert locate_simplex(g, summand_lengths(g, minus_triangle((0, 1, 2))))[(0, 1, 2)] == -1


def test_rejects_bad_inputs():
    with pytest.raises(NotK4Free):
        decompose(complete(4), [1] * 36)
    with pytest.raises(NotK4Free):
        step_delta(complete(4), [1] * 36, (0, 1, 2))
    with pytest.raises(NotADeformation):
        decompose(complete(3), [1, 0, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        decompose(complete(3), [1] * 5)


@pytest.mark.parametrize("g", [complete(3), bi_triangle(), triangle_chain(3), cycle(4)])
def test_verify_triangulation(g):
    rep = verify_triangulation(g)
    assert rep["verified"]
    assert rep["rays"] == g.m + 2 * len(triangles(g))
    assert rep["dim"] == g.m + len(triangles(g))


def test_identify_rays():
    g = bi_triangle()
    names = {str(identify_ray(g, r)) for r in defcone_rays(g)}
    assert names == {"e(0,1)", "e(0,2)", "e(1,2)", "e(1,3)", "e(2,3)",
                     "+t(0,1,2)", "-t(0,1,2)", "+t(1,2,3)", "-t(1,2,3)"}
    assert identify_ray(g, summand_lengths(g, ZONOTOPE)) is None


@st.composite
def combinations_of_summands(draw, g):
    fracs = st.fractions(0, 4, max_denominator=5)
    lam_e = {e: draw(fracs) for e in g.edges}
    lam_t = {t: draw(fracs) * draw(st.sampled_from([1, -1])) for t in triangles(g)}
    ell = [Fraction(0)] * len(zonotope_edges(g))
    for e, w in lam_e.items():
        ell = [a + w * b for a, b in zip(ell, summand_lengths(g, segment(e)))]
    for t, w in lam_t.items():
        s = plus_triangle(t) if w >= 0 else minus_triangle(t)
        ell = [a + abs(w) * b for a, b in zip(ell, summand_lengths(g, s))]
    return lam_e, lam_t, ell


@pytest.mark.parametrize("g", K4_FREE)
def test_round_trip(g):
    @settings(max_examples=100)
    @given(combinations_of_summands(g))
    def check(sample):
        lam_e, lam_t, ell = sample
        dec = decompose(g, ell)
        assert dec.omega_edge == lam_e
        assert dec.omega_tri == lam_t
        assert recompose(g, dec) == tuple(ell)

    check()


@pytest.mark.parametrize("g", [complete(3), bi_triangle(), triangle_chain(3)])
def test_rays_reconstruct(g):
    for r in defcone_rays(g):
        dec = decompose(g, r)
        assert recompose(g, dec) == tuple(Fraction(v) for v in r)


def _cell_columns(g, signs):
    cols = [summand_lengths(g, segment(e)) for e in g.edges]
    for t in triangles(g):
        cols.append(summand_lengths(g, plus_triangle(t) if signs[t] > 0 else minus_triangle(t)))
    return cols


@pytest.mark.parametrize("g", [complete(3), bi_triangle(), triangle_chain(3)])
def test_flipped_sign_is_infeasible(g):
    @settings(max_examples=25)
    @given(combinations_of_summands(g))
    def check(sample):
        _, lam_t, ell = sample
        if any(w == 0 for w in lam_t.values()):
            return
        signs = locate_simplex(g, ell)
        own = solve_exact(_cell_columns(g, signs), ell)
        assert own is not None and all(c >= 0 for c in own)
        for t in triangles(g):
            flipped = dict(signs)
            flipped[t] = -signs[t]
            sol = solve_exact(_cell_columns(g, flipped), ell)
            assert sol is None or any(c < 0 for c in sol)

    check()


def test_json_report():
    g = complete(3)
    rep = decompose(g, _k3_toward_away(2, 1)).to_json()
    assert list(rep) == ["omega_edge", "omega_tri", "epsilon", "verified"]
    assert rep["omega_tri"] == {"0,1,2": "1"} and rep["epsilon"] == {"0,1,2": 1}
