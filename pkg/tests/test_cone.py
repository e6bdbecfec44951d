from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from oracles import minor_rank, support_rays
from zonodef import cone as ce
from zonodef.errors import EffortCapExceeded

small_ints = st.integers(-3, 3)


@st.composite
def matrices(draw, max_rows=4, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    return [draw(st.lists(small_ints, min_size=c, max_size=c)) for _ in range(r)], c


@st.composite
def small_cones(draw, max_dim=7, max_eqs=3):
    d = draw(st.integers(1, max_dim))
    k = draw(st.integers(0, max_eqs))
    eqs = [draw(st.lists(small_ints, min_size=d, max_size=d)) for _ in range(k)]
    return ce.ConeH(d, tuple(tuple(r) for r in eqs))


def test_rank_kernel_examples():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert ce.rank(eye) == 3 and ce.kernel_basis(eye, 3) == []
    row = [[1, -1, 0]]
    assert ce.rank(row) == 1 and len(ce.kernel_basis(row, 3)) == 2


@given(matrices())
def test_rank_matches_minors(mc):
    m, _ = mc
    assert ce.rank(m) == minor_rank(m)


@given(matrices())
def test_kernel_is_kernel(mc):
    m, c = mc
    basis = ce.kernel_basis(m, c)
    assert len(basis) == c - ce.rank(m)
    for b in basis:
        assert all(sum(Fraction(x) * y for x, y in zip(row, b)) == 0 for row in m)
    assert ce.rank(basis) == len(basis)


def test_primitive():
    assert ce.primitive([Fraction(1, 2), Fraction(3, 4)]) == (2, 3)
    assert ce.primitive([0, -2, 4], free_sign=True) == (0, 1, -2)
    assert ce.primitive([0, 0]) == (0, 0)


def test_orthant():
    c = ce.ConeH(3)
    assert ce.extreme_rays(c) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert ce.cone_dimension(c) == 3
    assert ce.facet_count(c) == 3
    assert ce.f_vector(c) == [3, 3, 1]


def test_plane_section():
    c = ce.ConeH(3, ((1, 1, -1),))
    assert ce.extreme_rays(c) == [(0, 1, 1), (1, 0, 1)]


def test_empty_cone():
    c = ce.ConeH(2, ((1, 1),))
    assert ce.extreme_rays(c) == []
    assert ce.cone_dimension(c) == 0
    assert ce.f_vector(c) == []


def test_contains():
    c = ce.ConeH(3, ((1, 1, -1),))
    assert c.contains((1, 2, 3))
    assert not c.contains((1, 2, 4))
    assert not c.contains((-1, 2, 1))
    assert not c.contains((1, 2))


def test_bad_equality_length():
    with pytest.raises(ValueError):
        ce.ConeH(3, ((1, 2),))


@pytest.mark.parametrize("d", range(1, 7))
def test_simplicial_f_vector(d):
    assert ce.f_vector(ce.ConeH(d)) == [comb(d, k) for k in range(1, d + 1)]


def test_caps():
    with pytest.raises(EffortCapExceeded):
        ce.extreme_rays(ce.ConeH(6), max_dim=5)
    with pytest.raises(EffortCapExceeded):
        ce.f_vector(ce.ConeH(6), max_rays=5)
    # a square pyramid slice: 4 rays, the DD holds at least that many
    sq = ce.ConeH(4, ((1, -1, 1, -1),))
    with pytest.raises(EffortCapExceeded):
        ce.extreme_rays(sq, max_rays=2)


@settings(max_examples=60)
@given(small_cones())
def test_rays_match_support_oracle(c):
    rays = ce.extreme_rays(c)
    assert set(rays) == support_rays([list(r) for r in c.equalities], c.ambient_dim)
    for r in rays:
        assert c.contains(r) and all(v >= 0 for v in r)


@settings(max_examples=60)
@given(small_cones())
def test_insertion_order_irrelevant(c):
    assert ce.extreme_rays(c, order="given") == ce.extreme_rays(c)


def _brute_faces(rays):
    """Faces as closed ray subsets: S is a face when it equals the set of rays
    vanishing wherever every ray of S vanishes."""
    n = len(rays)
    faces = set()
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            zero = [i for i in range(len(rays[0])) if all(rays[j][i] == 0 for j in s)]
            faces.add(frozenset(j for j in range(n) if all(rays[j][i] == 0 for i in zero)))
    return faces


@settings(max_examples=40)
@given(small_cones(max_dim=6, max_eqs=2))
def test_face_lattice_matches_brute_force(c):
    rays = ce.extreme_rays(c)
    if not rays or len(rays) > 10:
        return
    masks = ce.face_masks(c, rays)
    brute = _brute_faces(rays)
    assert {frozenset(k for k in range(len(rays)) if m >> k & 1) for m in masks} == brute
    for m, d in masks.items():
        assert d == minor_rank([rays[k] for k in range(len(rays)) if m >> k & 1])


@settings(max_examples=40)
@given(small_cones(max_dim=6, max_eqs=2))
def test_euler_relation(c):
    fv = ce.f_vector(c) if len(ce.extreme_rays(c)) <= 30 else None
    if not fv:
        return
    d = len(fv)
    # a pointed d-cone's faces are those of a (d-1)-polytope
    assert sum((-1) ** i * f for i, f in enumerate(fv[:-1])) == 1 - (-1) ** (d - 1)
