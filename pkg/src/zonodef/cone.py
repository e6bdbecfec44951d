"""Exact polyhedral cones ``{x : E x = 0, x >= 0}``.

Everything is done over the integers or :class:`fractions.Fraction`; there is
no floating point in this module.

Extreme rays are found by the double description method run inside the
linear subspace ``ker E``: the subspace is parameterised by a kernel basis
``K`` so that the cone becomes ``{y : K y >= 0}``, which is full dimensional
and pointed (``K`` has full column rank).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import EffortCapExceeded

log = logging.getLogger(__name__)

Number = int | Fraction
Ray = tuple[int, ...]

MAX_DD_DIM = 128
MAX_RAYS = 250_000
MAX_FVECTOR_RAYS = 64


# -- linear algebra ---------------------------------------------------------

def _sparse(row: Sequence[Number] | dict) -> dict[int, Fraction]:
    items = row.items() if isinstance(row, dict) else enumerate(row)
    return {j: Fraction(v) for j, v in items if v}


def rref(rows: Iterable[Sequence[Number] | dict]) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form, as ``{pivot column: sparse row}``.

    Each returned row has a 1 in its pivot column and 0 in every other pivot
    column.
    """
    piv: dict[int, dict[int, Fraction]] = {}
    for raw in rows:
        row = _sparse(raw)
        for c in [c for c in row if c in piv]:
            f = row.get(c)
            if not f:
                continue
            for j, v in piv[c].items():
                w = row.get(j, 0) - f * v
                if w:
                    row[j] = w
                else:
                    row.pop(j, None)
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {j: v * inv for j, v in row.items()}
        for other in piv.values():
            f = other.get(p)
            if f:
                for j, v in row.items():
                    w = other.get(j, 0) - f * v
                    if w:
                        other[j] = w
                    else:
                        other.pop(j, None)
        piv[p] = row
    return piv


def rank(rows: Iterable[Sequence[Number]]) -> int:
    return len(rref(rows))


def kernel_basis(rows: Iterable[Sequence[Number]], ncols: int,
                 piv: dict | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : rows . x = 0}``, one vector per non-pivot column.

    ``piv`` may pass in an already computed :func:`rref` of ``rows``.
    """
    if piv is None:
        piv = rref(rows)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for p, row in piv.items():
            v = row.get(f)
            if v:
                x[p] = -v
        basis.append(tuple(x))
    return basis


def primitive(vec: Sequence[Number], free_sign: bool = False) -> Ray:
    """Scale to coprime integers; with ``free_sign`` make the first nonzero entry positive."""
    den = reduce(lcm, (Fraction(v).denominator for v in vec), 1)
    ints = [int(Fraction(v) * den) for v in vec]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    if free_sign and next(v for v in ints if v) < 0:
        g = -g
    return tuple(v // g for v in ints)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b) if x)


# -- cones ------------------------------------------------------------------

@dataclass(frozen=True)
class ConeH:
    """``{x in Q^ambient_dim : equalities . x = 0, x >= 0}``."""

    ambient_dim: int
    equalities: tuple[tuple[Fraction, ...], ...] = ()

    def __post_init__(self):
        eqs = tuple(tuple(Fraction(v) for v in row) for row in self.equalities)
        for row in eqs:
            if len(row) != self.ambient_dim:
                raise ValueError(f"equality of length {len(row)} in ambient dimension {self.ambient_dim}")
        object.__setattr__(self, "equalities", eqs)

    def contains(self, x: Sequence[Number]) -> bool:
        if len(x) != self.ambient_dim or any(v < 0 for v in x):
            return False
        return all(sum(v * x[j] for j, v in row) == 0 for row in self._sparse_equalities)

    @cached_property
    def _sparse_equalities(self) -> list[list[tuple[int, Fraction]]]:
        return [[(j, v) for j, v in enumerate(row) if v] for row in self.equalities]

    @cached_property
    def reduced(self) -> _Reduced:
        return _reduce(self)


class _DDRay:
    # a ray y is stored only through its values on every row, rows . y
    __slots__ = ("slack", "zeros")

    def __init__(self, slack, zeros):
        self.slack = slack
        self.zeros = zeros


def _dd(rows: list[Ray], dim: int, order: str = "min-violations", max_rays: int = MAX_RAYS) -> list[Ray]:
    """Extreme rays of the pointed full-dimensional cone ``{y : rows . y >= 0}``,
    each returned as its vector of values ``rows . y``."""
    m = len(rows)
    # initial simplicial cone from dim independent rows, taken in the given order
    basis: list[int] = []
    for i in range(m):
        if rank([rows[b] for b in basis] + [rows[i]]) > len(basis):
            basis.append(i)
            if len(basis) == dim:
                break
    if len(basis) < dim:
        raise ValueError("inequality system does not define a pointed cone")
    # columns of the inverse of the basis matrix
    inv = rref([list(rows[b]) + [int(r == c) for c in range(dim)] for r, b in enumerate(basis)])
    rays = []
    for c in range(dim):
        col = [inv[p].get(dim + c, 0) for p in range(dim)]
        vec = primitive(col)
        zeros = sum(1 << basis[r] for r in range(dim) if r != c)
        rays.append(_DDRay([_dot(r, vec) for r in rows], zeros))
    done = set(basis)
    need = dim - 2

    remaining = [i for i in range(m) if i not in done]
    while remaining:
        if order == "min-violations":
            i = min(remaining, key=lambda r: (sum(1 for x in rays if x.slack[r] < 0), r))
        else:
            i = remaining[0]
        remaining.remove(i)
        bit = 1 << i
        pos, zer, neg = [], [], []
        for x in rays:
            s = x.slack[i]
            (pos if s > 0 else neg if s < 0 else zer).append(x)
        for x in zer:
            x.zeros |= bit
        if not neg:
            continue
        new = []
        masks = [x.zeros for x in rays]
        for p in pos:
            zp = p.zeros
            sp = p.slack[i]
            for q in neg:
                z = zp & q.zeros
                if z.bit_count() < need:
                    continue
                # combinatorial adjacency: no third ray vanishes on all of z
                hits = 0
                for w in masks:
                    if w & z == z:
                        hits += 1
                        if hits > 2:
                            break
                if hits > 2:
                    continue
                sq = -q.slack[i]
                slack = [sp * b + sq * a for a, b in zip(p.slack, q.slack)]
                g = reduce(gcd, slack, 0)
                new.append(_DDRay([v // g for v in slack], z | bit))
        rays = pos + zer + new
        if len(rays) > max_rays:
            raise EffortCapExceeded(f"double description exceeded {max_rays} intermediate rays")
        log.debug("dd row %d: %d rays", i, len(rays))
    return [x.slack for x in rays]


@dataclass(frozen=True)
class _Reduced:
    dim: int                                  # dimension of ker E
    rows: tuple[Ray, ...]                     # distinct primitive inequality rows in kernel coordinates
    # per ambient coordinate: (row index or -1 if identically zero, positive integer multiplier);
    # x_i is proportional to multiplier * (row . y) with one common factor
    coords: tuple[tuple[int, int], ...]
    # coordinates on which projection is injective on ker E (x restricted there is y)
    free: tuple[int, ...]


def _reduce(cone: ConeH) -> _Reduced:
    piv = rref(cone.equalities)
    free = tuple(f for f in range(cone.ambient_dim) if f not in piv)
    basis = kernel_basis(cone.equalities, cone.ambient_dim, piv)
    k = len(basis)
    where: dict[Ray, int] = {}
    rows: list[Ray] = []
    scaled = []
    for i in range(cone.ambient_dim):
        col = [b[i] for b in basis]
        r = primitive(col) if k else ()
        if not any(r):
            scaled.append((-1, Fraction(0)))
            continue
        if r not in where:
            where[r] = len(rows)
            rows.append(r)
        j = next(t for t, v in enumerate(r) if v)
        scaled.append((where[r], col[j] / r[j]))
    den = reduce(lcm, (s.denominator for _, s in scaled), 1)
    coords = tuple((j, int(s * den)) for j, s in scaled)
    return _Reduced(k, tuple(rows), coords, free)


def extreme_rays(cone: ConeH, max_dim: int = MAX_DD_DIM, max_rays: int = MAX_RAYS,
                 order: str = "min-violations") -> list[Ray]:
    """Extreme rays as primitive nonnegative integer vectors, sorted.

    ``max_dim`` bounds the dimension of the subspace the enumeration runs in.
    """
    red = cone.reduced
    k = red.dim
    if k > max_dim:
        raise EffortCapExceeded(f"cone lives in a {k}-dimensional subspace, cap is {max_dim}")
    if k == 0 or not red.rows:
        return []
    slacks = _dd(list(red.rows), k, order=order, max_rays=max_rays)
    out = set()
    for sl in slacks:
        x = [mult * sl[j] if j >= 0 else 0 for j, mult in red.coords]
        out.add(primitive(x))
    return sorted(out)


def _projected(cone: ConeH, rays: Sequence[Ray]) -> list[Ray]:
    free = cone.reduced.free
    return [tuple(r[f] for f in free) for r in rays]


def cone_dimension(cone: ConeH, rays: Sequence[Ray] | None = None) -> int:
    if rays is None:
        rays = extreme_rays(cone)
    return rank(_projected(cone, rays)) if rays else 0


def _rank_of(rays: Sequence[Ray], mask: int) -> int:
    return rank([r for k, r in enumerate(rays) if mask >> k & 1])


def facet_masks(cone: ConeH, rays: Sequence[Ray] | None = None) -> list[int]:
    """Facets as bitmasks over ``rays`` (the rays lying on each facet).

    A coordinate inequality is a facet when the rays it is tight on span a
    hyperplane of the cone; coordinates defining the same facet are merged.
    """
    if rays is None:
        rays = extreme_rays(cone)
    if not rays:
        return []
    proj = _projected(cone, rays)
    d = rank(proj)
    full = (1 << len(rays)) - 1
    reps = {}
    for i, (j, _) in enumerate(cone.reduced.coords):
        if j >= 0:
            reps.setdefault(j, i)
    masks = {sum(1 << k for k, r in enumerate(rays) if r[i] == 0) for i in reps.values()}
    return sorted(mk for mk in masks if mk != full and _rank_of(proj, mk) == d - 1)


def facet_count(cone: ConeH, rays: Sequence[Ray] | None = None) -> int:
    return len(facet_masks(cone, rays))


def face_masks(cone: ConeH, rays: Sequence[Ray] | None = None,
               max_rays: int = MAX_FVECTOR_RAYS) -> dict[int, int]:
    """All nonzero faces as ``{ray mask: dimension}``."""
    if rays is None:
        rays = extreme_rays(cone)
    if len(rays) > max_rays:
        raise EffortCapExceeded(f"{len(rays)} rays exceeds the face lattice cap of {max_rays}")
    if not rays:
        return {}
    facets = facet_masks(cone, rays)
    proj = _projected(cone, rays)
    full = (1 << len(rays)) - 1
    faces = {full}
    stack = [full]
    while stack:
        f = stack.pop()
        for h in facets:
            g = f & h
            if g not in faces:
                faces.add(g)
                stack.append(g)
    faces.discard(0)
    return {f: _rank_of(proj, f) for f in faces}


def f_vector(cone: ConeH, rays: Sequence[Ray] | None = None,
             max_rays: int = MAX_FVECTOR_RAYS) -> list[int]:
    """Number of faces of each dimension ``1..dim`` (the cone itself last)."""
    if rays is None:
        rays = extreme_rays(cone)
    faces = face_masks(cone, rays, max_rays)
    if not faces:
        return []
    d = max(faces.values())
    counts = [0] * d
    for dim in faces.values():
        counts[dim - 1] += 1
    return counts
