"""Ray-dimension censuses: how many extreme rays of the deformation cone
correspond to polytopes of each dimension."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from . import cone as ce
from .defcone import build_defcone, defcone_rays
from .deformation import build_polytope, polytope_dim
from .errors import NotADeformation
from .graphs import Graph, cyc3_graph, triangles


def _ray_dim(args: tuple[Graph, tuple[int, ...]]) -> int:
    g, ray = args
    return polytope_dim(build_polytope(g, ray))


def ray_dimension_census(g: Graph, threads: int = 1, max_dim: int = ce.MAX_DD_DIM,
                         max_rays: int = ce.MAX_RAYS) -> dict[int, int]:
    """``{polytope dimension: number of rays}``; exact, or an exception."""
    rays = defcone_rays(g, max_dim=max_dim, max_rays=max_rays)
    cone = build_defcone(g).cone
    for r in rays:
        if not cone.contains(r):
            raise NotADeformation(f"ray {r} fails the polygonal equations")
    jobs = [(g, r) for r in rays]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            dims = list(pool.map(_ray_dim, jobs, chunksize=16))
    else:
        dims = [_ray_dim(j) for j in jobs]
    return dict(sorted(Counter(dims).items()))


def minkowski_dimension(g: Graph, **kw) -> int:
    census = ray_dimension_census(g, **kw)
    return max(census) if census else 0


def cyc3_formula(n: int) -> dict[int, int]:
    """Conjectured counts at dimensions 1..3 for the cyc3 family."""
    return {1: 3 * (n - 2), 2: 6 * n - 16, 3: 23 * (n - 3)}


def census_formula_check(ns: Iterable[int], **kw) -> list[dict]:
    out = []
    for n in ns:
        census = ray_dimension_census(cyc3_graph(n), **kw)
        expected = cyc3_formula(n)
        got = {d: census.get(d, 0) for d in expected}
        out.append({"n": n, "census": census, "expected": expected, "ok": got == expected})
    return out


def census_table(rows: dict[int, dict[int, int]]) -> str:
    """TSV with one row per ``n`` and one column per polytope dimension."""
    dims = sorted({d for c in rows.values() for d in c})
    lines = ["n\\d\t" + "\t".join(map(str, dims))]
    for n, c in sorted(rows.items()):
        lines.append(f"{n}\t" + "\t".join(str(c[d]) if d in c else "" for d in dims))
    return "\n".join(lines) + "\n"


def low_dimensional_counts(g: Graph, census: dict[int, int]) -> tuple[bool, bool]:
    """Whether dimension-1 rays number |E| and dimension-2 rays number 2|T|."""
    return census.get(1, 0) == g.m, census.get(2, 0) == 2 * len(triangles(g))
