"""Command line front end.

Exit codes: 0 success, 1 failed validation, 2 invalid input, 3 effort cap.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import cone as ce
from .decompose import decompose, identify_ray, verify_triangulation
from .defcone import analyze, build_defcone, defcone_f_vector
from .deformation import (
    ZONOTOPE,
    as_lengths,
    minus_triangle,
    plus_triangle,
    segment,
    summand_lengths,
)
from .errors import EffortCapExceeded, NotADeformation, NotK4Free
from .experiments import census_table, ray_dimension_census
from .graphs import (
    Graph,
    GraphError,
    clique_count,
    cyc3_graph,
    is_k4_free,
    is_triangle_free,
    load_graph,
    triangles,
    wedge_k4,
)

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

FAMILIES = {"cyc3": cyc3_graph, "wedge_k4": wedge_k4}

_TERM = re.compile(
    r"\s*([+-])?\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*?\s*)?([etZz])\s*(?:\(([^)]*)\))?\s*")


class InputError(ValueError):
    pass


def parse_expression(g: Graph, text: str) -> tuple[Fraction, ...]:
    """Length vector of a summand expression such as ``2*e(0,1) - t(0,1,2) + Z``.

    A negative coefficient on ``t`` selects the opposite triangle.
    """
    total = [Fraction(0)] * len(build_defcone(g).labels)
    pos = 0
    text = text.strip()
    if not text:
        raise InputError("empty expression")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot parse expression at {text[pos:]!r}")
        if pos and not m.group(1):
            raise InputError(f"missing '+' or '-' before {text[pos:]!r}")
        pos = m.end()
        sign, coef, name, args = m.groups()
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        verts = tuple(int(a) for a in args.split(",")) if args else ()
        if name in "Zz":
            if verts:
                raise InputError("Z takes no arguments")
            s = ZONOTOPE
        elif name == "e":
            if len(verts) != 2:
                raise InputError("e(i,j) takes two vertices")
            if c < 0:
                raise InputError("segments need nonnegative coefficients")
            s = segment(verts)
        else:
            if len(verts) != 3:
                raise InputError("t(i,j,k) takes three vertices")
            s = plus_triangle(verts) if c >= 0 else minus_triangle(verts)
            c = abs(c)
        for k, v in enumerate(summand_lengths(g, s)):
            total[k] += c * v
    return tuple(total)


def parse_lengths(g: Graph, source: str) -> tuple[Fraction, ...]:
    """A JSON list (inline or in a file) or a summand expression."""
    p = Path(source)
    text = p.read_text() if p.is_file() else source
    if text.lstrip().startswith("["):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON length vector: {exc}") from None
        try:
            return as_lengths(g, [Fraction(str(v)) for v in values])
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(str(exc)) from None
    return parse_expression(g, text)


def _fmt(x: Fraction) -> str:
    return str(x)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=None))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _caps(args) -> dict:
    return {"max_rays": args.max_rays}


def _check_orientation_cap(args, g: Graph) -> None:
    if 2 ** g.m > args.max_orientations:
        raise EffortCapExceeded(
            f"2^{g.m} candidate orientations exceeds --max-orientations {args.max_orientations}")


def cmd_info(args, g: Graph) -> int:
    info = {
        "n": g.n,
        "edges": g.m,
        "triangles": len(triangles(g)),
        "omega": clique_count(g),
        "k4_free": is_k4_free(g),
        "triangle_free": is_triangle_free(g),
    }
    text = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in info.items())
    _emit(args, info, text)
    return EXIT_OK


def cmd_cone(args, g: Graph) -> int:
    rep = analyze(g, **_caps(args))
    out = {
        "ambient_dim": rep.ambient_dim,
        "dim": rep.dimension,
        "omega": rep.clique_count,
        "dim_ok": rep.dim_ok,
        "facets": rep.facets,
        "expected_facets": rep.expected_facets,
        "facets_ok": rep.facets_ok,
        "rays": len(rep.rays),
    }
    text = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in out.items())
    _emit(args, out, text)
    return EXIT_OK if rep.dim_ok and rep.facets_ok else EXIT_FAILED


def cmd_rays(args, g: Graph) -> int:
    rays = analyze(g, **_caps(args)).rays
    named = is_k4_free(g)
    items = []
    lines = []
    for r in rays:
        s = identify_ray(g, r) if named else None
        items.append({"ray": list(r), "summand": str(s) if s else None})
        lines.append(" ".join(map(str, r)) + (f"\t{s}" if s else ("\t?" if named else "")))
    _emit(args, {"count": len(rays), "rays": items}, "\n".join(lines))
    return EXIT_OK


def cmd_fvector(args, g: Graph) -> int:
    fv = defcone_f_vector(g, max_rays=min(args.max_rays, ce.MAX_FVECTOR_RAYS))
    _emit(args, {"f_vector": fv}, " ".join(map(str, fv)))
    return EXIT_OK


def cmd_decompose(args, g: Graph) -> int:
    if not is_k4_free(g):
        raise NotK4Free("decomposition is only defined for K4-free graphs")
    ell = parse_lengths(g, args.lengths)
    try:
        dec = decompose(g, ell)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    report = dec.to_json(verified=True)
    lines = [f"{s}\t{_fmt(w)}" for w, s in dec.terms()]
    lines.append("epsilon\t" + " ".join(f"{k}:{v:+d}" if v else f"{k}:0" for k, v in report["epsilon"].items()))
    lines.append("verified\ttrue")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK


def _census_text(census: dict[int, int]) -> str:
    return " ".join(f"{d}:{c}" for d, c in census.items())


def cmd_census(args, g: Graph) -> int:
    census = ray_dimension_census(g, threads=args.threads, **_caps(args))
    _emit(args, {"census": {str(d): c for d, c in census.items()}, "total": sum(census.values())},
          _census_text(census))
    return EXIT_OK


def cmd_table(args) -> int:
    make = FAMILIES[args.family]
    rows = {}
    for n in range(args.n_min, args.n_max + 1):
        g = make(n)
        _check_orientation_cap(args, g)
        rows[n] = ray_dimension_census(g, threads=args.threads, **_caps(args))
    payload = {"family": args.family,
               "rows": {str(n): {str(d): c for d, c in c_.items()} for n, c_ in rows.items()}}
    _emit(args, payload, census_table(rows))
    return EXIT_OK


def cmd_check(args, g: Graph) -> int:
    rep = verify_triangulation(g, **_caps(args))
    text = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in rep.items())
    _emit(args, rep, text)
    return EXIT_OK if rep["verified"] else EXIT_FAILED


GRAPH_COMMANDS = {
    "info": cmd_info,
    "cone": cmd_cone,
    "rays": cmd_rays,
    "fvector": cmd_fvector,
    "decompose": cmd_decompose,
    "census": cmd_census,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--max-orientations", type=int, default=2 ** 24,
                        help="refuse graphs with more than this many candidate orientations (2^|E|)")
    common.add_argument("--max-rays", type=int, default=ce.MAX_RAYS,
                        help="refuse when the double description holds more rays than this")
    common.add_argument("--threads", type=int, default=1, help="worker processes for censuses")

    p = argparse.ArgumentParser(prog="zonodef", description="Deformation cones of graphical zonotopes.")
    sub = p.add_subparsers(dest="command", required=True)
    helps = {
        "info": "vertex, edge, triangle and clique counts",
        "cone": "dimension and facets of the deformation cone",
        "rays": "extreme rays, named by summand when the graph is K4-free",
        "fvector": "f-vector of the deformation cone",
        "decompose": "Minkowski decomposition of a length vector (K4-free graphs)",
        "census": "polytope dimension of every extreme ray",
        "check": "verify the triangulation of a K4-free deformation cone",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("graph", help="graph file or generator such as cyc3:5, bitriangle")
        if name == "decompose":
            sp.add_argument("--lengths", required=True,
                            help="JSON list, file holding one, or an expression like '1*e(0,1) + 1*t(0,1,2)'")
    tp = sub.add_parser("table", parents=[common], help="census table for a graph family")
    tp.add_argument("family", choices=sorted(FAMILIES))
    tp.add_argument("--n-max", type=int, required=True)
    tp.add_argument("--n-min", type=int, default=4)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.command == "table":
            return cmd_table(args)
        g = load_graph(args.graph)
        _check_orientation_cap(args, g)
        return GRAPH_COMMANDS[args.command](args, g)
    except EffortCapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, InputError, NotK4Free, NotADeformation, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
