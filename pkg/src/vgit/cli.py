"""Command-line interface: ``vgit <command> ...``.

Results go to stdout (or ``--out``); diagnostics and error records go to
stderr. Exit codes: 0 ok, 1 engine error, 2 schema/input error, 3 truncated
result without ``--allow-truncated``, 4 corpus mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import betti, corpus, graded_ring as gr, lattice, loci, points
from .lattice import Completeness
from .report import SchemaError, dumps, make_report, parse_problem

EXIT_OK, EXIT_ENGINE, EXIT_SCHEMA, EXIT_TRUNCATED, EXIT_MISMATCH = 0, 1, 2, 3, 4


def default_bound() -> int:
    env = os.environ.get("VGIT_BOUND")
    if env is None:
        return gr.DEFAULT_BOUND
    try:
        value = int(env)
    except ValueError:
        raise SchemaError(f"VGIT_BOUND must be an integer, got {env!r}") from None
    if value < 1:
        raise SchemaError("VGIT_BOUND must be >= 1")
    return value


def _read_problem(path: str) -> dict:
    if path == "-":
        return parse_problem(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())


def _ring(problem: dict) -> gr.GradedSemigroupRing:
    if problem["problem"] != "affine_torus":
        raise SchemaError("this command needs an affine_torus problem")
    try:
        return corpus.ring_from_problem(problem)
    except gr.RingError as exc:
        raise SchemaError(str(exc)) from None


def _bound(args, problem: dict | None) -> int:
    if args.bound is not None:
        return args.bound
    if problem and "bound" in problem:
        return problem["bound"]
    return default_bound()


def _gen_rows(R: gr.GradedSemigroupRing, gens) -> list[dict]:
    return [
        {"exponent": list(g.exponent), "z_degree": g.z_degree, "name": _zname(R, g)}
        for g in gens
    ]


def _zname(R: gr.GradedSemigroupRing, g: gr.QuotientGenerator) -> str:
    base = R.monomial_name(g.monomial)
    if g.z_degree == 0:
        return base
    z = "z" if g.z_degree == 1 else f"z^{g.z_degree}"
    return z if base == "1" else f"{z}*{base}"


def _flag(status: Completeness) -> list[str]:
    return [status.value]


# -- commands -----------------------------------------------------------------


def cmd_hilbert(problem: dict, bound: int):
    R = _ring(problem)
    hb = lattice.hilbert_basis(lattice.DiophantineSystem(len(R.gen_weights), R.gen_weights), bound)
    results = {
        "hilbert_basis": {
            "elements": [list(e) for e in hb.elements],
            "status": hb.status,
            "open_candidates": hb.open_candidates,
            "bound": bound,
        }
    }
    return results, _flag(hb.status)


def _resolve_d(R, problem: dict, d: int | None, bound: int) -> tuple[int, dict | None]:
    if d is not None:
        return d, None
    if "d" in problem:
        return problem["d"], None
    fd = gr.find_d(R, bound=bound)
    return fd.d, {"d": fd.d, "check_bound": fd.check_bound, "status": fd.status}


def cmd_quotient(problem: dict, lin: str, d: int | None, bound: int):
    R = _ring(problem)
    found = None
    if lin == "zero":
        pres = gr.invariant_ring(R, bound)
    else:
        d, found = _resolve_d(R, problem, d, bound)
        pres = gr.proj_quotient(R, "+" if lin == "plus" else "-", d, bound)
    results = {
        "quotient": {
            "kind": pres.kind,
            "d": pres.linearization_d,
            "empty": pres.empty,
            "gens": _gen_rows(R, pres.gens),
            "algebra_gens": _gen_rows(R, pres.algebra_gens),
            "status": pres.status,
        }
    }
    if found:
        results["find_d"] = found
    flags = _flag(pres.status)
    if pres.empty:
        flags.append("quotient-empty-to-bound")
    return results, flags


def cmd_cross(problem: dict, bound: int):
    R = _ring(problem)
    w = list(R.gen_weights)
    plus, minus, zero = loci.fixed_loci(w)
    ss = loci.semistable_loci(w)
    results = {
        "fixed_loci": {"plus": plus.zero_set, "minus": minus.zero_set, "zero": zero.zero_set},
        "semistable_loci": {
            "ss_zero_removed": [sorted(s) for s in sorted(ss.ss_zero.key(), key=sorted)],
            "s_zero_removed": [sorted(s) for s in sorted(ss.s_zero.key(), key=sorted)],
            "ss_plus_removed": [sorted(s) for s in sorted(ss.ss_plus.key(), key=sorted)],
            "ss_minus_removed": [sorted(s) for s in sorted(ss.ss_minus.key(), key=sorted)],
        },
    }
    flags = []
    if R.is_polynomial:
        rep = loci.classify_crossing(w)
        results["crossing"] = {
            "codim_plus": rep.codim_plus,
            "codim_minus": rep.codim_minus,
            "flip": rep.flip,
            "weights_plus": rep.weights_plus,
            "weights_minus": rep.weights_minus,
            "fiber_plus": str(rep.fiber_plus),
            "fiber_minus": str(rep.fiber_minus),
            "quasi_free": rep.quasi_free,
            "degenerate": rep.degenerate,
            "summary": rep.summary,
        }
    else:
        flags.append("not-a-linear-model")
    return results, flags


def cmd_blowup(problem: dict, side: str, d: int | None, bound: int):
    R = _ring(problem)
    d, found = _resolve_d(R, problem, d, bound)
    a, b = {"plus": (d + 1, 1), "minus": (1, d + 1), "zero": (1, 1)}[side]
    bl = gr.blowup_algebra(R, a, b, d, bound)
    results = {
        "blowup": {
            "side": side,
            "a": a,
            "b": b,
            "d": d,
            "piece_degrees": [bl.p, bl.q],
            "gens": _gen_rows(R, bl.gens),
            "status": bl.status,
        }
    }
    if found:
        results["find_d"] = found
    return results, _flag(bl.status)


def _parse_clusters(text: str, n: int) -> points.Configuration:
    clusters = [frozenset(int(x) for x in part.split(",") if x.strip()) for part in text.split(";") if part.strip()]
    return points.Configuration.of(n, *clusters)


def cmd_points(n: int, mode: str, m: int | None = None, t: str | None = None, clusters: str | None = None):
    if mode == "walls":
        return {"walls": points.walls_points(n), "chambers": points.chambers_points(n)}, []
    if mode == "wall":
        if m is None:
            raise SchemaError("wall mode needs --m")
        wg = points.wall_geometry(n, m)
        data = {
            "n": wg.n,
            "m": wg.m,
            "t0": wg.t0,
            "component_count": wg.component_count,
            "normal_weights": wg.normal_weights,
            "fibers": wg.fibers,
            "fiber_plus_dim": wg.fiber_plus_dim,
            "fiber_minus_dim": wg.fiber_minus_dim,
            "stabilizer": wg.stabilizer,
            "minus_side_empty": wg.minus_side_empty,
        }
        return {"wall": data}, (["empty-side"] if wg.minus_side_empty else [])
    if t is None:
        raise SchemaError("check mode needs --t")
    config = _parse_clusters(clusters or "", n)
    stab = points.is_semistable(config, Fraction(t))
    return {"check": {"t": Fraction(t), "clusters": [sorted(c) for c in config.clusters], "stability": stab}}, []


def cmd_betti(n: int, symmetric: bool = False):
    poly = betti.poincare_symmetric(n) if symmetric else betti.poincare_ordered(n)
    results = {
        "betti": {
            "n": n,
            "symmetric": symmetric,
            "coefficients": list(poly.coefficients),
            "polynomial": str(poly),
            "multipliers": [1] * len(betti.permutation_multipliers(n)) if symmetric else betti.permutation_multipliers(n),
        }
    }
    return results, []


def cmd_corpus():
    results = corpus.run_corpus()
    return {"cases": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}, (
        [] if all(r.passed for r in results) else ["mismatch"]
    )


# -- text rendering -------------------------------------------------------------


def render_text(results: dict, flags: list[str]) -> str:
    lines = []
    for key, value in results.items():
        if key == "cases":
            for case in value:
                lines.append(f"{'PASS' if case['passed'] else 'FAIL'}  {case['name']}  {case['detail']}")
            continue
        lines.append(f"[{key}]")
        if isinstance(value, dict):
            for k in sorted(value):
                v = value[k]
                if isinstance(v, list) and v and isinstance(v[0], dict) and "name" in v[0]:
                    lines.append(f"  {k}:")
                    for row in v:
                        lines.append(f"    {row['name']:<16} z^{row['z_degree']}  {row['exponent']}")
                else:
                    lines.append(f"  {k}: {v}")
        else:
            lines.append(f"  {value}")
    if flags:
        lines.append("flags: " + ", ".join(flags))
    return "\n".join(lines) + "\n"


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, default=None, help="search bound (default 12, or $VGIT_BOUND)")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--allow-truncated", action="store_true")

    parser = argparse.ArgumentParser(prog="vgit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert basis of the degree-0 multiplicities")
    p.add_argument("problem", help="problem file, or - for stdin")

    p = sub.add_parser("quotient", parents=[common], help="X//0, X//+ or X//-")
    p.add_argument("problem")
    p.add_argument("--lin", choices=["plus", "minus", "zero"], required=True)
    p.add_argument("--d", type=int, default=None)

    p = sub.add_parser("cross", parents=[common], help="fixed loci, semistable loci and crossing data")
    p.add_argument("problem")

    p = sub.add_parser("blowup", parents=[common], help="generators of a common blow-up")
    p.add_argument("problem")
    p.add_argument("--side", choices=["plus", "minus", "zero"], required=True)
    p.add_argument("--d", type=int, default=None)

    p = sub.add_parser("points", parents=[common], help="points on P^1: walls, wall data, stability")
    p.add_argument("n", type=int)
    p.add_argument("mode", choices=["walls", "wall", "check"])
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--t", default=None, help="rational, e.g. 3 or 5/2")
    p.add_argument("--clusters", default=None, help='coincident indices, e.g. "0,1;2,3"')

    p = sub.add_parser("betti", parents=[common], help="Poincaré polynomial for odd n")
    p.add_argument("n", type=int)
    p.add_argument("--symmetric", action="store_true")

    sub.add_parser("corpus", parents=[common], help="run the regression corpus")
    return parser


def _error(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": {"kind": kind, "message": message, "exit_code": code}}, sort_keys=True) + "\n")
    return code


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    problem = None
    try:
        if hasattr(args, "problem"):
            problem = _read_problem(args.problem)
        bound = _bound(args, problem)
        if args.command == "hilbert":
            results, flags = cmd_hilbert(problem, bound)
        elif args.command == "quotient":
            results, flags = cmd_quotient(problem, args.lin, args.d, bound)
        elif args.command == "cross":
            results, flags = cmd_cross(problem, bound)
        elif args.command == "blowup":
            results, flags = cmd_blowup(problem, args.side, args.d, bound)
        elif args.command == "points":
            problem = {"problem": "points_p1", "n": args.n}
            results, flags = cmd_points(args.n, args.mode, args.m, args.t, args.clusters)
        elif args.command == "betti":
            problem = {"problem": "points_p1", "n": args.n}
            results, flags = cmd_betti(args.n, args.symmetric)
        else:
            results, flags = cmd_corpus()
    except (SchemaError, OSError) as exc:
        return _error("schema", str(exc), EXIT_SCHEMA)
    except (ValueError, ArithmeticError) as exc:
        return _error("engine", str(exc), EXIT_ENGINE)

    report = make_report(problem, results, flags)
    text = dumps(report) if args.format == "json" else render_text(report["results"], report["flags"])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if "mismatch" in flags:
        return EXIT_MISMATCH
    if Completeness.TRUNCATED.value in flags and not args.allow_truncated:
        sys.stderr.write("result truncated at the search bound; rerun with a larger --bound or --allow-truncated\n")
        return EXIT_TRUNCATED
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
