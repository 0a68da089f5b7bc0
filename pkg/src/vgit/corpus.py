"""Regression corpus: the worked examples, as problems plus expected values."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import betti, graded_ring as gr, lattice, loci, points

PROBLEMS: dict[str, dict] = {
    "weighted_blowup": {
        "problem": "affine_torus",
        "description": "k* on A^3 with weights (-1, 1, 2): weighted blow-up counterexample",
        "weights": [-1, 1, 2],
        "names": ["w", "x", "y"],
    },
    "atiyah": {
        "problem": "affine_torus",
        "description": "k* on A^4 with weights (1, 1, -1, -1): the Atiyah flop",
        "weights": [1, 1, -1, -1],
        "names": ["v", "w", "x", "y"],
    },
    "quadric": {
        "problem": "affine_torus",
        "description": "k[a^2, ab, b^2, c, d]/(ad - bc) with a, b, c, d of weights 1, -1, 1, -1",
        "ambient_rank": 3,
        "generators": [[0, 0, 2], [1, 0, 2], [2, 0, 2], [0, 1, 1], [1, 1, 1]],
        "weights": [2, 0, -2, 1, -1],
    },
    "balanced_pair": {"problem": "affine_torus", "weights": [1, -1]},
    "positive_cube": {"problem": "affine_torus", "weights": [1, 1, 1]},
    "trivial_line": {"problem": "affine_torus", "weights": [0]},
    "points5": {"problem": "points_p1", "n": 5},
}


def ring_from_problem(problem: dict) -> gr.GradedSemigroupRing:
    if problem["problem"] != "affine_torus":
        raise ValueError("not an affine_torus problem")
    gens = problem.get("generators")
    if gens is None:
        return gr.make_polynomial_ring(problem["weights"], problem.get("names"))
    return gr.make_semigroup_ring(problem["ambient_rank"], gens, problem["weights"], problem.get("names"))


def corpus_ring(name: str) -> gr.GradedSemigroupRing:
    return ring_from_problem(PROBLEMS[name])


def ring_names() -> list[str]:
    return [k for k, v in PROBLEMS.items() if v["problem"] == "affine_torus"]


@dataclass(frozen=True)
class CaseResult:
    name: str
    passed: bool
    detail: str = ""


def _set(vs) -> set:
    return {tuple(v) for v in vs}


def _case_invariant_weighted_blowup():
    got = gr.invariant_ring(corpus_ring("weighted_blowup")).degree_zero()
    return _set(got) == {(1, 1, 0), (2, 0, 1)}, f"R_0 gens {got}"


def _case_quotients_weighted_blowup():
    R = corpus_ring("weighted_blowup")
    plus = gr.proj_quotient(R, "+", 1)
    minus = gr.proj_quotient(R, "-", 1)
    want_plus = [(1, 1, 0, 0), (2, 0, 1, 0), (0, 1, 0, 1), (0, 0, 1, 2)]
    want_minus = [(1, 1, 0, 0), (2, 0, 1, 0), (1, 0, 0, 1)]
    ok = (
        _set(plus.exponents()) == _set(want_plus)
        and sorted(g.z_degree for g in plus.gens) == [0, 0, 1, 2]
        and plus.canonical() == lattice.canonical_form(want_plus, [v[-1] for v in want_plus])
        and _set(minus.exponents()) == _set(want_minus)
        and minus.canonical() == lattice.canonical_form(want_minus, [v[-1] for v in want_minus])
    )
    return ok, f"+ {plus.exponents()} / - {minus.exponents()}"


def _case_blowup_weighted_blowup():
    R = corpus_ring("weighted_blowup")
    fd = gr.find_d(R, check_bound=6)
    bl = gr.blowup_algebra(R, 1, 1, fd.d)
    # u, v, z u^2, z v
    abstract = [(1, 0, 0), (0, 1, 0), (2, 0, 1), (0, 1, 1)]
    ok = fd.d == 2 and bl.canonical() == lattice.canonical_form(abstract, [0, 0, 1, 1])
    return ok, f"d={fd.d}, blow-up gens {[g.exponent for g in bl.gens]}"


def _case_atiyah():
    R = corpus_ring("atiyah")
    r0 = gr.invariant_ring(R).degree_zero()
    plus = [g.monomial for g in gr.proj_quotient(R, "+", 1).positive_part()]
    minus = [g.monomial for g in gr.proj_quotient(R, "-", 1).positive_part()]
    rep = loci.classify_crossing(PROBLEMS["atiyah"]["weights"])
    ok = (
        len(r0) == 4
        and lattice.lattice_rank(r0) == 3
        and _set(plus) == {(1, 0, 0, 0), (0, 1, 0, 0)}
        and _set(minus) == {(0, 0, 1, 0), (0, 0, 0, 1)}
        and rep.flip
        and (rep.fiber_plus.dim, rep.fiber_minus.dim) == (1, 1)
        and rep.fiber_plus.is_projective_space
        and rep.quasi_free == 1
    )
    return ok, rep.summary


def _case_quadric():
    R = corpus_ring("quadric")
    r0 = gr.invariant_ring(R).degree_zero()
    u, v = (1, 0, 2), (1, 2, 2)
    prod = gr.product_piece(R, 2, 2)
    want = [(2, 0, 4), (2, 2, 4), (2, 4, 4)]
    bl = gr.blowup_algebra(R, 1, 1, 2)
    free = gr.ring_canonical(R, r0, z=False)
    ok = (
        _set(r0) == {u, v}
        and (free.rank, free.index, free.images) == (2, 1, ((1, 0), (0, 1)))
        and _set(prod) == _set(want)
        and gr.ring_canonical(R, prod, z=False) == lattice.canonical_form([(2, 0), (1, 1), (0, 2)])
        and len(bl.degree(1)) == 3
        and _set(bl.degree(1)) == _set(want)
    )
    return ok, f"R_0 {r0}, R_22 {prod}"


def _case_points5():
    ok = points.walls_points(5) == [5, 3, 1]
    wg = points.wall_geometry(5, 1)
    ok &= (wg.t0, wg.component_count, sorted(wg.normal_weights), wg.fibers) == (3, 5, [-1, 1, 1, 1], (0, 2))
    configs = list(points.all_configurations(5))
    for m in range(3):
        t0 = Fraction(5 - 2 * m)
        patterns = points.wall_zero_patterns(5, m)
        blocks = {b for p in patterns for b in p.clusters}
        for c in configs:
            ss = points.is_semistable(c, t0) is points.Stability.STRICTLY_SEMISTABLE
            ok &= ss == any(b in c.clusters for b in blocks)
            if len(c.clusters) == 2:
                ok &= ss == points.in_wall_zero_locus(c, m)
    return ok, f"{len(configs)} partitions scanned"


def _case_betti():
    P = betti.PoincarePolynomial
    ok = betti.poincare_ordered(3) == P((1,))
    ok &= betti.poincare_ordered(5) == P((1, 0, 5, 0, 1))
    ok &= betti.poincare_symmetric(5) == P((1, 0, 1, 0, 1))
    for n in (7, 9, 11):
        p = betti.poincare_ordered(n)
        ok &= p.is_palindromic() and p.is_nonnegative() and p.degree == 2 * (n - 3)
        ok &= betti.poincare_master(n) == p * betti.ONE_PLUS_T2
    return ok, f"P_5 = {betti.poincare_ordered(5)}"


def _case_hilbert_oracle():
    rng = random.Random(20240601)
    for _ in range(200):
        r = rng.randint(1, 5)
        w = tuple(rng.randint(-3, 3) for _ in range(r))
        system = lattice.DiophantineSystem(r, w)
        hb = lattice.hilbert_basis(system, 12)
        if list(hb.elements) != lattice.brute_force_minimal_solutions(system, 12):
            return False, f"mismatch for weights {w}"
    return True, "200 random systems"


def _case_properties():
    ok = True
    for name in ring_names():
        R = corpus_ring(name)
        w = R.gen_weights
        ss = loci.semistable_loci(w)
        ok &= ss.ss_plus & ss.ss_minus == ss.s_zero
        ok &= ss.ss_zero == loci.OpenLocus((), len(w))
        dims = gr.dimension_report(R)
        if dims["plus"] is not None and dims["minus"] is not None:
            ok &= dims["plus"] == dims["minus"] == dims["zero"] + 1
    for name in ("weighted_blowup", "atiyah"):
        ok &= all(s.passed for s in gr.master_space_check(corpus_ring(name)).values())
    for n in range(3, 8):
        configs = list(points.all_configurations(n))
        for lo, hi in points.chambers_points(n):
            top = hi if hi is not None else lo + 2
            samples = [lo + Fraction(1, 4), top - Fraction(1, 4)]
            for c in configs:
                ok &= len({points.is_semistable(c, t) for t in samples}) == 1
        for t0 in points.walls_points(n):
            for ts in (t0 - 1, t0 + 1):
                if ts <= 0:
                    ts = t0 / 2
                for c in configs:
                    if points.is_semistable(c, ts).semistable:
                        ok &= points.is_semistable(c, t0).semistable
    return ok, "loci identities, dimensions, master space, chambers"


CASES: dict[str, Callable[[], tuple[bool, str]]] = {
    "1-invariant-ring-weighted-blowup": _case_invariant_weighted_blowup,
    "2-quotients-weighted-blowup": _case_quotients_weighted_blowup,
    "3-blowup-weighted-blowup": _case_blowup_weighted_blowup,
    "4-atiyah": _case_atiyah,
    "5-quadric-cone": _case_quadric,
    "6-points-n5": _case_points5,
    "7-betti": _case_betti,
    "8-hilbert-oracle": _case_hilbert_oracle,
    "9-properties": _case_properties,
}


def run_corpus() -> list[CaseResult]:
    out = []
    for name, fn in CASES.items():
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failed case, reported not raised
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CaseResult(name, bool(passed), detail))
    return out
