"""Z-graded affine semigroup rings and their variation-of-quotient data.

A ring ``R = k[S]`` is given by semigroup generators ``g_i`` of ``S`` inside
``N^m`` together with their weights. The k*-action is the grading; the three
quotients are

* ``X//0 = Spec R_0``,
* ``X//+ = Proj (sum_j R_{dj} z^j)`` and ``X//- = Proj (sum_j R_{-dj} z^j)``.

All of these are monomial algebras, so every computation reduces to a
Hilbert basis of the Diophantine system on generator multiplicities followed
by re-minimalization of the images in the ambient lattice.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import (
    CanonicalForm,
    Completeness,
    DiophantineSystem,
    Vector,
    canonical_form,
    dot,
    grlex_sorted,
    hilbert_basis,
    lattice_rank,
    minimal_inhomogeneous_solutions,
    minimalize,
    monoid_membership,
    rational_coordinates,
    row_hnf,
    vec_add,
    vec_sub,
)

DEFAULT_BOUND = 12


class RingError(ValueError):
    pass


def _worst(*statuses: Completeness) -> Completeness:
    order = [Completeness.CERTIFIED, Completeness.COMPLETE_TO_BOUND, Completeness.TRUNCATED]
    return max(statuses, key=order.index, default=Completeness.CERTIFIED)


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


def _solve_functional(
    generators: Sequence[Vector], weights: Sequence[int], m: int
) -> tuple[Fraction, ...]:
    """Find ``phi`` in ``Q^m`` with ``phi . g_i = w_i``; raise naming the first violated generator."""
    rows: list[list[Fraction]] = []  # reduced echelon rows [coeffs | rhs]
    pivots: list[int] = []
    for idx, (g, w) in enumerate(zip(generators, weights)):
        row = [Fraction(a) for a in g] + [Fraction(w)]
        for prow, pc in zip(rows, pivots):
            if row[pc]:
                f = row[pc]
                row = [a - f * b for a, b in zip(row, prow)]
        pc = next((j for j in range(m) if row[j]), None)
        if pc is None:
            if row[m]:
                raise RingError(
                    f"weight {w} of generator {idx} {tuple(g)} is inconsistent with the other "
                    "generators: no linear weight functional exists"
                )
            continue
        inv = 1 / row[pc]
        row = [a * inv for a in row]
        for k, prow in enumerate(rows):
            if prow[pc]:
                f = prow[pc]
                rows[k] = [a - f * b for a, b in zip(prow, row)]
        rows.append(row)
        pivots.append(pc)
    phi = [Fraction(0)] * m
    for prow, pc in zip(rows, pivots):
        phi[pc] = prow[m]
    return tuple(phi)


@dataclass(frozen=True)
class GradedSemigroupRing:
    ambient_rank: int
    generators: tuple[Vector, ...]
    gen_weights: tuple[int, ...]
    weight_functional: tuple[Fraction, ...]
    names: tuple[str, ...] | None = None

    @property
    def is_polynomial(self) -> bool:
        m = self.ambient_rank
        return len(self.generators) == m and all(
            g == tuple(1 if i == j else 0 for i in range(m)) for j, g in enumerate(self.generators)
        )

    def weight(self, u: Sequence[int]) -> int:
        w = dot(self.weight_functional, u)
        if w.denominator != 1:
            raise RingError(f"{tuple(u)} is not in the lattice spanned by the generators")
        return int(w)

    def contains(self, u: Sequence[int]) -> bool:
        """Membership of the monomial ``x^u`` in ``R``."""
        return all(a >= 0 for a in u) and bool(monoid_membership(u, self.generators))

    def divides(self, u: Sequence[int], v: Sequence[int]) -> bool:
        """Does ``x^u`` divide ``x^v`` inside ``R``?"""
        diff = vec_sub(v, u)
        return self.contains(diff)

    def image(self, mult: Sequence[int]) -> Vector:
        """Exponent of ``prod g_i^{mult_i}``."""
        out = [0] * self.ambient_rank
        for c, g in zip(mult, self.generators):
            if c:
                for k, a in enumerate(g):
                    out[k] += c * a
        return tuple(out)

    def lattice_basis(self) -> list[list[int]]:
        """A basis of the group generated by the semigroup (rows of the HNF)."""
        return row_hnf(self.generators)

    def lattice_coordinates(self, u: Sequence[int]) -> Vector:
        """Coordinates of ``u`` in :meth:`lattice_basis`; ``u`` must lie in that group."""
        c = rational_coordinates(u, self.lattice_basis())
        if any(x.denominator != 1 for x in c):
            raise RingError(f"{tuple(u)} is not in the group generated by the semigroup")
        return tuple(int(x) for x in c)

    def monomial_name(self, u: Sequence[int]) -> str:
        """Readable name; variable names exist only for polynomial rings."""
        if not (self.is_polynomial and self.names):
            return str(tuple(u))
        parts = []
        for name, a in zip(self.names, u):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) or "1"


def make_polynomial_ring(weights: Sequence[int], names: Sequence[str] | None = None) -> GradedSemigroupRing:
    """``k[x_1..x_r]`` with ``x_i`` of weight ``weights[i]``."""
    r = len(weights)
    if r < 1:
        raise RingError("a polynomial ring needs at least one variable")
    if names is not None and len(names) != r:
        raise RingError("one name per variable is required")
    gens = tuple(tuple(1 if i == j else 0 for i in range(r)) for j in range(r))
    return GradedSemigroupRing(
        r,
        gens,
        tuple(int(w) for w in weights),
        tuple(Fraction(int(w)) for w in weights),
        tuple(names) if names is not None else None,
    )


def make_semigroup_ring(
    ambient_rank: int,
    generators: Sequence[Sequence[int]],
    gen_weights: Sequence[int],
    names: Sequence[str] | None = None,
) -> GradedSemigroupRing:
    """Validate a semigroup ring presentation and solve for its weight functional."""
    gens = [tuple(int(a) for a in g) for g in generators]
    if len(gens) != len(gen_weights):
        raise RingError("one weight per generator is required")
    if not gens:
        raise RingError("at least one generator is required")
    for g in gens:
        if len(g) != ambient_rank:
            raise RingError(f"generator {g} does not have length {ambient_rank}")
        if any(a < 0 for a in g) or not any(g):
            raise RingError(f"generator {g} must be a nonzero vector in N^{ambient_rank}")
    if len(set(gens)) != len(gens):
        raise RingError("generators must be distinct")
    phi = _solve_functional(gens, gen_weights, ambient_rank)
    return GradedSemigroupRing(
        ambient_rank,
        tuple(gens),
        tuple(int(w) for w in gen_weights),
        phi,
        tuple(names) if names is not None else None,
    )


# ---------------------------------------------------------------------------
# Weight pieces
# ---------------------------------------------------------------------------


def piece_generators(R: GradedSemigroupRing, weight: int, bound: int = DEFAULT_BOUND) -> tuple[list[Vector], Completeness]:
    """Monomials generating ``R_weight`` as an ``R_0``-module (images, not minimalized)."""
    if weight == 0:
        return [tuple(0 for _ in range(R.ambient_rank))], Completeness.CERTIFIED
    wmax = max((abs(w) for w in R.gen_weights), default=1)
    sols, status = minimal_inhomogeneous_solutions(R.gen_weights, weight, max(bound, abs(weight) + 2 * wmax + 2))
    return grlex_sorted(R.image(s) for s in sols), status


def minimal_module_generators(R: GradedSemigroupRing, monomials: Iterable[Vector]) -> list[Vector]:
    """Drop every monomial divisible (inside ``R``) by another one in the list."""
    ms = grlex_sorted(monomials)
    return [v for v in ms if not any(u != v and R.divides(u, v) for u in ms)]


# ---------------------------------------------------------------------------
# Quotients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientGenerator:
    exponent: Vector  # ambient exponent followed by the z-degree
    z_degree: int

    @property
    def monomial(self) -> Vector:
        return self.exponent[:-1]


@dataclass(frozen=True)
class QuotientPresentation:
    """Generators of a quotient algebra ``sum_j A_j z^j``.

    ``gens`` is a Proj-equivalent reduced generating set (see
    :func:`proj_reduce`); ``algebra_gens`` is the full minimal generating set of
    the algebra. They coincide for ``affine_zero``.
    """

    kind: str
    gens: tuple[QuotientGenerator, ...]
    linearization_d: int
    status: Completeness
    algebra_gens: tuple[QuotientGenerator, ...] = ()
    empty: bool = False
    twist: int = 0
    ring: GradedSemigroupRing | None = field(default=None, repr=False, compare=False)

    def exponents(self, full: bool = False) -> list[Vector]:
        return [g.exponent for g in (self.algebra_gens if full else self.gens)]

    def degree_zero(self) -> list[Vector]:
        return [g.monomial for g in self.gens if g.z_degree == 0]

    def positive_part(self, full: bool = False) -> list[QuotientGenerator]:
        return [g for g in (self.algebra_gens if full else self.gens) if g.z_degree > 0]

    def canonical(self, full: bool = False) -> CanonicalForm:
        gs = self.algebra_gens if full else self.gens
        return ring_canonical(self.ring, [g.exponent for g in gs], [g.z_degree for g in gs])

    def rank(self) -> int:
        return lattice_rank(self.exponents())


def ring_canonical(R: GradedSemigroupRing | None, vectors: Sequence[Vector], labels=None, z: bool = True) -> CanonicalForm:
    """Canonical form in the coordinates of ``R``'s own group lattice.

    With ``z`` the last coordinate is a z-degree and is carried along unchanged.
    """
    if R is None or R.is_polynomial:
        return canonical_form(vectors, labels)
    if z:
        coords = [R.lattice_coordinates(v[:-1]) + (v[-1],) for v in vectors]
    else:
        coords = [R.lattice_coordinates(v) for v in vectors]
    return canonical_form(coords, labels)


def _graded_gens(vectors: Iterable[Vector]) -> tuple[QuotientGenerator, ...]:
    vs = sorted(set(vectors), key=lambda v: (v[-1], sum(v[:-1]), tuple(-a for a in v[:-1])))
    return tuple(QuotientGenerator(v, v[-1]) for v in vs)


def _map_solutions(R: GradedSemigroupRing, sols: Iterable[Sequence[int]], blocks: int, extra: int) -> list[Vector]:
    """Map solutions ``(c_1, .., c_blocks, e_1..e_extra)`` to ``(sum image(c_k), e)``."""
    N = len(R.generators)
    out = []
    for s in sols:
        u = tuple(0 for _ in range(R.ambient_rank))
        for b in range(blocks):
            u = vec_add(u, R.image(s[b * N:(b + 1) * N]))
        out.append(u + tuple(s[blocks * N:blocks * N + extra]))
    return out


def invariant_ring(R: GradedSemigroupRing, bound: int = DEFAULT_BOUND) -> QuotientPresentation:
    """``R_0``: Hilbert basis of the degree-0 multiplicities, mapped and re-minimalized."""
    hb = hilbert_basis(DiophantineSystem(len(R.generators), R.gen_weights), bound)
    gens = minimalize(R.image(h) for h in hb.elements)
    qg = _graded_gens(g + (0,) for g in gens)
    return QuotientPresentation("affine_zero", qg, 1, hb.status, qg, ring=R)


def twisted_quotient(R: GradedSemigroupRing, n: int, bound: int = DEFAULT_BOUND) -> tuple[list[Vector], Completeness]:
    """Minimal generators of ``sum_{j>=0} R_{nj} z^j`` as vectors ``(u, j)``."""
    N = len(R.generators)
    system = DiophantineSystem(N + 1, R.gen_weights + (-n,))
    hb = hilbert_basis(system, bound)
    return minimalize(_map_solutions(R, hb.elements, 1, 1)), hb.status


def _power_in(target_mult: int, g: Vector, extra: Sequence[tuple[int, Vector]], monoid: Sequence[Vector]) -> bool:
    v = tuple(target_mult * a for a in g)
    for c, a in extra:
        v = vec_add(v, tuple(c * x for x in a))
    return bool(monoid_membership(v, monoid))


def _veronese_redundant(g: Vector, rest: Sequence[Vector], max_e: int) -> bool:
    """Does adjoining ``g`` leave some Veronese subalgebra of ``k[rest]`` unchanged?

    With ``A = k[rest]`` and ``B = A[g]``, ``B^(e) = A^(e)`` holds iff ``e g``
    lies in ``A`` and so does ``k g + sum c_i a_i`` for every ``1 <= k < e``
    and every ``0 <= c_i < e`` over positive-degree ``a_i`` making the total
    z-degree divisible by ``e``. Since ``Proj B = Proj B^(e)``, such a ``g``
    can be dropped without changing the Proj.
    """
    positive = [a for a in rest if a[-1] > 0]
    if not positive:
        return False
    for e in range(2, max_e + 1):
        if not monoid_membership(tuple(e * a for a in g), rest):
            continue
        ok = True
        for k in range(1, e):
            for cs in itertools.product(range(e), repeat=len(positive)):
                deg = k * g[-1] + sum(c * a[-1] for c, a in zip(cs, positive))
                if deg % e:
                    continue
                if not _power_in(k, g, list(zip(cs, positive)), rest):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def proj_reduce(gens: Sequence[Vector], max_e: int = 4) -> list[Vector]:
    """Greedily drop positive-degree generators that do not change the Proj.

    Generators are tried from the highest canonical position down; each
    removal preserves the Proj (a Veronese subalgebra is unchanged), so the
    result is Proj-equivalent to the input.
    """
    current = list(grlex_sorted(gens))
    for g in sorted(current, key=lambda v: (v[-1], sum(v), v), reverse=True):
        if g[-1] == 0:
            continue
        rest = [h for h in current if h != g]
        if _veronese_redundant(g, rest, max_e):
            current = rest
    return current


def proj_quotient(R: GradedSemigroupRing, sign: str, d: int = 1, bound: int = DEFAULT_BOUND) -> QuotientPresentation:
    """``X//+`` (``sign='+'``) or ``X//-`` at linearization ``±d``."""
    if sign not in ("+", "-"):
        raise RingError("sign must be '+' or '-'")
    if d < 1:
        raise RingError("d must be positive")
    n = d if sign == "+" else -d
    full, status = twisted_quotient(R, n, bound)
    empty = not any(v[-1] > 0 for v in full)
    reduced = full if empty else proj_reduce(full)
    kind = "proj_plus" if sign == "+" else "proj_minus"
    return QuotientPresentation(kind, _graded_gens(reduced), d, status, _graded_gens(full), empty, n, ring=R)


def normalize_z(vectors: Iterable[Vector]) -> list[Vector]:
    """Divide z-degrees by their gcd; ``Proj`` is unchanged by this regrading."""
    vs = list(vectors)
    g = 0
    for v in vs:
        g = math.gcd(g, v[-1])
    if g <= 1:
        return grlex_sorted(vs)
    return grlex_sorted(v[:-1] + (v[-1] // g,) for v in vs)


# ---------------------------------------------------------------------------
# d-selection, ideals, products
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FindDResult:
    d: int
    check_bound: int
    certificates: dict = field(default_factory=dict, compare=False)
    status: Completeness = Completeness.COMPLETE_TO_BOUND
    rejected: dict = field(default_factory=dict, compare=False)


class NoDCertified(RingError):
    pass


def _d_failure(R: GradedSemigroupRing, d: int, check_bound: int, bound: int, r0: list[Vector]):
    """Return (certificates, None) if ``d`` works to ``check_bound``, else (None, counterexample)."""
    pool = list(r0)
    plus, s1 = piece_generators(R, d, bound)
    minus, s2 = piece_generators(R, -d, bound)
    pool += plus + minus
    pool = grlex_sorted(p for p in pool if any(p))
    certs = {}
    for i in itertools.chain.from_iterable((k, -k) for k in range(2, check_bound + 1)):
        targets, _ = piece_generators(R, d * i, bound)
        for t in targets:
            mem = monoid_membership(t, pool)
            if not mem:
                return None, (i, t)
            certs.setdefault(i, []).append((t, {pool[k]: c for k, c in enumerate(mem.witness) if c}))
    return certs, None


def find_d(R: GradedSemigroupRing, check_bound: int = 6, cap: int = 12, bound: int = DEFAULT_BOUND) -> FindDResult:
    """Smallest ``d`` such that ``sum_i R_{di}`` is generated by ``R_0, R_{±d}`` (checked for ``|i| <= check_bound``)."""
    if check_bound < 2:
        raise RingError("check_bound must be >= 2")
    r0 = invariant_ring(R, bound).degree_zero()
    rejected = {}
    for d in range(1, cap + 1):
        certs, failure = _d_failure(R, d, check_bound, bound, r0)
        if failure is None:
            return FindDResult(d, check_bound, certs, Completeness.COMPLETE_TO_BOUND, rejected)
        rejected[d] = failure
    raise NoDCertified(f"no d <= {cap} certified to check bound {check_bound}")


@dataclass(frozen=True)
class MonomialIdeal:
    gens: tuple[Vector, ...]
    ring: GradedSemigroupRing = field(compare=False, repr=False, default=None)

    def contains(self, u: Sequence[int]) -> bool:
        return any(self.ring.divides(g, u) for g in self.gens)

    def radical_contains(self, u: Sequence[int], max_power: int = 12) -> bool:
        return any(self.contains(tuple(k * a for a in u)) for k in range(1, max_power + 1))


def ideal_I(R: GradedSemigroupRing, sign: str, d: int, bound: int = DEFAULT_BOUND) -> MonomialIdeal:
    """``I^+ = <R_{-d}>`` and ``I^- = <R_{d}>`` (the sign flips)."""
    if sign not in ("+", "-"):
        raise RingError("sign must be '+' or '-'")
    weight = -d if sign == "+" else d
    gens, _ = piece_generators(R, weight, bound)
    return MonomialIdeal(tuple(minimal_module_generators(R, gens)), R)


def product_piece(R: GradedSemigroupRing, i: int, j: int, bound: int = DEFAULT_BOUND) -> list[Vector]:
    """Minimal monomials of ``R_{i,j} = R_i . R_{-j}`` as an ``R_0``-module."""
    a, _ = piece_generators(R, i, bound)
    b, _ = piece_generators(R, -j, bound)
    prods = {vec_add(u, v) for u in a for v in b}
    r0_gens = invariant_ring(R, bound).degree_zero()

    def r0_divides(u, v):
        diff = vec_sub(v, u)
        return all(x >= 0 for x in diff) and bool(monoid_membership(diff, r0_gens))

    ps = grlex_sorted(prods)
    return [v for v in ps if not any(u != v and r0_divides(u, v) for u in ps)]


# ---------------------------------------------------------------------------
# Blow-ups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BigradedAlgebra:
    """``sum_n R_{pn, qn} z^n``; ``(p, q)`` are the effective piece degrees."""

    ring: GradedSemigroupRing = field(repr=False, compare=False)
    a: int
    b: int
    d: int
    p: int
    q: int
    gens: tuple[QuotientGenerator, ...]
    status: Completeness

    def degree(self, n: int) -> list[Vector]:
        return [g.monomial for g in self.gens if g.z_degree == n]

    def canonical(self) -> CanonicalForm:
        return ring_canonical(self.ring, [g.exponent for g in self.gens], [g.z_degree for g in self.gens])


def blowup_algebra(R: GradedSemigroupRing, a: int, b: int, d: int, bound: int = DEFAULT_BOUND) -> BigradedAlgebra:
    """Rees-type algebra of one of the three common blow-ups.

    ``(d+1, 1)`` and ``(1, d+1)`` give ``sum_n R_{(d+1)n, n}`` and
    ``sum_n R_{n, (d+1)n}`` (blow-ups of ``X//±``); ``(1, 1)`` gives the
    blow-up of ``X//0`` at ``<R_{d,d}>``, i.e. ``sum_n R_{dn, dn}``. In
    general pieces are ``R_{a s n, b s n}`` with ``s = d`` when ``a == b`` and
    ``s = 1`` otherwise.
    """
    if a < 0 or b < 0 or (a == 0 and b == 0):
        raise RingError("blow-up parameters must be nonnegative and not both zero")
    if d < 1:
        raise RingError("d must be positive")
    s = d if a == b else 1
    p, q = a * s, b * s
    N = len(R.generators)
    zeros = (0,) * N
    rows = [
        R.gen_weights + zeros + (-p,),
        zeros + R.gen_weights + (q,),
    ]
    hb = hilbert_basis(DiophantineSystem.from_rows(rows), bound)
    gens = minimalize(_map_solutions(R, hb.elements, 2, 1))
    return BigradedAlgebra(R, a, b, d, p, q, _graded_gens(gens), hb.status)


# ---------------------------------------------------------------------------
# Two-route and probe checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MasterSample:
    t: Fraction
    passed: bool
    master_gens: tuple[Vector, ...]
    direct_gens: tuple[Vector, ...]


def _master_route(R: GradedSemigroupRing, n_plus: int, n_minus: int, t: Fraction, bound: int) -> list[Vector]:
    """Quotient at ``t`` through the auxiliary torus on ``R[z_+, z_-]``.

    ``z_±`` carry G-weights ``-n_±``; the one-dimensional torus scales
    ``z_+`` by ``λ`` and ``z_-`` by ``λ^{-1}``, twisted by the fractional
    character ``s = (t - n_-)/(n_+ - n_-)``. Torus invariance forces the
    z-exponents into ratio ``s : 1 - s``; the residual G-invariance is the
    usual weight equation. Returned as ``(u, j_+ + j_-)``.
    """
    s = (t - n_minus) / (n_plus - n_minus)
    N = len(R.generators)
    zeros = (0,) * N
    # (1 - s) j_+ - s j_- = 0, cleared of denominators
    den = s.denominator
    a_plus, a_minus = int((1 - s) * den), int(-s * den)
    rows = [
        R.gen_weights + (-n_plus, -n_minus),
        zeros + (a_plus, a_minus),
    ]
    hb = hilbert_basis(DiophantineSystem.from_rows(rows), bound)
    out = []
    for h in hb.elements:
        u = R.image(h[:N])
        out.append(u + (h[N] + h[N + 1],))
    return minimalize(out)


def _direct_route(R: GradedSemigroupRing, t: Fraction, gamma: int, bound: int) -> list[Vector]:
    """``sum_j R_{t gamma j} z^j``; ``gamma`` is the z-gcd seen on the master side.

    Every master generator ``(u, z)`` has ``weight(u) = t z``, so ``t gamma``
    is an integer and this is the algebra the master route should reproduce.
    """
    twist = t * gamma if gamma else t
    if twist.denominator != 1:
        raise RingError(f"t = {t} is not compatible with z-gcd {gamma}")
    gens, _ = twisted_quotient(R, int(twist), bound)
    return gens


def master_space_check(
    R: GradedSemigroupRing,
    n_plus: int = 1,
    n_minus: int = -1,
    samples: Sequence = (-1, 0, 1),
    bound: int = DEFAULT_BOUND,
) -> dict[Fraction, MasterSample]:
    """Compare quotients reached through the master space with direct ones.

    Both sides are normalized by ``normalize_z`` and then Veronese-reduced
    before comparison.
    """
    if n_plus <= n_minus:
        raise RingError("n_plus must exceed n_minus")
    report = {}
    for t in samples:
        t = Fraction(t)
        if not n_minus <= t <= n_plus:
            raise RingError(f"sample {t} lies outside [{n_minus}, {n_plus}]")
        raw = _master_route(R, n_plus, n_minus, t, bound)
        gamma = 0
        for v in raw:
            gamma = math.gcd(gamma, v[-1])
        master = proj_reduce(normalize_z(raw))
        direct = proj_reduce(normalize_z(_direct_route(R, t, gamma, bound)))
        ok = grlex_sorted(master) == grlex_sorted(direct) and ring_canonical(
            R, master, [v[-1] for v in master]
        ) == ring_canonical(R, direct, [v[-1] for v in direct])
        report[t] = MasterSample(t, ok, tuple(grlex_sorted(master)), tuple(grlex_sorted(direct)))
    return report


def power_surjectivity_probe(R: GradedSemigroupRing, sign: str, w: int, d: int, bound: int = DEFAULT_BOUND) -> bool:
    """Is ``R_{∓w}^{d/w} -> R_{∓d}`` surjective (on module generators)?"""
    if d % w:
        raise RingError("w must divide d")
    step = -w if sign == "+" else w
    pool = invariant_ring(R, bound).degree_zero() + piece_generators(R, step, bound)[0]
    pool = [p for p in pool if any(p)]
    targets, _ = piece_generators(R, step * (d // w), bound)
    return all(monoid_membership(t, pool) for t in targets)


def hilbert_counts(gens: Sequence[Vector], max_degree: int = 8) -> dict[tuple[int, int], int]:
    """Count monoid elements by (z-degree, ambient total degree) up to ``max_degree``.

    A cheap invariant for telling non-isomorphic semigroups apart in a fixed
    ambient lattice.
    """
    gens = [tuple(g) for g in gens if any(g)]
    seen = {tuple(0 for _ in gens[0])} if gens else set()
    frontier = set(seen)
    while frontier:
        nxt = set()
        for v in frontier:
            for g in gens:
                w = vec_add(v, g)
                if sum(w[:-1]) <= max_degree and w[-1] <= max_degree and w not in seen:
                    nxt.add(w)
        seen |= nxt
        frontier = nxt
    counts: dict[tuple[int, int], int] = {}
    for v in seen:
        key = (v[-1], sum(v[:-1]))
        counts[key] = counts.get(key, 0) + 1
    return counts


def dimension_report(R: GradedSemigroupRing, d: int = 1, bound: int = DEFAULT_BOUND) -> dict:
    """Lattice ranks of the three quotients (proj ranks include the z direction)."""
    zero = invariant_ring(R, bound)
    plus = proj_quotient(R, "+", d, bound)
    minus = proj_quotient(R, "-", d, bound)
    return {
        "zero": lattice_rank(zero.degree_zero()),
        "plus": None if plus.empty else plus.rank(),
        "minus": None if minus.empty else minus.rank(),
    }
