"""Exact integer lattice arithmetic.

Everything here works on tuples of Python ints. The main pieces are

* :func:`hilbert_basis` -- minimal generators of the monoid of nonnegative
  solutions of a homogeneous linear Diophantine system, by a
  Contejean-Devie style completion over coordinate-sum levels;
* :func:`monoid_membership` -- bounded exhaustive decomposition search;
* :func:`canonical_form` -- presentation of a generator set up to lattice
  automorphisms and reordering, via Hermite normal forms.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def vec_add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(k: int, u: Sequence[int]) -> Vector:
    return tuple(k * a for a in u)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v, strict=True))


def dominates(u: Sequence[int], v: Sequence[int]) -> bool:
    """True if ``u >= v`` componentwise."""
    return all(a >= b for a, b in zip(u, v))


def grlex_key(u: Sequence[int]) -> tuple:
    """Graded lexicographic order: total degree first, then reverse lex on coords.

    With this key ``(1, 0) < (0, 1)`` and lower-degree vectors come first.
    """
    return (sum(u), tuple(-a for a in u))


def grlex_sorted(vectors: Iterable[Sequence[int]]) -> list[Vector]:
    return sorted({tuple(v) for v in vectors}, key=grlex_key)


# ---------------------------------------------------------------------------
# Hilbert bases
# ---------------------------------------------------------------------------


class Completeness(str, enum.Enum):
    """How much of the solution monoid a computed generating set is known to cover."""

    CERTIFIED = "certified"
    COMPLETE_TO_BOUND = "complete-to-bound"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class DiophantineSystem:
    """Homogeneous system ``A x = 0`` over ``x in N^r``.

    ``weights`` is the first row; ``extra_rows`` holds further equations.
    Rows that are identically zero are dropped; a system with no remaining
    row is *trivial* and its solution monoid is all of ``N^r``.
    """

    num_vars: int
    weights: tuple[int, ...]
    extra_rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("a Diophantine system needs at least one variable")
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(
            self, "extra_rows", tuple(tuple(int(a) for a in row) for row in self.extra_rows)
        )
        for row in self.all_rows:
            if len(row) != self.num_vars:
                raise ValueError(f"equation {row} has length {len(row)}, expected {self.num_vars}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "DiophantineSystem":
        rows = [tuple(r) for r in rows]
        if not rows:
            raise ValueError("at least one equation row is required")
        return cls(len(rows[0]), rows[0], tuple(rows[1:]))

    @property
    def all_rows(self) -> tuple[tuple[int, ...], ...]:
        return (self.weights,) + self.extra_rows

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Nonzero equations only."""
        return tuple(r for r in self.all_rows if any(r))

    @property
    def trivial(self) -> bool:
        return not self.rows

    def defect(self, x: Sequence[int]) -> Vector:
        return tuple(dot(row, x) for row in self.rows)

    def is_solution(self, x: Sequence[int]) -> bool:
        return all(a >= 0 for a in x) and not any(self.defect(x))


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple[Vector, ...]
    status: Completeness
    bound: int
    open_candidates: int = 0

    @property
    def certified(self) -> bool:
        return self.status is Completeness.CERTIFIED

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def hilbert_basis(
    system: DiophantineSystem, bound: int = 12, caps: Sequence[int | None] | None = None
) -> HilbertBasis:
    """Minimal generating set of ``{x in N^r : A x = 0}``.

    Candidates grow one unit vector at a time, and ``x + e_j`` is only
    explored when the defect ``A e_j`` points against ``A x`` (negative inner
    product). Candidates dominating a known solution are discarded. Every
    minimal solution is reached at the level equal to its coordinate sum, so
    the output is always complete for solutions of coordinate sum at most
    ``bound``. When the frontier empties before ``bound`` the basis is
    ``CERTIFIED``; otherwise it is ``TRUNCATED`` and ``open_candidates``
    counts what remained.

    ``caps`` optionally bounds individual coordinates. Coordinates only grow
    along a search path, so pruning over-cap candidates loses exactly the
    solutions exceeding the caps.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    r = system.num_vars
    rows = system.rows
    caps = tuple(caps) if caps is not None else (None,) * r
    units = [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]
    unit_defects = [tuple(row[j] for row in rows) for j in range(r)]

    solutions: list[Vector] = []
    frontier: set[Vector] = set()
    for j, e in enumerate(units):
        if not any(unit_defects[j]):
            solutions.append(e)
        else:
            frontier.add(e)

    level = 1
    while frontier and level < bound:
        level += 1
        nxt: set[Vector] = set()
        for x in sorted(frontier):
            dx = tuple(dot(row, x) for row in rows)
            for j in range(r):
                if dot(dx, unit_defects[j]) >= 0:
                    continue
                if caps[j] is not None and x[j] >= caps[j]:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1:]
                if y in nxt:
                    continue
                if any(dominates(y, s) for s in solutions):
                    continue
                nxt.add(y)
        found = [y for y in nxt if not any(dot(row, y) for row in rows)]
        solutions.extend(found)
        frontier = nxt.difference(found)

    status = Completeness.TRUNCATED if frontier else Completeness.CERTIFIED
    return HilbertBasis(tuple(grlex_sorted(solutions)), status, bound, len(frontier))


def brute_force_minimal_solutions(system: DiophantineSystem, max_sum: int) -> list[Vector]:
    """Enumerate every solution with coordinate sum <= ``max_sum`` and keep the minimal ones.

    Exponential; only meant as an independent oracle for small systems.
    """
    r = system.num_vars
    sols: list[Vector] = []

    def rec(prefix: list[int], remaining: int):
        if len(prefix) == r:
            x = tuple(prefix)
            if any(x) and system.is_solution(x):
                sols.append(x)
            return
        for a in range(remaining + 1):
            prefix.append(a)
            rec(prefix, remaining - a)
            prefix.pop()

    rec([], max_sum)
    sols.sort(key=sum)
    minimal: list[Vector] = []
    for s in sols:
        if not any(dominates(s, m) for m in minimal):
            minimal.append(s)
    return grlex_sorted(minimal)


def minimal_inhomogeneous_solutions(
    coeffs: Sequence[int], rhs: int, bound: int = 12
) -> tuple[list[Vector], Completeness]:
    """Minimal elements of ``{x in N^r : coeffs . x = rhs}``.

    Uses the usual homogenization: solve ``coeffs . x - rhs * s = 0`` with
    ``s`` capped at 1 and keep the basis elements with ``s = 1``.
    """
    coeffs = tuple(coeffs)
    if rhs == 0:
        return [tuple(0 for _ in coeffs)], Completeness.CERTIFIED
    caps = (None,) * len(coeffs) + (1,)
    hb = hilbert_basis(DiophantineSystem(len(coeffs) + 1, coeffs + (-rhs,)), bound + 1, caps)
    return [h[:-1] for h in hb.elements if h[-1] == 1], hb.status


# ---------------------------------------------------------------------------
# Monoid membership
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Membership:
    member: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.member


def monoid_membership(target: Sequence[int], gens: Sequence[Sequence[int]]) -> Membership:
    """Decide whether ``target`` is an N-combination of ``gens`` (all in ``N^r``).

    The witness gives one multiplicity per generator. The search is
    exhaustive: each nonzero generator has a positive coordinate, so
    multiplicities are bounded by the target's coordinates.
    """
    target = tuple(target)
    gens = [tuple(g) for g in gens]
    if any(a < 0 for a in target) or any(a < 0 for g in gens for a in g):
        raise ValueError("monoid_membership works inside N^r; got a negative coordinate")
    for g in gens:
        if len(g) != len(target):
            raise ValueError("all vectors must have the same length")
    if not any(target):
        return Membership(True, tuple(0 for _ in gens))
    usable = [i for i, g in enumerate(gens) if any(g)]
    # try generators with larger support first; tends to close searches fast
    usable.sort(key=lambda i: (-sum(gens[i]), gens[i]))
    ordered = tuple(gens[i] for i in usable)

    @lru_cache(maxsize=None)
    def search(k: int, rest: Vector) -> tuple[int, ...] | None:
        if not any(rest):
            return tuple(0 for _ in range(len(ordered) - k))
        if k == len(ordered):
            return None
        g = ordered[k]
        cap = min(rest[i] // g[i] for i in range(len(g)) if g[i] > 0)
        for mult in range(cap, -1, -1):
            sub = search(k + 1, tuple(a - mult * b for a, b in zip(rest, g)))
            if sub is not None:
                return (mult,) + sub
        return None

    found = search(0, target)
    if found is None:
        return Membership(False)
    witness = [0] * len(gens)
    for i, mult in zip(usable, found):
        witness[i] = mult
    return Membership(True, tuple(witness))


def minimalize(vectors: Iterable[Sequence[int]]) -> list[Vector]:
    """Drop duplicates, zero, and every vector that is an N-combination of the others."""
    vs = [v for v in grlex_sorted(vectors) if any(v)]
    kept: list[Vector] = []
    # a vector can only decompose over strictly smaller-degree vectors in N^r
    for v in vs:
        if not monoid_membership(v, [u for u in kept if sum(u) < sum(v)]):
            kept.append(v)
    return kept


# ---------------------------------------------------------------------------
# Hermite normal forms and canonical presentations
# ---------------------------------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def row_hnf(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form; zero rows removed.

    Upper echelon, positive pivots, entries above each pivot reduced into
    ``[0, pivot)``.
    """
    a = [list(r) for r in mat]
    if not a:
        return []
    nrows, ncols = len(a), len(a[0])
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        if pivot_row == nrows:
            break
        for i in range(pivot_row + 1, nrows):
            if a[i][col] == 0:
                continue
            g, x, y = _xgcd(a[pivot_row][col], a[i][col])
            p, q = a[pivot_row][col] // g, a[i][col] // g
            top = [x * u + y * v for u, v in zip(a[pivot_row], a[i])]
            bot = [-q * u + p * v for u, v in zip(a[pivot_row], a[i])]
            a[pivot_row], a[i] = top, bot
        if a[pivot_row][col] == 0:
            continue
        if a[pivot_row][col] < 0:
            a[pivot_row] = [-u for u in a[pivot_row]]
        piv = a[pivot_row][col]
        for i in range(pivot_row):
            q = a[i][col] // piv
            if q:
                a[i] = [u - q * v for u, v in zip(a[i], a[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return [r for r in a[:pivot_row]]


def integer_kernel(mat: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis of ``{y in Z^n : mat y = 0}``; this lattice is always saturated."""
    rows = [list(r) for r in mat]
    n = len(rows[0]) if rows else ncols
    if n is None:
        raise ValueError("ncols is required for an empty matrix")
    # column operations on [mat ; I] via row operations on the transpose
    aug = [[rows[i][j] for i in range(len(rows))] + [1 if k == j else 0 for k in range(n)] for j in range(n)]
    m = len(rows)
    pr = 0
    for col in range(m):
        for i in range(pr + 1, n):
            if aug[i][col] == 0:
                continue
            g, x, y = _xgcd(aug[pr][col], aug[i][col])
            p, q = aug[pr][col] // g, aug[i][col] // g
            top = [x * u + y * v for u, v in zip(aug[pr], aug[i])]
            bot = [-q * u + p * v for u, v in zip(aug[pr], aug[i])]
            aug[pr], aug[i] = top, bot
        if pr < n and aug[pr][col] != 0:
            pr += 1
    return [r[m:] for r in aug[pr:]]


def saturation_basis(mat: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of ``span_Q(rows) ∩ Z^n`` in row HNF."""
    rows = [list(r) for r in mat if any(r)]
    if not rows:
        return []
    kernel = integer_kernel(rows)
    if not kernel:
        return [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    return row_hnf(integer_kernel(kernel))


def rational_coordinates(vec: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Solve ``c . basis = vec`` exactly (basis rows linearly independent)."""
    r = len(basis)
    n = len(vec)
    # augmented system basis^T c = vec
    a = [[Fraction(basis[i][j]) for i in range(r)] + [Fraction(vec[j])] for j in range(n)]
    row = 0
    piv_cols = []
    for col in range(r):
        p = next((i for i in range(row, n) if a[i][col] != 0), None)
        if p is None:
            raise ValueError("basis rows are linearly dependent")
        a[row], a[p] = a[p], a[row]
        inv = 1 / a[row][col]
        a[row] = [u * inv for u in a[row]]
        for i in range(n):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [u - f * v for u, v in zip(a[i], a[row])]
        piv_cols.append(col)
        row += 1
    if any(a[i][r] != 0 for i in range(row, n)):
        raise ValueError(f"{tuple(vec)} is not in the span of the basis")
    return tuple(a[i][r] for i in range(r))


def _place_row(x: list[int], p: int, ops: list) -> list[int]:
    """Reduce row ``x`` given ``p`` placed pivots; record the column operations used."""
    x = list(x)
    r = len(x)
    tail = [j for j in range(p, r) if x[j] != 0]
    if not tail:
        return x
    # fold the tail into column p with unimodular 2x2 column operations
    for j in tail:
        if j == p:
            continue
        g, s, t = _xgcd(x[p], x[j])
        a, b = x[p] // g, x[j] // g
        ops.append(("mix", p, j, s, t, -b, a))
        x[p], x[j] = g, 0
    if x[p] < 0:
        ops.append(("neg", p))
        x[p] = -x[p]
    g = x[p]
    for l in range(p):
        q = x[l] // g
        if q:
            ops.append(("sub", l, p, q))
            x[l] -= q * g
    return x


def _apply_ops(x: list[int], ops: list) -> list[int]:
    x = list(x)
    for op in ops:
        if op[0] == "mix":
            _, p, j, s, t, c, d = op
            x[p], x[j] = s * x[p] + t * x[j], c * x[p] + d * x[j]
        elif op[0] == "neg":
            x[op[1]] = -x[op[1]]
        else:
            _, l, p, q = op
            x[l] -= q * x[p]
    return x


def _canonical_rows(rows: list[tuple[tuple[int, ...], tuple]], rank: int) -> tuple:
    """Lexicographically least column-HNF over all row orders.

    ``rows`` are ``(label, vector)`` pairs; labels sort first and are never
    touched by the column action. The HNF of a row prefix only depends on
    that prefix, so a best-first search with tie branching is exact.
    """
    best: list = [None, []]

    def rec(placed: tuple, remaining: list, p: int, path: list):
        if not remaining:
            if best[0] is None or placed < best[0]:
                best[0], best[1] = placed, path
            return
        options = []
        for idx, (label, vec) in enumerate(remaining):
            ops: list = []
            reduced = _place_row(list(vec), p, ops)
            options.append(((label, tuple(reduced)), idx, ops, reduced))
        least = min(o[0] for o in options)
        if best[0] is not None and placed + (least,) > best[0][: len(placed) + 1]:
            return
        for key, idx, ops, reduced in options:
            if key != least:
                continue
            rest = [
                (lab, tuple(_apply_ops(list(v), ops))) for i, (lab, v) in enumerate(remaining) if i != idx
            ]
            new_p = p + 1 if any(reduced[p:]) else p
            rec(placed + (key,), rest, new_p, path + ops)

    rec((), rows, 0, [])
    return best[0] or (), best[1]


def _unimodular_inverse_times(ops: list, basis: list[list[int]]) -> list[tuple[int, ...]]:
    """Rows ``U^{-1} basis`` where ``x -> x U`` is the column action of ``ops``."""
    r = len(basis)
    u = [_apply_ops([1 if i == j else 0 for j in range(r)], ops) for i in range(r)]
    # solve u . out = basis over Q; the answer is integral since u is unimodular
    a = [[Fraction(v) for v in row] + [Fraction(v) for v in b] for row, b in zip(u, basis)]
    for c in range(r):
        piv = next(i for i in range(c, r) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        a[c] = [v / a[c][c] for v in a[c]]
        for i in range(r):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[c])]
    return [tuple(int(v) for v in row[r:]) for row in a]


@dataclass(frozen=True)
class CanonicalForm:
    """Generator configuration up to lattice automorphism and reordering.

    ``images`` are coordinates in a basis of the saturation of the span, so
    ``index`` (the index of the span in its saturation) is visible in them.
    ``basis`` is the change of basis: generator = image . basis.
    """

    rank: int
    index: int
    images: tuple[Vector, ...]
    labels: tuple = ()
    basis: tuple[Vector, ...] = field(default=(), compare=False)

    def labelled(self) -> tuple:
        return tuple(zip(self.labels, self.images)) if self.labels else self.images


def canonical_form(gens: Sequence[Sequence[int]], labels: Sequence | None = None) -> CanonicalForm:
    """Canonicalize a generator list.

    Two lists differing by an automorphism of their span (and any reordering)
    give equal results. Optional ``labels`` (e.g. z-degrees) ride along with
    each generator and must match too.
    """
    gens = [tuple(int(a) for a in g) for g in gens]
    if labels is None:
        labels_t = None
        pairs = sorted(set(((), g) for g in gens))
    else:
        if len(labels) != len(gens):
            raise ValueError("one label per generator is required")
        pairs = sorted(set(((lab,), g) for lab, g in zip(labels, gens)))
    if not pairs or not any(any(g) for _, g in pairs):
        return CanonicalForm(0, 1, tuple(tuple() for _ in pairs), tuple(l[0] for l, _ in pairs) if labels else ())
    ncols = len(pairs[0][1])
    sat = saturation_basis([g for _, g in pairs], ncols)
    rank = len(sat)
    coords = []
    for lab, g in pairs:
        c = rational_coordinates(g, sat)
        if any(x.denominator != 1 for x in c):
            raise AssertionError("saturation coordinates must be integral")
        coords.append((lab, tuple(int(x) for x in c)))
    canon, ops = _canonical_rows(coords, rank)
    images = tuple(v for _, v in canon)
    labels_t = tuple(lab[0] for lab, _ in canon) if labels is not None else ()
    index = abs(math.prod(h[i] for i, h in enumerate(row_hnf(images)))) if rank else 1
    return CanonicalForm(rank, index, images, labels_t, tuple(_unimodular_inverse_times(ops, sat)))


def lattice_rank(vectors: Sequence[Sequence[int]]) -> int:
    return len(row_hnf(vectors)) if vectors else 0
