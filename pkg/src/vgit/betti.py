"""Poincaré polynomials of the point-configuration quotients.

Crossing the wall ``t0 = n - 2m`` replaces ``C(n, m)`` copies of
``P^{m-1}`` by ``C(n, m)`` copies of ``P^{n-m-2}``, so the Poincaré
polynomial jumps by ``C(n,m) (t^{2m} - t^{2(n-m-1)}) / (1 - t^2)``.
Starting from the empty quotient above ``t = n`` and summing the jumps gives
the small-``t`` quotient, a P^1-bundle over ``(P^1)^n // PSL(2)`` when ``n``
is odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence


@dataclass(frozen=True)
class PoincarePolynomial:
    """Integer polynomial in ``t``; ``coefficients[k]`` multiplies ``t^k``."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(a) for a in self.coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "PoincarePolynomial":
        return cls((0,) * k + (coeff,))

    @classmethod
    def projective_space(cls, k: int) -> "PoincarePolynomial":
        """``1 + t^2 + ... + t^{2k}``; zero for ``k < 0`` (empty space)."""
        if k < 0:
            return cls()
        return cls(tuple(1 if i % 2 == 0 else 0 for i in range(2 * k + 1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __add__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return PoincarePolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> "PoincarePolynomial":
        return PoincarePolynomial(tuple(-a for a in self.coefficients))

    def __sub__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        return self + (-other)

    def __mul__(self, other) -> "PoincarePolynomial":
        if isinstance(other, int):
            return PoincarePolynomial(tuple(other * a for a in self.coefficients))
        out = [0] * (len(self.coefficients) + len(other.coefficients))
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return PoincarePolynomial(tuple(out))

    __rmul__ = __mul__

    def divmod(self, divisor: "PoincarePolynomial") -> tuple["PoincarePolynomial", "PoincarePolynomial"]:
        """Division over Z; the divisor's leading coefficient must be ±1."""
        if not divisor.coefficients:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.coefficients[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign")
        rem = list(self.coefficients)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] * lead
            if c:
                quot[k - dd] = c
                for i, b in enumerate(divisor.coefficients):
                    rem[k - dd + i] -= c * b
        return PoincarePolynomial(tuple(quot)), PoincarePolynomial(tuple(rem))

    def exact_div(self, divisor: "PoincarePolynomial") -> "PoincarePolynomial":
        q, r = self.divmod(divisor)
        if r.coefficients:
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coefficients)

    def dominated_by(self, other: "PoincarePolynomial") -> bool:
        n = max(len(self.coefficients), len(other.coefficients))
        return all(self[k] <= other[k] for k in range(n))

    def evaluate(self, t: int) -> int:
        return sum(a * t**k for k, a in enumerate(self.coefficients))

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for k, a in enumerate(self.coefficients):
            if not a:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            coeff = str(a) if (a != 1 or k == 0) else ""
            if a == -1 and k:
                coeff = "-"
            terms.append(f"{coeff}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


ONE = PoincarePolynomial((1,))
ONE_MINUS_T2 = PoincarePolynomial((1, 0, -1))
ONE_MINUS_T4 = PoincarePolynomial((1, 0, 0, 0, -1))
ONE_PLUS_T2 = PoincarePolynomial((1, 0, 1))


def blowup_poincare(p_x: PoincarePolynomial, p_z: PoincarePolynomial, k: int) -> PoincarePolynomial:
    """``P_X + P_Z (t^2 + ... + t^{2k})`` for a centre with exceptional fibre ``P^k``."""
    if k < 0:
        raise ValueError("fibre dimension must be >= 0")
    exceptional = PoincarePolynomial(tuple(1 if (i % 2 == 0 and i > 0) else 0 for i in range(2 * k + 1)))
    return p_x + p_z * exceptional


def _check_wall(n: int, m: int):
    if n <= 2:
        raise ValueError("need n > 2")
    if not (0 <= m and 2 * m <= n):
        raise ValueError(f"need 0 <= m <= n/2, got m={m}")


def _wall_numerator(n: int, m: int) -> PoincarePolynomial:
    return PoincarePolynomial.monomial(2 * m) - PoincarePolynomial.monomial(2 * (n - m - 1))


def crossing_delta(n: int, m: int) -> PoincarePolynomial:
    """Jump of the Poincaré polynomial across the wall ``t0 = n - 2m``."""
    _check_wall(n, m)
    return comb(n, m) * _wall_numerator(n, m).exact_div(ONE_MINUS_T2)


def _require_odd(n: int):
    if n <= 2:
        raise ValueError("need n > 2")
    if n % 2 == 0:
        raise ValueError("the Betti formulas hold for odd n only")


def poincare_master(n: int) -> PoincarePolynomial:
    """Telescoped sum of all wall jumps: the small-``t`` quotient."""
    _require_odd(n)
    total = PoincarePolynomial()
    for m in range((n - 1) // 2 + 1):
        total = total + crossing_delta(n, m)
    return total


def chamber_poincare(n: int) -> list[tuple[int, PoincarePolynomial]]:
    """``(m, P)`` just below each wall ``n - 2m``, accumulating jumps from the empty top chamber."""
    _check_wall(n, 0)
    total = PoincarePolynomial()
    out = []
    for m in range((n - 1) // 2 + 1):
        total = total + crossing_delta(n, m)
        out.append((m, total))
    return out


def permutation_multipliers(n: int) -> list[int]:
    """Multiplicities ``C(n, m)`` of the subset-permutation representations in the ordered sum."""
    _require_odd(n)
    return [comb(n, m) for m in range((n - 1) // 2 + 1)]


def _closed_form(n: int, multipliers: Sequence[int]) -> PoincarePolynomial:
    total = PoincarePolynomial()
    for m, c in enumerate(multipliers):
        total = total + c * _wall_numerator(n, m).exact_div(ONE_MINUS_T4)
    return total


def poincare_ordered(n: int) -> PoincarePolynomial:
    """``P_t((P^1)^n // PSL(2))`` for odd ``n``, cross-checked against the bundle splitting."""
    _require_odd(n)
    closed = _closed_form(n, permutation_multipliers(n))
    if poincare_master(n).exact_div(ONE_PLUS_T2) != closed:
        raise ArithmeticError(f"closed form and P^1-bundle splitting disagree for n={n}")
    return closed


def poincare_symmetric(n: int) -> PoincarePolynomial:
    """``P_t(P^n // PSL(2))``: the trivial isotypic part, one copy per ``m``."""
    _require_odd(n)
    return _closed_form(n, [1] * ((n - 1) // 2 + 1))
