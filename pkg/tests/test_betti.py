import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vgit.betti import (
    ONE_PLUS_T2,
    PoincarePolynomial as P,
    blowup_poincare,
    chamber_poincare,
    crossing_delta,
    permutation_multipliers,
    poincare_master,
    poincare_ordered,
    poincare_symmetric,
)


def test_blowup_poincare():
    assert blowup_poincare(P((1, 0, 1, 0, 1)), P((1,)), 1) == P((1, 0, 2, 0, 1))
    assert blowup_poincare(P((1, 0, 1)), P((1,)), 0) == P((1, 0, 1))
    assert blowup_poincare(P((1,)), P(), 4) == P((1,))
    with pytest.raises(ValueError):
        blowup_poincare(P((1,)), P((1,)), -1)


def test_crossing_delta():
    assert crossing_delta(5, 0) == P((1, 0, 1, 0, 1, 0, 1))
    assert crossing_delta(5, 2) == P()
    assert crossing_delta(3, 1) == P()
    with pytest.raises(ValueError):
        crossing_delta(5, 3)


def test_master_and_ordered():
    assert poincare_master(3) == P((1, 0, 1))
    assert poincare_master(5) == P((1, 0, 6, 0, 6, 0, 1))
    assert poincare_master(5).evaluate(1) == 14
    assert poincare_ordered(3) == P((1,))
    assert poincare_ordered(5) == P((1, 0, 5, 0, 1))
    assert poincare_ordered(7) == P((1, 0, 7, 0, 22, 0, 7, 0, 1))
    assert poincare_symmetric(5) == P((1, 0, 1, 0, 1))
    assert poincare_symmetric(3) == P((1,))


def test_even_n_rejected():
    for f in (poincare_master, poincare_ordered, poincare_symmetric, permutation_multipliers):
        with pytest.raises(ValueError):
            f(6)


def test_chamber_sequence_ends_at_master():
    steps = chamber_poincare(7)
    assert steps[0] == (0, crossing_delta(7, 0))
    assert steps[-1][1] == poincare_master(7)
    assert all(p.is_nonnegative() for _, p in steps)


@pytest.mark.parametrize("n", [5, 7, 9, 11, 13])
def test_ordered_properties(n):
    p = poincare_ordered(n)
    assert p.is_palindromic() and p.is_nonnegative()
    assert p.degree == 2 * (n - 3) and p[0] == 1
    assert poincare_master(n) == p * ONE_PLUS_T2
    s = poincare_symmetric(n)
    assert s.is_palindromic() and s.dominated_by(p)
    total = P()
    for m in range((n - 1) // 2 + 1):
        total = total + crossing_delta(n, m)
    assert total == poincare_master(n)


def test_n11_is_fast():
    start = time.perf_counter()
    poincare_ordered(11)
    assert time.perf_counter() - start < 1.0


def test_str():
    assert str(P((1, 0, 5, 0, 1))) == "1 + 5t^2 + t^4"
    assert str(P((0, -1))) == "-t"
    assert str(P()) == "0"


polys = st.lists(st.integers(-5, 5), max_size=6).map(lambda c: P(tuple(c)))


@given(polys, polys)
def test_divmod_roundtrip(a, b):
    divisor = b + P.monomial(b.degree + 1 if b.coefficients else 0)
    q, r = a.divmod(divisor)
    assert q * divisor + r == a
    assert r.degree < divisor.degree


@given(polys, polys)
def test_ring_axioms(a, b):
    assert a * b == b * a
    assert (a + b) - b == a
    assert (a * b).evaluate(2) == a.evaluate(2) * b.evaluate(2)


def test_exact_div_rejects_remainder():
    with pytest.raises(ArithmeticError):
        P((1, 1)).exact_div(P((1, 0, 1)))
    with pytest.raises(ValueError):
        P((1,)).divmod(P((1, 2)))
