import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vgit import graded_ring as gr
from vgit.loci import (
    CoordinateLocus,
    LimitError,
    OpenLocus,
    WeightedProjectiveSpace,
    classify_crossing,
    fixed_loci,
    limit_point,
    semistable_loci,
)


def test_fixed_loci_examples():
    plus, minus, zero = fixed_loci([-1, 1, 2])
    assert plus.zero_set == {0} and minus.zero_set == {1, 2} and zero.zero_set == {0, 1, 2}
    plus, minus, zero = fixed_loci([1, 1, 1])
    assert plus.codim == 0 and minus.codim == 3 and zero.codim == 3
    plus, minus, zero = fixed_loci([1, 1, -1, -1])
    assert (plus.codim, minus.codim, zero.codim) == (2, 2, 4)


def test_limit_point_examples():
    assert limit_point({1, 2}, [-1, 1, 2], "+") == frozenset()
    assert limit_point({0, 2}, [0, 1, 0], "+") == {0, 2}
    with pytest.raises(LimitError):
        limit_point({0}, [-1, 1, 2], "+")
    assert limit_point({0}, [-1, 1, 2], "-") == frozenset()
    with pytest.raises(ValueError):
        limit_point({0}, [1], "up")


def test_open_locus_equality_uses_minimal_sets():
    a = CoordinateLocus(frozenset({0}), 3)
    b = CoordinateLocus(frozenset({0, 1}), 3)
    assert OpenLocus((a, b), 3) == OpenLocus((a,), 3)
    assert OpenLocus((a,), 3) != OpenLocus((b,), 3)
    assert len({OpenLocus((a, b), 3), OpenLocus((a,), 3)}) == 1


def test_classify_crossing_examples():
    rep = classify_crossing([1, 1, -1, -1])
    assert (rep.codim_plus, rep.codim_minus, rep.flip, rep.quasi_free) == (2, 2, True, 1)
    assert str(rep.fiber_plus) == "P^1" and str(rep.fiber_minus) == "P^1"
    rep = classify_crossing([-1, 1, 2])
    assert (rep.codim_plus, rep.codim_minus, rep.flip) == (1, 2, False)
    assert rep.fiber_plus.weights == (1, 2) and rep.fiber_minus.dim == 0
    assert rep.quasi_free is None
    rep = classify_crossing([1, 1, 1])
    assert rep.minus_empty and "P(1,1,1)" in rep.summary


def test_degenerate_crossing():
    rep = classify_crossing([0, 0])
    assert rep.degenerate


def test_weighted_projective_space():
    assert WeightedProjectiveSpace((2, 2)).is_projective_space
    assert str(WeightedProjectiveSpace(())) == "P^-1 (empty)"
    assert WeightedProjectiveSpace(()).is_empty


weights_st = st.lists(st.integers(-3, 3), min_size=1, max_size=4)


@settings(max_examples=40, deadline=None)
@given(weights_st)
def test_index_set_identities(weights):
    ss = semistable_loci(weights)
    assert ss.ss_plus & ss.ss_minus == ss.s_zero
    assert ss.ss_zero == OpenLocus((), len(weights))


@settings(max_examples=25, deadline=None)
@given(weights_st, st.sampled_from(["+", "-"]))
def test_semistable_matches_nonvanishing_sections(weights, sign):
    # a point is semistable iff some piece generator of the quotient does not vanish on it
    R = gr.make_polynomial_ring(weights)
    pres = gr.proj_quotient(R, sign, 1)
    sections = [g.monomial for g in pres.positive_part(full=True)]
    ss = semistable_loci(weights)
    locus = ss.ss_plus if sign == "+" else ss.ss_minus
    r = len(weights)
    for mask in range(1 << r):
        support = {i for i in range(r) if mask >> i & 1}
        by_sections = any(all(i in support for i, a in enumerate(s) if a) for s in sections)
        assert locus.contains(support) == by_sections


@settings(max_examples=40, deadline=None)
@given(weights_st, st.integers(0, 15))
def test_limits_land_in_fixed_locus(weights, mask):
    r = len(weights)
    support = {i for i in range(r) if mask >> i & 1}
    plus, minus, zero = fixed_loci(weights)
    for direction, locus in (("+", plus), ("-", minus)):
        if locus.contains(support):
            lim = limit_point(support, weights, direction)
            assert lim <= support and zero.contains(lim)
        else:
            with pytest.raises(LimitError):
                limit_point(support, weights, direction)
