from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vgit import graded_ring as gr
from vgit.corpus import corpus_ring
from vgit.lattice import Completeness, canonical_form, monoid_membership


def exps(pres):
    return {tuple(v) for v in pres.exponents()}


# -- rings ------------------------------------------------------------------------


def test_polynomial_rings():
    R = gr.make_polynomial_ring([-1, 1, 2], ["w", "x", "y"])
    assert R.is_polynomial and R.ambient_rank == 3
    assert R.weight((2, 0, 1)) == 0
    assert R.monomial_name((2, 0, 1)) == "w^2*y"
    line = gr.make_polynomial_ring([0])
    assert line.gen_weights == (0,)
    assert {g.exponent for g in gr.invariant_ring(line).gens} == {(1, 0)}


def test_quadric_cone_accepted():
    R = corpus_ring("quadric")
    assert not R.is_polynomial
    assert R.weight_functional == (Fraction(-2), Fraction(0), Fraction(1))
    assert R.contains((1, 1, 3)) and not R.contains((0, 1, 2))


def test_inconsistent_weights_name_the_generator():
    with pytest.raises(gr.RingError, match=r"\(1, 1\)"):
        gr.make_semigroup_ring(2, [(1, 0), (0, 1), (1, 1)], [1, 1, 3])


def test_generators_must_be_nonnegative():
    with pytest.raises(gr.RingError):
        gr.make_semigroup_ring(2, [(1, -1), (0, 1)], [1, 1])


# -- invariants and Proj ---------------------------------------------------------------


def test_invariant_ring_weighted_blowup():
    pres = gr.invariant_ring(corpus_ring("weighted_blowup"))
    assert set(pres.degree_zero()) == {(1, 1, 0), (2, 0, 1)}
    assert pres.status is Completeness.CERTIFIED


def test_invariant_ring_quadric_is_free():
    r0 = gr.invariant_ring(corpus_ring("quadric")).degree_zero()
    assert set(r0) == {(1, 0, 2), (1, 2, 2)}
    # free in the group of the semigroup, though of index 2 in Z^3
    assert gr.ring_canonical(corpus_ring("quadric"), r0, z=False).images == ((1, 0), (0, 1))
    assert canonical_form(r0).index == 2


def test_all_positive_weights_give_constants():
    R = gr.make_polynomial_ring([1, 1, 1])
    assert gr.invariant_ring(R).degree_zero() == []
    assert gr.proj_quotient(R, "-", 1).empty
    assert not gr.proj_quotient(R, "+", 1).empty


def test_proj_quotients_weighted_blowup():
    R = corpus_ring("weighted_blowup")
    plus = gr.proj_quotient(R, "+", 1)
    assert exps(plus) == {(1, 1, 0, 0), (2, 0, 1, 0), (0, 1, 0, 1), (0, 0, 1, 2)}
    # the full algebra also needs w y z, which the Veronese reduction drops
    assert (1, 0, 1, 1) in {g.exponent for g in plus.algebra_gens}
    minus = gr.proj_quotient(R, "-", 1)
    assert exps(minus) == {(1, 1, 0, 0), (2, 0, 1, 0), (1, 0, 0, 1)}


def test_proj_quotient_atiyah():
    R = corpus_ring("atiyah")
    plus = gr.proj_quotient(R, "+", 1)
    assert {R.monomial_name(g.monomial) for g in plus.positive_part()} == {"v", "w"}
    assert len(plus.degree_zero()) == 4


def test_proj_quotient_rejects_bad_sign():
    with pytest.raises(ValueError):
        gr.proj_quotient(corpus_ring("weighted_blowup"), "x", 1)


def test_normalize_z_idempotent():
    vs = gr.proj_quotient(corpus_ring("weighted_blowup"), "+", 2).exponents(full=True)
    doubled = [v[:-1] + (2 * v[-1],) for v in vs]
    once = gr.normalize_z(doubled)
    assert once == gr.normalize_z(vs) == gr.normalize_z(once)


# -- choosing d ------------------------------------------------------------------------


@pytest.mark.parametrize("name, d", [("weighted_blowup", 2), ("quadric", 2), ("balanced_pair", 1), ("atiyah", 1)])
def test_find_d(name, d):
    res = gr.find_d(corpus_ring(name), check_bound=6)
    assert res.d == d
    assert res.status is Completeness.COMPLETE_TO_BOUND


def test_find_d_certificates_replay():
    R = corpus_ring("weighted_blowup")
    res = gr.find_d(R, check_bound=6)
    assert res.rejected[1][1] == (0, 0, 1)
    for pieces in res.certificates.values():
        for target, witness in pieces:
            total = [0, 0, 0]
            for gen, k in witness.items():
                total = [a + k * b for a, b in zip(total, gen)]
            assert tuple(total) == target


def test_find_d_cap_exhausted():
    with pytest.raises(gr.NoDCertified):
        gr.find_d(gr.make_polynomial_ring([5, -7]), check_bound=3, cap=2)


# -- ideals, blow-ups ------------------------------------------------------------------


def test_ideals():
    R = corpus_ring("weighted_blowup")
    assert set(gr.ideal_I(R, "+", 2).gens) == {(2, 0, 0)}
    assert set(gr.ideal_I(R, "-", 2).gens) == {(0, 0, 1), (0, 2, 0)}
    Q = corpus_ring("quadric")
    # b^2 = 2 (1,0,1), d^2 = 2 (1,1,1) in the ambient lattice
    assert set(gr.ideal_I(Q, "+", 2).gens) == {(2, 0, 2), (2, 2, 2)}
    ideal = gr.ideal_I(R, "-", 2)
    assert ideal.contains((0, 3, 1)) and not ideal.contains((5, 1, 0))
    assert ideal.radical_contains((0, 1, 0))


def test_product_piece_quadric():
    R = corpus_ring("quadric")
    prod = gr.product_piece(R, 2, 2)
    assert set(prod) == {(2, 0, 4), (2, 2, 4), (2, 4, 4)}
    assert gr.ring_canonical(R, prod, z=False) == canonical_form([(2, 0), (1, 1), (0, 2)])


def test_blowup_weighted_blowup():
    bl = gr.blowup_algebra(corpus_ring("weighted_blowup"), 1, 1, 2)
    assert {g.exponent for g in bl.gens} == {(1, 1, 0, 0), (2, 0, 1, 0), (2, 0, 1, 1), (2, 2, 0, 1)}
    assert bl.canonical() == canonical_form([(1, 0, 0), (0, 1, 0), (2, 0, 1), (0, 1, 1)], [0, 0, 1, 1])


def test_blowup_atiyah_is_cone_point_blowup():
    bl = gr.blowup_algebra(corpus_ring("atiyah"), 1, 1, 1)
    zero = {g.exponent[:4] for g in bl.gens if g.exponent[-1] == 0}
    one = {g.exponent[:4] for g in bl.gens if g.exponent[-1] == 1}
    assert zero == one and len(zero) == 4


def test_blowup_trivial_for_balanced_pair():
    bl = gr.blowup_algebra(gr.make_polynomial_ring([1, -1]), 1, 1, 1)
    assert {g.exponent for g in bl.gens} == {(1, 1, 0), (1, 1, 1)}


# -- cross-checks ------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["weighted_blowup", "atiyah", "balanced_pair"])
def test_master_space(name):
    report = gr.master_space_check(corpus_ring(name))
    assert set(report) == {Fraction(-1), Fraction(0), Fraction(1)}
    assert all(s.passed for s in report.values())


def test_master_space_fractional_sample():
    report = gr.master_space_check(corpus_ring("weighted_blowup"), samples=(Fraction(1, 2),))
    assert all(s.passed for s in report.values())


def test_dimensions():
    assert gr.dimension_report(corpus_ring("weighted_blowup")) == {"zero": 2, "plus": 3, "minus": 3}
    dims = gr.dimension_report(corpus_ring("atiyah"))
    assert dims["plus"] == dims["minus"] == dims["zero"] + 1


def test_power_surjectivity_probe():
    R = corpus_ring("weighted_blowup")
    # R_{-1} = (w) and R_{-2} = (w^2); but y in R_2 is not a square of R_1
    assert gr.power_surjectivity_probe(R, "+", 1, 2)
    assert not gr.power_surjectivity_probe(R, "-", 1, 2)


weights_st = st.lists(st.integers(-3, 3), min_size=1, max_size=4)


@settings(max_examples=30, deadline=None)
@given(weights_st)
def test_invariants_have_weight_zero_and_generate(weights):
    R = gr.make_polynomial_ring(weights)
    gens = gr.invariant_ring(R).degree_zero()
    assert all(R.weight(g) == 0 for g in gens)
    # every small invariant monomial is a product of the generators
    r = len(weights)
    for k in range(r):
        for j in range(r):
            if weights[k] * weights[j] < 0:
                a, b = abs(weights[j]), abs(weights[k])
                v = [0] * r
                v[k] += a
                v[j] += b
                assert monoid_membership(tuple(v), gens)


@settings(max_examples=25, deadline=None)
@given(weights_st, st.sampled_from(["+", "-"]))
def test_proj_generators_have_right_grading(weights, sign):
    R = gr.make_polynomial_ring(weights)
    pres = gr.proj_quotient(R, sign, 1)
    for g in pres.algebra_gens:
        assert R.weight(g.monomial) == (1 if sign == "+" else -1) * g.z_degree
