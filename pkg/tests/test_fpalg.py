import pytest
from hypothesis import given, strategies as st

from hopfkit.exactfield import ONE, Scalar
from hopfkit.fpalg import (
    DegreeOverflow, PresentationError, PresentedAlgebra, borel_bq2, borel_coaction,
    check_confluence, check_fp_comodule_algebra, check_hopf, check_termination,
    group_algebra_Zn, o_glq2, o_slq2, o_slq2_commutative, quantum_plane, tensor_from_string,
)
from hopfkit.reports import Status

from conftest import Q, same
from oracles import qplane_mono_mul


def test_quantum_plane_normal_form():
    A = quantum_plane(4)
    assert A.element("y.x") == A.element("[q^-1]*x.y")


def test_sl_normal_form_da():
    A = o_slq2(4)
    assert A.element("d.a") == A.element("1 + [q^-1]*b.c")
    assert A.element("d") * A.element("a") == A.element("d.a")


@pytest.mark.parametrize("make", [o_slq2, o_slq2_commutative, quantum_plane, o_glq2])
def test_confluent_presets(make):
    A = make(6)
    assert check_termination(A).status is Status.PASS
    assert check_confluence(A, 6).status is Status.PASS


def test_sl_confluent_at_eight():
    assert check_confluence(o_slq2(8), 8).status is Status.PASS


def test_wrong_sign_ad_rule_not_confluent():
    rep = check_confluence(o_slq2(6, ad_rule="1 + [-q]*b.c"), 6)
    assert rep.status is Status.FAIL
    assert "overlap" in rep["overlaps_resolve"].counterexample


def test_sl_counit():
    A = o_slq2(4)
    assert A.counit.apply_terms(A.element("a.d").terms) == {(): ONE}
    assert A.counit.apply_terms(A.element("b.c").terms) == {}


def test_zn_group_likes():
    Z = group_algebra_Zn(2, 4)
    z1, w1 = (Z.gen("z1"),), (Z.gen("w1"),)
    assert Z.comult.apply_word(z1) == {(z1, z1): ONE}
    assert Z.element("z1.w1") == Z.one()
    assert check_hopf(Z).status is Status.PASS


@pytest.mark.parametrize("make", [o_slq2, borel_bq2, o_slq2_commutative])
def test_hopf_presets(make):
    assert check_hopf(make(4)).status is Status.PASS


def test_borel_coaction():
    EA = borel_coaction(o_slq2(4))
    E, B = EA.E, EA.B
    assert EA.coact(E.element("c")) == tensor_from_string((E, B), "c (x) a")
    assert EA.coact(E.element("a")) == tensor_from_string((E, B), "a (x) a")
    assert EA.coact(E.element("b")) == tensor_from_string((E, B), "a (x) b + b (x) d")
    assert check_fp_comodule_algebra(EA).status is Status.PASS


def test_borel_coaction_multiplicative():
    EA = borel_coaction(o_slq2(4))
    E = EA.E
    x, y = E.element("a.c"), E.element("b + d")
    assert EA.coact(x * y) == EA.coact(x) * EA.coact(y)


def test_degree_overflow():
    A = o_slq2(2)
    with pytest.raises(DegreeOverflow):
        A.element("a.b.c")


def test_bad_presentation():
    with pytest.raises(PresentationError):
        PresentedAlgebra("bad", ["x"], [("y x", "x")])


exps = st.integers(0, 2)


@given(exps, exps, exps, exps)
def test_quantum_plane_against_oracle(i, j, k, l):
    A = quantum_plane(8)
    x, y = A.gen("x"), A.gen("y")
    m, n = (x,) * i + (y,) * j, (x,) * k + (y,) * l
    got = A.mul_terms({m: ONE}, {n: ONE})
    (a, b), c = qplane_mono_mul((i, j), (k, l), Q)
    assert list(got) == [(x,) * a + (y,) * b]
    assert same(got[(x,) * a + (y,) * b], c)


words = st.lists(st.sampled_from("abcd"), max_size=2).map(".".join)


@given(words, words, words)
def test_sl_associative(u, v, w):
    A = o_slq2(6)
    el = lambda s: A.element(s) if s else A.one()
    assert (el(u) * el(v)) * el(w) == el(u) * (el(v) * el(w))


@given(words, words)
def test_sl_counit_multiplicative(u, v):
    A = o_slq2(6)
    el = lambda s: A.element(s) if s else A.one()
    eps = lambda x: A.counit.apply_terms(x.terms).get((), Scalar(0))
    assert eps(el(u) * el(v)) == eps(el(u)) * eps(el(v))
