import pytest
from hypothesis import given, strategies as st

from hopfkit.exactfield import ONE
from hopfkit.fpalg import borel_coaction, graded_quantum_plane, o_slq2, quantum_plane
from hopfkit.fpalg.presets import regular_fp_coaction
from hopfkit.galois import span_contains
from hopfkit.ore import (
    OreFraction, OreSet, check_localization, check_ore, localize_coaction,
    localized_coinvariants, unit_localization,
)
from hopfkit.reports import Status

from conftest import Q, same
from oracles import qplane_mono_mul


@pytest.fixture(scope="module")
def qp():
    A = quantum_plane(6)
    return A, OreSet(A, "x", 6)


def test_fraction_product(qp):
    A, S = qp
    f = S.fraction(1, "y")
    # x^-1 y x^-1 y = q x^-2 y^2
    assert f * f == S.fraction(2, "[q]*y.y")


def test_inverse_is_two_sided(qp):
    A, S = qp
    x = S.iota("x")
    assert S.inverse_s() * x == S.iota("1")
    assert x * S.inverse_s() == S.iota("1")


def test_canonical_form_cancels(qp):
    A, S = qp
    assert S.fraction(2, "x.y") == S.fraction(1, "y")


powers = st.integers(0, 2)


@given(powers, powers, powers, powers)
def test_quantum_torus_oracle(a, j, c, l):
    A = quantum_plane(8)
    S = OreSet(A, "x", 8)
    y = (A.gen("y"),)
    f = OreFraction(S, a, {y * j: ONE})
    g = OreFraction(S, c, {y * l: ONE})
    (i, jj), coeff = qplane_mono_mul((-a, j), (-c, l), Q)
    prod = f * g
    assert prod.k == -i
    assert list(prod.num) == [y * jj]
    assert same(prod.num[y * jj], coeff)


def _verify_witnesses(A, S, report):
    for m in A.normal_monomials(S.bound):
        k, ep = S.witness_monomial(m)
        assert A.mul_terms(S.power(k), {m: ONE}, S.limit) == A.mul_terms(ep, S.s.terms, S.limit)
    assert report.status is Status.PASS


def test_ore_quantum_plane(qp):
    A, S = qp
    _verify_witnesses(A, S, check_ore(A, S))


def test_ore_sl_at_a():
    A = o_slq2(4)
    S = OreSet(A, "a", 4)
    rep = check_ore(A, S)
    # a^2 d = (1 + q^3 bc) a
    assert rep.witnesses["d"] == (2, "1 + [q^3]*b.c")
    _verify_witnesses(A, S, rep)


def test_ore_inconclusive_with_no_slack():
    rep = check_ore(o_slq2(4), "a", 4, slack=0)
    assert rep.status is Status.INCONCLUSIVE


def test_localized_coaction_quantum_plane():
    CL = localize_coaction(graded_quantum_plane(6), "x", 6)
    w1 = (CL.B.gen("w1"),)
    assert CL.rho_S(CL.S.inverse_s()).terms == {w1: CL.S.inverse_s()}
    assert check_localization(CL, 6).status is Status.PASS


def test_localized_coaction_sl():
    CL = localize_coaction(borel_coaction(o_slq2(4)), "a", 4)
    d = (CL.B.gen("d"),)
    assert CL.rho_S(CL.S.inverse_s()).terms == {d: CL.S.inverse_s()}
    assert check_localization(CL, 4).status is Status.PASS


def test_quantum_plane_coinvariants():
    CL = localize_coaction(graded_quantum_plane(6), "x", 6)
    U, info = localized_coinvariants(CL, 4)
    assert U == [CL.S.iota("1")]
    assert info["dim"] == 1


def test_sl_coinvariants_contain_c_over_a():
    CL = localize_coaction(borel_coaction(o_slq2(4)), "a", 4)
    U, info = localized_coinvariants(CL, 4)
    S = CL.S
    assert span_contains(U, S.iota("1")) is not None
    assert span_contains(U, S.inverse_s() * S.iota("c")) is not None
    assert span_contains(U, S.iota("a")) is None
    assert info["dim_E_coinvariants"] == 1


def test_unit_localization_is_identity():
    CL = unit_localization(regular_fp_coaction(o_slq2(3)), 3)
    B = CL.B
    # Delta(b) = a (x) b + b (x) d
    assert CL.rho_S(CL.S.iota("b")).terms == {(B.gen("b"),): CL.S.iota("a"),
                                              (B.gen("d"),): CL.S.iota("b")}
