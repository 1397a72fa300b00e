from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfkit.algebra import (
    HopfAlgebra, SchemaError, algebra_from_json, algebra_to_json, antipode,
    check_algebra_laws, comul, counit, dual_group_algebra_c2, dual_numbers, ground_field,
    group_algebra_c2, mul, preset, sweedler_h4, tensor_algebra,
)
from hopfkit.exactfield import Scalar

from oracles import H4_NAMES, h4_antipode_mono, h4_comul_mono, h4_mono_mul

H4 = sweedler_h4()
KC2 = group_algebra_c2()


def _h4_vec(d):
    v = [Scalar(0)] * 4
    for m, c in d.items():
        v[H4.index(H4_NAMES[m])] = Scalar(c.numerator, c.denominator)
    return v


@pytest.mark.parametrize("name", ["k", "kc2", "kc2_dual", "h4"])
def test_presets_pass_all_laws(name):
    rep = check_algebra_laws(preset(name))
    assert rep.ok, str(rep)


def test_h4_structure_constants_match_relations():
    for m in H4_NAMES:
        for n in H4_NAMES:
            got = H4.mul_vec(H4.e(H4.index(H4_NAMES[m])).coeffs, H4.e(H4.index(H4_NAMES[n])).coeffs)
            assert got == _h4_vec(h4_mono_mul(m, n))


def test_h4_comultiplication_matches_relations():
    for m, name in H4_NAMES.items():
        want = {(H4.index(H4_NAMES[a]), H4.index(H4_NAMES[b])): Scalar(c.numerator, c.denominator)
                for (a, b), c in h4_comul_mono(m).items()}
        assert comul(H4.e(H4.index(name))).coeffs == want


def test_h4_antipode_matches_relations():
    for m, name in H4_NAMES.items():
        assert antipode(H4.e(H4.index(name))).coeffs == _h4_vec(h4_antipode_mono(m))


def test_h4_comul_x():
    assert str(comul(H4.e(H4.index("x")))) in ("x (x) 1 + g (x) x", "g (x) x + x (x) 1")


def test_kc2_basics():
    g = KC2.e(KC2.index("g"))
    assert mul(g, g) == KC2.one()
    assert antipode(g) == g
    assert counit(g) == Scalar(1)


def test_kc2_corrupted_comultiplication():
    # Delta(g) = g (x) 1 is still coassociative: both sides give g (x) 1 (x) 1;
    # the counit axiom is what breaks, and it breaks at g
    comult = [{(0, 0): 1}, {(1, 0): 1}]
    bad = HopfAlgebra(["1", "g"], KC2.mult, KC2.unit, comult, [1, 1], [[1, 0], [0, 1]],
                      name="kC2 corrupted")
    rep = check_algebra_laws(bad)
    assert rep["coassociativity"].passed
    assert not rep["counit"].passed
    assert "g" in rep["counit"].counterexample


def test_h4_wrong_antipode_fails():
    S = [list(r) for r in H4.antipode]
    S[H4.index("x")] = [Scalar(0), Scalar(0), Scalar(1), Scalar(0)]
    bad = HopfAlgebra(H4.basis, H4.mult, H4.unit, H4.comult, H4.counit, S, name="H4 bad S")
    assert not check_algebra_laws(bad)["antipode"].passed


def test_tensor_with_ground_field():
    A = tensor_algebra(ground_field(), H4)
    assert A.dim == H4.dim
    for i in range(4):
        for j in range(4):
            assert A.mul_vec(A.e(i).coeffs, A.e(j).coeffs) == H4.mul_vec(H4.e(i).coeffs, H4.e(j).coeffs)


def test_tensor_kc2_squared():
    T = tensor_algebra(KC2, KC2)
    g1 = T.e(T.index("g(x)1"))
    g2 = T.e(T.index("1(x)g"))
    assert mul(g1, g2) == T.e(T.index("g(x)g"))


def test_tensor_e0_kc2_square_vanishes():
    T = tensor_algebra(dual_numbers(), KC2)
    xg = T.e(T.index("x(x)g"))
    assert mul(xg, xg).is_zero()


def test_json_round_trip():
    for H in (KC2, H4, dual_group_algebra_c2(), dual_numbers()):
        doc = algebra_to_json(H)
        back = algebra_from_json(doc)
        assert algebra_to_json(back) == doc


def test_json_errors():
    with pytest.raises(SchemaError):
        algebra_from_json({"basis": ["1"], "mult": [[["1"]]]})
    with pytest.raises(SchemaError):
        algebra_from_json({"schema": "algebra.v2", "basis": ["1"]})
    with pytest.raises(SchemaError):
        algebra_from_json({"basis": ["1", "g"], "mult": [[["1", "0"]]], "unit": ["1", "0"]})


elements = st.lists(st.integers(-3, 3), min_size=4, max_size=4)


def _el(v):
    return H4.element([Scalar(c) for c in v])


@given(elements, elements, elements)
def test_h4_associative(u, v, w):
    u, v, w = _el(u), _el(v), _el(w)
    assert (u * v) * w == u * (v * w)


@given(elements, elements)
def test_h4_antipode_antimultiplicative(u, v):
    u, v = _el(u), _el(v)
    assert antipode(u * v) == antipode(v) * antipode(u)


@given(elements, elements)
def test_h4_comultiplication_multiplicative(u, v):
    u, v = _el(u), _el(v)
    lhs = comul(u * v).coeffs
    rhs = {}
    for (a, b), c in comul(u).coeffs.items():
        for (x, y), d in comul(v).coeffs.items():
            left = H4.mul_vec(H4.e(a).coeffs, H4.e(x).coeffs)
            right = H4.mul_vec(H4.e(b).coeffs, H4.e(y).coeffs)
            for i, s in enumerate(left):
                for j, t in enumerate(right):
                    if s and t:
                        rhs[(i, j)] = rhs.get((i, j), Scalar(0)) + c * d * s * t
    assert lhs == {k: c for k, c in rhs.items() if c}


@given(elements)
def test_h4_convolution_identity(u):
    u = _el(u)
    total = H4.zero()
    for (a, b), c in comul(u).coeffs.items():
        total = total + c * (antipode(H4.e(a)) * H4.e(b))
    assert total == counit(u) * H4.one()


@given(elements)
def test_counit_is_multiplicative(u):
    u = _el(u)
    assert counit(u * u) == counit(u) * counit(u)


def test_fractions_coerce():
    assert Scalar.coerce(Fraction(2, 4)) == Scalar(1, 2)
