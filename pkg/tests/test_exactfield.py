from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from hopfkit.exactfield import DivisionByZero, Scalar, ScalarParseError, Tag, parse_scalar
from hopfkit._kernels import _pykernels

from conftest import Q, nonzero_polys, polys, scalars, same, to_sympy

q = Scalar.q_power(1)


def test_add_halves_thirds():
    assert Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6)


def test_inverse_of_q():
    assert q.inv() == Scalar.q_power(-1)
    assert str(q.inv()) == "1/q"


def test_mul_against_sympy():
    got = (q - q.inv()) * q
    assert same(got, Q**2 - 1)
    assert got == parse_scalar("q^2 - 1")


def test_constant_ratfunc_equals_rational():
    assert Scalar.from_poly((3,), (6,)) == Scalar(1, 2)
    assert hash(Scalar.from_poly((3,), (6,))) == hash(Scalar(1, 2))


def test_tags():
    assert Scalar(2).tag is Tag.RATIONAL
    assert q.tag is Tag.RATFUNC


@pytest.mark.parametrize("text, expected", [
    ("3", 3), ("-1/2", sympy.Rational(-1, 2)), ("q^2-1", Q**2 - 1),
    ("(q^2-1)/(q)", (Q**2 - 1) / Q), ("q^-1", 1 / Q), ("2q", 2 * Q),
])
def test_parse(text, expected):
    assert same(parse_scalar(text), expected)


@pytest.mark.parametrize("bad", ["q^", "1/0", "(q", "x", "2**3"])
def test_parse_errors(bad):
    with pytest.raises((ScalarParseError, DivisionByZero)):
        parse_scalar(bad)


def test_zero_inverse():
    with pytest.raises(DivisionByZero):
        Scalar(0).inv()


def test_subs():
    s = parse_scalar("(q^2-1)/(q+1)")
    assert s.subs(3) == Scalar(2)
    with pytest.raises(DivisionByZero):
        parse_scalar("1/(q-1)").subs(1)


@given(scalars, scalars)
def test_ring_ops_match_sympy(a, b):
    A, B = to_sympy(a), to_sympy(b)
    assert same(a + b, A + B)
    assert same(a - b, A - B)
    assert same(a * b, A * B)
    if b:
        assert same(a / b, A / B)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == Scalar(0)
    if a:
        assert a * a.inv() == Scalar(1)


@given(scalars)
def test_print_parse_round_trip(a):
    assert parse_scalar(str(a)) == a


@given(scalars, scalars)
def test_equality_and_hash(a, b):
    if a == b:
        assert hash(a) == hash(b)


@given(scalars, scalars, st.integers(min_value=2, max_value=5))
def test_subs_is_a_homomorphism(a, b, v):
    try:
        lhs = (a * b + a).subs(v)
        rhs = a.subs(v) * b.subs(v) + a.subs(v)
    except DivisionByZero:
        return
    assert lhs == rhs


@given(st.integers(-5, 5), st.integers(1, 5))
def test_rational_matches_fraction(n, d):
    s = Scalar(n, d)
    assert Fraction(s.num, s.den) == Fraction(n, d)


# the two kernel backends agree
try:
    from hopfkit._kernels import _ckernels
except ImportError:
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def _trim(p):
    return _pykernels.ptrim(p)


@needs_c
@given(polys, polys)
def test_backends_agree_on_ring_ops(a, b):
    a, b = _trim(a), _trim(b)
    for name in ("padd", "psub", "pmul"):
        assert getattr(_ckernels, name)(a, b) == getattr(_pykernels, name)(a, b)


@needs_c
@given(nonzero_polys, nonzero_polys)
def test_backends_agree_on_gcd_and_division(a, b):
    a, b = _trim(a), _trim(b)
    assert _ckernels.pgcd(a, b) == _pykernels.pgcd(a, b)
    p = _pykernels.pmul(a, b)
    assert _ckernels.pdivexact(p, b) == _pykernels.pdivexact(p, b) == a


@given(nonzero_polys, nonzero_polys)
def test_pure_gcd_divides_against_sympy(a, b):
    a, b = _trim(a), _trim(b)
    g = _pykernels.pgcd(a, b)
    pa = sympy.Poly(list(reversed(a)), Q)
    pb = sympy.Poly(list(reversed(b)), Q)
    pg = sympy.Poly(list(reversed(g)), Q)
    assert sympy.degree(pg, Q) == sympy.degree(sympy.gcd(pa, pb), Q)
    assert (pa.rem(pg)).is_zero and (pb.rem(pg)).is_zero
