import pytest
from hypothesis import given, strategies as st

from hopfkit.algebra import TensorElement, group_algebra_c2, sweedler_h4
from hopfkit.exactfield import Scalar
from hopfkit.sweedler import (
    Add, Antipode, Const, Leg, LegGapError, Mul, ParseError, ScalarMul, Tensor,
    UndeclaredVariable, Var, eval_expr, parse_element, parse_expr, to_text,
)

H4 = sweedler_h4()
KC2 = group_algebra_c2()


def test_comodule_law_formula():
    ast = parse_expr("e_(0) (x) m (x) e_(1).b", {"e": "E", "m": "M", "b": "B"})
    assert ast == Tensor((Leg("e", 0), Var("m"), Mul((Leg("e", 1), Var("b")))))


def test_antipode_formula():
    assert parse_expr("S(h_(1)).h_(2)") == Mul((Antipode(Leg("h", 1)), Leg("h", 2)))


def test_leg_gap():
    with pytest.raises(LegGapError):
        parse_expr("e_(0) (x) e_(2)")


def test_undeclared_variable_position():
    with pytest.raises(UndeclaredVariable) as info:
        parse_expr("e_(0) (x) z", {"e": "E"})
    assert info.value.pos == len("e_(0) (x) ")


@pytest.mark.parametrize("bad", ["e_(", "(x) e", "e (x)", "[q", "e |>", "e_(0) (x) (m"])
def test_syntax_errors(bad):
    with pytest.raises(ParseError):
        parse_expr(bad)


def test_grouplike_coproduct():
    g = KC2.e(KC2.index("g"))
    got = eval_expr("e_(0) (x) e_(1)", {"e": g})
    assert got == TensorElement((KC2, KC2), {(1, 1): 1})


def test_h4_coproduct_of_x():
    x = H4.e(H4.index("x"))
    got = eval_expr("h_(1) (x) h_(2)", {"h": x})
    assert got == parse_element("x (x) 1 + g (x) x", (H4, H4))


def test_antipode_axiom_on_grouplike():
    g = KC2.e(KC2.index("g"))
    got = eval_expr("S(h_(1)).h_(2)", {"h": g})
    assert got == TensorElement((KC2,), {(0,): 1})


def test_scalars_in_elements():
    t = parse_element("[q^-1]*g (x) g - 2*1 (x) g", (KC2, KC2))
    assert t.coeffs == {(1, 1): Scalar.q_power(-1), (0, 1): Scalar(-2)}


h4_elements = st.lists(st.integers(-3, 3), min_size=4, max_size=4).map(
    lambda v: H4.element([Scalar(c) for c in v]))


@given(h4_elements)
def test_antipode_axiom_everywhere(h):
    got = eval_expr("S(h_(1)).h_(2)", {"h": h}, target=(H4,))
    eps = sum((c * H4.counit[i] for i, c in enumerate(h.coeffs)), Scalar(0))
    expected = TensorElement((H4,), {(0,): eps})
    assert got == expected


@given(h4_elements)
def test_coassociativity_via_legs(h):
    # three legs are computed as (id (x) Delta) Delta; compare with (Delta (x) id) Delta
    three = eval_expr("h_(1) (x) h_(2) (x) h_(3)", {"h": h}, target=(H4, H4, H4))
    two = eval_expr("h_(1) (x) h_(2)", {"h": h}, target=(H4, H4))
    other = {}
    for (a, b), c in two.coeffs.items():
        for (x, y), d in H4.comult[a].items():
            other[(x, y, b)] = other.get((x, y, b), Scalar(0)) + c * d
    assert three.coeffs == {k: v for k, v in other.items() if v}


names = st.sampled_from(["e", "m", "b", "x"])
leaf = st.one_of(names.map(Var), st.integers(1, 3).map(lambda n: Const(Scalar(n))))


def _nodes(children):
    return st.one_of(
        st.lists(children, min_size=2, max_size=3).map(lambda xs: Mul(tuple(xs))),
        st.lists(children, min_size=2, max_size=3).map(lambda xs: Add(tuple(xs))),
        children.map(Antipode),
    )


@given(st.recursive(leaf, _nodes, max_leaves=6))
def test_print_parse_round_trip(node):
    text = to_text(node)
    again = parse_expr(text)
    assert to_text(again) == text
