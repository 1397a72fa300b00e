import sympy
from hypothesis import settings, strategies as st

from hopfkit.exactfield import Scalar

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

Q = sympy.Symbol("q")

small_ints = st.integers(min_value=-6, max_value=6)
polys = st.lists(small_ints, min_size=1, max_size=4).map(tuple)
nonzero_polys = polys.filter(lambda p: any(p))


@st.composite
def rationals(draw):
    return Scalar(draw(small_ints), draw(st.integers(min_value=1, max_value=6)))


@st.composite
def ratfuncs(draw):
    return Scalar.from_poly(draw(polys), draw(nonzero_polys))


scalars = st.one_of(rationals(), ratfuncs())


def to_sympy(s):
    """Independent oracle: the scalar as a sympy rational function of q."""
    if isinstance(s.num, int):
        return sympy.Rational(s.num, s.den)
    num = sum(c * Q**i for i, c in enumerate(s.num))
    den = sum(c * Q**i for i, c in enumerate(s.den))
    return sympy.cancel(num / den)


def same(s, expr):
    return sympy.cancel(sympy.together(to_sympy(s) - expr)) == 0


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
