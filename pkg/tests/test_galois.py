import pytest
import sympy

from hopfkit.actions.presets import comodule_algebra, module_algebra
from hopfkit.algebra.core import unit_vector
from hopfkit.fpalg import graded_quantum_plane
from hopfkit.galois import (
    Verdict, canonical_map, coinvariants, cover_certificate, local_triviality_report,
    smash_product,
)
from hopfkit.reports import Status

from oracles import sl2_big_cell_coinvariant


@pytest.mark.parametrize("name,expected", [
    ("kc2", ["1"]), ("h4", ["1"]), ("e0_kc2", ["1"]), ("e0_trivial", ["1", "x"]),
])
def test_coinvariants(name, expected):
    U = coinvariants(comodule_algebra(name))
    assert U.names() == expected
    assert U.closed


def test_fp_coinvariants_quantum_plane():
    U = coinvariants(graded_quantum_plane(4), 4)
    assert U.names() == ["1"]


def test_canonical_map_kc2_is_a_permutation():
    rep = canonical_map(comodule_algebra("kc2"))
    assert rep.verdict is Verdict.BIJECTIVE
    for line in list(rep.matrix) + list(zip(*rep.matrix)):
        assert [x for x in line if x] == [1]


def test_canonical_map_e0_not_injective():
    rep = canonical_map(comodule_algebra("e0_kc2"))
    assert rep.verdict is Verdict.NOT_INJECTIVE
    assert rep.status is Status.FAIL
    assert rep.kernel_witness == "x (x) x"


def test_canonical_map_h4_bijective():
    rep = canonical_map(comodule_algebra("h4"))
    assert rep.verdict is Verdict.BIJECTIVE
    assert rep.domain_dim == rep.codomain_dim == rep.rank == 16


def test_canonical_map_trivial_coaction_not_surjective():
    rep = canonical_map(comodule_algebra("e0_trivial"))
    assert rep.verdict is Verdict.NOT_SURJECTIVE
    assert rep.cokernel_witness is not None


def test_smash_product():
    sp = smash_product(module_algebra("e0_sign"))
    P = sp.algebra
    u = lambda n: unit_vector(P.dim, P.basis.index(n))
    # (x#g)(x#1) = x (g|>x) # g = -x^2 # g = 0
    assert not any(P.mul_vec(u("x#g"), u("x#1")))
    assert P.mul_vec(u("1#g"), u("x#1")) == [0, 0, 0, -1]
    assert sp.check().status is Status.PASS


def test_smash_product_is_galois_over_a():
    sp = smash_product(module_algebra("e0_sign"))
    assert coinvariants(sp.comodule_algebra).names() == ["1#1", "x#1"]
    assert canonical_map(sp.comodule_algebra).verdict is Verdict.BIJECTIVE


def _to_sympy(text, syms):
    text = text.replace("[", "(").replace("]", ")").replace("^", "**").replace(".", "*")
    return sympy.sympify(text, locals=syms)


def _borel_invariant(expr, syms):
    a, b, c, d = (syms[k] for k in "abcd")
    al, be = sympy.symbols("alpha beta")
    # right multiplication by [[alpha, beta], [0, 1/alpha]]
    moved = expr.subs({a: a * al, b: a * be + b / al, c: c * al, d: c * be + d / al},
                      simultaneous=True)
    return sympy.cancel(moved - expr) == 0


@pytest.fixture(scope="module")
def classical():
    return local_triviality_report(D=4, commutative=True)


def test_classical_charts_pass(classical):
    assert classical.status is Status.PASS
    assert classical.cover["certificate"] == "1 = (d).a + (-b).c"


def test_classical_coinvariants_against_oracle(classical):
    syms = {k: sympy.Symbol(k) for k in "abcd"}
    a, b, c, d = (syms[k] for k in "abcd")
    assert _borel_invariant(sl2_big_cell_coinvariant(a, b, c, d), syms)
    for chart in classical.charts:
        assert len(chart.coinvariants) >= 2
        for u in chart.coinvariants:
            assert _borel_invariant(_to_sympy(u, syms), syms), u
    on_a = [_to_sympy(u, syms) for u in classical.charts[0].coinvariants]
    assert sympy.cancel(on_a[1] - sl2_big_cell_coinvariant(a, b, c, d)) == 0


def test_classical_decomposition(classical):
    chart = classical.charts[0]
    assert chart.decomposition["c"] == "[1]*(a^-1*(c))#a"
    assert chart.decomposition["d"] == "[1]*(1)#d + [1]*(a^-1*(c))#b"


def test_quantum_torsor():
    rep = local_triviality_report(D=4)
    assert rep.status is Status.PASS
    a_chart = rep.charts[0]
    assert "a^-1*(c)" in a_chart.coinvariants
    assert a_chart.laws["canonical_map_injective"].status is Status.PASS


def test_cover_certificate_needs_both_charts(classical):
    from hopfkit.fpalg import o_slq2
    assert cover_certificate(o_slq2(4), ("a",)) is None
