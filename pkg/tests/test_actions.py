import pytest
from hypothesis import given, settings, strategies as st

from hopfkit.actions import (
    AlgebraMap, CocycleFail, CompatibilityFail, ComoduleAlgebra, RelativeHopfModule,
    character_module, check_cocycle, check_comodule_algebra, check_hopf_module,
    check_left_module, check_module_algebra, check_right_comodule, coborel, comonad_G,
    extension_of_scalars, g_comodule_to_hopf, grouplike_comodule, hopf_to_G_comodule,
    hopf_to_simplicial_module, identity_map, regular_coaction, regular_hopf_module,
    regular_module, rho_from_theta, theta_from_rho, trivial_coaction, trivial_comodule,
    trivial_module,
)
from hopfkit.actions.presets import (
    COMODULE_ALGEBRAS, MODULE_ALGEBRAS, comodule_algebra, hopf_module, module_algebra,
    random_instances, small_comodules, small_modules,
)
from hopfkit.algebra import dual_numbers, ground_field, group_algebra_c2, sweedler_h4
from hopfkit.reports import Status


def test_e0_coaction_is_comodule_algebra():
    rep = check_comodule_algebra(comodule_algebra("e0_kc2"))
    assert rep.status is Status.PASS


def test_x_tensor_one_plus_one_tensor_g_is_rejected():
    E, B = dual_numbers(), group_algebra_c2()
    EA = ComoduleAlgebra.from_formulas(E, B, {"x": "x (x) 1 + 1 (x) g"})
    rep = check_comodule_algebra(EA)
    assert rep.status is Status.FAIL
    assert "multiplicative" in [r.law for r in rep.failures()]


@pytest.mark.parametrize("name", sorted(COMODULE_ALGEBRAS))
def test_named_comodule_algebras(name):
    assert check_comodule_algebra(comodule_algebra(name)).status is Status.PASS


@pytest.mark.parametrize("name", sorted(MODULE_ALGEBRAS))
def test_named_module_algebras(name):
    assert check_module_algebra(module_algebra(name)).status is Status.PASS


@pytest.mark.parametrize("name", ["regular:kc2", "regular:e0_kc2", "free:e0_h4", "regular:h4"])
def test_named_hopf_modules(name):
    assert check_hopf_module(hopf_module(name)).status is Status.PASS


@pytest.mark.parametrize("B", [group_algebra_c2(), sweedler_h4()], ids=["kc2", "h4"])
def test_small_pieces_are_valid(B):
    for M in small_modules(B):
        assert check_left_module(M).status is Status.PASS, M.name
    for Q in small_comodules(B):
        assert check_right_comodule(Q).status is Status.PASS, Q.name


# -- extension of scalars -------------------------------------------------------------

def test_extension_along_identity_is_identity():
    E = dual_numbers()
    ext = extension_of_scalars(identity_map(E), regular_module(E))
    assert ext.dim == E.dim


def test_extension_along_counit():
    B, k = group_algebra_c2(), ground_field()
    eps = AlgebraMap(B, k, [{0: 1}, {0: 1}], "eps")
    # k (x)_B sign: 1 (x) v = 1 (x) g.g.v forces 2v = 0
    assert extension_of_scalars(eps, character_module(B, [1, -1])).dim == 0
    assert extension_of_scalars(eps, trivial_module(B)).dim == 1


def test_extension_along_p_is_free():
    EA = comodule_algebra("e0_kc2")
    cob = coborel(EA, 1)
    p = cob.coface(0, 1)
    ext = extension_of_scalars(p, regular_module(EA.E))
    assert ext.dim == EA.E.dim * EA.B.dim


# -- the comonad G ----------------------------------------------------------------------

def test_comonad_over_ground_field_is_trivial():
    EA = trivial_coaction(ground_field(), ground_field())
    G = comonad_G(EA)
    M = regular_module(EA.E)
    assert G.apply(M).dim == 1
    assert G.self_check([M]).status is Status.PASS


def test_comonad_e0_action():
    G = comonad_G(comodule_algebra("e0_kc2"))
    GM = G.apply(regular_module(G.E))
    # x.(1 (x) 1) = x (x) g
    col = [row[GM.basis.index("1(x)1")] for row in GM.action[G.E.index("x")]]
    assert col[GM.basis.index("x(x)g")] == 1
    assert sum(1 for c in col if c) == 1
    assert G.self_check([regular_module(G.E)]).status is Status.PASS


def test_corrupted_comultiplication_breaks_comonad():
    H = sweedler_h4()
    # Delta o S in place of Delta
    bad = [H.comul_vec([H.antipode[r][i] for r in range(H.dim)]) for i in range(H.dim)]
    rep = comonad_G(regular_coaction(H), comult=bad).self_check([regular_module(H)])
    assert rep.status is Status.FAIL
    assert rep["coassociative"].status is Status.FAIL


@pytest.mark.parametrize("name", ["regular:e0_kc2", "regular:h4", "free:e0_kc2_dual"])
def test_hopf_module_g_comodule_round_trip(name):
    N = hopf_module(name)
    C = hopf_to_G_comodule(N)
    assert C.check().status is Status.PASS
    N2 = g_comodule_to_hopf(C)
    assert check_hopf_module(N2).status is Status.PASS
    assert N2.comod.coaction == N.comod.coaction
    assert N2.mod.action == N.mod.action


def _broken_e0():
    EA = comodule_algebra("e0_kc2")
    N = regular_hopf_module(EA)
    return RelativeHopfModule(EA, N.mod, trivial_comodule(EA.B, 2), "broken")


def test_incompatible_module_is_not_a_g_comodule():
    with pytest.raises(CompatibilityFail):
        hopf_to_G_comodule(_broken_e0())


# -- theta --------------------------------------------------------------------------------

def test_theta_e0():
    N = regular_hopf_module(comodule_algebra("e0_kc2"))
    th = theta_from_rho(N)
    # theta[1 (x) 1 (x) x] = [1 (x) g (x) x]; y indexes E (x) B as e * dim B + b
    assert th.apply_class(0, N.mod.index("x")) == th.target.cls(1, N.mod.index("x"))
    assert check_cocycle(th).status is Status.PASS


def test_theta_trivial_is_identity():
    EA = trivial_coaction(dual_numbers(), group_algebra_c2())
    N = RelativeHopfModule(EA, regular_module(EA.E), trivial_comodule(EA.B, 2), "E0")
    th = theta_from_rho(N)
    for y in range(th.source.module.over.dim):
        for m in range(N.mod.dim):
            assert th.apply_class(y, m) == th.target.cls(y, m)


def test_theta_sign_graded():
    B = group_algebra_c2()
    EA = trivial_coaction(ground_field(), B)
    N = RelativeHopfModule(EA, trivial_module(EA.E), grouplike_comodule(B, 1), "v")
    th = theta_from_rho(N)
    # multiplies the B leg by g: [1 (x) b (x) v] -> [1 (x) bg (x) v]
    for b in range(2):
        assert th.apply_class(b, 0) == th.target.cls(1 - b, 0)


@pytest.mark.parametrize("name", ["regular:e0_kc2", "regular:h4", "regular:e0_h4"])
def test_rho_theta_round_trip(name):
    N = hopf_module(name)
    back = rho_from_theta(theta_from_rho(N))
    assert back.comod.coaction == N.comod.coaction


def test_scaled_theta_is_not_a_cocycle():
    th = theta_from_rho(regular_hopf_module(comodule_algebra("e0_kc2")))
    bad = th.scaled(0, 2)
    assert check_cocycle(bad).status is Status.FAIL
    with pytest.raises(CocycleFail):
        rho_from_theta(bad)


# -- coborel and simplicial modules ---------------------------------------------------------

def test_coborel_level_zero():
    EA = comodule_algebra("e0_kc2")
    cob = coborel(EA, 0)
    assert cob.level(0).dim == EA.E.dim
    assert cob.check().status is Status.PASS


def test_coborel_kc2_cofaces_differ():
    cob = coborel(regular_coaction(group_algebra_c2()), 1)
    d0, d1 = cob.coface(0, 0), cob.coface(0, 1)
    assert d0.columns[1] != d1.columns[1]
    # d0 = Delta, d1 = id (x) 1
    assert d0.columns[1] == {3: 1}
    assert d1.columns[1] == {2: 1}


@pytest.mark.parametrize("name", ["e0_kc2", "kc2", "e0_kc2_dual"])
def test_cosimplicial_identities(name):
    assert coborel(comodule_algebra(name), 2).check().status is Status.PASS


def test_simplicial_trivial():
    EA = trivial_coaction(dual_numbers(), group_algebra_c2())
    N = RelativeHopfModule(EA, regular_module(EA.E), trivial_comodule(EA.B, 2), "E0")
    assert hopf_to_simplicial_module(N, 2).check().status is Status.PASS


def test_simplicial_e0():
    N = regular_hopf_module(comodule_algebra("e0_kc2"))
    assert hopf_to_simplicial_module(N, 2).check().status is Status.PASS


def test_simplicial_broken_compatibility():
    rep = hopf_to_simplicial_module(_broken_e0(), 2, check=False).check()
    assert rep.status is Status.FAIL
    assert rep["beta_linear"].status is Status.FAIL


# -- random instances -------------------------------------------------------------------------

@settings(max_examples=15)
@given(st.integers(0, 10**6))
def test_random_comodule_instances_are_valid(seed):
    [(EA, mods)] = random_instances("comodule", 1, seed=seed)
    assert check_comodule_algebra(EA).status is Status.PASS
    for M in mods:
        assert check_left_module(M).status is Status.PASS


@settings(max_examples=15)
@given(st.integers(0, 10**6))
def test_random_module_instances_are_valid(seed):
    [(MA, comods)] = random_instances("module", 1, seed=seed)
    assert check_module_algebra(MA).status is Status.PASS
    for Q in comods:
        assert check_right_comodule(Q).status is Status.PASS


def test_random_instances_are_reproducible():
    a = random_instances("comodule", 3, seed=7)
    b = random_instances("comodule", 3, seed=7)
    assert [X.rho for X, _ in a] == [X.rho for X, _ in b]
