import pytest
from hypothesis import given, settings, strategies as st

from hopfkit.actions import (
    character_module, regular_coaction, regular_hopf_module, regular_module, trivial_module,
)
from hopfkit.actions.presets import (
    comodule_algebra, module_algebra, random_instances, small_comodules, small_modules,
)
from hopfkit.algebra import sweedler_h4
from hopfkit.algebra.schema import algebra_from_json
from hopfkit.distlaw import (
    NoAntipode, Space, check_comonad_map, check_distlaw, check_inverse, check_lift,
    check_localized_comonad, check_localized_distlaw, comonad_morphism,
    distlaw_comodule_algebra, distlaw_module_algebra, invert_distlaw, lift_localization,
    localized_comonad, localized_distlaw, ore_setting, unit_setting,
)
from hopfkit.exactfield import ONE
from hopfkit.fpalg.presets import (
    borel_coaction, graded_quantum_plane, monoid_N, o_slq2, regular_fp_coaction,
)
from hopfkit.ore import NotCompatible, OreFraction, localize_coaction
from hopfkit.reports import Status


def _col(mat, j):
    return {i: row[j] for i, row in enumerate(mat) if row[j]}


# -- finite laws ------------------------------------------------------------------------

def test_e0_sign_component():
    EA = comodule_algebra("e0_kc2")
    l = distlaw_comodule_algebra(EA)
    Q = character_module(EA.B, [1, -1], "sign")
    mat = l.component(Space(1), Q)
    # x (x) (m (x) q) -> x (x) m (x) g|>q = -(x (x) m) (x) q
    assert _col(mat, 1) == {1: -1}
    assert _col(mat, 0) == {0: 1}


def test_trivial_module_gives_reassociation():
    EA = comodule_algebra("e0_kc2")
    l = distlaw_comodule_algebra(EA)
    mat = l.component(Space(2), trivial_module(EA.B))
    n = len(mat)
    assert mat == [[ONE if i == j else 0 for j in range(n)] for i in range(n)]


def test_module_algebra_component():
    MA = module_algebra("e0_sign")
    l = distlaw_module_algebra(MA)
    Q = small_comodules(MA.B)[1]          # k spanned by a g-grouplike vector
    mat = l.component(Space(1), Q)
    # x (x) (m (x) g) -> (g|>x (x) m) (x) g = (-x (x) m) (x) g
    assert _col(mat, 1) == {1: -1}
    assert _col(mat, 0) == {0: 1}


def test_module_algebra_unit_is_reassociation():
    l = distlaw_module_algebra(module_algebra("e0_sign"))
    B = l.B
    mat = l.component(Space(2), small_comodules(B)[2])
    # columns indexed by a = 1 are untouched
    for j in range(2 * 2):
        assert _col(mat, j) == {j: 1}


@pytest.mark.parametrize("name", ["e0_kc2", "e0_kc2_dual", "e0_h4", "h4", "kc2_h4"])
def test_comodule_laws_pass(name):
    EA = comodule_algebra(name)
    rep = check_distlaw(distlaw_comodule_algebra(EA), small_modules(EA.B))
    assert rep.status is Status.PASS, rep


@pytest.mark.parametrize("name", ["e0_sign", "e0_graded", "e0_h4", "h4_adjoint"])
def test_module_laws_pass(name):
    MA = module_algebra(name)
    rep = check_distlaw(distlaw_module_algebra(MA), small_comodules(MA.B))
    assert rep.status is Status.PASS, rep


def test_legs_swapped_control_fails():
    H = sweedler_h4()
    EA = regular_coaction(H)
    l = distlaw_comodule_algebra(EA, formula="e_(1) (x) m (x) e_(0) |> q")
    rep = check_distlaw(l, small_modules(H) + [regular_module(H)])
    assert rep.status is Status.FAIL


@settings(max_examples=8)
@given(st.integers(0, 10**6))
def test_random_comodule_laws(seed):
    [(EA, mods)] = random_instances("comodule", 1, seed=seed)
    assert check_distlaw(distlaw_comodule_algebra(EA), mods).status is Status.PASS


@settings(max_examples=8)
@given(st.integers(0, 10**6))
def test_random_module_laws(seed):
    [(MA, comods)] = random_instances("module", 1, seed=seed)
    assert check_distlaw(distlaw_module_algebra(MA), comods).status is Status.PASS


# -- localized laws -----------------------------------------------------------------------

def _suite(setting):
    l = localized_distlaw(setting)
    return [check_localized_distlaw(l), check_inverse(invert_distlaw(l)),
            check_localized_comonad(localized_comonad(l)),
            check_comonad_map(comonad_morphism(l)),
            check_lift(lift_localization(l), compare_rho_S=True)]


@pytest.fixture(scope="module")
def qplane():
    return ore_setting(localize_coaction(graded_quantum_plane(6), "x", 6))


def test_quantum_plane_component(qplane):
    l = localized_distlaw(qplane)
    H = qplane.modules[0]
    f = OreFraction(qplane.S, 1, {(): ONE})
    w1 = (qplane.CL.B.generators.index("w1"),)
    # x^-1 (x) (1.v (x) 1) -> (x^-1 . v) (x) z1^-1
    assert l.component(H, f, ((), 0), ()) == {(0, w1): f}


def test_quantum_plane_suite(qplane):
    for rep in _suite(qplane):
        assert rep.status is Status.PASS, rep


def test_sl_borel_suite():
    K = ore_setting(localize_coaction(borel_coaction(o_slq2(4)), "a", 4))
    for rep in _suite(K):
        assert rep.status is Status.PASS, rep


@pytest.mark.parametrize("name,units", [("e0_kc2", []), ("kc2", [1]), ("h4", [1]),
                                        ("e0_h4", [])])
def test_unit_localizations(name, units):
    EA = comodule_algebra(name)
    for rep in _suite(unit_setting(EA, units, [regular_hopf_module(EA)])):
        assert rep.status is Status.PASS, rep


def test_non_unit_rejected():
    with pytest.raises(ValueError):
        unit_setting(comodule_algebra("e0_kc2"), [1])


def _idempotent_monoid():
    return algebra_from_json({
        "basis": ["1", "e"], "mult": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "1"]]],
        "unit": ["1", "0"], "comult": [[[0, 0, "1"]], [[1, 1, "1"]]], "counit": ["1", "1"]})


def test_bialgebra_without_antipode():
    EA = regular_coaction(_idempotent_monoid())
    l = localized_distlaw(unit_setting(EA, [], [regular_hopf_module(EA)]))
    assert check_localized_distlaw(l).status is Status.PASS
    with pytest.raises(NoAntipode):
        invert_distlaw(l)


def test_monoid_generator_cannot_be_inverted():
    with pytest.raises(NotCompatible):
        localize_coaction(regular_fp_coaction(monoid_N(4)), "t", 4)


def test_corrupted_localized_comonad():
    l = localized_distlaw(unit_setting(comodule_algebra("h4"), [1]))
    rep = check_localized_comonad(localized_comonad(l, corrupt=True))
    assert rep.status is Status.FAIL
    assert rep["coassociative"].status is Status.FAIL


class _DoubledLift:
    def __init__(self, lift):
        self._lift, self.K, self.name = lift, lift.K, lift.name

    def act(self, H, h, t):
        return self._lift.act(H, h, t)

    def coact(self, H, t):
        return {k: H.cscale(x, 2) for k, x in self._lift.coact(H, t).items()}


@pytest.mark.parametrize("name", ["kc2_dual", "h4"])
def test_lift_matches_rho_s_is_not_vacuous(name):
    EA = comodule_algebra(name)
    K = unit_setting(EA, [], [regular_hopf_module(EA)])
    assert K.modules[0].unit_tm(K.one()) is not None
    lift = lift_localization(localized_distlaw(K))
    assert check_lift(lift, compare_rho_S=True).status is Status.PASS
    rep = check_lift(_DoubledLift(lift), compare_rho_S=True)
    assert rep["matches_rho_S"].status is Status.FAIL
