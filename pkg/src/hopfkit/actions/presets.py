"""Named finite comodule algebras, module algebras and Hopf modules, plus random ones.

Random instances are the named scaffolds rewritten in a random basis, so every
instance is valid by construction while its structure constants look generic.
"""

from __future__ import annotations

import random

from ..algebra.presets import (
    dual_group_algebra_c2, dual_numbers, ground_field, group_algebra_c2, sweedler_h4,
)
from ..exactfield import Scalar
from ..linalg import matmul
from .modules import (
    ComoduleAlgebra, LeftModule, ModuleAlgebra, RightComodule, adjoint_action, character_module,
    comodule_direct_sum, direct_sum, free_hopf_module, grouplike_comodule, regular_coaction,
    regular_comodule, regular_hopf_module, transport_comodule, transport_comodule_algebra,
    transport_module, transport_module_algebra, trivial_action, trivial_coaction,
    trivial_comodule, trivial_module,
)


class UnknownInstance(KeyError):
    pass


_HOPF = {"k": ground_field, "kc2": group_algebra_c2, "kc2_dual": dual_group_algebra_c2,
         "h4": sweedler_h4}


def hopf(name):
    return _HOPF[name]()


# -- comodule algebras --------------------------------------------------------------

def _e0_kc2():
    E, B = dual_numbers(), group_algebra_c2()
    return ComoduleAlgebra.from_formulas(E, B, {"x": "x (x) g"}, name="E0 over kC2")


def _e0_kc2_dual():
    # p1 - pg is group-like; this is the sign action of C2 read as a coaction
    E, B = dual_numbers(), dual_group_algebra_c2()
    return ComoduleAlgebra.from_formulas(E, B, {"1": "1 (x) p1 + 1 (x) pg",
                                                "x": "x (x) p1 - x (x) pg"},
                                         name="E0 over k^C2")


def _e0_h4():
    # span{1, gx} inside H4 is a subcomodule algebra isomorphic to E0
    E, B = dual_numbers(var="y"), sweedler_h4()
    return ComoduleAlgebra.from_formulas(E, B, {"y": "y (x) g + 1 (x) gx"}, name="E0 over H4")


def _kc2_h4():
    E, B = group_algebra_c2(), sweedler_h4()
    return ComoduleAlgebra.from_formulas(E, B, {"g": "g (x) g"}, name="kC2 over H4")


def _regular(h):
    return lambda: regular_coaction(hopf(h))


def _trivial(e, h):
    return lambda: trivial_coaction(e(), hopf(h), name=f"{e().name} trivially over {hopf(h).name}")


COMODULE_ALGEBRAS = {
    "k": _regular("k"),
    "kc2": _regular("kc2"),
    "kc2_dual": _regular("kc2_dual"),
    "h4": _regular("h4"),
    "e0_kc2": _e0_kc2,
    "e0_kc2_dual": _e0_kc2_dual,
    "e0_h4": _e0_h4,
    "kc2_h4": _kc2_h4,
    "e0_trivial": _trivial(dual_numbers, "kc2"),
    "e0_trivial_h4": _trivial(dual_numbers, "h4"),
}


def comodule_algebra(name):
    try:
        return COMODULE_ALGEBRAS[name]()
    except KeyError:
        raise UnknownInstance(f"unknown comodule algebra {name!r}; known: "
                              f"{sorted(COMODULE_ALGEBRAS)}") from None


# -- module algebras -----------------------------------------------------------------

def _e0_sign():
    return ModuleAlgebra.from_formulas(dual_numbers(), group_algebra_c2(), {"g|>x": "-x"},
                                       name="E0 with g|>x = -x")


def _e0_graded():
    A, B = dual_numbers(), dual_group_algebra_c2()
    return ModuleAlgebra.from_formulas(A, B, {"p1|>1": "1", "p1|>x": "0", "pg|>1": "0",
                                              "pg|>x": "x"}, name="E0 graded by C2")


def _kc2_dual_swap():
    A, B = dual_group_algebra_c2(), group_algebra_c2()
    return ModuleAlgebra.from_formulas(A, B, {"g|>p1": "pg", "g|>pg": "p1"},
                                       name="k^C2 with C2 translating")


def _e0_h4_action():
    A, B = dual_numbers(var="y"), sweedler_h4()
    return ModuleAlgebra.from_formulas(A, B, {"g|>y": "-y", "x|>1": "0", "x|>y": "1",
                                              "gx|>1": "0", "gx|>y": "1"},
                                       name="E0 with g|>y = -y, x|>y = 1")


MODULE_ALGEBRAS = {
    "e0_sign": _e0_sign,
    "e0_graded": _e0_graded,
    "kc2_dual_swap": _kc2_dual_swap,
    "e0_h4": _e0_h4_action,
    "kc2_adjoint": lambda: adjoint_action(group_algebra_c2()),
    "h4_adjoint": lambda: adjoint_action(sweedler_h4()),
    "e0_trivial": lambda: trivial_action(dual_numbers(), group_algebra_c2()),
    "e0_trivial_h4": lambda: trivial_action(dual_numbers(), sweedler_h4()),
}


def module_algebra(name):
    try:
        return MODULE_ALGEBRAS[name]()
    except KeyError:
        raise UnknownInstance(f"unknown module algebra {name!r}; known: "
                              f"{sorted(MODULE_ALGEBRAS)}") from None


# -- Hopf modules ---------------------------------------------------------------------

def hopf_module(name):
    """``regular:<comodule algebra>`` or ``free:<comodule algebra>`` (E (x) B)."""
    kind, _, base = name.partition(":")
    EA = comodule_algebra(base or "kc2")
    if kind == "regular":
        return regular_hopf_module(EA)
    if kind == "free":
        return free_hopf_module(EA, regular_comodule(EA.B))
    raise UnknownInstance(f"unknown Hopf module {name!r}; use regular:<name> or free:<name>")


# -- small modules and comodules -----------------------------------------------------------

def small_modules(B):
    """Indecomposable-ish B-modules of dimension <= 2."""
    out = [trivial_module(B)]
    if B.name == "kC2":
        out.append(character_module(B, [1, -1], "sign"))
        out.append(LeftModule(B, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], ["v", "gv"], "kC2_reg"))
    elif B.name == "k^C2":
        out.append(character_module(B, [0, 1], "chi_g"))
    elif B.name == "H4":
        out.append(character_module(B, [1, -1, 0, 0], "sign"))
        # the left ideal spanned by x, gx
        out.append(LeftModule(B, [[[1, 0], [0, 1]], [[0, 1], [1, 0]], [[0, 0], [0, 0]],
                                  [[0, 0], [0, 0]]], ["x", "gx"], "H4x"))
    return out


def small_comodules(B):
    """B-comodules of dimension <= 2."""
    out = [trivial_comodule(B)]
    if B.name == "kC2":
        out.append(grouplike_comodule(B, 1))
        out.append(regular_comodule(B))
    elif B.name == "k^C2":
        out.append(regular_comodule(B))
    elif B.name == "H4":
        out.append(grouplike_comodule(B, 1))
        # span{g, x}: Delta(x) = x (x) 1 + g (x) x
        out.append(RightComodule(B, [{(0, 1): 1}, {(1, 0): 1, (0, 2): 1}], ["g", "x"], "H4gx"))
    return out


# -- random instances -------------------------------------------------------------------

def random_invertible(n, rng, spread=2):
    """A random integer matrix L U with unit diagonals, hence invertible."""
    L = [[Scalar(1 if i == j else (rng.randint(-spread, spread) if j < i else 0))
          for j in range(n)] for i in range(n)]
    U = [[Scalar(1 if i == j else (rng.randint(-spread, spread) if j > i else 0))
          for j in range(n)] for i in range(n)]
    return matmul(L, U)


COMODULE_SCAFFOLDS = ["kc2", "kc2_dual", "h4", "e0_kc2", "e0_kc2_dual", "e0_h4", "kc2_h4",
                      "e0_trivial", "e0_trivial_h4"]
MODULE_SCAFFOLDS = ["e0_sign", "e0_graded", "kc2_dual_swap", "e0_h4", "kc2_adjoint",
                    "h4_adjoint", "e0_trivial", "e0_trivial_h4"]


def _random_sum(pieces, rng, plus, cap=3):
    picked = rng.choice(pieces)
    while picked.dim < cap and rng.random() < 0.5:
        extra = rng.choice(pieces)
        if picked.dim + extra.dim > cap:
            break
        picked = plus(picked, extra)
    return picked


def random_module(B, rng, cap=3):
    M = _random_sum(small_modules(B), rng, direct_sum, cap)
    return transport_module(M, random_invertible(M.dim, rng), f"{M.name}~")


def random_comodule(B, rng, cap=3):
    Q = _random_sum(small_comodules(B), rng, comodule_direct_sum, cap)
    return transport_comodule(Q, random_invertible(Q.dim, rng), f"{Q.name}~")


def random_comodule_algebra(rng):
    name = rng.choice(COMODULE_SCAFFOLDS)
    EA = comodule_algebra(name)
    P = random_invertible(EA.E.dim, rng)
    return transport_comodule_algebra(EA, P, name=f"{EA.name} in a random basis")


def random_module_algebra(rng):
    name = rng.choice(MODULE_SCAFFOLDS)
    MA = module_algebra(name)
    P = random_invertible(MA.A.dim, rng)
    return transport_module_algebra(MA, P, name=f"{MA.name} in a random basis")


def random_instances(kind, count, seed=0, modules=2):
    """``count`` (instance, test objects) pairs; kind is "comodule" or "module"."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        if kind == "comodule":
            X = random_comodule_algebra(rng)
            objs = [random_module(X.B, rng) for _ in range(modules)]
        elif kind == "module":
            X = random_module_algebra(rng)
            objs = [random_comodule(X.B, rng) for _ in range(modules)]
        else:
            raise ValueError(f"kind must be 'comodule' or 'module', not {kind!r}")
        out.append((X, objs))
    return out


__all__ = [
    "COMODULE_ALGEBRAS", "COMODULE_SCAFFOLDS", "MODULE_ALGEBRAS", "MODULE_SCAFFOLDS",
    "UnknownInstance", "comodule_algebra", "hopf", "hopf_module", "module_algebra",
    "random_comodule", "random_comodule_algebra", "random_instances", "random_invertible",
    "random_module", "random_module_algebra", "small_comodules", "small_modules",
]
