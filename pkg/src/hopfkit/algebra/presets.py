"""Small Hopf algebras and algebras used throughout the test-suite and CLI."""

from __future__ import annotations

from ..exactfield import Tag
from .core import FinDimAlgebra, HopfAlgebra


def _table(basis, products):
    """Build a dense multiplication table from {(a, b): {c: coeff}} on names."""
    idx = {b: i for i, b in enumerate(basis)}
    n = len(basis)
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (a, b), out in products.items():
        for c, coeff in out.items():
            mult[idx[a]][idx[b]][idx[c]] = coeff
    return mult


def _comult(basis, terms):
    idx = {b: i for i, b in enumerate(basis)}
    return [{(idx[l], idx[r]): c for (l, r), c in terms[b].items()} for b in basis]


def _vectors(basis, images):
    idx = {b: i for i, b in enumerate(basis)}
    out = []
    for b in basis:
        v = [0] * len(basis)
        for c, coeff in images[b].items():
            v[idx[c]] = coeff
        out.append(v)
    return out


def ground_field(field=Tag.RATIONAL):
    """k as a one-dimensional Hopf algebra."""
    return HopfAlgebra(["1"], [[[1]]], [1], [{(0, 0): 1}], [1], [[1]],
                       field=field, name="k")


def group_algebra_c2(field=Tag.RATIONAL):
    """kC2 with basis 1, g."""
    basis = ["1", "g"]
    mult = _table(basis, {("1", "1"): {"1": 1}, ("1", "g"): {"g": 1},
                          ("g", "1"): {"g": 1}, ("g", "g"): {"1": 1}})
    comult = _comult(basis, {"1": {("1", "1"): 1}, "g": {("g", "g"): 1}})
    return HopfAlgebra(basis, mult, [1, 0], comult, [1, 1], [[1, 0], [0, 1]],
                       field=field, name="kC2")


def dual_group_algebra_c2(field=Tag.RATIONAL):
    """Functions on C2 with the idempotent basis p1 (at 1) and pg (at g)."""
    basis = ["p1", "pg"]
    mult = _table(basis, {("p1", "p1"): {"p1": 1}, ("pg", "pg"): {"pg": 1}})
    comult = _comult(basis, {"p1": {("p1", "p1"): 1, ("pg", "pg"): 1},
                             "pg": {("p1", "pg"): 1, ("pg", "p1"): 1}})
    return HopfAlgebra(basis, mult, [1, 1], comult, [1, 0], [[1, 0], [0, 1]],
                       field=field, name="k^C2")


def sweedler_h4(field=Tag.RATIONAL):
    """Sweedler's four-dimensional Hopf algebra on 1, g, x, gx."""
    basis = ["1", "g", "x", "gx"]
    prods = {}
    for b in basis:
        prods[("1", b)] = {b: 1}
        prods[(b, "1")] = {b: 1}
    prods.update({
        ("g", "g"): {"1": 1}, ("g", "x"): {"gx": 1}, ("g", "gx"): {"x": 1},
        ("x", "g"): {"gx": -1}, ("gx", "g"): {"x": -1},
    })
    mult = _table(basis, prods)
    comult = _comult(basis, {
        "1": {("1", "1"): 1},
        "g": {("g", "g"): 1},
        "x": {("x", "1"): 1, ("g", "x"): 1},
        "gx": {("gx", "g"): 1, ("1", "gx"): 1},
    })
    antipode = _vectors(basis, {"1": {"1": 1}, "g": {"g": 1},
                                "x": {"gx": -1}, "gx": {"x": 1}})
    return HopfAlgebra(basis, mult, [1, 0, 0, 0], comult, [1, 1, 0, 0], antipode,
                       field=field, name="H4")


def dual_numbers(field=Tag.RATIONAL, var="x"):
    """k[x]/(x^2)."""
    basis = ["1", var]
    mult = _table(basis, {("1", "1"): {"1": 1}, ("1", var): {var: 1},
                          (var, "1"): {var: 1}})
    return FinDimAlgebra(basis, mult, [1, 0], field=field, name=f"k[{var}]/({var}^2)")


def truncated_polynomial(n, field=Tag.RATIONAL, var="x"):
    """k[x]/(x^n) on 1, x, x2, ..."""
    basis = ["1"] + [var if i == 1 else f"{var}{i}" for i in range(1, n)]
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mult[i][j][i + j] = 1
    unit = [1] + [0] * (n - 1)
    return FinDimAlgebra(basis, mult, unit, field=field, name=f"k[{var}]/({var}^{n})")


HOPF_PRESETS = {
    "k": ground_field,
    "kc2": group_algebra_c2,
    "kc2_dual": dual_group_algebra_c2,
    "h4": sweedler_h4,
}

ALGEBRA_PRESETS = dict(HOPF_PRESETS, e0=dual_numbers)


class UnknownPreset(KeyError):
    pass


def preset(name, field=Tag.RATIONAL):
    try:
        return ALGEBRA_PRESETS[name.lower()](field=field)
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; known: {sorted(ALGEBRA_PRESETS)}") from None
