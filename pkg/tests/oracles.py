"""Hand-written models used as independent oracles.

Nothing here imports hopfkit structure constants; each model is built from
the defining relations only.
"""

from fractions import Fraction
from itertools import product


# Sweedler's H4 from g^2 = 1, x^2 = 0, xg = -gx, on monomials g^a x^b
H4_NAMES = {(0, 0): "1", (1, 0): "g", (0, 1): "x", (1, 1): "gx"}


def h4_mono_mul(m, n):
    (a, b), (c, d) = m, n
    if b + d > 1:
        return {}
    sign = -1 if (b and c) else 1
    return {((a + c) % 2, b + d): Fraction(sign)}


def h4_mul(u, v):
    out = {}
    for (m, x), (n, y) in product(u.items(), v.items()):
        for k, c in h4_mono_mul(m, n).items():
            out[k] = out.get(k, 0) + c * x * y
    return {k: c for k, c in out.items() if c}


def h4_tensor_mul(u, v):
    out = {}
    for ((m1, m2), x), ((n1, n2), y) in product(u.items(), v.items()):
        for k1, c1 in h4_mono_mul(m1, n1).items():
            for k2, c2 in h4_mono_mul(m2, n2).items():
                out[(k1, k2)] = out.get((k1, k2), 0) + c1 * c2 * x * y
    return {k: c for k, c in out.items() if c}


_DG = {((1, 0), (1, 0)): Fraction(1)}
_DX = {((0, 1), (0, 0)): Fraction(1), ((1, 0), (0, 1)): Fraction(1)}
_ONE2 = {((0, 0), (0, 0)): Fraction(1)}


def h4_comul_mono(m):
    a, b = m
    out = dict(_ONE2)
    for _ in range(a):
        out = h4_tensor_mul(out, _DG)
    for _ in range(b):
        out = h4_tensor_mul(out, _DX)
    return out


def h4_antipode_mono(m):
    # S(g^a x^b) = S(x)^b S(g)^a with S(g) = g, S(x) = -gx
    a, b = m
    out = {(0, 0): Fraction(1)}
    for _ in range(b):
        out = h4_mul(out, {(1, 1): Fraction(-1)})
    for _ in range(a):
        out = h4_mul(out, {(1, 0): Fraction(1)})
    return out


# the quantum plane y x = q^-1 x y, with q a sympy symbol, on monomials x^i y^j
def qplane_mono_mul(m, n, q):
    (i, j), (k, l) = m, n
    # y^j x^k = q^(-jk) x^k y^j
    return (i + k, j + l), q ** (-j * k)


# O(SL_2) at q = 1: functions of a 2x2 matrix of determinant one
def sl2_big_cell_coinvariant(a, b, c, d):
    """The right B-invariant coordinate c/a on the chart a != 0."""
    return c / a
