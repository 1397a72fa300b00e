"""Named presentations.

Relations of O(SL_q(2)): ab = q ba, ac = q ca, bd = q db, cd = q dc, bc = cb,
ad - da = (q - q^-1) bc, ad = 1 + q bc.  Generators are ranked b < c < a < d
so that every relation except ad = 1 + q bc has a descending lhs; the normal
monomials are b^j c^k a^i and b^j c^k d^l.
"""

from __future__ import annotations

from ..linalg import siadd
from .core import FPComoduleAlgebra, GeneratorMap, NFTensor, PresentedAlgebra
from ..algebra.presets import UnknownPreset


def quantum_plane(bound=None):
    """k<x, y>/(xy = q yx); rule y.x -> q^-1 x.y."""
    return PresentedAlgebra("quantum_plane", ["x", "y"], [("y x", "[q^-1]*x.y")], bound=bound)


def quantum_plane_commutative(bound=None):
    return PresentedAlgebra("k[x,y]", ["x", "y"], [("y x", "x.y")], bound=bound, field="Q")


_SL_RULES = [
    ("a b", "[q]*b.a"),
    ("a c", "[q]*c.a"),
    ("d b", "[q^-1]*b.d"),
    ("d c", "[q^-1]*c.d"),
    ("c b", "b.c"),
    ("d a", "1 + [q^-1]*b.c"),
    ("a d", "1 + [q]*b.c"),
]

_MATRIX_COMULT = {
    "a": "a (x) a + b (x) c",
    "b": "a (x) b + b (x) d",
    "c": "c (x) a + d (x) c",
    "d": "c (x) b + d (x) d",
}


def o_slq2(bound=None, ad_rule=None):
    """O(SL_q(2)) with matrix coproduct; ``ad_rule`` replaces the rhs of a.d (negative controls)."""
    rules = [(l, ad_rule if l == "a d" and ad_rule is not None else r) for l, r in _SL_RULES]
    A = PresentedAlgebra("o_slq2", ["a", "b", "c", "d"], rules, order=["b", "c", "a", "d"],
                         bound=bound)
    return A.set_hopf(_MATRIX_COMULT, {"a": "1", "b": "0", "c": "0", "d": "1"},
                      {"a": "d", "b": "[-q^-1]*b", "c": "[-q]*c", "d": "a"})


def _at_q1(text):
    for a, b in (("[-q^-1]*", "[-1]*"), ("[-q]*", "[-1]*"), ("[q^-1]*", ""), ("[q]*", "")):
        text = text.replace(a, b)
    return text


def o_slq2_commutative(bound=None):
    """q = 1: the coordinate ring of SL_2 with its Hopf structure."""
    rules = [(l, _at_q1(r)) for l, r in _SL_RULES]
    A = PresentedAlgebra("k[SL2]", ["a", "b", "c", "d"], rules, order=["b", "c", "a", "d"],
                         bound=bound, field="Q")
    return A.set_hopf(_MATRIX_COMULT, {"a": "1", "b": "0", "c": "0", "d": "1"},
                      {"a": "d", "b": "[-1]*b", "c": "[-1]*c", "d": "a"})


def borel_b2_commutative(bound=None):
    """q = 1: functions on the upper triangular matrices of determinant 1."""
    A = PresentedAlgebra("k[B2]", ["a", "b", "d"],
                         [("a b", "b.a"), ("d b", "b.d"), ("a d", "1"), ("d a", "1")],
                         order=["b", "a", "d"], bound=bound, field="Q")
    return A.set_hopf({"a": "a (x) a", "b": "a (x) b + b (x) d", "d": "d (x) d"},
                      {"a": "1", "b": "0", "d": "1"},
                      {"a": "d", "b": "[-1]*b", "d": "a"})


def o_glq2(bound=None):
    """O(GL_q(2)) with the quantum determinant D = ad - q bc and its inverse t as central generators."""
    gens = ["a", "b", "c", "d", "D", "t"]
    rules = [(l, r.replace("1 + ", "D + ")) for l, r in _SL_RULES]
    for z in ("D", "t"):
        rules += [(f"{z} {g}", f"{g}.{z}") for g in "abcd"]
    rules += [("t D", "1"), ("D t", "1")]
    A = PresentedAlgebra("o_glq2", gens, rules, order=["b", "c", "a", "d", "D", "t"], bound=bound)
    comult = dict(_MATRIX_COMULT, D="D (x) D", t="t (x) t")
    return A.set_hopf(comult, {"a": "1", "b": "0", "c": "0", "d": "1", "D": "1", "t": "1"},
                      {"a": "d.t", "b": "[-q^-1]*b.t", "c": "[-q]*c.t", "d": "a.t",
                       "D": "t", "t": "D"})


def group_algebra_Zn(n=2, bound=None):
    """k[Z^n] on z1..zn and w1..wn, where wi stands for zi^-1."""
    gens = []
    for i in range(1, n + 1):
        gens += [f"z{i}", f"w{i}"]
    rules = []
    for i, x in enumerate(gens):
        for y in gens[:i]:
            if x[1:] == y[1:]:
                rules += [(f"{x} {y}", "1"), (f"{y} {x}", "1")]
            else:
                rules.append((f"{x} {y}", f"{y}.{x}"))
    A = PresentedAlgebra(f"k[Z^{n}]", gens, rules, bound=bound, field="Q")
    return A.set_hopf({g: f"{g} (x) {g}" for g in gens}, {g: "1" for g in gens},
                      {g: ("w" if g[0] == "z" else "z") + g[1:] for g in gens})


def borel_bq2(bound=None):
    """O(SL_q(2))/(c): generators b, a, d with ad = da = 1 and ab = q ba."""
    A = PresentedAlgebra("borel_bq2", ["a", "b", "d"],
                         [("a b", "[q]*b.a"), ("d b", "[q^-1]*b.d"), ("a d", "1"), ("d a", "1")],
                         order=["b", "a", "d"], bound=bound)
    return A.set_hopf({"a": "a (x) a", "b": "a (x) b + b (x) d", "d": "d (x) d"},
                      {"a": "1", "b": "0", "d": "1"},
                      {"a": "d", "b": "[-q^-1]*b", "d": "a"})


def monoid_N(bound=None):
    """k[t], the monoid bialgebra of (N, +): t group-like and no antipode."""
    A = PresentedAlgebra("k[N]", ["t"], [], bound=bound, field="Q")
    return A.set_hopf({"t": "t (x) t"}, {"t": "1"})


def regular_fp_coaction(H):
    """H over itself by its comultiplication."""
    return FPComoduleAlgebra(H, H, H.comult, name=f"({H.name}, Delta)")


def borel_projection(E, B):
    """pi: O(SL_q(2)) -> B_q, c -> 0."""
    return GeneratorMap(E, (B,), {"a": B.element("a"), "b": B.element("b"),
                                  "c": B.zero(), "d": B.element("d")}, name="pi")


def borel_coaction(E=None, B=None):
    """rho = (id (x) pi) Delta on O(SL_q(2))."""
    E = E or o_slq2()
    B = B or borel_bq2(E.bound)
    pi = borel_projection(E, B)
    images = {}
    for g in E.generators:
        out = {}
        for (u, v), c in E.comult.apply_word((E.gen(g),)).items():
            for (w,), x in pi.apply_word(v).items():
                siadd(out, {(u, w): c * x})
        images[g] = NFTensor((E, B), out)
    rho = GeneratorMap(E, (E, B), images, name="rho")
    EA = FPComoduleAlgebra(E, B, rho, name=f"{E.name} over {B.name}")
    EA.projection = pi
    return EA


def graded_quantum_plane(bound=None):
    """The quantum plane as a k[Z^2]-comodule algebra: rho(x) = x (x) z1, rho(y) = y (x) z2."""
    E = quantum_plane(bound)
    B = group_algebra_Zn(2, bound)
    return FPComoduleAlgebra(E, B, {"x": "x (x) z1", "y": "y (x) z2"}, name="graded quantum plane")


def trivial_fp_coaction(E, B):
    return FPComoduleAlgebra(E, B, {g: f"{g} (x) 1" for g in E.generators},
                             name=f"{E.name} trivially over {B.name}")


def smash(bound=None):
    """k[u] # B_q with a |> u = q u, d |> u = q^-1 u, b |> u = 0.

    The relations (1#h)(u#1) = (h_(1) |> u) # h_(2) read a.u = q u.a,
    d.u = q^-1 u.d and b.u = q u.b.
    """
    A = PresentedAlgebra("smash", ["u", "b", "a", "d"],
                         [("a b", "[q]*b.a"), ("d b", "[q^-1]*b.d"), ("a d", "1"), ("d a", "1"),
                          ("b u", "[q]*u.b"), ("a u", "[q]*u.a"), ("d u", "[q^-1]*u.d")],
                         order=["u", "b", "a", "d"], bound=bound)
    return A


def smash_coaction(bound=None):
    """id (x) Delta on k[u] # B_q."""
    E = smash(bound)
    B = borel_bq2(bound)
    return FPComoduleAlgebra(E, B, {"u": "u (x) 1", "a": "a (x) a", "b": "a (x) b + b (x) d",
                                    "d": "d (x) d"}, name="k[u] # B_q")


FP_PRESETS = {
    "quantum_plane": quantum_plane,
    "o_slq2": o_slq2,
    "o_glq2": o_glq2,
    "group_algebra_Zn": group_algebra_Zn,
    "borel_bq2": borel_bq2,
    "smash": smash,
    "monoid_N": monoid_N,
}


def fp_preset(name, params=None):
    try:
        make = FP_PRESETS[name]
    except KeyError:
        raise UnknownPreset(name) from None
    return make(**(params or {}))
