"""Coequivariant modules: the isomorphism theta: rho*M -> p*M and its cocycle.

Classes [y | m] live in explicit quotients of (E (x) B) (x) M.  With d0 = rho
and d1 = p from level 0 to level 1, and D0, D1, D2 the cofaces from level 1
to level 2, the cocycle compares two maps (D1 d0)*M -> (D2 d1)*M:

    top    = iso[D1, d1] . D1*(theta) . iso[D1, d0]^-1
    bottom = iso[D2, d1] . D2*(theta) . iso[D2, d0]^-1 . iso[D0, d1] . D0*(theta) . iso[D0, d0]^-1

using D1 d0 = D0 d0, D0 d1 = D2 d0 and D1 d1 = D2 d1.
"""

from __future__ import annotations

from ..exactfield import ONE, ZERO
from ..linalg import NonInvertible, identity, inverse, matmul, siadd
from ..reports import LawReport, Status
from .coborel import Coborel
from .extension import (
    ExtendedModule, ModuleMap, composition_iso, nat_iso, pullback_map,
)
from .modules import CompatibilityFail, RelativeHopfModule, RightComodule, hopf_compatibility_failure


class CocycleFail(ValueError):
    pass


class ExtCache:
    """Extensions of scalars keyed by (map columns, module) so equal composites share one quotient."""

    def __init__(self):
        self._store = {}

    def get(self, f, M):
        key = (id(f.source), id(f.target), tuple(tuple(sorted(c.items())) for c in f.columns), id(M))
        hit = self._store.get(key)
        if hit is None:
            hit = self._store[key] = (ExtendedModule(f, M, check=False), M)
        return hit[0]


class ThetaIso:
    """An E (x) B-linear map rho*M -> p*M with the coborel data it lives on."""

    def __init__(self, EA, M, matrix, coborel=None, cache=None, name="theta"):
        self.EA = EA
        self.M = M
        self.cob = coborel if coborel is not None and coborel.n >= 2 else Coborel(EA, 2)
        self.cache = cache or ExtCache()
        self.rho = self.cob.coface(0, 0)
        self.p = self.cob.coface(0, 1)
        self.source = self.cache.get(self.rho, M)
        self.target = self.cache.get(self.p, M)
        self.matrix = matrix
        self.name = name

    def __repr__(self):
        return f"<ThetaIso on {self.M.name}>"

    @property
    def map(self):
        return ModuleMap(self.source.module, self.target.module, self.matrix, self.name)

    def apply_class(self, y, m):
        """theta of the class [y | m] (y indexes the E (x) B basis)."""
        v = self.source.cls(y, m)
        return [sum((self.matrix[i][j] * v[j] for j in range(len(v)) if v[j]), ZERO)
                for i in range(len(self.matrix))]

    def scaled(self, k, c):
        """A copy with column k multiplied by c (a negative control)."""
        mat = [row[:] for row in self.matrix]
        for row in mat:
            row[k] = row[k] * c
        return ThetaIso(self.EA, self.M, mat, self.cob, self.cache, f"{self.name}*")


def _theta_ambient(EA, N, y, m, c=ONE):
    """Ambient image of [y | m] under e (x) b (x) m -> e (x) b m1 (x) m0."""
    B = EA.B
    nb = B.dim
    e, b = divmod(y, nb)
    out = {}
    for (m0, m1), x in N.comod.coaction[m].items():
        for r, z in B._prod(b, m1):
            siadd(out, {(e * nb + r, m0): ONE}, c * x * z)
    return out


def theta_from_rho(N, check=True, coborel=None, cache=None):
    """theta([e (x) b (x) m]) = [e (x) b m1 (x) m0].

    With ``check`` the Hopf-module compatibility, well-definedness on the
    quotient and invertibility are verified; NonInvertible is raised if the
    map cannot be inverted.
    """
    if check:
        bad = hopf_compatibility_failure(N.EA, N.mod, N.comod)
        if bad is not None:
            raise CompatibilityFail(f"rho({N.E.basis[bad[0]]}.{N.basis[bad[1]]}) != e0 n0 (x) e1 n1")
    th = ThetaIso(N.EA, N.mod, None, coborel, cache)
    X, Y = th.source, th.target
    cols = [Y.project(_theta_ambient(N.EA, N, y, m)) for (y, m) in X.basis_keys]
    th.matrix = [[cols[j][i] for j in range(len(cols))] for i in range(Y.dim)]
    if check:
        keys = X.quotient.keys
        for row in X.quotient.echelon.rows.values():
            img = {}
            for k, c in row.items():
                y, m = keys[k]
                siadd(img, _theta_ambient(N.EA, N, y, m, c))
            if any(Y.project(img)):
                raise CompatibilityFail("theta is not well defined on rho*M")
        try:
            inverse(th.matrix)
        except NonInvertible:
            raise NonInvertible(f"theta for {N.name} is not invertible") from None
    return th


def rho_from_theta(th, check=True):
    """rho_M(m) = nat(theta[1 (x) 1 (x) m]) as a RelativeHopfModule."""
    if check:
        rep = check_cocycle(th)
        if rep.status is not Status.PASS:
            bad = rep.failures()[0]
            raise CocycleFail(f"{bad.law}: {bad.counterexample}")
    EA, M = th.EA, th.M
    B = EA.B
    F = th.rho.target
    nat = nat_iso(th.target, B)
    co = []
    for m in range(M.dim):
        amb = {(y, m): c for y, c in enumerate(F.unit) if c}
        v = th.source.project(amb)
        w = [sum((th.matrix[i][j] * v[j] for j in range(len(v)) if v[j]), ZERO)
             for i in range(th.target.dim)]
        out = {}
        for r, row in enumerate(nat):
            x = sum((row[j] * w[j] for j in range(len(w)) if w[j]), ZERO)
            if x:
                out[divmod(r, B.dim)] = x
        co.append(out)
    comod = RightComodule(B, co, list(M.basis), M.name)
    return RelativeHopfModule(EA, M, comod, M.name)


def _pullback_theta(th, g):
    """g*(theta) : g*(rho*M) -> g*(p*M) together with the two extensions."""
    src = th.cache.get(g, th.source.module)
    tgt = th.cache.get(g, th.target.module)
    return src, tgt, pullback_map(g, src, tgt, th.matrix)


def _transport(th, g):
    """iso[g, p] . g*(theta) . iso[g, rho]^-1 : (g rho)*M -> (g p)*M."""
    src, tgt, gt = _pullback_theta(th, g)
    grho = th.cache.get(g.compose(th.rho), th.M)
    gp = th.cache.get(g.compose(th.p), th.M)
    a = composition_iso(src, th.source, grho)
    b = composition_iso(tgt, th.target, gp)
    return matmul(b.matrix, matmul(gt.matrix, inverse(a.matrix))), grho, gp


def check_cocycle(th):
    cob = th.cob
    report = LawReport(f"cocycle for {th.name} on {th.M.name}")
    try:
        inverse(th.matrix)
        report.add("invertible", True)
    except NonInvertible:
        report.add("invertible", False, "theta is singular")
        return report
    F = th.rho.target
    bad = None
    for i in F.generators:
        lhs = matmul(th.target.module.action[i], th.matrix)
        rhs = matmul(th.matrix, th.source.module.action[i])
        if lhs != rhs:
            bad = F.basis[i]
            break
    report.add("linear", bad is None, None if bad is None else f"theta does not commute with {bad}")
    D0, D1, D2 = (cob.coface(1, i) for i in range(3))
    top, src_top, tgt_top = _transport(th, D1)
    t0, src0, tgt0 = _transport(th, D0)
    t2, src2, tgt2 = _transport(th, D2)
    # tgt0 = (D0 p)*M and src2 = (D2 rho)*M have identical columns, hence share one object
    if src_top is not src0 or tgt0 is not src2 or tgt_top is not tgt2:
        report.add("cocycle", False, "composite maps disagree")
        return report
    bottom = matmul(t2, t0)
    if top != bottom:
        j = next(j for j in range(len(top[0])) if any(top[i][j] != bottom[i][j] for i in range(len(top))))
        y, m = src_top.basis_keys[j]
        report.add("cocycle", False,
                   f"paths differ on [{src_top.F.basis[y]}|{th.M.basis[m]}]", column=j)
    else:
        report.add("cocycle", True)
    s0 = cob.codegeneracy(0, 0)
    ts, srcs, tgts = _transport(th, s0)
    if srcs is not tgts:
        report.add("normalized", False, "s0 composites disagree")
    else:
        ok = ts == identity(len(ts))
        report.add("normalized", ok, None if ok else "s0*(theta) is not the identity")
    return report


def is_theta_morphism(h, thM, thN):
    """p*h . theta_M == theta_N . rho*h for an E-linear h: M -> N (matrix)."""
    ph = pullback_map(thM.p, thM.target, thN.target, h)
    rh = pullback_map(thM.rho, thM.source, thN.source, h)
    return matmul(ph.matrix, thM.matrix) == matmul(thN.matrix, rh.matrix)

