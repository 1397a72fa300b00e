"""The comonad G = - (x) B on left E-modules of a comodule algebra (E, rho).

G(M) is M (x) B with e.(m (x) b) = e0.m (x) e1 b; delta = id (x) Delta and
epsilon = id (x) eps.  Basis vectors of G(M) are indexed m * dim B + b.
"""

from __future__ import annotations

from ..exactfield import ONE, ZERO
from ..linalg import identity, kron, matmul, siadd
from ..reports import LawReport, Status
from .modules import (
    CompatibilityFail, LeftModule, RelativeHopfModule, RightComodule,
    check_right_comodule, hopf_compatibility_failure,
)


def _cols_to_matrix(cols, rows):
    out = [[ZERO] * len(cols) for _ in range(rows)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            out[i][j] = x
    return out


class ComonadG:
    """G for a comodule algebra; ``comult`` may replace Delta of B (for negative controls)."""

    def __init__(self, EA, comult=None, name=None):
        self.EA = EA
        self.E = EA.E
        self.B = EA.B
        self.comult = comult if comult is not None else self.B.comult
        self.name = name or f"G[{EA.name}]"

    def __repr__(self):
        return f"<ComonadG {self.name}>"

    def apply(self, M):
        """G(M) as a left E-module."""
        if M.over is not self.E:
            raise CompatibilityFail(f"{M.name} is not a module over {self.E.name}")
        B = self.B
        nb = B.dim
        d = M.dim * nb
        cols = []
        for e in range(self.E.dim):
            row = []
            for j in range(d):
                m, b = divmod(j, nb)
                out = {}
                for (e0, e1), c in self.EA.rho[e].items():
                    em = M.act_basis(e0, m)
                    if not em:
                        continue
                    for r, y in B._prod(e1, b):
                        for mm, x in em.items():
                            siadd(out, {mm * nb + r: ONE}, c * x * y)
                row.append(out)
            cols.append(row)
        basis = [f"{x}(x){y}" for x in M.basis for y in B.basis]
        return LeftModule.from_columns(self.E, cols, d, basis, f"G({M.name})")

    def delta(self, M):
        """delta_M: G(M) -> G(G(M)) as a matrix."""
        nb = self.B.dim
        cols = []
        for j in range(M.dim * nb):
            m, b = divmod(j, nb)
            cols.append({(m * nb + x) * nb + y: c for (x, y), c in self.comult[b].items()})
        return _cols_to_matrix(cols, M.dim * nb * nb)

    def counit(self, M):
        """epsilon_M: G(M) -> M."""
        nb = self.B.dim
        eps = self.B.counit
        cols = []
        for j in range(M.dim * nb):
            m, b = divmod(j, nb)
            cols.append({m: eps[b]} if eps[b] else {})
        return _cols_to_matrix(cols, M.dim)

    def fmap(self, h):
        """G(h) = h (x) id_B."""
        return kron(h, identity(self.B.dim))

    def self_check(self, modules):
        """Comonad laws and E-linearity of delta, epsilon on each supplied module."""
        report = LawReport(f"{self.name} is a comonad on {self.E.name}-modules")
        laws = {k: None for k in ("coassociative", "counit_left", "counit_right",
                                  "delta_linear", "counit_linear")}
        for M in modules:
            GM = self.apply(M)
            GGM = self.apply(GM)
            dM = self.delta(M)
            dGM = self.delta(GM)
            lhs = matmul(dGM, dM)
            rhs = matmul(self.fmap(dM), dM)
            if laws["coassociative"] is None and lhs != rhs:
                j = _first_bad_column(lhs, rhs)
                laws["coassociative"] = (f"(delta G)delta != (G delta)delta at {GM.basis[j]} in "
                                         f"G({M.name})", M.name)
            eye = identity(GM.dim)
            if laws["counit_left"] is None and matmul(self.counit(GM), dM) != eye:
                j = _first_bad_column(matmul(self.counit(GM), dM), eye)
                laws["counit_left"] = (f"(epsilon G)delta != id at {GM.basis[j]}", M.name)
            if laws["counit_right"] is None and matmul(self.fmap(self.counit(M)), dM) != eye:
                j = _first_bad_column(matmul(self.fmap(self.counit(M)), dM), eye)
                laws["counit_right"] = (f"(G epsilon)delta != id at {GM.basis[j]}", M.name)
            if laws["delta_linear"] is None:
                bad = _linearity_failure(self.E, GM, GGM, dM)
                if bad is not None:
                    laws["delta_linear"] = (f"delta_{M.name} is not {self.E.name}-linear: "
                                            f"{self.E.basis[bad[0]]} at {GM.basis[bad[1]]}", M.name)
            if laws["counit_linear"] is None:
                bad = _linearity_failure(self.E, GM, M, self.counit(M))
                if bad is not None:
                    laws["counit_linear"] = (f"epsilon_{M.name} is not {self.E.name}-linear: "
                                             f"{self.E.basis[bad[0]]} at {GM.basis[bad[1]]}", M.name)
        for law, bad in laws.items():
            if bad is None:
                report.add(law, True)
            else:
                report.add(law, False, bad[0], module=bad[1])
        return report


def _first_bad_column(a, b):
    for j in range(len(a[0]) if a else 0):
        if any(a[i][j] != b[i][j] for i in range(len(a))):
            return j
    return 0


def _linearity_failure(E, M, N, h):
    """First (generator, basis column) where h: M -> N fails to commute with E."""
    for i in E.generators:
        lhs = matmul(N.action[i], h)
        rhs = matmul(h, M.action[i])
        if lhs != rhs:
            return i, _first_bad_column(lhs, rhs)
    return None


def comonad_G(EA, comult=None):
    return ComonadG(EA, comult)


class GComodule:
    """A G-comodule: an E-module M with a structure map M -> G(M) (matrix)."""

    def __init__(self, G, M, structure, name=None):
        self.G = G
        self.M = M
        self.structure = structure
        self.name = name or M.name

    def __repr__(self):
        return f"<GComodule {self.name}>"

    def check(self):
        G, M, s = self.G, self.M, self.structure
        report = LawReport(f"{self.name} is a {G.name}-comodule")
        ok = matmul(G.delta(M), s) == matmul(G.fmap(s), s)
        report.add("coassociative", ok, None if ok else "delta_M rho != G(rho) rho")
        ok = matmul(G.counit(M), s) == identity(M.dim)
        report.add("counital", ok, None if ok else "epsilon_M rho != id")
        bad = _linearity_failure(G.E, M, G.apply(M), s)
        report.add("linear", bad is None,
                   None if bad is None else
                   f"structure map not {G.E.name}-linear: {G.E.basis[bad[0]]} at {M.basis[bad[1]]}")
        return report


def hopf_to_G_comodule(N, G=None):
    """The structure map of the G-comodule is rho_N itself, viewed as N -> G(N)."""
    bad = hopf_compatibility_failure(N.EA, N.mod, N.comod)
    if bad is not None:
        e, n = bad[0], bad[1]
        raise CompatibilityFail(f"rho({N.E.basis[e]}.{N.basis[n]}) != e0 n0 (x) e1 n1")
    G = G or ComonadG(N.EA)
    return GComodule(G, N.mod, N.comod.matrix(), N.name)


def g_comodule_to_hopf(C):
    comod = RightComodule.from_matrix(C.G.B, C.structure, list(C.M.basis), C.M.name)
    if check_right_comodule(comod).status is not Status.PASS:
        raise CompatibilityFail(f"{C.name}: structure map is not a coaction")
    bad = hopf_compatibility_failure(C.G.EA, C.M, comod)
    if bad is not None:
        raise CompatibilityFail(f"{C.name}: structure map is not {C.G.E.name}-linear")
    return RelativeHopfModule(C.G.EA, C.M, comod, C.name)
