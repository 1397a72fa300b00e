"""The truncated simplicial module of a relative Hopf module.

M_k = P_k*M where P_k: E -> E (x) B^k is e -> e (x) 1 (x) ... (x) 1.  The
structure map beta_f: f*M_k -> M_m is

* for d^0 from level k: iso . Q*(theta) . iso^-1 . iso, where Q appends k ones
  to E (x) B, since d^0 P_k = Q rho and P_(k+1) = Q p,
* for every other coface and every codegeneracy: the composition isomorphism,
  since f P_k = P_m.
"""

from __future__ import annotations

from ..linalg import NonInvertible, identity, inverse, matmul
from ..reports import LawReport
from .coborel import Coborel
from .coequivariant import ExtCache, _transport, check_cocycle, theta_from_rho
from .extension import composition_iso, identity_iso, identity_map, pullback_map


class SimplicialModule:
    def __init__(self, N, n, check=True, cache=None):
        self.N = N
        self.n = n
        self.cob = Coborel(N.EA, max(n, 2))
        self.cache = cache or ExtCache()
        self.theta = theta_from_rho(N, check=check, coborel=self.cob, cache=self.cache)
        M = N.mod
        self.P = [self.cob.last_cofaces(0, k) for k in range(n + 1)]
        self.exts = [None] + [self.cache.get(self.P[k], M) for k in range(1, n + 1)]
        self.modules = [M] + [e.module for e in self.exts[1:]]
        self._beta = {}

    def __repr__(self):
        return f"<SimplicialModule of {self.N.name} to level {self.n}>"

    def generators(self):
        """(name, map, source level, target level) for every coface and codegeneracy."""
        out = []
        for k in range(self.n):
            for i in range(k + 2):
                out.append((f"d{i}[{k}]", self.cob.coface(k, i), k, k + 1))
            for j in range(k + 1):
                out.append((f"s{j}[{k}]", self.cob.codegeneracy(k, j), k + 1, k))
        return out

    def _level_of(self, A):
        return next(k for k, L in enumerate(self.cob.levels) if L is A)

    def pulled(self, f, k):
        return self.cache.get(f, self.modules[k])

    def _to_composite(self, f, k):
        """(f*M_k, (f P_k)*M, matrix of the canonical iso between them)."""
        fext = self.pulled(f, k)
        cext = self.cache.get(f.compose(self.P[k]), self.N.mod)
        if k == 0:
            return fext, cext, identity(fext.dim)
        return fext, cext, composition_iso(fext, self.exts[k], cext).matrix

    def beta(self, f):
        """beta_f as a matrix f*M_k -> M_m."""
        key = id(f)
        if key in self._beta:
            return self._beta[key]
        k, m = self._level_of(f.source), self._level_of(f.target)
        fext, cext, iso = self._to_composite(f, k)
        if m == k + 1 and f is self.cob.coface(k, 0):
            if k == 0:
                if cext is not self.theta.source:
                    raise RuntimeError("rho*M is not shared")
                out = self.theta.matrix
            else:
                Q = self.cob.last_cofaces(1, k + 1)
                t, grho, gp = _transport(self.theta, Q)
                if grho is not cext or gp is not self.exts[k + 1]:
                    raise RuntimeError("composite extensions are not shared")
                out = matmul(t, iso)
        elif m == 0:
            out = matmul(identity_iso(cext).matrix, iso)
        else:
            if cext is not self.exts[m]:
                raise RuntimeError(f"{f.name} P_{k} != P_{m}")
            out = iso
        self._beta[key] = out
        return out

    def path(self, g, f):
        """beta_g . g*(beta_f) . iso[g, f]^-1 : (g f)*M_k -> M_r."""
        k = self._level_of(f.source)
        m = self._level_of(f.target)
        fM = self.pulled(f, k)
        src = self.cache.get(g, fM.module)
        tgt = self.pulled(g, m)
        pull = pullback_map(g, src, tgt, self.beta(f))
        gf = self.cache.get(g.compose(f), self.modules[k])
        iso = composition_iso(src, fM, gf)
        return matmul(self.beta(g), matmul(pull.matrix, inverse(iso.matrix))), gf

    def check(self):
        report = LawReport(f"simplicial module of {self.N.name} to level {self.n}")
        report.extend(check_cocycle(self.theta), prefix="theta_")
        bad_inv = bad_lin = None
        for name, f, k, m in self.generators():
            b = self.beta(f)
            if bad_inv is None:
                try:
                    inverse(b)
                except NonInvertible:
                    bad_inv = name
            if bad_lin is None:
                src = self.pulled(f, k).module
                tgt = self.modules[m]
                A = f.target
                for i in A.generators:
                    if matmul(tgt.action[i], b) != matmul(b, src.action[i]):
                        bad_lin = f"beta_{name} does not commute with {A.basis[i]}"
                        break
        report.add("beta_invertible", bad_inv is None,
                   None if bad_inv is None else f"beta_{bad_inv} is singular")
        report.add("beta_linear", bad_lin is None, bad_lin)
        bad = None
        for name, (g1, f1), rhs in self.cob.identities():
            maps = (g1, f1) + (rhs or ())
            if max(self._level_of(A) for h in maps for A in (h.source, h.target)) > self.n:
                continue
            lhs, gf = self.path(g1, f1)
            if rhs is None:
                idx = self.cache.get(identity_map(f1.source), self.modules[self._level_of(f1.source)])
                if idx is not gf:
                    raise RuntimeError("identity extension is not shared")
                other = identity_iso(idx).matrix
            else:
                other, gf2 = self.path(*rhs)
                if gf2 is not gf:
                    raise RuntimeError("composite extensions are not shared")
            if lhs != other:
                bad = name
                break
        report.add("simplicial_cocycle", bad is None,
                   None if bad is None else f"beta disagrees across {bad}")
        return report


def hopf_to_simplicial_module(N, n=3, check=True):
    return SimplicialModule(N, n, check=check)
