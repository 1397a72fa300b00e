"""Truncated coborel construction: the cosimplicial algebra E, E (x) B, E (x) B (x) B, ...

Level k has basis indexed by (e, b1, ..., bk) in mixed radix.  Cofaces from
level k to k+1:

* d^0 applies rho to the E slot,
* d^i (1 <= i <= k) applies Delta to the i-th B slot,
* d^(k+1) appends 1_B.

Codegeneracies s^j from level k+1 to k apply eps to the (j+1)-th B slot.
"""

from __future__ import annotations

import os

from ..algebra.core import algebra_power
from ..exactfield import ONE
from ..linalg import siadd
from ..reports import LawReport
from .extension import AlgebraMap, identity_map

DEFAULT_LEVEL_BOUND = 4


class LevelTooLarge(ValueError):
    pass


def level_bound():
    return int(os.environ.get("HOPFKIT_LEVEL_BOUND", DEFAULT_LEVEL_BOUND))


def _digits(idx, k, nb):
    bs = []
    for _ in range(k):
        idx, b = divmod(idx, nb)
        bs.append(b)
    return idx, bs[::-1]


def _index(e, bs, nb):
    for b in bs:
        e = e * nb + b
    return e


class Coborel:
    """Levels 0..n of the coborel construction on a comodule algebra."""

    def __init__(self, EA, n, bound=None):
        bound = level_bound() if bound is None else bound
        if n < 0:
            raise ValueError("level must be >= 0")
        if n > bound:
            raise LevelTooLarge(f"level {n} exceeds the configured bound {bound}")
        self.EA = EA
        self.E = EA.E
        self.B = EA.B
        self.n = n
        self.levels = [algebra_power(self.E, self.B, k) for k in range(n + 1)]
        for k, A in enumerate(self.levels):
            A.name = "E" if k == 0 else f"E(x)B^{k}"
        self._faces = {}
        self._degens = {}

    def __repr__(self):
        return f"<Coborel {self.EA.name} levels 0..{self.n}>"

    def level(self, k):
        return self.levels[k]

    def coface(self, k, i):
        """d^i from level k to level k+1."""
        if not (0 <= k < self.n and 0 <= i <= k + 1):
            raise IndexError(f"no coface d^{i} from level {k} within 0..{self.n}")
        key = (k, i)
        if key not in self._faces:
            self._faces[key] = self._build_coface(k, i)
        return self._faces[key]

    def codegeneracy(self, k, j):
        """s^j from level k+1 to level k."""
        if not (0 <= k < self.n and 0 <= j <= k):
            raise IndexError(f"no codegeneracy s^{j} to level {k} within 0..{self.n}")
        key = (k, j)
        if key not in self._degens:
            self._degens[key] = self._build_codegeneracy(k, j)
        return self._degens[key]

    def _build_coface(self, k, i):
        B = self.B
        nb = B.dim
        src, tgt = self.levels[k], self.levels[k + 1]
        cols = []
        for idx in range(src.dim):
            e, bs = _digits(idx, k, nb)
            out = {}
            if i == 0:
                for (e0, e1), c in self.EA.rho[e].items():
                    siadd(out, {_index(e0, [e1] + bs, nb): ONE}, c)
            elif i <= k:
                for (x, y), c in B.comult[bs[i - 1]].items():
                    siadd(out, {_index(e, bs[:i - 1] + [x, y] + bs[i:], nb): ONE}, c)
            else:
                for u, c in enumerate(B.unit):
                    if c:
                        siadd(out, {_index(e, bs + [u], nb): ONE}, c)
            cols.append(out)
        return AlgebraMap(src, tgt, cols, f"d{i}[{k}]")

    def _build_codegeneracy(self, k, j):
        B = self.B
        nb = B.dim
        src, tgt = self.levels[k + 1], self.levels[k]
        cols = []
        for idx in range(src.dim):
            e, bs = _digits(idx, k + 1, nb)
            c = B.counit[bs[j]]
            cols.append({_index(e, bs[:j] + bs[j + 1:], nb): c} if c else {})
        return AlgebraMap(src, tgt, cols, f"s{j}[{k}]")

    def last_cofaces(self, k, m):
        """Composite of the appending cofaces from level k up to level m (identity if k == m)."""
        f = identity_map(self.levels[k])
        for j in range(k, m):
            f = self.coface(j, j + 1).compose(f)
        return f

    def identities(self):
        """Every cosimplicial identity within the truncation as (name, lhs pair, rhs pair).

        A pair (g, f) stands for g o f; ``None`` for rhs means the identity map.
        """
        out = []
        for k in range(self.n - 1):
            for j in range(k + 3):
                for i in range(j):
                    out.append((f"d{j}d{i}=d{i}d{j - 1} at {k}",
                                (self.coface(k + 1, j), self.coface(k, i)),
                                (self.coface(k + 1, i), self.coface(k, j - 1))))
        for k in range(self.n):
            for j in range(k + 1):
                for i in range(k + 2):
                    d = self.coface(k, i)
                    s = self.codegeneracy(k, j)
                    if i in (j, j + 1):
                        out.append((f"s{j}d{i}=id at {k}", (s, d), None))
        for k in range(1, self.n):
            for j in range(k + 1):
                for i in range(k + 2):
                    s = self.codegeneracy(k, j)
                    d = self.coface(k, i)
                    if i < j:
                        out.append((f"s{j}d{i}=d{i}s{j - 1} at {k}", (s, d),
                                    (self.coface(k - 1, i), self.codegeneracy(k - 1, j - 1))))
                    elif i > j + 1:
                        out.append((f"s{j}d{i}=d{i - 1}s{j} at {k}", (s, d),
                                    (self.coface(k - 1, i - 1), self.codegeneracy(k - 1, j))))
        for k in range(self.n - 1):
            for j in range(k + 1):
                for i in range(j + 1):
                    out.append((f"s{j}s{i}=s{i}s{j + 1} at {k}",
                                (self.codegeneracy(k, j), self.codegeneracy(k + 1, i)),
                                (self.codegeneracy(k, i), self.codegeneracy(k + 1, j + 1))))
        return out

    def check(self):
        report = LawReport(f"coborel construction on {self.EA.name} to level {self.n}")
        for k in range(self.n):
            for i in range(k + 2):
                msg = self.coface(k, i).first_failure()
                if msg:
                    report.add("cofaces_are_algebra_maps", False, msg, level=k, face=i)
                    break
            else:
                continue
            break
        else:
            report.add("cofaces_are_algebra_maps", True)
        for k in range(self.n):
            for j in range(k + 1):
                msg = self.codegeneracy(k, j).first_failure()
                if msg:
                    report.add("codegeneracies_are_algebra_maps", False, msg, level=k, degen=j)
                    break
            else:
                continue
            break
        else:
            report.add("codegeneracies_are_algebra_maps", True)
        bad = None
        for name, (g1, f1), rhs in self.identities():
            lhs = g1.compose(f1)
            other = identity_map(f1.source) if rhs is None else rhs[0].compose(rhs[1])
            if lhs.columns != other.columns:
                bad = name
                break
        report.add("cosimplicial_identities", bad is None, bad)
        return report


def coborel(EA, n, bound=None):
    return Coborel(EA, n, bound)
