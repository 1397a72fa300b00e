"""Modules, comodules, comodule algebras, module algebras, relative Hopf modules."""

from __future__ import annotations

import itertools

from ..algebra.core import (
    CarrierMismatch, FinDimAlgebra, format_vector, tensor_mul, unit_vector,
)
from ..exactfield import ONE, ZERO, Scalar
from ..linalg import DimensionMismatch, identity, inverse, matmul, siadd
from ..reports import LawReport


class CompatibilityFail(ValueError):
    pass


def _sparse_col(v):
    return {i: x for i, x in enumerate(v) if x}


def _matrix_from_columns(cols, rows):
    out = [[ZERO] * len(cols) for _ in range(rows)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            out[i][j] = x
    return out


class LeftModule:
    """A left module over a finite-dimensional algebra.

    ``action[i]`` is the matrix by which the basis vector e_i acts.
    """

    def __init__(self, over, action, basis=None, name=None):
        self.over = over
        if len(action) != over.dim:
            raise DimensionMismatch(f"need one matrix per basis vector of {over.name}")
        self.dim = len(action[0]) if action else 0
        for m in action:
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise DimensionMismatch("action matrices must be square of equal size")
        self.action = [[[Scalar.coerce(c) for c in row] for row in m] for m in action]
        self.basis = list(basis) if basis is not None else [f"m{i}" for i in range(self.dim)]
        self.name = name or "M"
        self._index = {b: i for i, b in enumerate(self.basis)}
        self._cols = [[{r: m[r][j] for r in range(self.dim) if m[r][j]}
                       for j in range(self.dim)] for m in self.action]

    def __repr__(self):
        return f"<LeftModule {self.name} over {self.over.name} dim={self.dim}>"

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{self.name} has no basis element {name!r}") from None

    def act_basis(self, i, j):
        """Sparse dict of e_i . m_j."""
        return self._cols[i][j]

    def act_vec(self, e, m):
        out = {}
        for i, a in enumerate(e):
            if not a:
                continue
            for j, b in enumerate(m):
                if b:
                    siadd(out, self._cols[i][j], a * b)
        v = [ZERO] * self.dim
        for k, x in out.items():
            v[k] = x
        return v

    def matrix_of(self, e):
        """Matrix of the action of the element with coefficient vector e."""
        out = [[ZERO] * self.dim for _ in range(self.dim)]
        for i, a in enumerate(e):
            if a:
                for r in range(self.dim):
                    row = self.action[i][r]
                    for c in range(self.dim):
                        if row[c]:
                            out[r][c] = out[r][c] + a * row[c]
        return out

    def fmt(self, v):
        return format_vector(v, self.basis)

    @classmethod
    def from_columns(cls, over, cols, dim, basis=None, name=None):
        """Build from ``cols[i][j]`` = sparse image of m_j under e_i."""
        return cls(over, [_matrix_from_columns(c, dim) for c in cols], basis, name)


def regular_module(E, name=None):
    cols = [[dict(E._prod(i, j)) for j in range(E.dim)] for i in range(E.dim)]
    return LeftModule.from_columns(E, cols, E.dim, list(E.basis), name or f"{E.name}_reg")


def character_module(E, chi, name=None):
    """One-dimensional module on which e_i acts by chi[i]."""
    return LeftModule(E, [[[Scalar.coerce(c)]] for c in chi], ["v"], name or "chi")


def trivial_module(H, name=None):
    return character_module(H, H.counit, name or "triv")


def direct_sum(M, N, name=None):
    if M.over is not N.over:
        raise CarrierMismatch("direct sum of modules over different algebras")
    d = M.dim + N.dim
    action = []
    for a, b in zip(M.action, N.action):
        m = [[ZERO] * d for _ in range(d)]
        for r in range(M.dim):
            m[r][:M.dim] = a[r]
        for r in range(N.dim):
            m[M.dim + r][M.dim:] = b[r]
        action.append(m)
    basis = [f"{x}'" for x in M.basis] + [f"{x}''" for x in N.basis]
    return LeftModule(M.over, action, basis, name or f"{M.name}+{N.name}")


def transport_module(M, P, name=None):
    """The same module in the basis given by the columns of invertible P."""
    Pi = inverse(P)
    action = [matmul(matmul(Pi, a), P) for a in M.action]
    return LeftModule(M.over, action, [f"u{i}" for i in range(M.dim)], name or M.name)


def tensor_module(H, Q1, Q2, name=None):
    """Q1 (x) Q2 over a bialgebra H with h.(q (x) q') = h1 q (x) h2 q'."""
    n2 = Q2.dim
    d = Q1.dim * n2
    cols = []
    for i in range(H.dim):
        row = []
        for j in range(d):
            a, b = divmod(j, n2)
            out = {}
            for (h1, h2), c in H.comult[i].items():
                for r, x in Q1.act_basis(h1, a).items():
                    for s, y in Q2.act_basis(h2, b).items():
                        siadd(out, {r * n2 + s: ONE}, c * x * y)
            row.append(out)
        cols.append(row)
    basis = [f"{x}(x){y}" for x in Q1.basis for y in Q2.basis]
    return LeftModule.from_columns(H, cols, d, basis, name or f"{Q1.name}(x){Q2.name}")


def check_left_module(M):
    E = M.over
    report = LawReport(f"{M.name} is a left {E.name}-module")
    ok = M.matrix_of(E.unit) == identity(M.dim)
    report.add("unit_acts_trivially", ok, None if ok else "1 does not act as the identity")
    for i, j in itertools.product(range(E.dim), repeat=2):
        lhs = matmul(M.action[i], M.action[j])
        rhs = M.matrix_of(E.mult[i][j])
        if lhs != rhs:
            report.add("representation", False,
                       f"action({E.basis[i]})action({E.basis[j]}) != action({E.basis[i]}*{E.basis[j]})",
                       pair=[i, j])
            break
    else:
        report.add("representation", True)
    return report


def is_module_map(h, M, N):
    """h is an (N.dim x M.dim) matrix; checks e.h(m) = h(e.m) on generators."""
    for i in M.over.generators:
        if matmul(N.action[i], h) != matmul(h, M.action[i]):
            return False
    return True


# -- comodules ------------------------------------------------------------------

class RightComodule:
    """Right comodule over a coalgebra; ``coaction[n]`` = {(m, b): coeff}."""

    def __init__(self, B, coaction, basis=None, name=None):
        self.B = B
        self.dim = len(coaction)
        self.coaction = []
        for n, d in enumerate(coaction):
            entry = {}
            for (m, b), c in d.items():
                c = Scalar.coerce(c)
                if not (0 <= m < self.dim and 0 <= b < B.dim):
                    raise DimensionMismatch(f"coaction[{n}] has an index out of range")
                if c:
                    siadd(entry, {(m, b): c})
            self.coaction.append(entry)
        self.basis = list(basis) if basis is not None else [f"n{i}" for i in range(self.dim)]
        self.name = name or "N"
        self._index = {b: i for i, b in enumerate(self.basis)}

    def __repr__(self):
        return f"<RightComodule {self.name} over {self.B.name} dim={self.dim}>"

    def index(self, name):
        return self._index[name]

    def coact_basis(self, n):
        return self.coaction[n]

    def coact_vec(self, v):
        out = {}
        for n, a in enumerate(v):
            if a:
                siadd(out, self.coaction[n], a)
        return out

    def matrix(self):
        """(dim * dim B) x dim matrix; row m * dim B + b."""
        nb = self.B.dim
        cols = [{m * nb + b: c for (m, b), c in d.items()} for d in self.coaction]
        return _matrix_from_columns(cols, self.dim * nb)

    @classmethod
    def from_matrix(cls, B, mat, basis=None, name=None):
        nb = B.dim
        dim = len(mat[0]) if mat else 0
        if len(mat) != dim * nb:
            raise DimensionMismatch(f"coaction matrix must have {dim * nb} rows")
        co = [{divmod(r, nb): mat[r][n] for r in range(len(mat)) if mat[r][n]} for n in range(dim)]
        return cls(B, co, basis, name)


def regular_comodule(B, name=None):
    return RightComodule(B, [dict(B.comult[i]) for i in range(B.dim)], list(B.basis),
                         name or f"{B.name}_reg")


def grouplike_comodule(B, u, name=None):
    """One-dimensional comodule v -> v (x) u for a group-like basis vector u."""
    return RightComodule(B, [{(0, u): ONE}], ["v"], name or f"C_{B.basis[u]}")


def trivial_comodule(B, dim=1, name=None):
    unit = [(b, c) for b, c in enumerate(B.unit) if c]
    return RightComodule(B, [{(n, b): c for b, c in unit} for n in range(dim)],
                         None, name or "triv")


def comodule_direct_sum(M, N, name=None):
    d = M.dim
    co = [dict(x) for x in M.coaction]
    co += [{(m + d, b): c for (m, b), c in x.items()} for x in N.coaction]
    return RightComodule(M.B, co, [f"{x}'" for x in M.basis] + [f"{x}''" for x in N.basis],
                         name or f"{M.name}+{N.name}")


def comodule_tensor(B, Q1, Q2, name=None):
    """Q1 (x) Q2 with q (x) q' -> q0 (x) q'0 (x) q1 q'1."""
    n2 = Q2.dim
    co = []
    for a in range(Q1.dim):
        for b in range(n2):
            out = {}
            for (m1, b1), c1 in Q1.coaction[a].items():
                for (m2, b2), c2 in Q2.coaction[b].items():
                    for r, x in B._prod(b1, b2):
                        siadd(out, {(m1 * n2 + m2, r): ONE}, c1 * c2 * x)
            co.append(out)
    basis = [f"{x}(x){y}" for x in Q1.basis for y in Q2.basis]
    return RightComodule(B, co, basis, name or f"{Q1.name}(x){Q2.name}")


def transport_comodule(N, P, name=None):
    """Change basis by the columns of P (new basis vector j = sum_i P[i][j] n_i)."""
    Pi = inverse(P)
    co = []
    for j in range(N.dim):
        out = {}
        for i in range(N.dim):
            if P[i][j]:
                for (m, b), c in N.coaction[i].items():
                    for r in range(N.dim):
                        if Pi[r][m]:
                            siadd(out, {(r, b): ONE}, P[i][j] * c * Pi[r][m])
        co.append(out)
    return RightComodule(N.B, co, [f"u{i}" for i in range(N.dim)], name or N.name)


def _apply_delta_to_b(B, d):
    """(id (x) Delta) on {(m, b): c} -> {(m, b1, b2): c}."""
    out = {}
    for (m, b), c in d.items():
        for (x, y), z in B.comult[b].items():
            siadd(out, {(m, x, y): ONE}, c * z)
    return out


def _apply_coaction_first(N, d):
    """(rho (x) id) on {(m, b): c} -> {(m', b', b): c}."""
    out = {}
    for (m, b), c in d.items():
        for (m2, b2), z in N.coaction[m].items():
            siadd(out, {(m2, b2, b): ONE}, c * z)
    return out


def check_right_comodule(N, report=None, prefix=""):
    B = N.B
    report = report or LawReport(f"{N.name} is a right {B.name}-comodule")
    for n in range(N.dim):
        lhs = _apply_coaction_first(N, N.coaction[n])
        rhs = _apply_delta_to_b(B, N.coaction[n])
        if lhs != rhs:
            report.add(prefix + "coaction_coassociative", False,
                       f"(rho(x)id)rho != (id(x)Delta)rho at {N.basis[n]}", index=n)
            break
    else:
        report.add(prefix + "coaction_coassociative", True)
    for n in range(N.dim):
        v = {}
        for (m, b), c in N.coaction[n].items():
            if B.counit[b]:
                siadd(v, {m: ONE}, c * B.counit[b])
        if v != {n: ONE}:
            report.add(prefix + "coaction_counital", False,
                       f"(id(x)eps)rho({N.basis[n]}) = {format_vector(_dense(v, N.dim), N.basis)}",
                       index=n)
            break
    else:
        report.add(prefix + "coaction_counital", True)
    return report


def _dense(d, n):
    v = [ZERO] * n
    for k, x in d.items():
        v[k] = x
    return v


def is_comodule_map(h, M, N):
    """h is an (N.dim x M.dim) matrix; checks rho_N h = (h (x) id) rho_M."""
    for j in range(M.dim):
        lhs = {}
        for i in range(N.dim):
            if h[i][j]:
                siadd(lhs, N.coaction[i], h[i][j])
        rhs = {}
        for (m, b), c in M.coaction[j].items():
            for i in range(N.dim):
                if h[i][m]:
                    siadd(rhs, {(i, b): ONE}, c * h[i][m])
        if lhs != rhs:
            return False
    return True


def tensor_str(carriers, d):
    from ..algebra.core import TensorElement
    return str(TensorElement(carriers, d))


# -- comodule algebras ------------------------------------------------------------

class ComoduleAlgebra:
    """An algebra E with a coaction rho: E -> E (x) B; ``rho[i]`` = {(j, b): c}."""

    def __init__(self, E, B, rho, name=None):
        if not isinstance(E, FinDimAlgebra):
            raise TypeError("E must be a finite-dimensional algebra")
        self.E = E
        self.B = B
        self.comodule = RightComodule(B, rho, list(E.basis), E.name)
        self.rho = self.comodule.coaction
        self.name = name or f"({E.name}, rho)"

    def __repr__(self):
        return f"<ComoduleAlgebra {self.name} over {self.B.name}>"

    def coact_basis(self, i):
        return self.rho[i]

    def rho_vec(self, v):
        return self.comodule.coact_vec(v)

    def rho_matrix(self):
        return self.comodule.matrix()

    @classmethod
    def from_formulas(cls, E, B, formulas, name=None):
        """Coaction from element strings, e.g. {"x": "x (x) g"}; unlisted basis
        vectors named "1" are sent to 1 (x) 1."""
        from ..sweedler import parse_element
        rho = []
        for b in E.basis:
            if b in formulas:
                t = parse_element(formulas[b], (E, B))
                rho.append(dict(t.coeffs))
            elif b == "1":
                rho.append({(E.index("1"), bi): c for bi, c in enumerate(B.unit) if c})
            else:
                raise KeyError(f"no coaction formula for basis vector {b!r}")
        return cls(E, B, rho, name)


def trivial_coaction(E, B, name=None):
    rho = [{(i, b): c for b, c in enumerate(B.unit) if c} for i in range(E.dim)]
    return ComoduleAlgebra(E, B, rho, name or f"({E.name}, trivial)")


def regular_coaction(H, name=None):
    """H coacting on itself by its comultiplication."""
    return ComoduleAlgebra(H, H, [dict(d) for d in H.comult], name or f"({H.name}, Delta)")


def check_comodule_algebra(E, B=None, rho=None):
    """Coaction laws, multiplicativity and unitality of rho: E -> E (x) B."""
    EA = E if isinstance(E, ComoduleAlgebra) else ComoduleAlgebra(E, B, rho)
    E, B = EA.E, EA.B
    if E.field is not B.field:
        raise DimensionMismatch("E and B live over different fields")
    report = LawReport(f"{EA.name} is a right {B.name}-comodule algebra")
    check_right_comodule(EA.comodule, report)
    for i, j in itertools.product(range(E.dim), repeat=2):
        lhs = EA.rho_vec(E.mult[i][j])
        rhs = tensor_mul(E, B, EA.rho[i], EA.rho[j])
        if lhs != rhs:
            report.add("multiplicative", False,
                       f"rho({E.basis[i]}*{E.basis[j]}) = {tensor_str((E, B), lhs)} but "
                       f"rho({E.basis[i]})rho({E.basis[j]}) = {tensor_str((E, B), rhs)}",
                       pair=[i, j])
            break
    else:
        report.add("multiplicative", True)
    one = EA.rho_vec(E.unit)
    expect = {}
    for a, x in enumerate(E.unit):
        for b, y in enumerate(B.unit):
            if x and y:
                expect[(a, b)] = x * y
    report.add("unital", one == expect, f"rho(1) = {tensor_str((E, B), one)}")
    return report


def transport_comodule_algebra(EA, P, name=None):
    """Rewrite (E, rho) in the basis of E given by the columns of invertible P.

    The unit column of P should be the unit of E if the new basis is to keep
    a vector named "1"; this is not required.
    """
    E = EA.E
    Pi = inverse(P)
    n = E.dim
    cols = [[c for c in (P[r][j] for r in range(n))] for j in range(n)]
    mult = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = E.mul_vec(cols[i], cols[j])
            row.append([sum((Pi[r][k] * prod[k] for k in range(n) if prod[k]), ZERO)
                        for r in range(n)])
        mult.append(row)
    unit = [sum((Pi[r][k] * E.unit[k] for k in range(n) if E.unit[k]), ZERO) for r in range(n)]
    basis = []
    for j in range(n):
        basis.append("1" if cols[j] == E.unit else f"{E.name[:1].lower()}{j}")
    if len(set(basis)) != n:
        basis = [f"{E.name[:1].lower()}{j}" for j in range(n)]
    E2 = FinDimAlgebra(basis, mult, unit, E.field, name=(name or E.name))
    rho = []
    for j in range(n):
        out = {}
        for i in range(n):
            if P[i][j]:
                for (m, b), c in EA.rho[i].items():
                    for r in range(n):
                        if Pi[r][m]:
                            siadd(out, {(r, b): ONE}, P[i][j] * c * Pi[r][m])
        rho.append(out)
    return ComoduleAlgebra(E2, EA.B, rho, name or EA.name)


# -- module algebras ----------------------------------------------------------------

class ModuleAlgebra:
    """An algebra A with a left B-module structure ``act`` on its underlying space."""

    def __init__(self, A, B, act, name=None):
        if act.over is not B or act.dim != A.dim:
            raise DimensionMismatch("action must be a B-module on the space of A")
        self.A = A
        self.B = B
        self.act = act
        self.name = name or f"({A.name}, |>)"

    def __repr__(self):
        return f"<ModuleAlgebra {self.name} over {self.B.name}>"

    def act_basis(self, b, a):
        return self.act.act_basis(b, a)

    @classmethod
    def from_formulas(cls, A, B, formulas, name=None):
        """Action from element strings keyed "b|>a"; missing pairs act by the counit."""
        from ..sweedler import parse_element
        cols = []
        for bi, b in enumerate(B.basis):
            row = []
            for ai, a in enumerate(A.basis):
                key = f"{b}|>{a}"
                if key in formulas:
                    t = parse_element(formulas[key], (A,))
                    row.append({k[0]: c for k, c in t.coeffs.items()})
                else:
                    row.append({ai: B.counit[bi]} if B.counit[bi] else {})
            cols.append(row)
        act = LeftModule.from_columns(B, cols, A.dim, list(A.basis), A.name)
        return cls(A, B, act, name)


def trivial_action(A, B, name=None):
    cols = [[({a: B.counit[b]} if B.counit[b] else {}) for a in range(A.dim)]
            for b in range(B.dim)]
    return ModuleAlgebra(A, B, LeftModule.from_columns(B, cols, A.dim, list(A.basis), A.name),
                         name or f"({A.name}, trivial)")


def adjoint_action(H, name=None):
    """h |> a = h1 a S(h2), which makes any Hopf algebra a module algebra over itself."""
    cols = []
    for i in range(H.dim):
        row = []
        for a in range(H.dim):
            out = {}
            for (h1, h2), c in H.comult[i].items():
                left = H.mul_vec(unit_vector(H.dim, h1), unit_vector(H.dim, a))
                v = H.mul_vec(left, H.antipode[h2])
                for r, x in enumerate(v):
                    if x:
                        siadd(out, {r: ONE}, c * x)
            row.append(out)
        cols.append(row)
    act = LeftModule.from_columns(H, cols, H.dim, list(H.basis), H.name)
    return ModuleAlgebra(H, H, act, name or f"({H.name}, ad)")


def check_module_algebra(A, B=None, act=None):
    MA = A if isinstance(A, ModuleAlgebra) else ModuleAlgebra(A, B, act)
    A, B = MA.A, MA.B
    report = LawReport(f"{MA.name} is a left {B.name}-module algebra")
    report.extend(check_left_module(MA.act), prefix="action_")
    bad = None
    for b, a1, a2 in itertools.product(range(B.dim), range(A.dim), range(A.dim)):
        lhs = {}
        for r, c in A._prod(a1, a2):
            siadd(lhs, MA.act_basis(b, r), c)
        rhs = {}
        for (b1, b2), c in B.comult[b].items():
            for r, x in MA.act_basis(b1, a1).items():
                for s, y in MA.act_basis(b2, a2).items():
                    for t, z in A._prod(r, s):
                        siadd(rhs, {t: ONE}, c * x * y * z)
        if lhs != rhs:
            bad = (b, a1, a2)
            break
    if bad:
        b, a1, a2 = bad
        report.add("leibniz", False,
                   f"{B.basis[b]} |> ({A.basis[a1]}*{A.basis[a2]}) != "
                   f"({B.basis[b]}_(1) |> {A.basis[a1]})({B.basis[b]}_(2) |> {A.basis[a2]})",
                   triple=[b, a1, a2])
    else:
        report.add("leibniz", True)
    for b in range(B.dim):
        img = {}
        for a, c in enumerate(A.unit):
            if c:
                siadd(img, MA.act_basis(b, a), c)
        expect = {a: B.counit[b] * c for a, c in enumerate(A.unit) if c and B.counit[b]}
        if img != expect:
            report.add("unit_preserved", False, f"{B.basis[b]} |> 1 != eps({B.basis[b]})1", index=b)
            break
    else:
        report.add("unit_preserved", True)
    return report


def transport_module_algebra(MA, P, name=None):
    """Rewrite (A, |>) in the basis of A given by the columns of invertible P."""
    from ..linalg import matvec
    A = MA.A
    n = A.dim
    Pi = inverse(P)
    cols = [[P[r][j] for r in range(n)] for j in range(n)]
    mult = [[matvec(Pi, A.mul_vec(cols[i], cols[j])) for j in range(n)] for i in range(n)]
    unit = matvec(Pi, A.unit)
    basis = ["1" if cols[j] == A.unit else f"a{j}" for j in range(n)]
    A2 = FinDimAlgebra(basis, mult, unit, A.field, name=name or A.name)
    act = transport_module(MA.act, P, A2.name)
    act.basis = list(basis)
    act._index = {b: i for i, b in enumerate(basis)}
    return ModuleAlgebra(A2, MA.B, act, name or MA.name)


# -- relative Hopf modules ------------------------------------------------------------

class RelativeHopfModule:
    """A left E-module with a compatible right B-coaction."""

    def __init__(self, EA, mod, comod, name=None):
        if mod.over is not EA.E or comod.B is not EA.B or mod.dim != comod.dim:
            raise DimensionMismatch("module/comodule do not match the comodule algebra")
        self.EA = EA
        self.mod = mod
        self.comod = comod
        self.dim = mod.dim
        self.basis = mod.basis
        self.name = name or mod.name

    def __repr__(self):
        return f"<RelativeHopfModule {self.name} dim={self.dim}>"

    @property
    def E(self):
        return self.EA.E

    @property
    def B(self):
        return self.EA.B


def hopf_compatibility_failure(EA, mod, comod):
    """First (e, n) with rho(e n) != e0 n0 (x) e1 n1, or None."""
    E, B = EA.E, EA.B
    for e in range(E.dim):
        for n in range(mod.dim):
            lhs = {}
            for m, c in mod.act_basis(e, n).items():
                siadd(lhs, comod.coaction[m], c)
            rhs = {}
            for (e0, e1), c in EA.rho[e].items():
                for (n0, n1), d in comod.coaction[n].items():
                    for m, x in mod.act_basis(e0, n0).items():
                        for b, y in B._prod(e1, n1):
                            siadd(rhs, {(m, b): ONE}, c * d * x * y)
            if lhs != rhs:
                return e, n, lhs, rhs
    return None


def check_hopf_module(N):
    report = LawReport(f"{N.name} is a relative ({N.E.name}, {N.B.name})-Hopf module")
    report.extend(check_left_module(N.mod), prefix="module_")
    check_right_comodule(N.comod, report, prefix="comodule_")
    bad = hopf_compatibility_failure(N.EA, N.mod, N.comod)
    if bad:
        e, n, lhs, rhs = bad
        report.add("compatibility", False,
                   f"rho({N.E.basis[e]}.{N.basis[n]}) = {tensor_str((N.mod, N.B), lhs)} but "
                   f"e0 n0 (x) e1 n1 = {tensor_str((N.mod, N.B), rhs)}", pair=[e, n])
    else:
        report.add("compatibility", True)
    return report


def regular_hopf_module(EA, name=None):
    """E itself, acting on itself and coacting by rho."""
    mod = regular_module(EA.E, name or EA.E.name)
    comod = RightComodule(EA.B, [dict(d) for d in EA.rho], list(EA.E.basis), mod.name)
    return RelativeHopfModule(EA, mod, comod, name or EA.E.name)


def free_hopf_module(EA, V, name=None):
    """E (x) V for a B-comodule V: e'(e (x) v) = e'e (x) v, rho = e0 (x) v0 (x) e1 v1."""
    E, B = EA.E, EA.B
    nv = V.dim
    d = E.dim * nv
    cols = []
    for i in range(E.dim):
        row = []
        for j in range(d):
            e, v = divmod(j, nv)
            row.append({r * nv + v: c for r, c in E._prod(i, e)})
        cols.append(row)
    basis = [f"{a}(x){b}" for a in E.basis for b in V.basis]
    mod = LeftModule.from_columns(E, cols, d, basis, name or f"{E.name}(x){V.name}")
    co = []
    for j in range(d):
        e, v = divmod(j, nv)
        out = {}
        for (e0, e1), c in EA.rho[e].items():
            for (v0, v1), x in V.coaction[v].items():
                for r, y in B._prod(e1, v1):
                    siadd(out, {(e0 * nv + v0, r): ONE}, c * x * y)
        co.append(out)
    comod = RightComodule(B, co, basis, mod.name)
    return RelativeHopfModule(EA, mod, comod, mod.name)


def hopf_direct_sum(M, N, name=None):
    mod = direct_sum(M.mod, N.mod, name)
    comod = comodule_direct_sum(M.comod, N.comod, name)
    comod.basis = mod.basis
    return RelativeHopfModule(M.EA, mod, comod, mod.name)


def transport_hopf_module(N, P, name=None):
    mod = transport_module(N.mod, P, name or N.name)
    comod = transport_comodule(N.comod, P, name or N.name)
    return RelativeHopfModule(N.EA, mod, comod, name or N.name)


def with_trivial_coaction(mod, B, name=None):
    """Over B = k (or for modules of a trivially coacting E): n -> n (x) 1."""
    comod = trivial_comodule(B, mod.dim, mod.name)
    comod.basis = mod.basis
    return comod
