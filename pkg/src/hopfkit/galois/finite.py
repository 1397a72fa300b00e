"""Coinvariants, the canonical map E (x)_U E -> E (x) B, and smash products."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..actions.modules import ComoduleAlgebra, tensor_str
from ..algebra.core import FinDimAlgebra, check_algebra_laws, format_vector, unit_vector
from ..exactfield import ONE, ZERO
from ..fpalg.core import NFElement
from ..linalg import Echelon, QuotientSpace, nullspace, rank, siadd, sparse_kernel
from ..reports import LawReport, Status


class Verdict(str, enum.Enum):
    BIJECTIVE = "BIJECTIVE"
    NOT_INJECTIVE = "NOT_INJECTIVE"
    NOT_SURJECTIVE = "NOT_SURJECTIVE"
    INCONCLUSIVE = "INCONCLUSIVE"

    @property
    def status(self):
        if self is Verdict.BIJECTIVE:
            return Status.PASS
        if self is Verdict.INCONCLUSIVE:
            return Status.INCONCLUSIVE
        return Status.FAIL


@dataclass
class Coinvariants:
    """A basis of E^{co B} as coefficient vectors, with the multiplicative closure check."""

    EA: object
    basis: list
    closed: bool

    @property
    def dim(self):
        return len(self.basis)

    def names(self):
        return [format_vector(v, self.EA.E.basis) for v in self.basis]


@dataclass
class FPCoinvariants:
    """Coinvariants of a presented comodule algebra among elements of degree <= D."""

    EA: object
    basis: list
    closed: bool
    degree: int

    @property
    def dim(self):
        return len(self.basis)

    def names(self):
        return [str(NFElement(self.EA.E, t)) for t in self.basis]


def _fp_coinvariants(EA, D):
    E = EA.E
    D = E.bound if D is None else D
    monos = list(E.normal_monomials(D))
    cols = []
    for m in monos:
        col = dict(EA.rho.apply_word(m))
        siadd(col, {(m, ()): -ONE})
        cols.append(col)
    basis, ech = [], Echelon()
    for combo in sparse_kernel(cols):
        elt = {}
        for i, c in combo.items():
            siadd(elt, {monos[i]: c})
        if elt and ech.add(elt):
            basis.append(elt)
    closed = True
    for u in basis:
        for v in basis:
            w = E.mul_terms(u, v, 2 * D)
            if max((E.degree(x) for x in w), default=0) <= D and not ech.contains(w):
                closed = False
    return FPCoinvariants(EA, basis, closed, D)


def coinvariants(EA, D=None):
    """Kernel of rho - id (x) 1 on E (on elements of degree <= D for presented algebras)."""
    if not hasattr(EA.E, "mul_vec"):
        return _fp_coinvariants(EA, D)
    E, B = EA.E, EA.B
    rows = {}
    for i in range(E.dim):
        col = dict(EA.rho[i])
        siadd(col, {(i, b): -c for b, c in enumerate(B.unit) if c})
        for key, c in col.items():
            rows.setdefault(key, [ZERO] * E.dim)[i] = c
    basis = nullspace(list(rows.values()), E.dim)
    closed = True
    span = basis
    for u in basis:
        for v in basis:
            w = E.mul_vec(u, v)
            if rank(span + [w]) > len(span):
                closed = False
    return Coinvariants(EA, basis, closed)


@dataclass
class CanonicalMapReport:
    subject: str
    verdict: Verdict
    domain_dim: int
    codomain_dim: int
    rank: int
    coinvariants: list
    kernel_witness: str | None = None
    cokernel_witness: str | None = None
    matrix: list = field(default_factory=list, repr=False)
    notes: list = field(default_factory=list)

    @property
    def injective(self):
        return self.rank == self.domain_dim

    @property
    def surjective(self):
        return self.rank == self.codomain_dim

    @property
    def status(self):
        return self.verdict.status

    def to_json(self):
        return {
            "subject": self.subject,
            "verdict": self.verdict.value,
            "status": self.status.value,
            "domain_dim": self.domain_dim,
            "codomain_dim": self.codomain_dim,
            "rank": self.rank,
            "injective": self.injective,
            "surjective": self.surjective,
            "coinvariants": list(self.coinvariants),
            "kernel_witness": self.kernel_witness,
            "cokernel_witness": self.cokernel_witness,
            "notes": list(self.notes),
        }


def balanced_tensor(E, U):
    """E (x)_U E as a quotient of E (x) E by (e u) (x) e' - e (x) (u e')."""
    keys = [(i, j) for i in range(E.dim) for j in range(E.dim)]
    Q = QuotientSpace(keys)
    for u in U:
        for i in range(E.dim):
            left = E.mul_vec(unit_vector(E.dim, i), u)
            for j in range(E.dim):
                right = E.mul_vec(u, unit_vector(E.dim, j))
                rel = {}
                siadd(rel, {(k, j): c for k, c in enumerate(left) if c})
                siadd(rel, {(i, k): -c for k, c in enumerate(right) if c})
                if rel:
                    Q.add_relation(rel)
    return Q


def can_image(EA, i, j):
    """can(e_i (x) e_j) = e_i(0) e_j (x) e_i(1) as {(k, b): c}."""
    E = EA.E
    out = {}
    for (k, b), c in EA.rho[i].items():
        for r, d in E._prod(k, j):
            siadd(out, {(r, b): c * d})
    return out


def canonical_map(EA, U=None):
    """Exact rank of can on E (x)_U E with U the coinvariants (computed unless given)."""
    E, B = EA.E, EA.B
    co = coinvariants(EA) if U is None else None
    U = co.basis if U is None else U
    Q = balanced_tensor(E, U)
    rows = [(k, b) for k in range(E.dim) for b in range(B.dim)]
    ridx = {key: n for n, key in enumerate(rows)}
    mat = [[ZERO] * Q.dim for _ in rows]
    for col, (i, j) in enumerate(Q.basis):
        for key, c in can_image(EA, i, j).items():
            mat[ridx[key]][col] = c
    r = rank(mat) if mat and Q.dim else 0
    names = [format_vector(u, E.basis) for u in U]
    report = CanonicalMapReport(f"canonical map of {EA.name}", Verdict.BIJECTIVE, Q.dim,
                                len(rows), r, names, matrix=mat)
    if r < Q.dim:
        report.verdict = Verdict.NOT_INJECTIVE
        v = nullspace(mat, Q.dim)[0]
        amb = {}
        for col, x in enumerate(v):
            if x:
                siadd(amb, {Q.basis[col]: x})
        report.kernel_witness = tensor_str((E, E), amb)
    elif r < len(rows):
        report.verdict = Verdict.NOT_SURJECTIVE
    if r < len(rows):
        # a codomain basis vector outside the image
        base = rank(mat)
        for n, (k, b) in enumerate(rows):
            probe = [row[:] for row in mat]
            for m, row in enumerate(probe):
                row.append(ONE if m == n else ZERO)
            if rank(probe) > base:
                report.cokernel_witness = tensor_str((E, B), {(k, b): ONE})
                break
    if co is not None and not co.closed:
        report.notes.append("coinvariant span not closed under multiplication")
    return report


class SmashProduct:
    """A # B with (u#b)(u'#b') = u (b_(1) |> u') # b_(2) b'."""

    def __init__(self, MA, name=None):
        self.MA = MA
        A, B = MA.A, MA.B
        self.A, self.B = A, B
        nb = B.dim
        basis = [f"{a}#{b}" for a in A.basis for b in B.basis]
        n = len(basis)
        mult = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for i in range(A.dim):
            for j in range(nb):
                for k in range(A.dim):
                    for l in range(nb):
                        out = mult[i * nb + j][k * nb + l]
                        for (j1, j2), c in B.comult[j].items():
                            for k2, d in MA.act_basis(j1, k).items():
                                for r, e in A._prod(i, k2):
                                    for s, f in B._prod(j2, l):
                                        out[r * nb + s] = out[r * nb + s] + c * d * e * f
        unit = [ZERO] * n
        for i, a in enumerate(A.unit):
            for j, b in enumerate(B.unit):
                if a and b:
                    unit[i * nb + j] = a * b
        self.algebra = FinDimAlgebra(basis, mult, unit, A.field, name or f"{A.name}#{B.name}")
        rho = []
        for i in range(A.dim):
            for j in range(nb):
                rho.append({(i * nb + j1, j2): c for (j1, j2), c in B.comult[j].items()})
        self.comodule_algebra = ComoduleAlgebra(self.algebra, B, rho, f"({self.algebra.name}, id (x) Delta)")

    def __repr__(self):
        return f"<SmashProduct {self.algebra.name}>"

    def embed_a(self, v):
        nb = self.B.dim
        out = [ZERO] * self.algebra.dim
        for i, a in enumerate(v):
            for j, b in enumerate(self.B.unit):
                if a and b:
                    out[i * nb + j] = a * b
        return out

    def embed_b(self, v):
        nb = self.B.dim
        out = [ZERO] * self.algebra.dim
        for i, a in enumerate(self.A.unit):
            for j, b in enumerate(v):
                if a and b:
                    out[i * nb + j] = a * b
        return out

    def check(self):
        P = self.algebra
        report = LawReport(f"smash product {P.name}")
        report.extend(check_algebra_laws(P))
        for label, X, emb in (("embeds_A", self.A, self.embed_a), ("embeds_B", self.B, self.embed_b)):
            bad = None
            for i in range(X.dim):
                for j in range(X.dim):
                    ei, ej = unit_vector(X.dim, i), unit_vector(X.dim, j)
                    if P.mul_vec(emb(ei), emb(ej)) != emb(X.mul_vec(ei, ej)):
                        bad = f"{X.basis[i]} * {X.basis[j]}"
                        break
                if bad:
                    break
            report.add(label, bad is None, bad and f"embedding not multiplicative at {bad}")
        return report


def smash_product(MA, name=None):
    return SmashProduct(MA, name)
