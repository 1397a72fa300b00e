"""Distributive laws between the monad A (x) - on vector spaces and a monoidal action.

Two kinds are built from Sweedler formulas:

* comodule algebras (E, rho) and left B-modules Q:
  ``e_(0) (x) m (x) e_(1) |> q``
* module algebras (A, |>) and right B-comodules Q:
  ``q_(1) |> a (x) m (x) q_(0)``

Components are matrices on A (x) M (x) Q with index (a * dim M + m) * dim Q + q.
"""

from __future__ import annotations

import enum
import random

from ..algebra.core import Element, unit_vector
from ..exactfield import ONE, ZERO, Scalar
from ..linalg import identity, kron, matmul
from ..reports import LawReport
from ..sweedler import Structures, eval_expr, parse_expr
from .. import actions as act

COMODULE_FORMULA = "e_(0) (x) m (x) e_(1) |> q"
MODULE_FORMULA = "q_(1) |> a (x) m (x) q_(0)"


class Kind(str, enum.Enum):
    COMODULE_ALG = "COMODULE_ALG"
    MODULE_ALG = "MODULE_ALG"
    LOCALIZATION = "LOCALIZATION"


class Space:
    """A plain vector space k^n used as the M argument of a component."""

    def __init__(self, dim, basis=None, name=None):
        self.dim = dim
        self.basis = list(basis) if basis is not None else [f"m{i}" for i in range(dim)]
        self.name = name or f"k^{dim}"
        self._index = {b: i for i, b in enumerate(self.basis)}

    def __repr__(self):
        return f"<Space {self.name}>"

    def index(self, name):
        return self._index[name]


def _tensor_space(X, Y):
    return Space(X.dim * Y.dim, [f"{a}(x){b}" for a in X.basis for b in Y.basis],
                 f"{X.name}(x){Y.name}")


class DistLaw:
    """l_{M,Q}: A (x) (M (x) Q) -> (A (x) M) (x) Q from a formula in variables (avar, m, q)."""

    def __init__(self, kind, A, B, formula, structures, objects, avar, name=None):
        self.kind = kind
        self.A = A
        self.B = B
        self.formula = formula
        self.expr = parse_expr(formula)
        self.structures = structures
        self.objects = objects
        self.avar = avar
        self.name = name or f"l[{A.name}]"
        self._cache = {}

    def __repr__(self):
        return f"<DistLaw {self.kind.value} {self.name}>"

    def component(self, M, Q):
        key = (id(M), id(Q))
        hit = self._cache.get(key)
        if hit is not None:
            return hit[0]
        A = self.A
        n = A.dim * M.dim * Q.dim
        mat = [[ZERO] * n for _ in range(n)]
        col = 0
        for a in range(A.dim):
            for m in range(M.dim):
                for q in range(Q.dim):
                    val = eval_expr(self.expr, {
                        self.avar: Element(A, unit_vector(A.dim, a)),
                        "m": Element(M, unit_vector(M.dim, m)),
                        "q": Element(Q, unit_vector(Q.dim, q)),
                    }, self.structures)
                    if not isinstance(val, Scalar):
                        if tuple(C.dim for C in val.carriers) != (A.dim, M.dim, Q.dim):
                            raise act.CompatibilityFail(
                                f"{self.formula!r} does not land in A (x) M (x) Q")
                        for (x, y, z), c in val.coeffs.items():
                            mat[(x * M.dim + y) * Q.dim + z][col] = c
                    col += 1
        self._cache[key] = (mat, M, Q)
        return mat

    def element(self, M, Q, a, m, q):
        return f"{self.A.basis[a]} (x) {M.basis[m]} (x) {Q.basis[q]}"


class ModuleObjects:
    """Left B-modules with the diagonal tensor product."""

    def __init__(self, B):
        self.B = B

    def tensor(self, Q1, Q2):
        return act.tensor_module(self.B, Q1, Q2)

    def unit(self):
        return act.trivial_module(self.B)

    def diagonal(self, Q):
        """Q -> Q + Q, q -> (q, q), and the sum as an object."""
        return act.direct_sum(Q, Q), _diagonal_matrix(Q.dim)

    def is_morphism(self, h, Q1, Q2):
        return act.modules.is_module_map(h, Q1, Q2)


class ComoduleObjects:
    """Right B-comodules with the codiagonal tensor product."""

    def __init__(self, B):
        self.B = B

    def tensor(self, Q1, Q2):
        return act.comodule_tensor(self.B, Q1, Q2)

    def unit(self):
        return act.trivial_comodule(self.B)

    def diagonal(self, Q):
        return act.comodule_direct_sum(Q, Q), _diagonal_matrix(Q.dim)

    def is_morphism(self, h, Q1, Q2):
        return act.modules.is_comodule_map(h, Q1, Q2)


def _diagonal_matrix(n):
    return [[ONE if j == i % n else ZERO for j in range(n)] for i in range(2 * n)]


def distlaw_comodule_algebra(EA, formula=COMODULE_FORMULA, name=None):
    structs = Structures().add_coaction(EA.E, EA.B, EA.coact_basis)
    return DistLaw(Kind.COMODULE_ALG, EA.E, EA.B, formula, structs, ModuleObjects(EA.B), "e",
                   name or f"l[{EA.name}]")


def distlaw_module_algebra(MA, formula=MODULE_FORMULA, name=None):
    structs = Structures().add_action("A", MA.B, MA.A, MA.act_basis)
    return DistLaw(Kind.MODULE_ALG, MA.A, MA.B, formula, structs, ComoduleObjects(MA.B), "a",
                   name or f"l[{MA.name}]")


def _mu(A, X):
    """Multiplication A (x) A (x) X -> A (x) X."""
    n = A.dim
    mu = [[ZERO] * (n * n) for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for r, c in A._prod(i, j):
                mu[r][i * n + j] = c
    return kron(mu, identity(X))


def _eta(A, X):
    u = [[c] for c in A.unit]
    return kron(u, identity(X))


def _first_column(P, R):
    for j in range(len(P[0]) if P else 0):
        if any(P[i][j] != R[i][j] for i in range(len(P))):
            return j
    return None


def _describe(l, M, Q, col):
    a, rest = divmod(col, M.dim * Q.dim)
    m, q = divmod(rest, Q.dim)
    return l.element(M, Q, a, m, q)


def check_distlaw(l, test_modules, spaces=None, seed=0):
    """Both pentagons, both triangles and naturality of l on the supplied objects.

    ``test_modules`` are objects of the acting category (B-modules or
    B-comodules); ``spaces`` are the vector spaces M (default k and k^2).
    """
    A = l.A
    objs = l.objects
    spaces = spaces or [Space(1), Space(2)]
    rng = random.Random(seed)
    report = LawReport(f"{l.name} is a distributive law")
    found = {}

    def fail(law, msg, **detail):
        if law not in found:
            found[law] = (msg, detail)

    unit_obj = objs.unit()
    for M in spaces:
        for Q in test_modules:
            lMQ = l.component(M, Q)
            n = M.dim * Q.dim
            # pentagon2: compatibility with the multiplication of the monad
            AM = _tensor_space(Space(A.dim, A.basis, A.name), M)
            lhs = matmul(lMQ, _mu(A, n))
            rhs = matmul(_mu(A, n), matmul(l.component(AM, Q), kron(identity(A.dim), lMQ)))
            j = _first_column(lhs, rhs)
            if j is not None:
                a1, rest = divmod(j, A.dim * n)
                a2, rest = divmod(rest, n)
                m, q = divmod(rest, Q.dim)
                fail("pentagon2", f"l(mu) != mu l (A l) at {A.basis[a1]} (x) {A.basis[a2]} (x) "
                                  f"{M.basis[m]} (x) {Q.basis[q]}")
            # unit triangle: l eta = eta
            j = _first_column(matmul(lMQ, _eta(A, n)), _eta(A, n))
            if j is not None:
                m, q = divmod(j, Q.dim)
                fail("unit_triangle", f"l(1 (x) {M.basis[m]} (x) {Q.basis[q]}) != "
                                      f"1 (x) {M.basis[m]} (x) {Q.basis[q]}")
            # pentagon1: compatibility with the tensor product of the acting category
            for Q2 in test_modules:
                QQ = objs.tensor(Q, Q2)
                lhs = l.component(M, QQ)
                MQ = _tensor_space(M, Q)
                rhs = matmul(kron(lMQ, identity(Q2.dim)), l.component(MQ, Q2))
                j = _first_column(lhs, rhs)
                if j is not None:
                    fail("pentagon1", f"l[M,Q(x)Q'] != (l (x) Q') l[M(x)Q,Q'] at "
                                      f"{_describe(l, M, QQ, j)}")
            # naturality in Q along the diagonal Q -> Q + Q
            QQ, h = objs.diagonal(Q)
            if objs.is_morphism(h, Q, QQ):
                H = kron(identity(A.dim * M.dim), h)
                j = _first_column(matmul(H, lMQ), matmul(l.component(M, QQ), H))
                if j is not None:
                    fail("naturality", f"l not natural in Q at {_describe(l, M, Q, j)}")
        # counit triangle: l at the unit object is the identity
        lM1 = l.component(M, unit_obj)
        j = _first_column(lM1, identity(len(lM1)))
        if j is not None:
            fail("counit_triangle", f"l[M,1] != id at {_describe(l, M, unit_obj, j)}")
        # naturality in M along a random linear map
        for Q in test_modules[:1]:
            M2 = Space(M.dim + 1)
            h = [[Scalar(rng.randint(-2, 2)) for _ in range(M.dim)] for _ in range(M2.dim)]
            H = kron(kron(identity(A.dim), h), identity(Q.dim))
            j = _first_column(matmul(H, l.component(M, Q)), matmul(l.component(M2, Q), H))
            if j is not None:
                fail("naturality", f"l not natural in M at {_describe(l, M, Q, j)}")
    for law in ("pentagon1", "pentagon2", "counit_triangle", "unit_triangle", "naturality"):
        if law in found:
            report.add(law, False, found[law][0], **found[law][1])
        else:
            report.add(law, True)
    return report
