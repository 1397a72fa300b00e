"""Extension of scalars along algebra maps, materialised as explicit quotients.

For f: E -> F and a left E-module M, ``F (x)_E M`` is the quotient of
F (x) M (keys ``(y, m)``) by the relations ``y f(x) (x) m - y (x) x.m`` for
x running over algebra generators of E.  Its basis is the set of keys that
are not pivots of the relation echelon; keys are ordered with larger y
first so that classes of ``1 (x) m`` tend to survive as basis vectors.
"""

from __future__ import annotations

from ..algebra.core import NotAlgebraMap, unit_vector
from ..exactfield import ONE, ZERO
from ..linalg import DimensionMismatch, NonInvertible, QuotientSpace, inverse, siadd
from .modules import LeftModule, _matrix_from_columns


class _Lazy:
    def __init__(self, n, fn):
        self._n = n
        self._fn = fn
        self._cache = {}

    def __len__(self):
        return self._n

    def __getitem__(self, i):
        if i < 0:
            i += self._n
        if not 0 <= i < self._n:
            raise IndexError(i)
        hit = self._cache.get(i)
        if hit is None:
            hit = self._cache[i] = self._fn(i)
        return hit

    def __iter__(self):
        return (self[i] for i in range(self._n))


class LazyModule(LeftModule):
    """A left module whose action columns are computed per basis vector on demand."""

    def __init__(self, over, dim, basis, name, column_fn):
        self.over = over
        self.dim = dim
        self.basis = list(basis)
        self.name = name
        self._index = {b: i for i, b in enumerate(self.basis)}
        self._cols = _Lazy(over.dim, column_fn)
        self.action = _Lazy(over.dim, lambda i: _matrix_from_columns(self._cols[i], dim))


class AlgebraMap:
    """A linear map between algebras given by sparse images of basis vectors."""

    def __init__(self, source, target, columns, name="f"):
        if len(columns) != source.dim:
            raise DimensionMismatch(f"{name}: need {source.dim} columns")
        self.source = source
        self.target = target
        self.columns = [{k: x for k, x in c.items() if x} for c in columns]
        self.name = name

    def __repr__(self):
        return f"<AlgebraMap {self.name}: {self.source.name} -> {self.target.name}>"

    def apply(self, v):
        """Image of a sparse (dict) or dense (list) vector, as a dict."""
        items = v.items() if isinstance(v, dict) else enumerate(v)
        out = {}
        for i, a in items:
            if a:
                siadd(out, self.columns[i], a)
        return out

    def compose(self, inner, name=None):
        """self o inner."""
        if inner.target is not self.source and inner.target.dim != self.source.dim:
            raise DimensionMismatch("maps are not composable")
        return AlgebraMap(inner.source, self.target,
                          [self.apply(c) for c in inner.columns],
                          name or f"{self.name}.{inner.name}")

    def __eq__(self, other):
        return isinstance(other, AlgebraMap) and self.columns == other.columns

    def __hash__(self):
        return id(self)

    def first_failure(self):
        """First failure of unitality/multiplicativity, as a message, or None."""
        A, F = self.source, self.target
        if self.apply(A.unit) != {i: x for i, x in enumerate(F.unit) if x}:
            return f"{self.name}(1) != 1"
        for g in A.generators:
            fg = _dense(self.columns[g], F.dim)
            for j in range(A.dim):
                lhs = self.apply(dict(A._prod(g, j)))
                rhs = {i: x for i, x in enumerate(F.mul_vec(fg, _dense(self.columns[j], F.dim))) if x}
                if lhs != rhs:
                    return (f"{self.name}({A.basis[g]}*{A.basis[j]}) != "
                            f"{self.name}({A.basis[g]}){self.name}({A.basis[j]})")
        return None

    def is_algebra_map(self):
        return self.first_failure() is None


def identity_map(A, name="id"):
    return AlgebraMap(A, A, [{i: ONE} for i in range(A.dim)], name)


def _dense(d, n):
    v = [ZERO] * n
    for k, x in d.items():
        v[k] = x
    return v


class ExtendedModule:
    """``F (x)_E M`` for f: E -> F, with its quotient presentation."""

    def __init__(self, f, M, check=True, name=None):
        if M.over is not f.source and M.over.dim != f.source.dim:
            raise DimensionMismatch("module is not over the source of the map")
        if check:
            msg = f.first_failure()
            if msg:
                raise NotAlgebraMap(msg)
        self.f = f
        self.M = M
        F = f.target
        self.F = F
        keys = [(y, m) for y in reversed(range(F.dim)) for m in range(M.dim)]
        self.quotient = QuotientSpace(keys)
        E = f.source
        fcols = [_dense(c, F.dim) for c in f.columns]
        for x in E.generators:
            fx = fcols[x]
            for y in range(F.dim):
                yfx = F.mul_vec(unit_vector(F.dim, y), fx)
                for m in range(M.dim):
                    rel = {}
                    for r, c in enumerate(yfx):
                        if c:
                            rel[(r, m)] = c
                    for mm, c in M.act_basis(x, m).items():
                        siadd(rel, {(y, mm): ONE}, -c)
                    if rel:
                        self.quotient.add_relation(rel)
        self.basis_keys = self.quotient.basis
        self.dim = len(self.basis_keys)
        names = [f"[{F.basis[y]}|{M.basis[m]}]" for (y, m) in self.basis_keys]
        self.module = LazyModule(F, self.dim, names, name or f"{f.name}*{M.name}",
                                 self._action_columns)

    def _action_columns(self, i):
        F = self.F
        row = []
        for (y, m) in self.basis_keys:
            amb = {(r, m): c for r, c in F._prod(i, y)}
            row.append(_sparse(self.quotient.project(amb)))
        return row

    def __repr__(self):
        return f"<ExtendedModule {self.module.name} dim={self.dim}>"

    def project(self, amb):
        """Quotient coordinates (dense) of an ambient dict {(y, m): c}."""
        return self.quotient.project(amb)

    def cls(self, y, m):
        return self.quotient.project({(y, m): ONE})

    def lift(self, k):
        return self.basis_keys[k]


def _sparse(v):
    return {i: x for i, x in enumerate(v) if x}


def extension_of_scalars(f, M, check=True):
    """Return the ExtendedModule F (x)_E M (its ``.module`` is the F-module)."""
    return ExtendedModule(f, M, check)


class ModuleMap:
    """A linear map between modules as a dense matrix (rows = target)."""

    def __init__(self, source, target, matrix, name="h"):
        if len(matrix) != target.dim or any(len(r) != source.dim for r in matrix):
            raise DimensionMismatch(f"{name}: expected a {target.dim}x{source.dim} matrix")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.name = name

    def col(self, j):
        return {i: self.matrix[i][j] for i in range(self.target.dim) if self.matrix[i][j]}

    def compose(self, inner, name=None):
        from ..linalg import matmul
        return ModuleMap(inner.source, self.target, matmul(self.matrix, inner.matrix),
                         name or f"{self.name}.{inner.name}")

    def inverse(self, name=None):
        return ModuleMap(self.target, self.source, inverse(self.matrix), name or f"{self.name}^-1")

    def is_invertible(self):
        if self.source.dim != self.target.dim:
            return False
        try:
            inverse(self.matrix)
        except NonInvertible:
            return False
        return True

    def is_linear_over(self, A):
        """A-linearity on algebra generators (modules must be LeftModules over A)."""
        from ..linalg import matmul
        for i in A.generators:
            if matmul(self.target.action[i], self.matrix) != matmul(self.matrix, self.source.action[i]):
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, ModuleMap) and self.matrix == other.matrix

    def __hash__(self):
        return id(self)


def _map_from_columns(source, target, cols, name):
    m = [[ZERO] * source.dim for _ in range(target.dim)]
    for j, c in enumerate(cols):
        for i, x in enumerate(c):
            m[i][j] = x
    return ModuleMap(source, target, m, name)


def pullback_map(g, ext_src, ext_tgt, h):
    """g*(h): g*N -> g*N' for a module map h: N -> N' (matrix)."""
    cols = []
    for (z, n) in ext_src.basis_keys:
        amb = {}
        for i in range(len(h)):
            if h[i][n]:
                amb[(z, i)] = h[i][n]
        cols.append(ext_tgt.project(amb))
    return _map_from_columns(ext_src.module, ext_tgt.module, cols, f"{g.name}*(h)")


def composition_iso(gfm, inner_ext, composite_ext):
    """g*(f*M) -> (g o f)*M, [z (x) [y (x) m]] -> [z g(y) (x) m].

    ``gfm`` is the extension of ``inner_ext.module`` (= f*M) along g and
    ``composite_ext`` the extension of M along g o f.
    """
    g = gfm.f
    G = g.target
    cols = []
    for (z, k) in gfm.basis_keys:
        y, m = inner_ext.lift(k)
        zgy = G.mul_vec(unit_vector(G.dim, z), _dense(g.columns[y], G.dim))
        amb = {(r, m): c for r, c in enumerate(zgy) if c}
        cols.append(composite_ext.project(amb))
    return _map_from_columns(gfm.module, composite_ext.module, cols,
                             f"iso[{g.name}*{inner_ext.f.name}*]")


def nat_iso(ext_p, B):
    """p*M -> M (x) B for p(e) = e (x) 1: [(e (x) b) (x) m] -> e.m (x) b.

    Returns the matrix (rows indexed m * dim B + b).
    """
    M = ext_p.M
    nb = B.dim
    rows = M.dim * nb
    cols = []
    for (y, m) in ext_p.basis_keys:
        e, b = divmod(y, nb)
        out = [ZERO] * rows
        for mm, c in M.act_basis(e, m).items():
            out[mm * nb + b] = out[mm * nb + b] + c
        cols.append(out)
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(rows)]
    return mat


def identity_iso(ext_id):
    """id*M -> M, [y (x) m] -> y.m."""
    M = ext_id.M
    cols = []
    for (y, m) in ext_id.basis_keys:
        cols.append(_dense(M.act_basis(y, m), M.dim))
    return _map_from_columns(ext_id.module, M, cols, "iso[id*]")
