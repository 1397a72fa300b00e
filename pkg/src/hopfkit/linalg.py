"""Exact linear algebra over :class:`~hopfkit.exactfield.Scalar`.

Dense matrices are lists of rows.  A matrix ``A`` of shape (m, n) is a
linear map from column vectors of length n to length m.  Sparse vectors
are dicts mapping an orderable key to a nonzero Scalar.
"""

from __future__ import annotations

import heapq

from .exactfield import ONE, ZERO, DivisionByZero, Scalar


class DimensionMismatch(ValueError):
    pass


class NonInvertible(ArithmeticError):
    pass


# -- dense ------------------------------------------------------------------

def zeros(m, n):
    return [[ZERO] * n for _ in range(m)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = ONE
    return out


def shape(A):
    return len(A), (len(A[0]) if A else 0)


def matmul(A, B):
    m, k = shape(A)
    k2, n = shape(B)
    if k != k2 and m and k2:
        raise DimensionMismatch(f"cannot multiply {m}x{k} by {k2}x{n}")
    out = zeros(m, n)
    for i in range(m):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(n):
                    b = Bt[j]
                    if b:
                        row[j] = row[j] + a * b
    return out


def matvec(A, v):
    out = []
    for row in A:
        acc = ZERO
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def matsub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matadd(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matscale(A, c):
    return [[a * c for a in row] for row in A]


def is_zero_matrix(A):
    return all(not x for row in A for x in row)


def kron(A, B):
    """Kronecker product; row (i, k) -> i * rows(B) + k."""
    ma, na = shape(A)
    mb, nb = shape(B)
    out = zeros(ma * mb, na * nb)
    for i in range(ma):
        for j in range(na):
            a = A[i][j]
            if not a:
                continue
            for k in range(mb):
                Bk = B[k]
                row = out[i * mb + k]
                for t in range(nb):
                    b = Bk[t]
                    if b:
                        row[j * nb + t] = a * b
    return out


def rref(A):
    """Reduced row echelon form.  Returns (R, pivots)."""
    R = [list(r) for r in A]
    m, n = shape(R)
    pivots = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        p = None
        for i in range(r, m):
            if R[i][c]:
                p = i
                break
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = R[r][c].inv()
        R[r] = [x * inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                Ri, Rr = R[i], R[r]
                R[i] = [x - f * y if y else x for x, y in zip(Ri, Rr)]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A):
    if not A:
        return 0
    ech = Echelon()
    for row in A:
        ech.add({j: x for j, x in enumerate(row) if x})
    return ech.rank


def nullspace(A, ncols=None):
    """Basis of {x : A x = 0} as a list of dense vectors."""
    n = ncols if ncols is not None else shape(A)[1]
    if not A:
        basis = []
        for j in range(n):
            v = [ZERO] * n
            v[j] = ONE
            basis.append(v)
        return basis
    R, piv = rref(A)
    free = [j for j in range(n) if j not in set(piv)]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def solve(A, b):
    """One solution x of A x = b, or None when inconsistent."""
    m, n = shape(A)
    aug = [list(A[i]) + [b[i]] for i in range(m)]
    R, piv = rref(aug)
    if n in piv:
        return None
    x = [ZERO] * n
    for i, p in enumerate(piv):
        x[p] = R[i][n]
    return x


def inverse(A):
    m, n = shape(A)
    if m != n:
        raise NonInvertible(f"non-square {m}x{n} matrix")
    aug = [list(A[i]) + identity(n)[i] for i in range(n)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise NonInvertible("singular matrix")
    return [row[n:] for row in R]


def determinant(A):
    m, n = shape(A)
    if m != n:
        raise DimensionMismatch("determinant of non-square matrix")
    R = [list(r) for r in A]
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if R[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            R[c], R[p] = R[p], R[c]
            det = -det
        det = det * R[c][c]
        inv = R[c][c].inv()
        for i in range(c + 1, n):
            if R[i][c]:
                f = R[i][c] * inv
                R[i] = [x - f * y for x, y in zip(R[i], R[c])]
    return det


# -- sparse -----------------------------------------------------------------

def sadd(u, v, c=ONE):
    """Return u + c*v for sparse vectors (new dict)."""
    out = dict(u)
    if not c:
        return out
    for k, x in v.items():
        y = out.get(k)
        z = x * c if y is None else y + x * c
        if z:
            out[k] = z
        elif y is not None:
            del out[k]
    return out


def siadd(u, v, c=ONE):
    """In-place u += c*v."""
    if not c:
        return u
    for k, x in v.items():
        y = u.get(k)
        z = x * c if y is None else y + x * c
        if z:
            u[k] = z
        elif y is not None:
            del u[k]
    return u


def sscale(v, c):
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


def dense_to_sparse(v):
    return {i: x for i, x in enumerate(v) if x}


def sparse_to_dense(v, n):
    out = [ZERO] * n
    for k, x in v.items():
        out[k] = x
    return out


class Echelon:
    """Incremental sparse echelon basis.

    Each stored row is keyed by its pivot, the smallest key in the row,
    with coefficient 1.  Reduction clears pivot keys in increasing order,
    which only ever introduces larger keys, so the remainder of a vector
    is canonical: the unique element of ``v + span(rows)`` supported off
    the pivot keys.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    @property
    def pivots(self):
        return set(self.rows)

    def reduce(self, v):
        v = dict(v)
        rows = self.rows
        heap = [k for k in v if k in rows]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            c = v.get(k)
            if c is None:
                continue
            row = rows[k]
            for kk, x in row.items():
                y = v.get(kk)
                z = -(x * c) if y is None else y - x * c
                if z:
                    v[kk] = z
                    if y is None and kk in rows:
                        heapq.heappush(heap, kk)
                elif y is not None:
                    del v[kk]
        return v

    def add(self, v):
        """Add a vector; returns True if it increased the rank."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = r[p].inv()
        if inv != ONE:
            r = {k: x * inv for k, x in r.items()}
        self.rows[p] = r
        return True

    def contains(self, v):
        return not self.reduce(v)


class QuotientSpace:
    """The quotient of a finite-dimensional coordinate space by relations.

    ``keys`` lists the ambient basis in a fixed order (this order decides
    which keys become pivots).  The quotient basis is the ordered list of
    non-pivot keys; :meth:`project` sends an ambient sparse vector to
    quotient coordinates.
    """

    def __init__(self, keys, relations=()):
        self.keys = list(keys)
        self._order = {k: i for i, k in enumerate(self.keys)}
        self.echelon = Echelon()
        for r in relations:
            self.add_relation(r)
        self._basis = None

    def add_relation(self, r):
        self._basis = None
        return self.echelon.add({self._order[k]: x for k, x in r.items()})

    @property
    def basis(self):
        if self._basis is None:
            piv = self.echelon.pivots
            self._basis = [k for i, k in enumerate(self.keys) if i not in piv]
            self._index = {k: i for i, k in enumerate(self._basis)}
        return self._basis

    @property
    def dim(self):
        return len(self.basis)

    def index(self, key):
        self.basis
        return self._index[key]

    def project(self, v):
        """Quotient coordinates (dense list) of an ambient sparse vector."""
        basis = self.basis
        r = self.echelon.reduce({self._order[k]: x for k, x in v.items()})
        out = [ZERO] * len(basis)
        for i, x in r.items():
            out[self._index[self.keys[i]]] = x
        return out

    def is_zero(self, v):
        return not self.echelon.reduce({self._order[k]: x for k, x in v.items()})

    def lift(self, i):
        """Ambient representative of the i-th quotient basis vector."""
        return {self.basis[i]: ONE}

    def lift_vector(self, coords):
        return {self.basis[i]: x for i, x in enumerate(coords) if x}


__all__ = [
    "DimensionMismatch", "DivisionByZero", "Echelon", "NonInvertible",
    "QuotientSpace", "Scalar", "dense_to_sparse", "determinant", "identity",
    "inverse", "is_zero_matrix", "kron", "matadd", "matmul", "matscale",
    "matsub", "matvec", "nullspace", "rank", "rref", "sadd", "shape",
    "siadd", "solve", "sparse_to_dense", "sscale", "transpose", "zeros",
]


def sparse_solve(columns, target):
    """Coefficients x with sum x[j] * columns[j] == target, or None.

    Columns and target are sparse dicts over any orderable keys.
    """
    rows = {}
    for j, col in enumerate(columns):
        v, combo = _tracked_reduce(rows, col, {j: ONE})
        if v:
            p = min(v)
            inv = v[p].inv()
            rows[p] = ({k: x * inv for k, x in v.items()}, {k: x * inv for k, x in combo.items()})
    v, combo = _tracked_reduce(rows, target, {})
    if v:
        return None
    return {j: -x for j, x in combo.items() if x}


def _tracked_reduce(rows, v, combo):
    v = dict(v)
    combo = dict(combo)
    heap = [k for k in v if k in rows]
    heapq.heapify(heap)
    while heap:
        k = heapq.heappop(heap)
        c = v.get(k)
        if c is None:
            continue
        row, rc = rows[k]
        for kk, x in row.items():
            y = v.get(kk)
            z = -(x * c) if y is None else y - x * c
            if z:
                v[kk] = z
                if y is None and kk in rows:
                    heapq.heappush(heap, kk)
            elif y is not None:
                del v[kk]
        siadd(combo, rc, -c)
    return v, combo


def sparse_kernel(columns):
    """A basis of {x : sum x[j] columns[j] == 0} as sparse dicts over column indices."""
    rows = {}
    out = []
    for j, col in enumerate(columns):
        v, combo = _tracked_reduce(rows, col, {j: ONE})
        if v:
            p = min(v)
            inv = v[p].inv()
            rows[p] = ({k: x * inv for k, x in v.items()}, {k: x * inv for k, x in combo.items()})
        else:
            out.append({k: x for k, x in combo.items() if x})
    return out
