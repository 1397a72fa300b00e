"""Structure-constant algebras, coalgebras, bialgebras and Hopf algebras.

Basis indices are the canonical identity of basis vectors; names are only
used for display and for parsing element strings.  Vectors are dense
lists of :class:`Scalar` of length ``dim``.  Tensor vectors over factors of
dimensions (d1, ..., dk) are sparse dicts keyed by index tuples.
"""

from __future__ import annotations

import itertools

from ..exactfield import ONE, ZERO, Scalar, Tag
from ..linalg import DimensionMismatch, Echelon, identity
from ..reports import LawReport


class CarrierMismatch(TypeError):
    pass


class FieldMismatch(TypeError):
    pass


class NotAlgebraMap(ValueError):
    pass


def unit_vector(n, i, c=ONE):
    v = [ZERO] * n
    v[i] = c
    return v


def _sparse_table(table):
    return [[[(r, c) for r, c in enumerate(vec) if c] for vec in row] for row in table]


class FinDimAlgebra:
    """Unital associative algebra given by structure constants.

    ``mult[i][j]`` is the coefficient vector of ``e_i * e_j``.
    """

    def __init__(self, basis, mult, unit, field=Tag.RATIONAL, name=None,
                 generators=None):
        self.basis = list(basis)
        self.dim = len(self.basis)
        self.field = field
        self.name = name or "A"
        n = self.dim
        if len(mult) != n or any(len(row) != n for row in mult) or any(
                len(v) != n for row in mult for v in row):
            raise DimensionMismatch(f"{self.name}: mult must be {n}x{n}x{n}")
        if len(unit) != n:
            raise DimensionMismatch(f"{self.name}: unit must have length {n}")
        self._mult = [[[Scalar.coerce(c) for c in v] for v in row] for row in mult]
        self.unit = [Scalar.coerce(c) for c in unit]
        self._smult = _sparse_table(self._mult)
        self._generators = generators
        self._index = {b: i for i, b in enumerate(self.basis)}

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} dim={self.dim}>"

    # -- elements ----------------------------------------------------------
    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{self.name} has no basis element {name!r}") from None

    def e(self, i):
        if isinstance(i, str):
            i = self.index(i)
        return Element(self, unit_vector(self.dim, i))

    def one(self):
        return Element(self, list(self.unit))

    def zero(self):
        return Element(self, [ZERO] * self.dim)

    def element(self, coeffs):
        return Element(self, [Scalar.coerce(c) for c in coeffs])

    # -- multiplication ----------------------------------------------------
    @property
    def mult(self):
        return self._mult

    def _prod(self, i, j):
        """Sparse list [(r, coeff)] for e_i * e_j."""
        return self._smult[i][j]

    def mul_basis(self, i, j):
        return self.mult[i][j]

    def mul_vec(self, u, v):
        out = [ZERO] * self.dim
        prod = self._prod
        vs = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in vs:
                ab = a * b
                for r, c in prod(i, j):
                    out[r] = out[r] + ab * c
        return out

    def left_mult_matrix(self, u):
        """Matrix of x -> u*x."""
        cols = [self.mul_vec(u, unit_vector(self.dim, j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def right_mult_matrix(self, u):
        cols = [self.mul_vec(unit_vector(self.dim, j), u) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    @property
    def generators(self):
        """Indices of basis vectors generating the algebra (greedy, in order)."""
        if self._generators is None:
            self._generators = _greedy_generators(self)
        return list(self._generators)

    def is_commutative(self):
        return all(self.mult[i][j] == self.mult[j][i]
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def fmt(self, v):
        return format_vector(v, self.basis)


def _greedy_generators(A):
    gens = []
    for i in range(A.dim):
        if not _in_subalgebra(A, gens, unit_vector(A.dim, i)):
            gens.append(i)
    return gens


def _in_subalgebra(A, gens, v):
    ech = Echelon()
    span = []

    def push(w):
        if ech.add({k: x for k, x in enumerate(w) if x}):
            span.append(w)
            return True
        return False

    push(A.unit)
    frontier = list(span)
    gvecs = [unit_vector(A.dim, g) for g in gens]
    while frontier:
        new = []
        for w in frontier:
            for g in gvecs:
                p = A.mul_vec(w, g)
                if push(p):
                    new.append(p)
        frontier = new
    return ech.contains({k: x for k, x in enumerate(v) if x})


class FinDimCoalgebra:
    """Coalgebra with ``comult[i]`` a dict {(j, k): coeff} and covector counit."""

    def __init__(self, basis, comult, counit, field=Tag.RATIONAL, name=None):
        self.basis = list(basis)
        self.dim = len(self.basis)
        self.field = field
        self.name = name or "C"
        if len(comult) != self.dim or len(counit) != self.dim:
            raise DimensionMismatch(f"{self.name}: comult/counit must have length {self.dim}")
        self._init_coalgebra(comult, counit)
        self._index = {b: i for i, b in enumerate(self.basis)}

    def _init_coalgebra(self, comult, counit):
        cm = []
        for i, d in enumerate(comult):
            entry = {}
            items = d.items() if isinstance(d, dict) else ((tuple(k), c) for k, c in d)
            for (j, k), c in items:
                c = Scalar.coerce(c)
                if not (0 <= j < self.dim and 0 <= k < self.dim):
                    raise DimensionMismatch(f"comult[{i}] refers to index out of range")
                if c:
                    entry[(j, k)] = entry.get((j, k), ZERO) + c
            cm.append({k: c for k, c in entry.items() if c})
        self.comult = cm
        self.counit = [Scalar.coerce(c) for c in counit]

    def comul_basis(self, i):
        return self.comult[i]

    def comul_vec(self, v):
        out = {}
        for i, a in enumerate(v):
            if a:
                for key, c in self.comult[i].items():
                    z = out.get(key, ZERO) + a * c
                    if z:
                        out[key] = z
                    else:
                        out.pop(key, None)
        return out

    def counit_vec(self, v):
        acc = ZERO
        for a, e in zip(v, self.counit):
            if a and e:
                acc = acc + a * e
        return acc

    def fmt(self, v):
        return format_vector(v, self.basis)


class Bialgebra(FinDimAlgebra, FinDimCoalgebra):
    def __init__(self, basis, mult, unit, comult, counit, field=Tag.RATIONAL,
                 name=None, generators=None):
        FinDimAlgebra.__init__(self, basis, mult, unit, field, name, generators)
        if len(comult) != self.dim or len(counit) != self.dim:
            raise DimensionMismatch(f"{self.name}: comult/counit must have length {self.dim}")
        self._init_coalgebra(comult, counit)


class HopfAlgebra(Bialgebra):
    """Bialgebra with antipode; ``antipode[i]`` is the vector S(e_i)."""

    def __init__(self, basis, mult, unit, comult, counit, antipode,
                 field=Tag.RATIONAL, name=None, generators=None):
        super().__init__(basis, mult, unit, comult, counit, field, name, generators)
        if len(antipode) != self.dim or any(len(v) != self.dim for v in antipode):
            raise DimensionMismatch(f"{self.name}: antipode must be {self.dim}x{self.dim}")
        self.antipode = [[Scalar.coerce(c) for c in v] for v in antipode]

    def antipode_vec(self, v):
        out = [ZERO] * self.dim
        for i, a in enumerate(v):
            if a:
                for r, c in enumerate(self.antipode[i]):
                    if c:
                        out[r] = out[r] + a * c
        return out


def has_coalgebra(X):
    return hasattr(X, "comult")


def has_antipode(X):
    return hasattr(X, "antipode")


# -- elements -------------------------------------------------------------

def format_vector(v, names):
    terms = []
    for i, c in enumerate(v):
        if c:
            terms.append((c, names[i]))
    return format_terms(terms)


def format_coeff(c):
    """Scalar as a DSL coefficient: bare when it is a plain rational."""
    text = str(c)
    if c.is_constant() and " " not in text:
        return text
    return f"[{text}]"


def format_terms(terms):
    """Render [(coeff, monomial string)] as 'm1 - 2*m2 + [q - 1]*m3'."""
    if not terms:
        return "0"
    out = []
    for c, m in terms:
        neg = c.is_constant() and c.to_rational().num < 0
        a = -c if neg else c
        body = m if a == ONE else f"{format_coeff(a)}*{m}"
        out.append((neg, body))
    text = ("-" if out[0][0] else "") + out[0][1]
    for neg, body in out[1:]:
        text += (" - " if neg else " + ") + body
    return text


class Element:
    """A vector in a finite-dimensional algebra or coalgebra."""

    __slots__ = ("carrier", "coeffs")

    def __init__(self, carrier, coeffs):
        if len(coeffs) != carrier.dim:
            raise DimensionMismatch(f"element of length {len(coeffs)} in {carrier!r}")
        self.carrier = carrier
        self.coeffs = list(coeffs)

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError("expected Element")
        if other.carrier is not self.carrier:
            raise CarrierMismatch(f"{self.carrier!r} vs {other.carrier!r}")

    def __add__(self, other):
        self._check(other)
        return Element(self.carrier, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return Element(self.carrier, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return Element(self.carrier, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        c = Scalar.coerce(other)
        return Element(self.carrier, [a * c for a in self.coeffs])

    def __rmul__(self, other):
        c = Scalar.coerce(other)
        return Element(self.carrier, [c * a for a in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.carrier is other.carrier and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((id(self.carrier), tuple(self.coeffs)))

    def is_zero(self):
        return not any(self.coeffs)

    def __str__(self):
        return format_vector(self.coeffs, self.carrier.basis)

    def __repr__(self):
        return f"Element({self.carrier.name}: {self})"


class TensorElement:
    """Sparse element of a tensor product of finite-dimensional carriers."""

    __slots__ = ("carriers", "coeffs")

    def __init__(self, carriers, coeffs=None):
        self.carriers = tuple(carriers)
        self.coeffs = {k: Scalar.coerce(c) for k, c in (coeffs or {}).items() if c}
        for k in self.coeffs:
            if len(k) != len(self.carriers) or any(
                    not 0 <= i < C.dim for i, C in zip(k, self.carriers)):
                raise DimensionMismatch(f"tensor index {k} does not fit {self.shape}")

    @property
    def shape(self):
        return tuple(C.dim for C in self.carriers)

    @classmethod
    def pure(cls, *elements):
        coeffs = {}
        for combo in itertools.product(*[
                [(i, c) for i, c in enumerate(x.coeffs) if c] for x in elements]):
            key = tuple(i for i, _ in combo)
            c = ONE
            for _, x in combo:
                c = c * x
            coeffs[key] = coeffs.get(key, ZERO) + c
        return cls([x.carrier for x in elements], coeffs)

    def __add__(self, other):
        if other.carriers != self.carriers:
            raise CarrierMismatch("tensor factors differ")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) + c
        return TensorElement(self.carriers, out)

    def __sub__(self, other):
        return self + other * Scalar(-1)

    def __mul__(self, c):
        c = Scalar.coerce(c)
        return TensorElement(self.carriers, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return self.carriers == other.carriers and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.carriers, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def __str__(self):
        terms = []
        for key in sorted(self.coeffs):
            names = " (x) ".join(C.basis[i] for C, i in zip(self.carriers, key))
            terms.append((self.coeffs[key], names))
        return format_terms(terms)

    def __repr__(self):
        return f"TensorElement({self})"


def mul(x, y):
    x._check(y)
    A = x.carrier
    if not hasattr(A, "mult"):
        raise CarrierMismatch(f"{A!r} has no multiplication")
    return Element(A, A.mul_vec(x.coeffs, y.coeffs))


def comul(x):
    C = x.carrier
    if not has_coalgebra(C):
        raise CarrierMismatch(f"{C!r} has no comultiplication")
    return TensorElement((C, C), C.comul_vec(x.coeffs))


def counit(x):
    C = x.carrier
    if not has_coalgebra(C):
        raise CarrierMismatch(f"{C!r} has no counit")
    return C.counit_vec(x.coeffs)


def antipode(x):
    H = x.carrier
    if not has_antipode(H):
        raise CarrierMismatch(f"{H!r} has no antipode")
    return Element(H, H.antipode_vec(x.coeffs))


# -- tensor products --------------------------------------------------------

def tensor_basis_names(A, B):
    return [f"{a}(x){b}" for a in A.basis for b in B.basis]


def tensor_algebra(A, B, name=None):
    """A (x) B with componentwise product; basis index i*dim B + j."""
    if A.field is not B.field:
        raise FieldMismatch(f"{A.name} over {A.field.value}, {B.name} over {B.field.value}")
    m, n = A.dim, B.dim
    N = m * n
    unit = [ZERO] * N
    for r, c in enumerate(A.unit):
        if c:
            for s, d in enumerate(B.unit):
                if d:
                    unit[r * n + s] = c * d
    gens = [g * n + _unit_index(B) for g in A.generators] if _unit_index(B) is not None else None
    if gens is not None and _unit_index(A) is not None:
        gens += [_unit_index(A) * n + g for g in B.generators]
    else:
        gens = None
    return TensorAlgebra(A, B, unit, gens, name or f"{A.name}(x){B.name}")


class TensorAlgebra(FinDimAlgebra):
    """A (x) B with products computed from the factors on demand."""

    def __init__(self, A, B, unit, generators, name):
        self.factors = (A, B)
        self.basis = tensor_basis_names(A, B)
        self.dim = A.dim * B.dim
        self.field = A.field
        self.name = name
        self.unit = unit
        self._generators = generators
        self._index = {b: i for i, b in enumerate(self.basis)}
        self._cache = {}
        self._mult = None

    def _prod(self, i, j):
        key = (i, j)
        hit = self._cache.get(key)
        if hit is None:
            A, B = self.factors
            n = B.dim
            acc = {}
            for r, c in A._prod(i // n, j // n):
                for s, d in B._prod(i % n, j % n):
                    acc[r * n + s] = c * d
            hit = self._cache[key] = sorted(acc.items())
        return hit

    @property
    def mult(self):
        if self._mult is None:
            N = self.dim
            table = []
            for i in range(N):
                row = []
                for j in range(N):
                    v = [ZERO] * N
                    for r, c in self._prod(i, j):
                        v[r] = c
                    row.append(v)
                table.append(row)
            self._mult = table
        return self._mult


def _unit_index(A):
    nz = [i for i, c in enumerate(A.unit) if c]
    if len(nz) == 1 and A.unit[nz[0]] == ONE:
        return nz[0]
    return None


def algebra_power(E, B, n):
    """E (x) B^(x)n as an algebra (coborel level n)."""
    out = E
    for _ in range(n):
        out = tensor_algebra(out, B)
    return out


# -- law checks ----------------------------------------------------------------

def _vec_str(C, v):
    return format_vector(v, C.basis)


def _tensor_str(carriers, d):
    return str(TensorElement(carriers, d))


def check_associativity(A, report):
    n = A.dim
    for i, j, k in itertools.product(range(n), repeat=3):
        left = A.mul_vec(A.mult[i][j], unit_vector(n, k))
        right = A.mul_vec(unit_vector(n, i), A.mult[j][k])
        if left != right:
            b = A.basis
            report.add("associativity", False,
                       f"({b[i]}*{b[j]})*{b[k]} = {_vec_str(A, left)} != "
                       f"{b[i]}*({b[j]}*{b[k]}) = {_vec_str(A, right)}",
                       triple=[i, j, k])
            return
    report.add("associativity", True)


def check_unit(A, report):
    for i in range(A.dim):
        ei = unit_vector(A.dim, i)
        if A.mul_vec(A.unit, ei) != ei or A.mul_vec(ei, A.unit) != ei:
            report.add("unit", False, f"1*{A.basis[i]} or {A.basis[i]}*1 differs from {A.basis[i]}",
                       index=i)
            return
    report.add("unit", True)


def _apply_left(C, d):
    """(Delta (x) id) applied to a sparse 2-tensor dict."""
    out = {}
    for (j, k), c in d.items():
        for (a, b), x in C.comult[j].items():
            key = (a, b, k)
            out[key] = out.get(key, ZERO) + c * x
    return {k: v for k, v in out.items() if v}


def _apply_right(C, d):
    out = {}
    for (j, k), c in d.items():
        for (a, b), x in C.comult[k].items():
            key = (j, a, b)
            out[key] = out.get(key, ZERO) + c * x
    return {k: v for k, v in out.items() if v}


def check_coassociativity(C, report):
    for i in range(C.dim):
        d = C.comult[i]
        left = _apply_left(C, d)
        right = _apply_right(C, d)
        if left != right:
            report.add("coassociativity", False,
                       f"at {C.basis[i]}: (D(x)id)D = {_tensor_str((C, C, C), left)} but "
                       f"(id(x)D)D = {_tensor_str((C, C, C), right)}", index=i)
            return
    report.add("coassociativity", True)


def check_counit(C, report):
    for i in range(C.dim):
        left = [ZERO] * C.dim
        right = [ZERO] * C.dim
        for (j, k), c in C.comult[i].items():
            if C.counit[j]:
                left[k] = left[k] + C.counit[j] * c
            if C.counit[k]:
                right[j] = right[j] + C.counit[k] * c
        ei = unit_vector(C.dim, i)
        if left != ei or right != ei:
            report.add("counit", False,
                       f"at {C.basis[i]}: (eps(x)id)D = {_vec_str(C, left)}, "
                       f"(id(x)eps)D = {_vec_str(C, right)}", index=i)
            return
    report.add("counit", True)


def tensor_mul(A, B, u, v):
    """Product in A (x) B of sparse 2-tensors (dict keyed by (i, j))."""
    out = {}
    for (i, k), a in u.items():
        for (j, l), b in v.items():
            ab = a * b
            for r, c in A._prod(i, j):
                for s, d in B._prod(k, l):
                    key = (r, s)
                    out[key] = out.get(key, ZERO) + ab * c * d
    return {k: x for k, x in out.items() if x}


def check_bialgebra_compat(H, report):
    n = H.dim
    bad = None
    for i, j in itertools.product(range(n), repeat=2):
        lhs = H.comul_vec(H.mult[i][j])
        rhs = tensor_mul(H, H, H.comult[i], H.comult[j])
        if lhs != rhs:
            bad = (i, j, lhs, rhs)
            break
    if bad:
        i, j, lhs, rhs = bad
        report.add("comult_multiplicative", False,
                   f"D({H.basis[i]}*{H.basis[j]}) = {_tensor_str((H, H), lhs)} but "
                   f"D({H.basis[i]})D({H.basis[j]}) = {_tensor_str((H, H), rhs)}", pair=[i, j])
    else:
        report.add("comult_multiplicative", True)
    one = H.comul_vec(H.unit)
    expect = {}
    for r, c in enumerate(H.unit):
        for s, d in enumerate(H.unit):
            if c and d:
                expect[(r, s)] = c * d
    report.add("comult_unital", one == expect,
               f"D(1) = {_tensor_str((H, H), one)}")
    bad = None
    for i, j in itertools.product(range(n), repeat=2):
        if H.counit_vec(H.mult[i][j]) != H.counit[i] * H.counit[j]:
            bad = (i, j)
            break
    report.add("counit_multiplicative", bad is None,
               bad and f"eps({H.basis[bad[0]]}*{H.basis[bad[1]]}) != "
                       f"eps({H.basis[bad[0]]})eps({H.basis[bad[1]]})")
    report.add("counit_unital", H.counit_vec(H.unit) == ONE, "eps(1) != 1")


def check_antipode(H, report):
    for i in range(H.dim):
        left = [ZERO] * H.dim
        right = [ZERO] * H.dim
        for (j, k), c in H.comult[i].items():
            Sj = H.antipode[j]
            Sk = H.antipode[k]
            left = [a + c * b for a, b in zip(left, H.mul_vec(Sj, unit_vector(H.dim, k)))]
            right = [a + c * b for a, b in zip(right, H.mul_vec(unit_vector(H.dim, j), Sk))]
        expect = [H.counit[i] * u for u in H.unit]
        if left != expect or right != expect:
            report.add("antipode", False,
                       f"at {H.basis[i]}: S(h1)h2 = {_vec_str(H, left)}, h1 S(h2) = "
                       f"{_vec_str(H, right)}, eps(h)1 = {_vec_str(H, expect)}", index=i)
            return
    report.add("antipode", True)


def check_algebra_laws(A):
    """Check every axiom the structure carries; returns a LawReport."""
    report = LawReport(f"laws of {A.name}")
    if hasattr(A, "mult"):
        check_associativity(A, report)
        check_unit(A, report)
    if has_coalgebra(A):
        check_coassociativity(A, report)
        check_counit(A, report)
    if hasattr(A, "mult") and has_coalgebra(A):
        check_bialgebra_compat(A, report)
    if has_antipode(A):
        check_antipode(A, report)
    return report


def check_algebra_map(f, A, B):
    """f is a (B.dim x A.dim) matrix; returns a LawReport."""
    from ..linalg import matvec
    report = LawReport(f"algebra map {A.name} -> {B.name}")
    if len(f) != B.dim or any(len(r) != A.dim for r in f):
        raise DimensionMismatch("algebra map matrix has the wrong shape")
    report.add("unital", matvec(f, A.unit) == B.unit)
    bad = None
    for i, j in itertools.product(range(A.dim), repeat=2):
        lhs = matvec(f, A.mult[i][j])
        rhs = B.mul_vec(matvec(f, unit_vector(A.dim, i)), matvec(f, unit_vector(A.dim, j)))
        if lhs != rhs:
            bad = (i, j)
            break
    report.add("multiplicative", bad is None,
               bad and f"f({A.basis[bad[0]]}*{A.basis[bad[1]]}) != f({A.basis[bad[0]]})f({A.basis[bad[1]]})")
    return report


def identity_map(A):
    return identity(A.dim)
