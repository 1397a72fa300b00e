"""Finitely presented algebras with rewriting to normal forms.

A monomial is a tuple of generator indices.  A rule replaces a word (its lhs)
by an element.  Words are compared in graded-lex order: weighted degree
first, then letter by letter by generator rank (``order`` lists generators
from smallest to largest).  Rules must decrease this order, so every word has
a normal form; the overlap check then certifies that it is unique.
"""

from __future__ import annotations

import itertools
import os

from ..exactfield import ONE, ZERO, Scalar
from ..linalg import siadd
from ..reports import LawReport
from ..sweedler import (
    Add, Antipode, Const, Counit, Mul, ParseError, ScalarMul, Tensor, Var, parse_expr,
)
from ..algebra.core import format_coeff

DEFAULT_DEGREE_BOUND = 8


class DegreeOverflow(ValueError):
    pass


class PresentationError(ValueError):
    pass


def degree_bound():
    return int(os.environ.get("HOPFKIT_DEGREE_BOUND", DEFAULT_DEGREE_BOUND))


class PresentedAlgebra:
    def __init__(self, name, generators, rules, order=None, weights=None, bound=None,
                 field="Q(q)"):
        self.name = name
        self.generators = list(generators)
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("repeated generator")
        self._index = {g: i for i, g in enumerate(self.generators)}
        order = list(order) if order is not None else self.generators
        if sorted(order) != sorted(self.generators):
            raise PresentationError("order must list every generator once")
        self.rank = [order.index(g) for g in self.generators]
        self.order = order
        w = weights or {}
        self.weights = [int(w.get(g, 1)) for g in self.generators]
        if any(x <= 0 for x in self.weights):
            raise PresentationError("weights must be positive")
        self.bound = degree_bound() if bound is None else bound
        self.field = field
        self.rules = {}
        for lhs, rhs in rules:
            word = self.word(lhs) if isinstance(lhs, str) else tuple(lhs)
            if len(word) < 2:
                raise PresentationError(f"rule lhs {lhs!r} must have length >= 2")
            if word in self.rules:
                raise PresentationError(f"two rules for {self.word_str(word)}")
            self.rules[word] = dict(rhs) if isinstance(rhs, dict) else None
            if self.rules[word] is None:
                self.rules[word] = _raw_terms(self, rhs)
        self._lens = sorted({len(w) for w in self.rules})
        self._nf = {}
        self.comult = self.counit = self.antipode = None

    def __repr__(self):
        return f"<PresentedAlgebra {self.name} on {','.join(self.generators)}>"

    # words and orders

    def word(self, text):
        """'y x' or 'y.x' as a tuple of generator indices."""
        names = [t for t in text.replace(".", " ").replace("*", " ").split() if t != "1"]
        try:
            return tuple(self._index[n] for n in names)
        except KeyError as exc:
            raise PresentationError(f"unknown generator {exc.args[0]!r} in {text!r}") from None

    def gen(self, name):
        return self._index[name]

    def degree(self, mono):
        return sum(self.weights[i] for i in mono)

    def key(self, mono):
        return (self.degree(mono), tuple(self.rank[i] for i in mono))

    def word_str(self, mono):
        if not mono:
            return "1"
        return ".".join(self.generators[i] for i in mono)

    # rewriting

    def _redex(self, w):
        rules = self.rules
        for i in range(len(w)):
            for n in self._lens:
                if i + n <= len(w) and w[i:i + n] in rules:
                    return i, n
        return None

    def is_normal(self, w):
        return self._redex(w) is None

    def _nf_mono(self, w):
        hit = self._nf.get(w)
        if hit is not None:
            return hit
        red = self._redex(w)
        if red is None:
            out = {w: ONE}
        else:
            i, n = red
            out = {}
            for v, c in self.rules[w[i:i + n]].items():
                siadd(out, self._nf_mono(w[:i] + v + w[i + n:]), c)
        self._nf[w] = out
        return out

    def _check_bound(self, w, bound=None):
        b = self.bound if bound is None else bound
        if self.degree(w) > b:
            raise DegreeOverflow(f"{self.word_str(w)} has degree {self.degree(w)} > bound {b}")

    def normal_form(self, word, bound=None):
        """Normal form of a word (tuple, or a string like 'd a')."""
        if isinstance(word, str):
            word = self.word(word)
        word = tuple(word)
        self._check_bound(word, bound)
        return NFElement(self, self._nf_mono(word))

    def nf_terms(self, terms, bound=None):
        """Normal form of a linear combination of words (a dict)."""
        out = {}
        for w, c in terms.items():
            self._check_bound(w, bound)
            siadd(out, self._nf_mono(w), c)
        return out

    def mul_terms(self, x, y, bound=None):
        out = {}
        for u, a in x.items():
            for v, b in y.items():
                w = u + v
                self._check_bound(w, bound)
                siadd(out, self._nf_mono(w), a * b)
        return out

    # elements

    def element(self, value):
        if isinstance(value, NFElement):
            return value
        if isinstance(value, dict):
            return NFElement(self, self.nf_terms(value))
        if isinstance(value, (int, Scalar)):
            return NFElement(self, {(): Scalar(value)} if value else {})
        try:
            node = parse_expr(value)
        except ParseError as exc:
            raise PresentationError(str(exc)) from None
        return NFElement(self, self.nf_terms(_eval(self, node)))

    def one(self):
        return NFElement(self, {(): ONE})

    def zero(self):
        return NFElement(self, {})

    def monomial(self, w):
        return NFElement(self, {tuple(w): ONE})

    def normal_monomials(self, degree):
        """All normal monomials of weighted degree <= degree, in graded-lex order."""
        out = [()]
        frontier = [()]
        while frontier:
            nxt = []
            for w in frontier:
                for g in range(len(self.generators)):
                    v = w + (g,)
                    if self.degree(v) > degree:
                        continue
                    if any(v[len(v) - n:] in self.rules for n in self._lens if n <= len(v)):
                        continue
                    nxt.append(v)
            out.extend(nxt)
            frontier = nxt
        return sorted(set(out), key=self.key)

    # coalgebra data

    def set_hopf(self, comult, counit, antipode=None):
        """Install Delta, eps and optionally S from per-generator strings."""
        self.comult = GeneratorMap(self, (self, self), {
            g: tensor_from_string((self, self), s) for g, s in comult.items()}, name="Delta")
        self.counit = GeneratorMap(self, (), {
            g: NFTensor((), {(): _scalar_of(self, s)}) for g, s in counit.items()}, name="eps")
        if antipode is not None:
            self.antipode = GeneratorMap(self, (self,), {
                g: NFTensor((self,), {(k,): c for k, c in self.element(s).terms.items()})
                for g, s in antipode.items()}, anti=True, name="S")
        return self

    def with_bound(self, bound):
        self.bound = bound
        return self


def _scalar_of(A, s):
    x = A.element(s)
    if not x.terms:
        return ZERO
    if set(x.terms) != {()}:
        raise PresentationError(f"counit value {s!r} is not a scalar")
    return x.terms[()]


def _raw_terms(A, text):
    if isinstance(text, NFElement):
        return dict(text.terms)
    node = parse_expr(text) if isinstance(text, str) else text
    return _eval(A, node, reduce=False)


def _eval(A, node, reduce=True):
    """An AST over generator names as a dict of words (normalised when reduce)."""
    def mul(x, y):
        if reduce:
            return A.mul_terms(x, y)
        out = {}
        for u, a in x.items():
            for v, b in y.items():
                siadd(out, {u + v: ONE}, a * b)
        return out

    if isinstance(node, Var):
        if node.name not in A._index:
            raise PresentationError(f"unknown generator {node.name!r}")
        return {(A._index[node.name],): ONE}
    if isinstance(node, Const):
        return {(): node.value} if node.value else {}
    if isinstance(node, ScalarMul):
        inner = _eval(A, node.sub, reduce)
        return {w: c * node.scalar for w, c in inner.items() if c * node.scalar}
    if isinstance(node, Add):
        out = {}
        for t in node.terms:
            siadd(out, _eval(A, t, reduce))
        return out
    if isinstance(node, Mul):
        out = {(): ONE}
        for f in node.factors:
            out = mul(out, _eval(A, f, reduce))
        return out
    if isinstance(node, Antipode) and A.antipode is not None:
        return A.antipode.apply_terms(_eval(A, node.sub))[0]
    if isinstance(node, Counit) and A.counit is not None:
        c = A.counit.scalar(_eval(A, node.sub))
        return {(): c} if c else {}
    raise PresentationError(f"unsupported construct {type(node).__name__} in an element")


def format_terms(A, terms):
    if not terms:
        return "0"
    parts = []
    for w in sorted(terms, key=A.key):
        c = terms[w]
        neg = c.is_constant() and c.to_rational().num < 0
        a = -c if neg else c
        body = A.word_str(w)
        if a != ONE:
            body = format_coeff(a) if not w else f"{format_coeff(a)}*{body}"
        parts.append((neg, body))
    text = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        text += (" - " if neg else " + ") + body
    return text


class NFElement:
    """A normal-form element: {normal monomial: nonzero Scalar}."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c}

    def __repr__(self):
        return f"NFElement({str(self)!r})"

    def __str__(self):
        return format_terms(self.algebra, self.terms)

    def _coerce(self, other):
        if isinstance(other, NFElement):
            return other.terms
        return self.algebra.element(other).terms

    def __add__(self, other):
        out = dict(self.terms)
        siadd(out, self._coerce(other))
        return NFElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        out = dict(self.terms)
        siadd(out, self._coerce(other), -ONE)
        return NFElement(self.algebra, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            c = Scalar(other)
            return NFElement(self.algebra, {w: x * c for w, x in self.terms.items()})
        return NFElement(self.algebra, self.algebra.mul_terms(self.terms, self._coerce(other)))

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self * other
        return NFElement(self.algebra, self.algebra.mul_terms(self._coerce(other), self.terms))

    def __pow__(self, n):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.algebra is other.algebra and self.terms == other.terms
        if isinstance(other, (int, Scalar, str)):
            return self.terms == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda kv: self.algebra.key(kv[0]))))

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((self.algebra.degree(w) for w in self.terms), default=0)


class NFTensor:
    """An element of A1 (x) ... (x) An: {(w1, ..., wn): Scalar}; n = 0 gives scalars."""

    __slots__ = ("algebras", "terms")

    def __init__(self, algebras, terms):
        self.algebras = tuple(algebras)
        self.terms = {k: c for k, c in terms.items() if c}

    def __repr__(self):
        return f"NFTensor({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        if not self.algebras:
            return str(self.terms.get((), ZERO))
        parts = []
        for k in sorted(self.terms, key=lambda k: tuple(A.key(w) for A, w in zip(self.algebras, k))):
            c = self.terms[k]
            body = " (x) ".join(A.word_str(w) for A, w in zip(self.algebras, k))
            parts.append(body if c == ONE else f"{format_coeff(c)}*{body}")
        return " + ".join(parts)

    def __eq__(self, other):
        return isinstance(other, NFTensor) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        siadd(out, other.terms)
        return NFTensor(self.algebras, out)

    def __sub__(self, other):
        out = dict(self.terms)
        siadd(out, other.terms, -ONE)
        return NFTensor(self.algebras, out)

    def scale(self, c):
        return NFTensor(self.algebras, {k: x * c for k, x in self.terms.items()})

    def __mul__(self, other):
        return NFTensor(self.algebras, tensor_mul_terms(self.algebras, self.terms, other.terms))

    def __bool__(self):
        return bool(self.terms)


def tensor_mul_terms(algebras, x, y, bound=None):
    out = {}
    for k1, a in x.items():
        for k2, b in y.items():
            legs = [A.nf_terms({u + v: ONE}, bound).items() for A, u, v in zip(algebras, k1, k2)]
            ab = a * b
            for combo in itertools.product(*legs):
                c = ab
                for _, x_ in combo:
                    c = c * x_
                key = tuple(w for w, _ in combo)
                z = out.get(key)
                z = c if z is None else z + c
                if z:
                    out[key] = z
                else:
                    out.pop(key, None)
    return out


def tensor_from_string(algebras, text):
    """Parse 'x (x) y + [q]*y (x) 1' over the given algebras."""
    node = parse_expr(text) if isinstance(text, str) else text
    return NFTensor(algebras, _eval_tensor(algebras, node))


def _eval_tensor(algebras, node):
    n = len(algebras)
    if isinstance(node, Tensor):
        if len(node.factors) != n:
            raise PresentationError(f"expected {n} tensor factors, got {len(node.factors)}")
        legs = [_eval(A, f) for A, f in zip(algebras, node.factors)]
        out = {}
        for combo in itertools.product(*(leg.items() for leg in legs)):
            c = ONE
            for _, x in combo:
                c = c * x
            siadd(out, {tuple(w for w, _ in combo): ONE}, c)
        return out
    if isinstance(node, Add):
        out = {}
        for t in node.terms:
            siadd(out, _eval_tensor(algebras, t))
        return out
    if isinstance(node, ScalarMul):
        return {k: c * node.scalar for k, c in _eval_tensor(algebras, node.sub).items()}
    if isinstance(node, Const) and n == 0:
        return {(): node.value} if node.value else {}
    if isinstance(node, Const) and node.value == ONE:
        return {tuple(() for _ in algebras): ONE}
    raise PresentationError("expected a tensor expression")


class GeneratorMap:
    """An (anti-)multiplicative map A -> A1 (x) ... (x) An given on generators."""

    def __init__(self, source, targets, images, anti=False, name="f"):
        self.source = source
        self.targets = tuple(targets)
        self.anti = anti
        self.name = name
        self.images = {}
        for g, img in images.items():
            i = source.gen(g) if isinstance(g, str) else g
            if isinstance(img, NFElement):
                img = NFTensor(self.targets, {(w,): c for w, c in img.terms.items()})
            self.images[i] = img.terms
        missing = [source.generators[i] for i in range(len(source.generators)) if i not in self.images]
        if missing:
            raise PresentationError(f"{name} is not given on {', '.join(missing)}")
        self._cache = {(): {tuple(() for _ in self.targets): ONE}}

    def __repr__(self):
        return f"<GeneratorMap {self.name}: {self.source.name}>"

    def apply_word(self, w, bound=None):
        """Image of a word, computed letter by letter (no normal form of w needed)."""
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        if self.anti:
            out = tensor_mul_terms(self.targets, self.images[w[-1]], self.apply_word(w[:-1], bound), bound)
        else:
            out = tensor_mul_terms(self.targets, self.apply_word(w[:-1], bound), self.images[w[-1]], bound)
        self._cache[w] = out
        return out

    def apply_terms(self, terms, bound=None):
        out = {}
        for w, c in terms.items():
            siadd(out, self.apply_word(w, bound), c)
        if len(self.targets) == 1:
            return [{k[0]: c for k, c in out.items()}]
        return out

    def __call__(self, x):
        terms = x.terms if isinstance(x, NFElement) else self.source.element(x).terms
        out = {}
        for w, c in terms.items():
            siadd(out, self.apply_word(w), c)
        if len(self.targets) == 1:
            return NFElement(self.targets[0], {k[0]: c for k, c in out.items()})
        return NFTensor(self.targets, out)

    def scalar(self, terms):
        out = ZERO
        for w, c in terms.items():
            out = out + c * self.apply_word(w).get((), ZERO)
        return out

    def relation_failure(self):
        """First rule lhs -> rhs whose two images differ, or None."""
        for lhs, rhs in self.source.rules.items():
            a = self.apply_word(lhs)
            b = {}
            for w, c in rhs.items():
                siadd(b, self.apply_word(w), c)
            if a != b:
                return lhs
        return None


def check_termination(A):
    report = LawReport(f"termination of {A.name}")
    for lhs, rhs in A.rules.items():
        bad = [w for w in rhs if A.key(w) >= A.key(lhs)]
        if bad:
            report.add("order_decreasing", False,
                       f"{A.word_str(lhs)} -> ... {A.word_str(bad[0])} does not decrease")
            return report
    report.add("order_decreasing", True)
    return report


def _overlaps(A):
    """(word, reduct1, reduct2) for every overlap and inclusion ambiguity."""
    rules = A.rules
    for l1, r1 in rules.items():
        for l2, r2 in rules.items():
            for k in range(1, min(len(l1), len(l2))):
                if l1[len(l1) - k:] == l2[:k]:
                    tail, head = l2[k:], l1[:len(l1) - k]
                    yield (l1 + tail,
                           {w + tail: c for w, c in r1.items()},
                           {head + w: c for w, c in r2.items()})
            if l1 != l2 and len(l2) < len(l1):
                for p in range(len(l1) - len(l2) + 1):
                    if l1[p:p + len(l2)] == l2:
                        yield (l1, dict(r1),
                               {l1[:p] + w + l1[p + len(l2):]: c for w, c in r2.items()})


def check_confluence(A, D=None):
    """Every overlap ambiguity of degree <= D resolves to one normal form."""
    D = A.bound if D is None else D
    report = check_termination(A)
    report.subject = f"confluence of {A.name} up to degree {D}"
    checked = 0
    for word, x, y in _overlaps(A):
        if A.degree(word) > D:
            continue
        checked += 1
        nx, ny = A.nf_terms(x, D), A.nf_terms(y, D)
        if nx != ny:
            report.add("overlaps_resolve", False,
                       f"overlap {A.word_str(word)}: {format_terms(A, nx)} != {format_terms(A, ny)}",
                       overlap=A.word_str(word))
            return report
    report.add("overlaps_resolve", True, overlaps=checked)
    return report


def _tensor_apply_leg(maps, terms, algebras_out):
    """Apply maps[i] (GeneratorMap or None for identity) to leg i of a tensor."""
    out = {}
    for key, c in terms.items():
        legs = []
        for f, w in zip(maps, key):
            if f is None:
                legs.append([((w,), ONE)])
            else:
                img = f.apply_word(w)
                legs.append(list(img.items()))
        for combo in itertools.product(*legs):
            x = c
            k = ()
            for kk, y in combo:
                x = x * y
                k = k + kk
            siadd(out, {k: ONE}, x)
    return out


def check_hopf(A, product_degree=3):
    """Bialgebra and antipode axioms, on generators and normal monomials up to product_degree."""
    report = LawReport(f"{A.name} is a Hopf algebra")
    if A.comult is None or A.counit is None:
        raise PresentationError(f"{A.name} carries no coalgebra data")
    D, e = A.comult, A.counit
    for law, f in (("comult_multiplicative", D), ("counit_multiplicative", e)):
        bad = f.relation_failure()
        report.add(law, bad is None, None if bad is None else
                   f"{f.name} does not respect the relation at {A.word_str(bad)}")
    words = [w for w in A.normal_monomials(product_degree) if w]
    bad = None
    for w in words:
        d = D.apply_word(w)
        lhs = _tensor_apply_leg((D, None), d, None)
        rhs = _tensor_apply_leg((None, D), d, None)
        if lhs != rhs:
            bad = w
            break
    report.add("coassociative", bad is None, None if bad is None else
               f"(Delta (x) id) Delta != (id (x) Delta) Delta on {A.word_str(bad)}")
    bad = None
    for w in words:
        d = D.apply_word(w)
        left = {k[0]: c for k, c in _tensor_apply_leg((e, None), d, None).items()}
        right = {k[0]: c for k, c in _tensor_apply_leg((None, e), d, None).items()}
        left = {k: c for k, c in left.items() if c}
        right = {k: c for k, c in right.items() if c}
        if left != {w: ONE} or right != {w: ONE}:
            bad = w
            break
    report.add("counital", bad is None, None if bad is None else
               f"counit axiom fails on {A.word_str(bad)}")
    if A.antipode is not None:
        S = A.antipode
        bad = S.relation_failure()
        report.add("antipode_antimultiplicative", bad is None, None if bad is None else
                   f"S does not respect the relation at {A.word_str(bad)}")
        bad = None
        big = max(A.bound, 3 * product_degree)
        for w in words:
            d = D.apply_word(w)
            eps = e.apply_word(w).get((), ZERO)
            target = {(): eps} if eps else {}
            left, right = {}, {}
            for (u, v), c in d.items():
                su = S.apply_terms({u: ONE})[0]
                sv = S.apply_terms({v: ONE})[0]
                siadd(left, A.mul_terms(su, {v: ONE}, big), c)
                siadd(right, A.mul_terms({u: ONE}, sv, big), c)
            if left != target or right != target:
                bad = w
                break
        report.add("antipode", bad is None, None if bad is None else
                   f"S(h1) h2 != eps(h) 1 on {A.word_str(bad)}")
    return report


class FPComoduleAlgebra:
    """A presented algebra E with a coaction E -> E (x) B given on generators."""

    def __init__(self, E, B, rho, name=None):
        self.E = E
        self.B = B
        self.rho = rho if isinstance(rho, GeneratorMap) else GeneratorMap(
            E, (E, B), {g: tensor_from_string((E, B), s) if isinstance(s, str) else s
                        for g, s in rho.items()}, name="rho")
        self.name = name or f"{E.name} over {B.name}"

    def __repr__(self):
        return f"<FPComoduleAlgebra {self.name}>"

    def coact(self, x):
        return self.rho(x)


def check_fp_comodule_algebra(EA, D=None, product_degree=3):
    E, B = EA.E, EA.B
    D = E.bound if D is None else D
    report = LawReport(f"{EA.name} is a comodule algebra")
    bad = EA.rho.relation_failure()
    report.add("multiplicative", bad is None, None if bad is None else
               f"rho does not respect the relation at {E.word_str(bad)}")
    words = [w for w in E.normal_monomials(product_degree) if w]
    bad = None
    for u in words:
        for v in words:
            if E.degree(u) + E.degree(v) > min(D, product_degree + 1):
                continue
            prod = E.nf_terms({u + v: ONE})
            lhs = {}
            for w, c in prod.items():
                siadd(lhs, EA.rho.apply_word(w), c)
            rhs = tensor_mul_terms((E, B), EA.rho.apply_word(u), EA.rho.apply_word(v))
            if lhs != rhs:
                bad = (u, v)
                break
        if bad:
            break
    report.add("multiplicative_on_monomials", bad is None, None if bad is None else
               f"rho({E.word_str(bad[0])}.{E.word_str(bad[1])}) != rho(.)rho(.)")
    bad = None
    for w in words:
        r = EA.rho.apply_word(w)
        lhs = _tensor_apply_leg((EA.rho, None), r, None)
        rhs = _tensor_apply_leg((None, B.comult), r, None)
        if lhs != rhs:
            bad = w
            break
    report.add("coassociative", bad is None, None if bad is None else
               f"(rho (x) id) rho != (id (x) Delta) rho on {E.word_str(bad)}")
    bad = None
    for w in words:
        r = EA.rho.apply_word(w)
        got = {k[0]: c for k, c in _tensor_apply_leg((None, B.counit), r, None).items() if c}
        if got != {w: ONE}:
            bad = w
            break
    report.add("counital", bad is None, None if bad is None else
               f"(id (x) eps) rho != id on {E.word_str(bad)}")
    return report
