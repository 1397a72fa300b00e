"""Exact scalars over Q and over the rational function field Q(q).

A :class:`Scalar` stores a normalized fraction.  Rational scalars keep a
pair of Python ints; rational functions keep a pair of integer
coefficient tuples (lowest degree first).  Both forms compare equal when
they denote the same fraction, so ``Scalar.from_poly((1,))`` equals
``Scalar(1)``.

Textual syntax (used by every input file)::

    scalar  := sum
    sum     := term (('+' | '-') term)*
    term    := unary (('*' | '/')? unary)*      # juxtaposition multiplies
    unary   := ('-' | '+') unary | power
    power   := atom ('^' signed_int)?
    atom    := INT | 'q' | '(' sum ')'

Examples: ``3``, ``-1/2``, ``q^2-1``, ``(q^2-1)/(q)``, ``q^-1``, ``2q``.
"""

from __future__ import annotations

import random
import re
from enum import Enum
from math import gcd

from ._kernels import (
    padd, pcontent, pdivexact, peval, pgcd, pmul, pneg, pscale, psub, ptrim, pval,
)


class DivisionByZero(ZeroDivisionError):
    pass


class ScalarParseError(ValueError):
    def __init__(self, text, pos, msg):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class Tag(Enum):
    RATIONAL = "Q"
    RATFUNC = "Q(q)"


def _norm_ratfunc(num, den):
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return (), (1,)
    g = pgcd(num, den)
    if len(g) > 1:
        num = pdivexact(num, g)
        den = pdivexact(den, g)
    c = gcd(pcontent(num), pcontent(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


class Scalar:
    """Immutable exact element of Q or Q(q)."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        # int arguments only; use from_poly / from_fraction for the rest
        if den == 0:
            raise DivisionByZero("zero denominator")
        if num == 0:
            num, den = 0, 1
        else:
            g = gcd(num, den)
            if den < 0:
                g = -g
            if g != 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _raw(cls, num, den):
        s = object.__new__(cls)
        object.__setattr__(s, "num", num)
        object.__setattr__(s, "den", den)
        return s

    @classmethod
    def from_poly(cls, num, den=(1,)):
        num, den = _norm_ratfunc(ptrim(tuple(num)), ptrim(tuple(den)))
        return cls._raw(num, den)

    @classmethod
    def q_power(cls, k):
        if k >= 0:
            return cls._raw((0,) * k + (1,), (1,))
        return cls._raw((1,), (0,) * (-k) + (1,))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return cls(x)
        if isinstance(x, str):
            return parse_scalar(x)
        from fractions import Fraction
        if isinstance(x, Fraction):
            return cls(x.numerator, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    # -- inspection -------------------------------------------------------
    @property
    def tag(self):
        return Tag.RATIONAL if isinstance(self.num, int) else Tag.RATFUNC

    def _polys(self):
        if isinstance(self.num, int):
            return ((self.num,) if self.num else ()), (self.den,)
        return self.num, self.den

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        if isinstance(self.num, int):
            return True
        return len(self.num) <= 1 and len(self.den) == 1

    def to_rational(self):
        """Return the equal RATIONAL scalar, or raise if q occurs."""
        if isinstance(self.num, int):
            return self
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Scalar(self.num[0] if self.num else 0, self.den[0])

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                other = Scalar(other)
            else:
                return NotImplemented
        a, b = self.num, other.num
        if isinstance(a, int) and isinstance(b, int):
            d1, d2 = self.den, other.den
            if d1 == 1 and d2 == 1:
                return Scalar._raw(a + b, 1)
            if d1 == d2:
                return Scalar(a + b, d1)
            return Scalar(a * d2 + b * d1, d1 * d2)
        n1, d1 = self._polys()
        n2, d2 = other._polys()
        if d1 == d2:
            return Scalar.from_poly(padd(n1, n2), d1)
        return Scalar.from_poly(padd(pmul(n1, d2), pmul(n2, d1)), pmul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        if isinstance(self.num, int):
            return Scalar._raw(-self.num, self.den)
        return Scalar._raw(pneg(self.num), self.den)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                other = Scalar(other)
            else:
                return NotImplemented
        a, b = self.num, other.num
        if isinstance(a, int) and isinstance(b, int) and self.den == 1 and other.den == 1:
            return Scalar._raw(a - b, 1)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                other = Scalar(other)
            else:
                return NotImplemented
        a, b = self.num, other.num
        if isinstance(a, int) and isinstance(b, int):
            if self.den == 1 and other.den == 1:
                return Scalar._raw(a * b, 1)
            return Scalar(a * b, self.den * other.den)
        if not a or not b:
            return ZERO
        n1, d1 = self._polys()
        n2, d2 = other._polys()
        return Scalar.from_poly(pmul(n1, n2), pmul(d1, d2))

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise DivisionByZero("inverse of zero")
        if isinstance(self.num, int):
            return Scalar(self.den, self.num)
        return Scalar.from_poly(self.den, self.num)

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        if not other.num:
            raise DivisionByZero("division by zero")
        return self * other.inv()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        elif not isinstance(other, Scalar):
            return NotImplemented
        if isinstance(self.num, int) and isinstance(other.num, int):
            return self.num == other.num and self.den == other.den
        return self._polys() == other._polys()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if isinstance(self.num, int):
            return hash((self.num, self.den))
        if self.is_constant():
            return hash((self.num[0] if self.num else 0, self.den[0]))
        return hash((self.num, self.den))

    # -- evaluation -------------------------------------------------------
    def subs(self, value):
        """Substitute a rational value for q; returns a RATIONAL scalar."""
        from fractions import Fraction
        if isinstance(self.num, int):
            return self
        v = Fraction(value)
        num = peval(self.num, v)
        den = peval(self.den, v)
        if den == 0:
            raise DivisionByZero(f"denominator of {self} vanishes at q={value}")
        r = Fraction(num) / Fraction(den)
        return Scalar(r.numerator, r.denominator)

    # -- printing ---------------------------------------------------------
    def __str__(self):
        if isinstance(self.num, int):
            if self.den == 1:
                return str(self.num)
            return f"{self.num}/{self.den}"
        n, d = self.num, self.den
        if d == (1,):
            return _poly_str(n)
        num_s = _poly_str(n)
        if sum(1 for c in n if c) > 1:
            num_s = f"({num_s})"
        nz = [c for c in d if c]
        if len(nz) == 1 and (nz[0] == 1 or len(d) == 1):
            den_s = _poly_str(d)
        else:
            den_s = f"({_poly_str(d)})"
        return f"{num_s}/{den_s}"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _poly_str(p):
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = "q" if i == 1 else f"q^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ZERO = Scalar(0)
ONE = Scalar(1)
Q = Scalar.q_power(1)


def as_scalar(x):
    return Scalar.coerce(x)


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\^)|([-+*/()]))")


def _tokenize(text):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ScalarParseError(text, pos, f"unexpected character {text[pos]!r}")
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("INT", int(m.group(1)), start))
        elif m.group(2):
            toks.append(("Q", None, start))
        elif m.group(3):
            toks.append(("^", None, start))
        else:
            toks.append((m.group(4), None, start))
        pos = m.end()
    toks.append(("END", None, n))
    return toks


class _ScalarParser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ScalarParseError(self.text, tok[2], f"expected {kind!r}, got {tok[0]!r}")
        self.i += 1
        return tok

    def parse(self):
        v = self.sum()
        if self.peek() != "END":
            raise ScalarParseError(self.text, self.toks[self.i][2], "trailing input")
        return v

    def sum(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while True:
            k = self.peek()
            if k == "*":
                self.take()
                v = v * self.unary()
            elif k == "/":
                tok = self.take()
                w = self.unary()
                if w.is_zero():
                    raise ScalarParseError(self.text, tok[2], "division by zero")
                v = v / w
            elif k in ("INT", "Q", "("):
                v = v * self.unary()
            else:
                return v

    def unary(self):
        k = self.peek()
        if k == "-":
            self.take()
            return -self.unary()
        if k == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() in ("-", "+"):
                sign = -1 if self.take()[0] == "-" else 1
            tok = self.take("INT")
            e = sign * tok[1]
            if e < 0 and base.is_zero():
                raise ScalarParseError(self.text, tok[2], "negative power of zero")
            return base ** e
        return base

    def atom(self):
        tok = self.take()
        if tok[0] == "INT":
            return Scalar(tok[1])
        if tok[0] == "Q":
            return Q
        if tok[0] == "(":
            v = self.sum()
            self.take(")")
            return v
        raise ScalarParseError(self.text, tok[2], f"unexpected token {tok[0]!r}")


def parse_scalar(text):
    """Parse the textual scalar syntax into a normalized :class:`Scalar`."""
    return _ScalarParser(str(text)).parse()


def random_scalar(rng: random.Random, field: Tag = Tag.RATIONAL, size=5):
    """A random nonzero-or-zero scalar for property tests."""
    if field is Tag.RATIONAL:
        return Scalar(rng.randint(-size, size), rng.randint(1, size))
    deg = rng.randint(0, 2)
    num = tuple(rng.randint(-size, size) for _ in range(deg + 1))
    den = tuple(rng.randint(-size, size) for _ in range(rng.randint(0, 2))) + (rng.randint(1, size),)
    return Scalar.from_poly(num, den)
