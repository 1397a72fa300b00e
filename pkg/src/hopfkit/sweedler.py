"""A small language for Sweedler-notation formulas.

Grammar (ASCII; whitespace is insignificant)::

    expr    = tensor { ("+" | "-") tensor } ;
    tensor  = product { "(x)" product } ;
    product = factor { ["."] factor } ;             (* "." or juxtaposition *)
    factor  = "-" factor
            | coeff "*" factor
            | act ;
    act     = atom [ "|>" [ ":" NAME ] act ] ;
    atom    = NAME "_(" INT ")"                     (* Sweedler leg *)
            | "S" "(" expr ")" | "eps" "(" expr ")"
            | coeff                                 (* constant multiple of 1 *)
            | NAME
            | "(" expr ")" ;
    coeff   = INT [ "/" INT ] | "[" scalar "]" ;

``(x)`` is always the tensor sign, so a parenthesised lone variable must be
written without the parentheses.  ``scalar`` is the scalar grammar of
:mod:`hopfkit.exactfield`.  A variable is either used whole or split into
consecutive legs starting at 0 (a coaction followed by coproducts of the
coacting coalgebra) or at 1 (an iterated coproduct).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .algebra.core import CarrierMismatch, Element, TensorElement, format_coeff
from .exactfield import ONE, ZERO, Scalar, ScalarParseError, parse_scalar


class ParseError(ValueError):
    def __init__(self, text, pos, msg):
        self.text, self.pos, self.msg = text, pos, msg
        super().__init__(f"{msg} at position {pos}: {text[:pos]}<<here>>{text[pos:]}")


class LegGapError(ParseError):
    pass


class UndeclaredVariable(ParseError):
    pass


class UnboundVariable(KeyError):
    pass


# -- syntax tree ----------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Leg:
    var: str
    index: int


@dataclass(frozen=True)
class Const:
    value: Scalar


@dataclass(frozen=True)
class Tensor:
    factors: tuple


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Add:
    terms: tuple


@dataclass(frozen=True)
class Act:
    name: str
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Antipode:
    sub: object


@dataclass(frozen=True)
class Counit:
    sub: object


@dataclass(frozen=True)
class ScalarMul:
    scalar: Scalar
    sub: object


def children(node):
    if isinstance(node, (Tensor, Mul)):
        return node.factors
    if isinstance(node, Add):
        return node.terms
    if isinstance(node, Act):
        return (node.lhs, node.rhs)
    if isinstance(node, (Antipode, Counit, ScalarMul)):
        return (node.sub,)
    return ()


def walk(node):
    yield node
    for c in children(node):
        yield from walk(c)


def leg_usage(node):
    """{var: set of leg indices} (empty set for a whole-variable use)."""
    out = {}
    for n in walk(node):
        if isinstance(n, Var):
            out.setdefault(n.name, set()).add(None)
        elif isinstance(n, Leg):
            out.setdefault(n.var, set()).add(n.index)
    return out


# -- tokenizer -----------------------------------------------------------------

_TOKENS = re.compile(r"""
    (?P<ws>\s+)
  | (?P<tensor>\(x\))
  | (?P<act>\|>)
  | (?P<leg>_\(\s*(?P<legidx>\d+)\s*\))
  | (?P<int>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9]*)
  | (?P<bracket>\[)
  | (?P<op>[-+*/.():])
""", re.VERBOSE)


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if not m:
            raise ParseError(text, pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        if kind == "legidx":
            kind = "leg"
        if kind == "bracket":
            end = text.find("]", pos)
            if end < 0:
                raise ParseError(text, pos, "unclosed '['")
            inner = text[pos + 1:end]
            try:
                value = parse_scalar(inner)
            except ScalarParseError as exc:
                raise ParseError(text, pos + 1 + exc.pos, f"bad scalar: {exc.msg}") from None
            toks.append(("scalar", value, pos))
            pos = end + 1
            continue
        if kind == "leg":
            toks.append(("leg", int(m.group("legidx")), pos))
        elif kind == "int":
            toks.append(("int", int(m.group()), pos))
        elif kind == "name":
            toks.append(("name", m.group(), pos))
        elif kind in ("tensor", "act"):
            toks.append((kind, m.group(), pos))
        elif kind == "op":
            toks.append((m.group(), m.group(), pos))
        pos = m.end()
    toks.append(("eof", None, len(text)))
    return toks


_ATOM_START = {"name", "int", "scalar", "("}


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k=0):
        return self.toks[self.i + k]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "eof" else repr(kind)
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(self.text, tok[2], f"expected {want}, found {got}")
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "eof":
            raise ParseError(self.text, 0, "empty expression")
        node = self.expr()
        self.take("eof")
        return node

    def expr(self):
        terms = [self.tensor()]
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.tensor()
            terms.append(t if op == "+" else negate(t))
        return terms[0] if len(terms) == 1 else Add(tuple(terms))

    def tensor(self):
        fs = [self.product()]
        while self.peek()[0] == "tensor":
            self.take()
            fs.append(self.product())
        return fs[0] if len(fs) == 1 else Tensor(tuple(fs))

    def product(self):
        fs = [self.factor()]
        while True:
            k = self.peek()[0]
            if k == ".":
                self.take()
                fs.append(self.factor())
            elif k in _ATOM_START:
                fs.append(self.factor())
            else:
                break
        return fs[0] if len(fs) == 1 else Mul(tuple(fs))

    def coeff(self, sign=1):
        tok = self.take()
        if tok[0] == "scalar":
            return tok[1] * sign
        value = Scalar(tok[1])
        if self.peek()[0] == "/":
            self.take()
            den = self.take("int")
            if den[1] == 0:
                raise ParseError(self.text, den[2], "division by zero")
            value = value / den[1]
        return value * sign

    def factor(self):
        k = self.peek()[0]
        if k == "-":
            self.take()
            if self.peek()[0] == "int":
                value = self.coeff(-1)
                if self.peek()[0] == "*":
                    self.take()
                    return ScalarMul(value, self.factor())
                return self.act_tail(Const(value))
            return ScalarMul(Scalar(-1), self.factor())
        if k in ("int", "scalar"):
            value = self.coeff()
            if self.peek()[0] == "*":
                self.take()
                return ScalarMul(value, self.factor())
            return self.act_tail(Const(value))
        return self.act()

    def act(self):
        return self.act_tail(self.atom())

    def act_tail(self, lhs):
        if self.peek()[0] != "act":
            return lhs
        self.take()
        name = ""
        if self.peek()[0] == ":":
            self.take()
            name = self.take("name")[1]
        return Act(name, lhs, self.act())

    def atom(self):
        tok = self.peek()
        if tok[0] == "name":
            self.take()
            name = tok[1]
            nxt = self.peek()
            if nxt[0] == "leg":
                self.take()
                return Leg(name, nxt[1])
            if name in ("S", "eps") and nxt[0] == "(":
                self.take("(")
                sub = self.expr()
                self.take(")")
                return Antipode(sub) if name == "S" else Counit(sub)
            return Var(name)
        if tok[0] in ("int", "scalar"):
            return Const(self.coeff())
        if tok[0] == "(":
            self.take()
            sub = self.expr()
            self.take(")")
            return sub
        got = "end of input" if tok[0] == "eof" else repr(tok[1])
        raise ParseError(self.text, tok[2], f"unexpected {got}")


def negate(node):
    if isinstance(node, ScalarMul) and node.scalar.is_constant():
        c = -node.scalar
        return ScalarMul(c, node.sub)
    if isinstance(node, Const):
        return Const(-node.value)
    return ScalarMul(Scalar(-1), node)


def _position_of(text, var):
    m = re.search(rf"\b{re.escape(var)}\b", text)
    return m.start() if m else 0


def validate(node, text="", signature=None):
    usage = leg_usage(node)
    for var, idx in sorted(usage.items()):
        if signature is not None and var not in signature:
            raise UndeclaredVariable(text, _position_of(text, var),
                                     f"variable {var!r} is not declared")
        legs = idx - {None}
        if not legs:
            continue
        if None in idx:
            raise LegGapError(text, _position_of(text, var),
                              f"{var} is used both whole and split into legs")
        lo, hi = min(legs), max(legs)
        if lo > 1:
            raise LegGapError(text, _position_of(text, var),
                              f"legs of {var} must start at {var}_(0) or {var}_(1)")
        missing = sorted(set(range(lo, hi + 1)) - legs)
        if missing:
            used = ", ".join(f"{var}_({i})" for i in sorted(legs))
            raise LegGapError(text, _position_of(text, var),
                              f"{used} used but not {var}_({missing[0]})")
    return node


def parse_expr(text, signature=None):
    """Parse a formula.  ``signature`` maps declared variables to carrier roles.

    With ``signature=None`` any name is accepted (element strings, where
    names are basis vectors of the carrier in that position).
    """
    if signature is not None and not isinstance(signature, dict):
        signature = dict(signature)
    node = _Parser(text).parse()
    return validate(node, text, signature)


# -- printer -------------------------------------------------------------------

def _level(node):
    if isinstance(node, Add):
        return 0
    if isinstance(node, Tensor):
        return 1
    if isinstance(node, Mul):
        return 2
    if isinstance(node, ScalarMul):
        return 3
    if isinstance(node, Act):
        return 4
    if isinstance(node, Const) and node.value.is_constant() and node.value.to_rational().num < 0:
        return 3
    return 5


def _wrap(node, min_level):
    s = to_text(node)
    return f"({s})" if _level(node) < min_level else s


def _neg_rational(c):
    return c.is_constant() and c.to_rational().num < 0


def to_text(node):
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Leg):
        return f"{node.var}_({node.index})"
    if isinstance(node, Const):
        return format_coeff(node.value)
    if isinstance(node, (Antipode, Counit)):
        inner = to_text(node.sub)
        if inner == "x":
            inner = " x "
        return f"{'S' if isinstance(node, Antipode) else 'eps'}({inner})"
    if isinstance(node, Tensor):
        return " (x) ".join(_wrap(f, 2) for f in node.factors)
    if isinstance(node, Mul):
        return ".".join(_wrap(f, 3) for f in node.factors)
    if isinstance(node, Act):
        op = "|>" if not node.name else f"|>:{node.name}"
        return f"{_wrap(node.lhs, 5)} {op} {_wrap(node.rhs, 4)}"
    if isinstance(node, ScalarMul):
        c = node.scalar
        if c == Scalar(-1):
            s = _wrap(node.sub, 3)
            if s[:1].isdigit():
                s = f"({s})"
            return "-" + s
        return f"{format_coeff(c)}*{_wrap(node.sub, 3)}"
    if isinstance(node, Add):
        parts = [_wrap(node.terms[0], 1)]
        for t in node.terms[1:]:
            if isinstance(t, Const) and _neg_rational(t.value):
                parts.append(" - " + to_text(Const(-t.value)))
            elif isinstance(t, ScalarMul) and _neg_rational(t.scalar) and not (
                    t.scalar == Scalar(-1) and isinstance(t.sub, (ScalarMul, Const))):
                if t.scalar == Scalar(-1):
                    parts.append(" - " + _wrap(t.sub, 1))
                else:
                    parts.append(" - " + to_text(ScalarMul(-t.scalar, t.sub)))
            else:
                parts.append(" + " + _wrap(t, 1))
        return "".join(parts)
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ------------------------------------------------------------------

class Structures:
    """Coactions and actions available to the evaluator.

    ``coactions`` maps a carrier to ``(B, f)`` with ``f(i)`` a dict
    ``{(j, b): coeff}``.  ``actions`` maps a name to ``(L, R, f)`` with
    ``f(i, j)`` the coefficient vector (list or dict) of ``l_i |> r_j`` in R.
    Carriers with a comultiplication coact on themselves by default.
    """

    def __init__(self, coactions=None, actions=None):
        self.coactions = dict(coactions or {})
        self.actions = dict(actions or {})

    def add_coaction(self, carrier, B, fn):
        self.coactions[carrier] = (B, fn)
        return self

    def add_action(self, name, L, R, fn):
        self.actions[name] = (L, R, fn)
        return self

    def coaction(self, carrier):
        if carrier in self.coactions:
            return self.coactions[carrier]
        if hasattr(carrier, "coact_basis"):
            return carrier.B, carrier.coact_basis
        if hasattr(carrier, "comult"):
            return carrier, carrier.comul_basis
        raise CarrierMismatch(f"no coaction registered on {carrier!r}")

    def action(self, name, rhs_carrier):
        if name:
            if name not in self.actions:
                raise UnboundVariable(f"no action named {name!r}")
            return self.actions[name]
        for L, R, fn in self.actions.values():
            if R is rhs_carrier:
                return L, R, fn
        if hasattr(rhs_carrier, "act_basis"):
            return rhs_carrier.over, rhs_carrier, rhs_carrier.act_basis
        raise CarrierMismatch(f"no action on {rhs_carrier!r}")


class _Value:
    """Sparse tensor over a tuple of carriers; the empty tuple is a scalar."""

    __slots__ = ("carriers", "terms")

    def __init__(self, carriers, terms):
        self.carriers = tuple(carriers)
        self.terms = terms

    @classmethod
    def scalar(cls, c):
        return cls((), {(): c} if c else {})

    @classmethod
    def basis(cls, C, i, c=ONE):
        return cls((C,), {(i,): c})

    @classmethod
    def vector(cls, C, v):
        return cls((C,), {(i,): x for i, x in enumerate(v) if x})

    def scale(self, c):
        if not c:
            return _Value(self.carriers, {})
        return _Value(self.carriers, {k: x * c for k, x in self.terms.items()})


def _add_into(acc, k, x):
    y = acc.get(k)
    z = x if y is None else y + x
    if z:
        acc[k] = z
    elif y is not None:
        del acc[k]


def _iterated_coproduct(C, i, nlegs):
    """Delta applied nlegs-1 times, always on the last leg."""
    cur = {(i,): ONE}
    for _ in range(nlegs - 1):
        nxt = {}
        for key, c in cur.items():
            for (a, b), x in C.comul_basis(key[-1]).items():
                _add_into(nxt, key[:-1] + (a, b), c * x)
        cur = nxt
    return cur


def _iterated_coaction(structs, C, i, nlegs):
    B, rho = structs.coaction(C)
    cur = {}
    for (j, b), x in rho(i).items():
        _add_into(cur, (j, b), x)
    for _ in range(nlegs - 2):
        nxt = {}
        for key, c in cur.items():
            for (a, b), x in B.comul_basis(key[-1]).items():
                _add_into(nxt, key[:-1] + (a, b), c * x)
        cur = nxt
    return cur, [C] + [B] * (nlegs - 1)


class _Evaluator:
    def __init__(self, bindings, structs):
        self.bindings = bindings
        self.structs = structs
        self.legs = {}

    def value_of_binding(self, name):
        x = self.bindings[name]
        if isinstance(x, Element):
            return _Value.vector(x.carrier, x.coeffs)
        if isinstance(x, TensorElement):
            return _Value(x.carriers, dict(x.coeffs))
        if isinstance(x, Scalar):
            return _Value.scalar(x)
        raise TypeError(f"cannot bind {name} to {type(x).__name__}")

    def ev(self, node, hint):
        if isinstance(node, Var):
            if node.name in self.bindings:
                return self.value_of_binding(node.name)
            if hint is not None and len(hint) == 1:
                C = hint[0]
                try:
                    return _Value.basis(C, C.index(node.name))
                except KeyError:
                    pass
            raise UnboundVariable(node.name)
        if isinstance(node, Leg):
            C, i = self.legs[(node.var, node.index)]
            return _Value.basis(C, i)
        if isinstance(node, Const):
            if hint is not None and len(hint) == 1 and hasattr(hint[0], "unit"):
                return _Value.vector(hint[0], hint[0].unit).scale(node.value)
            return _Value.scalar(node.value)
        if isinstance(node, ScalarMul):
            return self.ev(node.sub, hint).scale(node.scalar)
        if isinstance(node, Add):
            vals = [self.ev(t, hint) for t in node.terms]
            shape = next((v.carriers for v in vals if v.terms), vals[0].carriers)
            acc = {}
            for v in vals:
                if v.terms and v.carriers != shape:
                    raise CarrierMismatch("summands live in different tensor products")
                for k, x in v.terms.items():
                    _add_into(acc, k, x)
            return _Value(shape, acc)
        if isinstance(node, Tensor):
            hints = hint if hint is not None and len(hint) == len(node.factors) else None
            vals = [self.ev(f, None if hints is None else (hints[i],))
                    for i, f in enumerate(node.factors)]
            carriers = tuple(C for v in vals for C in v.carriers)
            acc = {}
            for combo in itertools.product(*[list(v.terms.items()) for v in vals]):
                key = tuple(i for k, _ in combo for i in k)
                c = ONE
                for _, x in combo:
                    c = c * x
                _add_into(acc, key, c)
            return _Value(carriers, acc)
        if isinstance(node, Mul):
            vals = [self.ev(f, hint) for f in node.factors]
            out = vals[0]
            for v in vals[1:]:
                out = _multiply(out, v)
            return out
        if isinstance(node, Act):
            rhs = self.ev(node.rhs, hint)
            if len(rhs.carriers) != 1:
                raise CarrierMismatch("the right side of |> must be a single vector")
            L, R, fn = self.structs.action(node.name, rhs.carriers[0])
            lhs = self.ev(node.lhs, (L,))
            if lhs.carriers == ():
                lhs = _Value.vector(L, L.unit).scale(lhs.terms.get((), ZERO))
            if lhs.carriers != (L,) or rhs.carriers[0] is not R:
                raise CarrierMismatch(f"action {node.name or '|>'} expects {L!r} |> {R!r}")
            acc = {}
            for (i,), a in lhs.terms.items():
                for (j,), b in rhs.terms.items():
                    img = fn(i, j)
                    items = img.items() if isinstance(img, dict) else enumerate(img)
                    for r, x in items:
                        if x:
                            _add_into(acc, (r,), a * b * x)
            return _Value((R,), acc)
        if isinstance(node, Antipode):
            v = self.ev(node.sub, hint)
            if len(v.carriers) != 1 or not hasattr(v.carriers[0], "antipode"):
                raise CarrierMismatch("S(...) needs a vector in a Hopf algebra")
            H = v.carriers[0]
            acc = {}
            for (i,), a in v.terms.items():
                for r, x in enumerate(H.antipode[i]):
                    if x:
                        _add_into(acc, (r,), a * x)
            return _Value((H,), acc)
        if isinstance(node, Counit):
            v = self.ev(node.sub, None)
            if len(v.carriers) != 1 or not hasattr(v.carriers[0], "counit"):
                raise CarrierMismatch("eps(...) needs a vector in a coalgebra")
            C = v.carriers[0]
            acc = ZERO
            for (i,), a in v.terms.items():
                acc = acc + a * C.counit[i]
            return _Value.scalar(acc)
        raise TypeError(f"not an expression node: {node!r}")


def _multiply(u, v):
    if u.carriers == ():
        return v.scale(u.terms.get((), ZERO))
    if v.carriers == ():
        return u.scale(v.terms.get((), ZERO))
    if u.carriers != v.carriers:
        raise CarrierMismatch("factors of a product live in different algebras")
    for C in u.carriers:
        if not hasattr(C, "_prod"):
            raise CarrierMismatch(f"{C!r} has no multiplication")
    acc = {}
    for k1, a in u.terms.items():
        for k2, b in v.terms.items():
            parts = [C._prod(i, j) for C, i, j in zip(u.carriers, k1, k2)]
            ab = a * b
            for combo in itertools.product(*parts):
                c = ab
                for _, x in combo:
                    c = c * x
                _add_into(acc, tuple(r for r, _ in combo), c)
    return _Value(u.carriers, acc)


def eval_expr(expr, bindings, structures=None, target=None):
    """Evaluate a formula; returns a TensorElement (a Scalar when 0-ary).

    ``target`` optionally lists the carriers of the result; it lets bare
    basis names and constants be resolved in element strings.
    """
    if isinstance(expr, str):
        expr = parse_expr(expr)
    structs = structures or Structures()
    usage = {v: sorted(i for i in s if i is not None) for v, s in leg_usage(expr).items()}
    split = {v: legs for v, legs in usage.items() if legs}
    for v in usage:
        if v in split and v not in bindings:
            raise UnboundVariable(v)
    ev = _Evaluator(bindings, structs)
    expansions = []
    for v, legs in sorted(split.items()):
        x = bindings[v]
        if not isinstance(x, Element):
            raise CarrierMismatch(f"split variable {v} must be bound to an Element")
        C = x.carrier
        lo, hi = legs[0], legs[-1]
        total = {}
        carriers = None
        for i, a in enumerate(x.coeffs):
            if not a:
                continue
            if lo == 1:
                if not hasattr(C, "comul_basis"):
                    raise CarrierMismatch(f"{v} is split but {C!r} has no coproduct")
                terms, carriers = _iterated_coproduct(C, i, hi), [C] * hi
            else:
                terms, carriers = _iterated_coaction(structs, C, i, hi + 1)
            for k, c in terms.items():
                _add_into(total, k, a * c)
        expansions.append((v, lo, carriers, list(total.items())))
    acc = {}
    shape = None
    for combo in itertools.product(*[e[3] for e in expansions]):
        coeff = ONE
        for (v, lo, carriers, _), (key, c) in zip(expansions, combo):
            coeff = coeff * c
            for pos, idx in enumerate(key):
                ev.legs[(v, lo + pos)] = (carriers[pos], idx)
        val = ev.ev(expr, tuple(target) if target is not None else None)
        if val.terms:
            if shape is not None and val.carriers != shape:
                raise CarrierMismatch("expression has no consistent tensor shape")
            shape = val.carriers
        for k, x in val.terms.items():
            _add_into(acc, k, coeff * x)
    if shape is None:
        shape = tuple(target) if target is not None else ()
    if shape == ():
        return acc.get((), ZERO)
    return TensorElement(shape, acc)


def parse_element(text, carriers):
    """Parse an element string such as ``"x (x) 1 + 2*g (x) x"`` in the given factors."""
    node = parse_expr(text)
    val = eval_expr(node, {}, target=tuple(carriers))
    if isinstance(val, Scalar):
        if val:
            raise CarrierMismatch(f"{text!r} is a scalar, not an element")
        return TensorElement(tuple(carriers), {})
    if val.carriers != tuple(carriers):
        raise CarrierMismatch(f"{text!r} does not live in the requested tensor product")
    return val


def tensor_to_element(t):
    """A one-factor TensorElement as an Element."""
    (C,) = t.carriers
    v = [ZERO] * C.dim
    for (i,), x in t.coeffs.items():
        v[i] = x
    return Element(C, v)
