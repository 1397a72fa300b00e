"""Left Ore localization S^-1 E of a presented algebra at the powers of one element s.

A fraction s^-k e is stored as (k, e) with e a normal-form element.  The
canonical form has k minimal: e is not of the form s.e'' when k > 0.
Moving a denominator to the left uses a witness s^k e = e' s, found by an
exact linear solve among normal monomials of bounded degree.
"""

from __future__ import annotations

from ..exactfield import ONE, ZERO
from ..fpalg.core import DegreeOverflow, NFElement, format_terms, tensor_mul_terms
from ..linalg import Echelon, siadd, sparse_kernel, sparse_solve
from ..reports import LawReport, Status


class BoundTooSmall(ArithmeticError):
    pass


class WitnessNotFound(BoundTooSmall):
    pass


class NotCompatible(ValueError):
    pass


class OreSet:
    """S = {s^n : n >= 0} inside a presented algebra.

    ``slack`` is the extra degree allowed beyond the bound when searching for
    witnesses (default: the bound plus deg s, enough for s^(l+1) d^l type moves); ``extra_power`` makes every witness use one more power of s
    than necessary (an independent choice, used to test uniqueness).
    """

    def __init__(self, A, s, bound=None, slack=None, extra_power=0):
        self.A = A
        self.s = A.element(s)
        if not self.s:
            raise ValueError("0 cannot be a denominator")
        self.bound = A.bound if bound is None else bound
        self.ds = self.s.degree()
        self.slack = self.bound + self.ds if slack is None else slack
        self.extra_power = extra_power
        self._witness = {}
        self._powers = [A.one().terms]
        self._left_div = {}

    def __repr__(self):
        return f"<OreSet {{({self.s})^n}} in {self.A.name}>"

    @property
    def limit(self):
        return self.bound + self.slack + 2 * self.ds

    def power(self, k):
        while len(self._powers) <= k:
            self._powers.append(self.A.mul_terms(self._powers[-1], self.s.terms, self.limit))
        return self._powers[k]

    def _monomials(self, degree):
        return self.A.normal_monomials(degree)

    def witness_monomial(self, m):
        """(k, e') with s^k m = e' s for a normal monomial m."""
        hit = self._witness.get(m)
        if hit is not None:
            return hit
        A = self.A
        if not m:
            out = (1 + self.extra_power, self.power(self.extra_power))
            self._witness[m] = out
            return out
        dm = A.degree(m)
        k = 1
        while True:
            top = dm + k * self.ds
            if top > self.bound + self.slack + self.ds:
                raise WitnessNotFound(f"no s^k {A.word_str(m)} in E.s up to degree {top - self.ds}")
            target = A.mul_terms(self.power(k), {m: ONE}, self.limit)
            cands = self._monomials(top - self.ds)
            cols = [A.mul_terms({w: ONE}, self.s.terms, self.limit) for w in cands]
            sol = sparse_solve(cols, target)
            if sol is not None:
                ep = {cands[j]: c for j, c in sol.items() if c}
                if self.extra_power:
                    ep = A.mul_terms(self.power(self.extra_power), ep, self.limit)
                out = (k + self.extra_power, ep)
                self._witness[m] = out
                return out
            k += 1

    def witness(self, e):
        """(k, e') with s^k e = e' s for an element e."""
        terms = e.terms if isinstance(e, NFElement) else e
        ws = {m: self.witness_monomial(m) for m in terms}
        K = max((k for k, _ in ws.values()), default=1)
        out = {}
        for m, c in terms.items():
            k, ep = ws[m]
            siadd(out, self.A.mul_terms(self.power(K - k), ep, self.limit), c)
        return K, out

    def left_divide(self, e):
        """e'' with s.e'' = e, or None."""
        terms = e.terms if isinstance(e, NFElement) else e
        key = tuple(sorted(terms.items(), key=lambda kv: self.A.key(kv[0])))
        if key in self._left_div:
            return self._left_div[key]
        A = self.A
        if not terms:
            return {}
        top = max(A.degree(w) for w in terms) - self.ds
        out = None
        if top >= 0:
            cands = self._monomials(top)
            cols = [A.mul_terms(self.s.terms, {w: ONE}, self.limit) for w in cands]
            sol = sparse_solve(cols, terms)
            if sol is not None:
                out = {cands[j]: c for j, c in sol.items() if c}
        self._left_div[key] = out
        return out

    # fractions

    def fraction(self, k, e):
        e = e.terms if isinstance(e, NFElement) else self.A.element(e).terms
        return OreFraction(self, k, e)

    def iota(self, e):
        return self.fraction(0, e)

    def inverse_s(self):
        return OreFraction(self, 1, {(): ONE})


class OreFraction:
    """s^-k e in canonical form."""

    __slots__ = ("S", "k", "num")

    def __init__(self, S, k, num, canonical=False):
        self.S = S
        num = {w: c for w, c in num.items() if c}
        if not canonical:
            if not num:
                k = 0
            while k > 0:
                q = S.left_divide(num)
                if q is None:
                    break
                num, k = q, k - 1
        self.k = k
        self.num = num

    def __repr__(self):
        return f"OreFraction({str(self)!r})"

    def __str__(self):
        body = format_terms(self.S.A, self.num)
        if self.k == 0:
            return body
        s = format_terms(self.S.A, self.S.s.terms)
        s = s if len(self.S.s.terms) == 1 else f"({s})"
        if body == "1":
            return f"{s}^-{self.k}"
        return f"{s}^-{self.k}*({body})"

    def numerator(self):
        return NFElement(self.S.A, self.num)

    def __eq__(self, other):
        if not isinstance(other, OreFraction):
            return NotImplemented
        return self.S is other.S and self.k == other.k and self.num == other.num

    def __hash__(self):
        return hash((self.k, frozenset(self.num.items())))

    def __bool__(self):
        return bool(self.num)

    def lift(self, K):
        """Numerator over the denominator s^K (K >= k)."""
        return self.S.A.mul_terms(self.S.power(K - self.k), self.num, self.S.limit)

    def __add__(self, other):
        K = max(self.k, other.k)
        out = dict(self.lift(K))
        siadd(out, other.lift(K))
        return OreFraction(self.S, K, out)

    def __neg__(self):
        return OreFraction(self.S, self.k, {w: -c for w, c in self.num.items()}, canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return OreFraction(self.S, self.k, {w: x * c for w, x in self.num.items()}, canonical=not c)

    def __mul__(self, other):
        S = self.S
        e, k = self.num, self.k
        # e s^-j = s^-K e' after j witness moves
        for _ in range(other.k):
            kk, e = S.witness(e)
            k += kk
        return OreFraction(S, k, S.A.mul_terms(e, other.num, S.limit))


def check_ore(A, s, D=None, slack=None):
    """Left Ore witnesses for (s, m), m every normal monomial of degree <= D."""
    S = s if isinstance(s, OreSet) else OreSet(A, s, D, slack)
    D = S.bound if D is None else D
    report = LawReport(f"left Ore condition for {{({S.s})^n}} in {A.name} up to degree {D}")
    table = {}
    for m in A.normal_monomials(D):
        try:
            k, ep = S.witness_monomial(m)
        except (WitnessNotFound, DegreeOverflow) as exc:
            report.add("left_ore", Status.INCONCLUSIVE,
                       f"no witness for (s, {A.word_str(m)}) at the bound: {exc}", pair=A.word_str(m))
            report.witnesses = table
            return report
        table[A.word_str(m)] = (k, format_terms(A, ep))
    report.add("left_ore", True, witnesses=len(table))
    report.witnesses = table
    return report


class LocTensor:
    """An element of S^-1 E (x) B as {B monomial: fraction}."""

    __slots__ = ("CL", "terms")

    def __init__(self, CL, terms):
        self.CL = CL
        self.terms = {b: f for b, f in terms.items() if f}

    def __eq__(self, other):
        return isinstance(other, LocTensor) and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        B = self.CL.B
        return " + ".join(f"({f}) (x) {B.word_str(b)}" for b, f in
                          sorted(self.terms.items(), key=lambda kv: B.key(kv[0])))

    def __add__(self, other):
        out = dict(self.terms)
        for b, f in other.terms.items():
            out[b] = out[b] + f if b in out else f
        return LocTensor(self.CL, out)

    def __sub__(self, other):
        return self + LocTensor(self.CL, {b: -f for b, f in other.terms.items()})

    def __mul__(self, other):
        B = self.CL.B
        out = {}
        for b1, f1 in self.terms.items():
            for b2, f2 in other.terms.items():
                prod = f1 * f2
                for b, c in B.nf_terms({b1 + b2: ONE}, 4 * self.CL.S.limit).items():
                    term = prod.scale(c)
                    out[b] = out[b] + term if b in out else term
        return LocTensor(self.CL, out)


class CompatibleLocalization:
    """S^-1 E with the localized coaction rho_S(s^-k e) = (s^-k (x) u^-k) rho(e)."""

    def __init__(self, EA, S, u, u_inv):
        self.EA = EA
        self.E = EA.E
        self.B = EA.B
        self.S = S
        self.u = u
        self.u_inv = u_inv

    def __repr__(self):
        return f"<CompatibleLocalization of {self.EA.name} at {self.S.s}>"

    def rho_E(self, terms):
        """(iota (x) id) rho(e) as a LocTensor."""
        out = {}
        for w, c in terms.items():
            siadd(out, self.EA.rho.apply_word(w, self.S.limit), c)
        by_b = {}
        for (e, b), c in out.items():
            siadd(by_b.setdefault(b, {}), {e: c})
        return LocTensor(self, {b: OreFraction(self.S, 0, t, canonical=True) for b, t in by_b.items()})

    def rho_S(self, f):
        """rho_S(s^-k e) = rho(s)^-k rho(e)."""
        inv = LocTensor(self, {b: OreFraction(self.S, f.k, {(): c}) for b, c in
                               self._u_inv_power(f.k).items()})
        return inv * self.rho_E(f.num)

    def _u_inv_power(self, k):
        out = {(): ONE}
        for _ in range(k):
            out = self.B.mul_terms(out, self.u_inv, 4 * self.S.limit)
        return out

    def one(self):
        return LocTensor(self, {(): OreFraction(self.S, 0, {(): ONE}, canonical=True)})

    def unit_leg(self, f):
        return LocTensor(self, {(): f})


def localize_coaction(EA, s, D=None, slack=None, extra_power=0, check=True):
    """Localize EA at the powers of s; rho(s) must be s (x) u with u group-like and invertible."""
    E, B = EA.E, EA.B
    S = s if isinstance(s, OreSet) else OreSet(E, s, D, slack, extra_power)
    rs = {}
    for w, c in S.s.terms.items():
        siadd(rs, EA.rho.apply_word(w), c)
    legs = {}
    for (e, b), c in rs.items():
        siadd(legs.setdefault(b, {}), {e: c})
    if len(legs) != 1 or next(iter(legs.values())) != S.s.terms:
        raise NotCompatible(f"rho({S.s}) is not of the form s (x) u")
    (ub,) = legs
    u = {ub: ONE}
    du = B.comult.apply_word(ub) if B.comult is not None else None
    if du != {(ub, ub): ONE} or B.counit.apply_word(ub).get((), ZERO) != ONE:
        raise NotCompatible(f"the leg {B.word_str(ub)} of rho({S.s}) is not group-like")
    if B.antipode is None:
        raise NotCompatible(f"cannot invert {B.word_str(ub)} without an antipode")
    u_inv = B.antipode.apply_terms({ub: ONE})[0]
    if B.mul_terms(u, u_inv) != {(): ONE} or B.mul_terms(u_inv, u) != {(): ONE}:
        raise NotCompatible(f"{B.word_str(ub)} is not invertible in {B.name}")
    CL = CompatibleLocalization(EA, S, u, u_inv)
    if check:
        rep = check_localization(CL, S.bound)
        if rep.status is Status.FAIL:
            bad = rep.failures()[0]
            raise NotCompatible(f"{bad.law}: {bad.counterexample}")
    return CL


def _sample_fractions(CL, kmax, dmax):
    S = CL.S
    return [OreFraction(S, k, {m: ONE}) for k in range(kmax + 1)
            for m in CL.E.normal_monomials(dmax)]


def check_localization(CL, D=None, sample_degree=2):
    """The compatibility square on monomials up to D, then comodule-algebra axioms on samples."""
    S, E, B = CL.S, CL.E, CL.B
    D = S.bound if D is None else D
    report = LawReport(f"localized coaction of {CL.EA.name} at {S.s}")
    bad = None
    for m in E.normal_monomials(min(D, S.bound)):
        direct = CL.rho_E({m: ONE})
        # rho_S(s^-1 (s m)) through the inverse of rho(s)
        via = CL.rho_S(OreFraction(S, 1, E.mul_terms(S.s.terms, {m: ONE}, S.limit), canonical=True))
        if direct != via:
            bad = m
            break
    report.add("square_commutes", bad is None, None if bad is None else
               f"rho_S(iota({E.word_str(bad)})) != (iota (x) id) rho({E.word_str(bad)})",
               monomial=None if bad is None else E.word_str(bad))
    samples = _sample_fractions(CL, 1, sample_degree)
    bad = None
    for f in samples:
        for g in samples:
            if CL.rho_S(f * g) != CL.rho_S(f) * CL.rho_S(g):
                bad = (f, g)
                break
        if bad:
            break
    report.add("multiplicative", bad is None, None if bad is None else
               f"rho_S({bad[0]} * {bad[1]}) != rho_S(.) rho_S(.)")
    bad = None
    for f in samples:
        r = CL.rho_S(f)
        counit = OreFraction(S, 0, {})
        for b, x in r.terms.items():
            counit = counit + x.scale(B.counit.apply_word(b).get((), ZERO))
        if counit != f:
            bad = f
            break
        lhs = {}
        for b, x in r.terms.items():
            for b2, y in CL.rho_S(x).terms.items():
                lhs[(b2, b)] = lhs[(b2, b)] + y if (b2, b) in lhs else y
        rhs = {}
        for b, x in r.terms.items():
            for (b1, b2), c in B.comult.apply_word(b).items():
                rhs[(b1, b2)] = rhs[(b1, b2)] + x.scale(c) if (b1, b2) in rhs else x.scale(c)
        if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
            bad = f
            break
    report.add("coaction", bad is None, None if bad is None else
               f"rho_S is not a counital coassociative coaction at {bad}")
    return report


def localized_coinvariants(CL, D=None):
    """Coinvariant fractions among s^-k m with k <= D and deg m <= D.

    A combination sum_k s^-k m_k is coinvariant exactly when w = sum_k s^(D-k) m_k
    satisfies rho(w) = w (x) u^D, so the kernel is computed inside E.
    Returns (basis fractions, info dict).
    """
    S, E, B = CL.S, CL.E, CL.B
    D = S.bound if D is None else D
    K = D
    big = D + K * S.ds
    span = []
    seen = set()
    for k in range(K + 1):
        for m in E.normal_monomials(D):
            w = E.mul_terms(S.power(K - k), {m: ONE}, big)
            key = frozenset(w.items())
            if key not in seen:
                seen.add(key)
                span.append(w)
    uK = {(): ONE}
    (ub, _), = CL.u.items()
    for _ in range(K):
        uK = B.mul_terms(uK, {ub: ONE}, big)
    cols = []
    for w in span:
        col = {}
        for e, c in w.items():
            siadd(col, CL.EA.rho.apply_word(e, big), c)
        for e, c in w.items():
            for b, x in uK.items():
                siadd(col, {(e, b): ONE}, -c * x)
        cols.append(col)
    kernel = _kernel(cols, span)
    basis = _independent([OreFraction(S, K, v) for v in kernel], S, K)
    co_E = _kernel([_minus_unit(CL, {m: ONE}) for m in E.normal_monomials(D)],
                   [{m: ONE} for m in E.normal_monomials(D)])
    info = {"dim": len(basis), "dim_E_coinvariants": len(co_E),
            "iota_hits_all": len(co_E) == len(basis)}
    return basis, info


def _minus_unit(CL, w):
    col = {}
    for e, c in w.items():
        siadd(col, CL.EA.rho.apply_word(e), c)
        siadd(col, {(e, ()): ONE}, -c)
    return col


def _kernel(cols, span):
    """Independent elements sum x_j span[j] over a basis of the kernel of the columns."""
    out = []
    ech = Echelon()
    for combo in sparse_kernel(cols):
        elt = {}
        for i, c in combo.items():
            siadd(elt, span[i], c)
        if elt and ech.add(elt):
            out.append(elt)
    return out


def _independent(fracs, S, K):
    out = []
    ech = Echelon()
    for f in fracs:
        if ech.add(f.lift(K)):
            out.append(f)
    return out


def unit_localization(EA, D=None):
    """S = {1}: E_mu = E and rho_S = rho."""
    S = OreSet(EA.E, "1", D)
    return CompatibleLocalization(EA, S, {(): ONE}, {(): ONE})
