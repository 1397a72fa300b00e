"""Local triviality of O(SL_q(2)) over the quantum Borel B_q, one Ore chart at a time.

Chart ``a`` inverts the powers of a, chart ``c`` those of c.  On a chart the
section j: B_q -> S^-1 E is a colinear algebra map, the coinvariants U are
computed at the degree bound, and the canonical map is tested through

    Phi(f (x) beta) = rho_S(f) (j(beta) (x) 1) = f_(0) j(beta) (x) f_(1),

which is can(f (x) j(beta)) after identifying S^-1E (x)_U S^-1E with
S^-1E (x) B via the smash decomposition u # beta -> u j(beta).  Everything is
filtered: fractions s^-k m with k, deg m <= D//2 and beta of degree <= D//2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..exactfield import ONE
from ..fpalg.presets import borel_coaction, borel_b2_commutative, o_slq2, o_slq2_commutative
from ..linalg import Echelon, sparse_solve
from ..ore import (
    BoundTooSmall, NotCompatible, OreFraction, check_localization, check_ore, localize_coaction,
    localized_coinvariants,
)
from ..reports import LawReport, Status

# section images of the Borel generators; "s^-1" is the inverted generator
CHARTS = {
    "a": {"section": {"a": "a", "b": "b", "d": "s^-1"}, "partner": "c"},
    "c": {"section": {"a": "c", "b": "d", "d": "s^-1"}, "partner": "a"},
}


@dataclass
class ChartReport:
    chart: str
    laws: LawReport
    coinvariants: list
    info: dict
    ranks: list = field(default_factory=list)
    decomposition: dict = field(default_factory=dict)

    @property
    def status(self):
        return self.laws.status

    def to_json(self):
        return {"chart": self.chart, "status": self.status.value,
                "coinvariants": list(self.coinvariants), "info": dict(self.info),
                "filtered_ranks": [dict(r) for r in self.ranks],
                "decomposition": dict(self.decomposition),
                "laws": self.laws.to_json()["results"]}


@dataclass
class TorsorReport:
    subject: str
    degree: int
    charts: list
    cover: dict

    @property
    def status(self):
        states = [c.status for c in self.charts] + [Status(self.cover["status"])]
        if Status.FAIL in states:
            return Status.FAIL
        if Status.INCONCLUSIVE in states:
            return Status.INCONCLUSIVE
        return Status.PASS

    def to_json(self):
        return {"subject": self.subject, "degree": self.degree, "status": self.status.value,
                "charts": [c.to_json() for c in self.charts], "cover": dict(self.cover)}


def _fracs_matrix(fracs):
    K = max((f.k for f in fracs), default=0)
    return K, [f.lift(K) for f in fracs]


def span_contains(fracs, target):
    """Coefficients expressing target in the span of fracs, or None."""
    K, cols = _fracs_matrix(list(fracs) + [target])
    return sparse_solve(cols[:-1], cols[-1])


class Chart:
    def __init__(self, EA, name, D, slack=None):
        if name not in CHARTS:
            raise ValueError(f"unknown chart {name!r}; expected one of {sorted(CHARTS)}")
        self.EA = EA
        self.E, self.B = EA.E, EA.B
        self.name = name
        self.D = D
        self.CL = localize_coaction(EA, name, D, slack, check=False)
        self.S = self.CL.S
        spec = CHARTS[name]
        self.partner = spec["partner"]
        self.j_gen = {}
        for g, img in spec["section"].items():
            self.j_gen[self.B.generators.index(g)] = (
                self.S.inverse_s() if img == "s^-1" else self.S.iota(img))
        self._j = {(): self.S.iota("1")}

    def j(self, beta):
        hit = self._j.get(beta)
        if hit is None:
            hit = self._j[beta] = self.j(beta[:-1]) * self.j_gen[beta[-1]]
        return hit

    def j_terms(self, terms):
        out = OreFraction(self.S, 0, {})
        for beta, c in terms.items():
            out = out + self.j(beta).scale(c)
        return out

    def fractions(self, kmax, dmax):
        out, ech = [], Echelon()
        K = kmax
        for k in range(kmax + 1):
            for m in self.E.normal_monomials(dmax):
                f = OreFraction(self.S, k, {m: ONE})
                if ech.add(f.lift(K)):
                    out.append((k + self.E.degree(m), f))
        return out


def _section_checks(ch, report):
    B, CL = ch.B, ch.CL
    bad = None
    for lhs, rhs in B.rules.items():
        if ch.j(lhs) != ch.j_terms(rhs):
            bad = f"j({B.word_str(lhs)}) != j({B.word_str(lhs)} reduced)"
            break
    report.add("section_algebra_map", bad is None, bad)
    bad = None
    for i in ch.j_gen:
        got = CL.rho_S(ch.j((i,))).terms
        want = {}
        for (x, y), c in B.comult.apply_word((i,)).items():
            term = ch.j(x).scale(c)
            want[y] = want[y] + term if y in want else term
        if got != {b: f for b, f in want.items() if f}:
            bad = f"rho_S(j({B.generators[i]})) != (j (x) id) Delta({B.generators[i]})"
            break
    report.add("section_colinear", bad is None, bad)


def chart_report(EA, name, D=4, slack=None):
    ch = Chart(EA, name, D, slack)
    E, B, S, CL = ch.E, ch.B, ch.S, ch.CL
    laws = LawReport(f"chart {name} of {EA.name} at degree {D}")
    ore = check_ore(E, name, D, slack)
    laws.extend(ore)
    comp = check_localization(CL, D)
    laws.extend(comp, "compatibility.")
    # coinvariants at the bound
    U, info = localized_coinvariants(CL, D)
    target = S.iota(ch.partner) * S.inverse_s()
    for label, f in (("1", S.iota("1")), (f"{ch.partner}.{name}^-1", target)):
        found = span_contains(U, f) is not None
        laws.add(f"coinvariant[{label}]", found if found else Status.INCONCLUSIVE,
                 None if found else f"{f} not among coinvariants at degree {D}")
    _section_checks(ch, laws)
    half = max(1, D // 2)
    betas = list(B.normal_monomials(half))
    # the smash map u # beta -> u j(beta) on pieces
    pieces = [u for u in U if u.k <= half]
    images = [u * ch.j(beta) for u in pieces for beta in betas]
    K, cols = _fracs_matrix(images)
    ech = Echelon()
    rank = sum(1 for c in cols if ech.add(c))
    laws.add("smash_map_injective", rank == len(images),
             f"rank {rank} < {len(images)} on U_{{k<={half}}} # B_{{<={half}}}")
    decomposition = {}
    missing = []
    for g in E.generators + ["s^-1"]:
        f = S.inverse_s() if g == "s^-1" else S.iota(g)
        sol = span_contains(images, f)
        if sol is None:
            missing.append(g)
            continue
        parts = []
        for idx, c in sorted(sol.items()):
            u, beta = pieces[idx // len(betas)], betas[idx % len(betas)]
            parts.append(f"[{c}]*({u})#{B.word_str(beta) if beta else '1'}")
        decomposition[str(f)] = " + ".join(parts)
    laws.add("smash_map_generators", Status.PASS if not missing else Status.INCONCLUSIVE,
             None if not missing else f"generators {missing} not reached at degree {D}")
    # the filtered canonical map
    fr = ch.fractions(half, half)
    rows, degs = [], []
    for d0, f in fr:
        rho = CL.rho_S(f).terms
        for beta in betas:
            val = {}
            for b1, f0 in rho.items():
                val[b1] = f0 * ch.j(beta)
            rows.append(val)
            degs.append(d0 + B.degree(beta))
    K = max((x.k for v in rows for x in v.values()), default=0)
    vecs = []
    for v in rows:
        vec = {}
        for b1, x in v.items():
            for m, c in x.lift(K).items():
                vec[(b1, m)] = c
        vecs.append(vec)
    ranks, ok = [], True
    for n in range(0, max(degs, default=0) + 1):
        sel = [vecs[i] for i in range(len(vecs)) if degs[i] <= n]
        ech = Echelon()
        r = sum(1 for v in sel if ech.add(v))
        ranks.append({"degree": n, "dim": len(sel), "rank": r, "nullity": len(sel) - r})
        ok = ok and r == len(sel)
    laws.add("canonical_map_injective", ok, "rank deficit in the filtered canonical map")
    miss = []
    for beta in betas:
        target = {(beta, m): c for m, c in S.iota("1").lift(K).items()}
        cols = list(vecs)
        if sparse_solve(cols, target) is None:
            miss.append(B.word_str(beta) or "1")
    laws.add("canonical_map_surjective", Status.PASS if not miss else Status.INCONCLUSIVE,
             None if not miss else f"1 (x) {miss[0]} not in the image at degree {D}")
    info = dict(info, pieces=len(fr), betas=len(betas))
    return ChartReport(name, laws, [str(u) for u in U], info, ranks, decomposition)


def cover_certificate(E, gens=("a", "c"), degree=1):
    """e_1 g_1 + e_2 g_2 = 1 with deg e_i <= degree, as a string, or None."""
    monos = list(E.normal_monomials(degree))
    cols, labels = [], []
    for g in gens:
        for m in monos:
            cols.append(E.mul_terms({m: ONE}, E.element(g).terms))
            labels.append((g, m))
    sol = sparse_solve(cols, {(): ONE})
    if sol is None:
        return None
    from ..fpalg.core import format_terms
    parts = {}
    for i, c in sol.items():
        g, m = labels[i]
        parts.setdefault(g, {})[m] = c
    return "1 = " + " + ".join(f"({format_terms(E, t)}).{g}" for g, t in parts.items())


def local_triviality_report(EA=None, charts=("a", "c"), D=4, slack=None, commutative=False):
    if EA is None:
        if commutative:
            EA = borel_coaction(o_slq2_commutative(D), borel_b2_commutative(D))
        else:
            EA = borel_coaction(o_slq2(D))
    reports = []
    for name in charts:
        try:
            reports.append(chart_report(EA, name, D, slack))
        except BoundTooSmall as exc:
            laws = LawReport(f"chart {name} of {EA.name} at degree {D}")
            laws.add("bound", Status.INCONCLUSIVE, str(exc))
            reports.append(ChartReport(name, laws, [], {}))
    cert = cover_certificate(EA.E, tuple(charts))
    cover = {"status": (Status.PASS if cert else Status.INCONCLUSIVE).value,
             "certificate": cert, "charts": list(charts)}
    return TorsorReport(f"{EA.name} as a B-torsor", D, reports, cover)


__all__ = ["CHARTS", "Chart", "ChartReport", "NotCompatible", "TorsorReport", "chart_report",
           "cover_certificate", "local_triviality_report", "span_contains"]
