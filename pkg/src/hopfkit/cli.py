"""``hopfkit`` command line: load JSON documents or presets, run law suites, report.

Exit codes: 0 every law passed, 1 some law failed, 2 bad input, 3 only
inconclusive outcomes besides passes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra.core import FinDimAlgebra, has_antipode, has_coalgebra
from .algebra.presets import ALGEBRA_PRESETS, UnknownPreset, preset as algebra_preset
from .algebra.schema import SchemaError, algebra_from_json
from .exactfield import ScalarParseError
from .fpalg.core import (
    DegreeOverflow, FPComoduleAlgebra, PresentationError, PresentedAlgebra, check_confluence,
    check_fp_comodule_algebra, check_hopf, check_termination,
)
from .fpalg.presets import FP_PRESETS, fp_preset
from .fpalg.schema import fpalgebra_from_json
from .reports import LawReport, Status
from .sweedler import ParseError

DEFAULT_SEED = 20240601
COMMAND_DEFAULT_DEGREE = {"torsor": 4, "localize": 4, "coinvariants": 4}


class InputError(Exception):
    """Anything that should end in exit code 2."""


# -- configuration --------------------------------------------------------------------

def resolve_degree(args):
    if args.degree is not None:
        d = args.degree
    elif os.environ.get("HOPFKIT_DEGREE_BOUND"):
        try:
            d = int(os.environ["HOPFKIT_DEGREE_BOUND"])
        except ValueError:
            raise InputError("HOPFKIT_DEGREE_BOUND must be an integer") from None
    else:
        from .fpalg.core import DEFAULT_DEGREE_BOUND
        d = COMMAND_DEFAULT_DEGREE.get(args.command, DEFAULT_DEGREE_BOUND)
    if d < 1:
        raise InputError(f"degree bound must be >= 1, got {d}")
    return d


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _source(args, kind):
    if args.preset and args.input:
        raise InputError("give either --preset or an input file, not both")
    if args.preset:
        return f"preset:{args.preset}", {"preset": args.preset}
    if args.input:
        return args.input, load_json(args.input)
    raise InputError(f"{args.command}: need --preset NAME or a {kind} file")


def _cite(where, fn, *a):
    try:
        return fn(*a)
    except (InputError, DegreeOverflow):
        raise
    except (SchemaError, ParseError, ScalarParseError, PresentationError, UnknownPreset,
            KeyError, ValueError, TypeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        raise InputError(f"{where}: {msg}") from None


# -- loaders ----------------------------------------------------------------------------

def _load_algebra(args, D):
    where, doc = _source(args, "algebra.v1 / fpalgebra.v1")

    def build():
        if "preset" in doc:
            name = doc["preset"]
            if name in ALGEBRA_PRESETS:
                return algebra_preset(name)
            if name in FP_PRESETS:
                return fp_preset(name, {"bound": D})
            raise SchemaError(f"unknown preset {name!r}; known: "
                              f"{sorted(set(ALGEBRA_PRESETS) | set(FP_PRESETS))}")
        if "generators" in doc or doc.get("schema") == "fpalgebra.v1":
            return fpalgebra_from_json(doc, D)
        return algebra_from_json(doc)
    return where, _cite(where, build)


def _load_comodule_algebra(args, D):
    from .actions.schema import comodule_algebra_from_json
    where, doc = _source(args, "comodule_algebra.v1")
    return where, _cite(where, comodule_algebra_from_json, doc, D)


def _load_module_algebra(args, D):
    from .actions.schema import module_algebra_from_json
    where, doc = _source(args, "module_algebra.v1")
    return where, _cite(where, module_algebra_from_json, doc, D)


def _load_hopf_module(args, D):
    from .actions.schema import hopf_module_from_json
    where, doc = _source(args, "hopf_module.v1")
    return where, _cite(where, hopf_module_from_json, doc, D)


def _finite(EA, where, what="this command"):
    if isinstance(EA, FPComoduleAlgebra):
        raise InputError(f"{where}: {what} needs a finite-dimensional comodule algebra")
    return EA


def _as_json(rep):
    return rep.to_json()


# -- commands -----------------------------------------------------------------------------

def cmd_check_hopf(args, D):
    where, H = _load_algebra(args, D)
    if isinstance(H, PresentedAlgebra):
        conf = LawReport(f"{H.name} rewriting system at degree {D}")
        conf.extend(check_termination(H), "termination.")
        conf.extend(check_confluence(H, D), "confluence.")
        if H.comult is None:
            raise InputError(f"{where}: {H.name} carries no coalgebra data")
        return [conf, check_hopf(H, product_degree=min(3, D))], {}
    from .algebra.core import check_algebra_laws
    rep = check_algebra_laws(H)
    rep.add("has_coalgebra", has_coalgebra(H), f"{H.name} has no comultiplication")
    rep.add("has_antipode", has_antipode(H), f"{H.name} has no antipode")
    return [rep], {}


def cmd_check_comodule_algebra(args, D):
    from .actions import check_comodule_algebra
    where, EA = _load_comodule_algebra(args, D)
    if isinstance(EA, FPComoduleAlgebra):
        return [check_fp_comodule_algebra(EA, D, product_degree=min(3, D))], {}
    return [check_comodule_algebra(EA)], {}


def cmd_check_module_algebra(args, D):
    from .actions import check_module_algebra
    where, MA = _load_module_algebra(args, D)
    return [check_module_algebra(MA)], {}


def cmd_check_hopf_module(args, D):
    from .actions import check_hopf_module
    where, N = _load_hopf_module(args, D)
    return [check_hopf_module(N)], {}


def _aggregate(subject, pairs):
    """One report from several: per law, the first failure wins."""
    out = LawReport(subject)
    seen = {}
    for label, rep in pairs:
        for r in rep.results:
            prev = seen.get(r.law)
            if prev is None or (prev.status is not Status.FAIL and r.status is not Status.PASS):
                seen[r.law] = type(r)(r.law, r.status,
                                      None if r.passed else f"{label}: {r.counterexample}",
                                      dict(r.detail))
    out.results = [seen[k] for k in sorted(seen)]
    return out


def _random_distlaw(args):
    from .actions.presets import random_instances
    from .distlaw import check_distlaw, distlaw_comodule_algebra, distlaw_module_algebra
    kind = "module" if args.kind == "module" else "comodule"
    build = distlaw_module_algebra if kind == "module" else distlaw_comodule_algebra
    pairs = []
    for i, (X, objs) in enumerate(random_instances(kind, args.random, seed=args.seed)):
        pairs.append((f"instance {i} ({X.name})", check_distlaw(build(X), objs, seed=args.seed)))
    rep = _aggregate(f"{args.random} random {kind}-algebra distributive laws", pairs)
    return [rep], {"instances": args.random, "kind": kind}


def _localized_suite(setting):
    from .distlaw import (
        NoAntipode, check_comonad_map, check_inverse, check_lift, check_localized_comonad,
        check_localized_distlaw, comonad_morphism, invert_distlaw, lift_localization,
        localized_comonad, localized_distlaw,
    )
    l = localized_distlaw(setting)
    reports = [check_localized_distlaw(l)]
    try:
        reports.append(check_inverse(invert_distlaw(l)))
    except NoAntipode as exc:
        rep = LawReport(f"inverse of {l.name}")
        rep.add("antipode_available", Status.INCONCLUSIVE, str(exc))
        reports.append(rep)
    reports.append(check_localized_comonad(localized_comonad(l)))
    reports.append(check_comonad_map(comonad_morphism(l)))
    reports.append(check_lift(lift_localization(l), compare_rho_S=True))
    return reports


def _unit_names(E, names):
    out = []
    for u in names:
        if u not in E.basis:
            raise InputError(f"{u!r} is not a basis vector of {E.name}")
        out.append(E.basis.index(u))
    return out


def cmd_distlaw(args, D):
    if args.random:
        if args.kind == "localized":
            raise InputError("--random applies to the comodule and module kinds")
        return _random_distlaw(args)
    from .distlaw import (
        check_distlaw, distlaw_comodule_algebra, distlaw_module_algebra, ore_setting,
        unit_setting,
    )
    from .actions.presets import small_comodules, small_modules
    if args.kind == "module":
        where, MA = _load_module_algebra(args, D)
        return [check_distlaw(distlaw_module_algebra(MA), small_comodules(MA.B),
                              seed=args.seed)], {}
    where, EA = _load_comodule_algebra(args, D)
    if args.kind == "localized":
        if isinstance(EA, FPComoduleAlgebra):
            if not args.ore:
                raise InputError("a presented comodule algebra needs --ore GENERATOR")
            from .ore import localize_coaction
            CL = _cite(where, localize_coaction, EA, args.ore, D)
            return _localized_suite(ore_setting(CL)), {"ore": args.ore}
        from .actions import regular_hopf_module
        units = _unit_names(EA.E, args.units.split(",") if args.units else [])
        setting = unit_setting(EA, units, [regular_hopf_module(EA)])
        return _localized_suite(setting), {"units": [EA.E.basis[u] for u in units]}
    EA = _finite(EA, where, "the comodule-algebra distributive law")
    return [check_distlaw(distlaw_comodule_algebra(EA), small_modules(EA.B), seed=args.seed)], {}


def cmd_coborel(args, D):
    from .actions import coborel
    where, EA = _load_comodule_algebra(args, D)
    EA = _finite(EA, where)
    return [coborel(EA, args.levels).check()], {"levels": args.levels}


def cmd_simplicial(args, D):
    from .actions import hopf_to_simplicial_module
    where, N = _load_hopf_module(args, D)
    return [hopf_to_simplicial_module(N, n=args.levels, check=False).check()], \
        {"levels": args.levels}


def cmd_localize(args, D):
    from .ore import check_localization, check_ore, localize_coaction
    where, EA = _load_comodule_algebra(args, D)
    if not isinstance(EA, FPComoduleAlgebra):
        raise InputError(f"{where}: localize works on presented comodule algebras; "
                         f"use 'distlaw --kind localized' for unit localizations")
    if not args.ore:
        raise InputError("localize needs --ore GENERATOR")
    rep = LawReport(f"S = {{{args.ore}^n}} in {EA.E.name} at degree {D}")
    rep.extend(_cite(where, check_ore, EA.E, args.ore, D))
    from .ore import NotCompatible
    try:
        CL = localize_coaction(EA, args.ore, D, check=False)
    except NotCompatible as exc:
        rep.add("compatible", False, str(exc))
        return [rep], {"ore": args.ore}
    rep.extend(check_localization(CL, D), "compatibility.")
    reports = [rep]
    if args.mixed:
        from .distlaw import ore_setting
        reports += _localized_suite(ore_setting(CL))
    return reports, {"ore": args.ore}


def cmd_coinvariants(args, D):
    from .galois import coinvariants
    where, EA = _load_comodule_algebra(args, D)
    rep = LawReport(f"coinvariants of {EA.name}")
    if args.ore:
        if not isinstance(EA, FPComoduleAlgebra):
            raise InputError("--ore needs a presented comodule algebra")
        from .ore import localize_coaction, localized_coinvariants
        CL = _cite(where, localize_coaction, EA, args.ore, D)
        U, info = localized_coinvariants(CL, D)
        from .galois import span_contains
        rep.add("contains_unit", span_contains(U, CL.S.iota("1")) is not None,
                "1 is not among the localized coinvariants")
        return [rep], {"coinvariants": [str(u) for u in U], "info": info, "ore": args.ore}
    co = coinvariants(EA, D if isinstance(EA, FPComoduleAlgebra) else None)
    rep.add("closed_under_product", co.closed, "the coinvariants are not a subalgebra")
    return [rep], {"coinvariants": co.names(), "dim": co.dim}


def cmd_galois(args, D):
    from .galois import canonical_map, smash_product
    if args.smash:
        where, MA = _load_module_algebra(args, D)
        sp = smash_product(MA)
        return [sp.check(), canonical_map(sp.comodule_algebra)], {}
    where, EA = _load_comodule_algebra(args, D)
    EA = _finite(EA, where, "galois (use torsor for presented algebras)")
    return [canonical_map(EA)], {}


def cmd_torsor(args, D):
    from .galois import CHARTS, local_triviality_report
    name = args.preset or "o_slq2"
    if args.input:
        raise InputError("torsor takes --preset o_slq2 or o_slq2_commutative")
    if name not in ("o_slq2", "o_slq2_commutative"):
        raise InputError(f"unknown torsor preset {name!r}; known: o_slq2, o_slq2_commutative")
    charts = tuple(c.strip() for c in args.charts.split(",") if c.strip())
    for c in charts:
        if c not in CHARTS:
            raise InputError(f"unknown chart {c!r}; known: {sorted(CHARTS)}")
    rep = local_triviality_report(charts=charts, D=D,
                                  commutative=name == "o_slq2_commutative")
    return [rep], {"charts": list(charts)}


COMMANDS = {
    "check-hopf": (cmd_check_hopf, "Hopf algebra axioms (and confluence for presentations)"),
    "check-comodule-algebra": (cmd_check_comodule_algebra, "comodule algebra laws"),
    "check-module-algebra": (cmd_check_module_algebra, "module algebra laws"),
    "check-hopf-module": (cmd_check_hopf_module, "relative Hopf module laws"),
    "distlaw": (cmd_distlaw, "distributive law pentagons, triangles and naturality"),
    "coborel": (cmd_coborel, "cosimplicial identities of the coborel construction"),
    "simplicial": (cmd_simplicial, "cocycle and simplicial module of a Hopf module"),
    "localize": (cmd_localize, "Ore condition and compatibility of a localized coaction"),
    "coinvariants": (cmd_coinvariants, "coinvariants, optionally after localization"),
    "galois": (cmd_galois, "bijectivity of the canonical map"),
    "torsor": (cmd_torsor, "local triviality over Ore charts"),
}


def build_parser():
    p = argparse.ArgumentParser(prog="hopfkit", description="Exact checks for Hopf actions.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        s = sub.add_parser(name, help=helptext)
        s.add_argument("input", nargs="?", help="JSON document")
        s.add_argument("--preset", help="built-in instance")
        s.add_argument("--degree", type=int, help="degree bound (overrides HOPFKIT_DEGREE_BOUND)")
        s.add_argument("--format", choices=("text", "json"), default="text")
        s.add_argument("--seed", type=int, default=DEFAULT_SEED)
        if name == "distlaw":
            s.add_argument("--kind", choices=("comodule", "module", "localized"),
                           default="comodule")
            s.add_argument("--random", type=int, default=0, metavar="N",
                           help="check N random instances instead of one input")
            s.add_argument("--ore", help="generator whose powers are inverted")
            s.add_argument("--units", help="comma-separated basis vectors to invert")
        if name in ("coborel", "simplicial"):
            s.add_argument("--levels", type=int, default=3)
        if name in ("localize", "coinvariants"):
            s.add_argument("--ore", help="generator whose powers are inverted")
        if name == "localize":
            s.add_argument("--mixed", action="store_true",
                           help="also run the localized distributive law suite")
        if name == "galois":
            s.add_argument("--smash", action="store_true",
                           help="input is a module algebra; test its smash product")
        if name == "torsor":
            s.add_argument("--charts", default="a,c")
    return p


def exit_code(statuses):
    if Status.FAIL in statuses:
        return 1
    if Status.INCONCLUSIVE in statuses:
        return 3
    return 0


def run(argv=None):
    """Returns (exit code, rendered report)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 2), ""
    fn = COMMANDS[args.command][0]
    try:
        D = resolve_degree(args)
        if getattr(args, "levels", 1) < 1:
            raise InputError("--levels must be >= 1")
        reports, extra = fn(args, D)
    except InputError as exc:
        return 2, _render_error(args, str(exc))
    except DegreeOverflow as exc:
        reports = [LawReport(f"{args.command} at degree {D}")]
        reports[0].add("degree_bound", Status.INCONCLUSIVE, str(exc))
        extra = {}
    statuses = [r.status for r in reports]
    code = exit_code(statuses)
    doc = {
        "command": args.command,
        "config": {"degree": D, "seed": args.seed, "input": args.input, "preset": args.preset},
        "status": ("FAIL", "PASS", "INCONCLUSIVE")[[1, 0, 3].index(code)],
        "reports": [_as_json(r) for r in reports],
    }
    doc.update({k: v for k, v in extra.items()})
    if args.format == "json":
        return code, json.dumps(doc, indent=2, sort_keys=True)
    return code, _render_text(doc, reports)


def _render_error(args, msg):
    if getattr(args, "format", "text") == "json":
        return json.dumps({"command": args.command, "error": msg, "status": "ERROR"},
                          indent=2, sort_keys=True)
    return f"error: {msg}"


def _render_text(doc, reports):
    lines = [f"hopfkit {doc['command']}: {doc['status']} "
             f"(degree {doc['config']['degree']}, seed {doc['config']['seed']})"]
    for r in reports:
        if isinstance(r, LawReport):
            lines.append(str(r))
            continue
        j = r.to_json()
        if "charts" in j and "cover" in j:
            lines.append(f"{j['subject']} at degree {j['degree']}: {j['status']}")
            for ch in r.charts:
                lines.append(f"chart {ch.chart}: {ch.status.value}")
                lines.append("  coinvariants: " + ", ".join(ch.coinvariants[:6])
                             + (" ..." if len(ch.coinvariants) > 6 else ""))
                for res in ch.laws.results:
                    line = f"  {res.status.value:<12} {res.law}"
                    if res.counterexample:
                        line += f"  [{res.counterexample}]"
                    lines.append(line)
            lines.append(f"cover: {j['cover']['status']}  {j['cover']['certificate']}")
        else:
            lines.append(f"{j['subject']}: {j['verdict']} (rank {j['rank']} of "
                         f"{j['domain_dim']} -> {j['codomain_dim']})")
            lines.append("  coinvariants: " + ", ".join(j["coinvariants"]))
            for key in ("kernel_witness", "cokernel_witness"):
                if j[key]:
                    lines.append(f"  {key}: {j[key]}")
    for key in ("coinvariants", "dim", "info", "instances", "ore", "units", "charts"):
        if key in doc and key != "reports":
            lines.append(f"{key}: {doc[key]}")
    return "\n".join(lines)


def main(argv=None):
    code, text = run(argv)
    if text:
        stream = sys.stderr if code == 2 else sys.stdout
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
