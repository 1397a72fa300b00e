"""JSON documents of kind ``comodule_algebra.v1``, ``module_algebra.v1`` and ``hopf_module.v1``.

A finite comodule algebra::

    {"schema": "comodule_algebra.v1",
     "algebra": {"preset": "e0"} | <algebra.v1>,
     "bialgebra": {"preset": "kc2"} | <algebra.v1>,
     "coaction": {"x": "x (x) g"}}          (basis vectors not listed: "1" -> 1 (x) 1)

A presented one uses fpalgebra.v1 documents for both algebras and gives the
coaction on generators.  ``{"preset": "e0_kc2"}`` names a built-in instance.

A module algebra has "action": {"g|>x": "-x"} (unlisted pairs act by the counit).

A Hopf module::

    {"schema": "hopf_module.v1",
     "comodule_algebra": <comodule_algebra.v1>,
     "basis": ["m0", "m1"],
     "action": [[[...]], ...],                 one matrix per basis vector of E
     "coaction": [[[m, b, "coeff"], ...], ...]} one term list per basis vector

or ``{"preset": "regular:kc2"}`` / ``{"preset": "free:e0_kc2"}``.
"""

from __future__ import annotations

from ..algebra.core import FinDimAlgebra
from ..algebra.presets import UnknownPreset, preset as algebra_preset
from ..algebra.schema import SchemaError, algebra_from_json, scalar_from_json
from ..exactfield import ScalarParseError
from ..fpalg.core import FPComoduleAlgebra, PresentedAlgebra
from ..fpalg.presets import (
    borel_b2_commutative, borel_coaction, graded_quantum_plane, o_glq2, o_slq2,
    o_slq2_commutative, regular_fp_coaction, smash_coaction,
)
from ..fpalg.schema import fpalgebra_from_json
from ..sweedler import ParseError
from .modules import (
    ComoduleAlgebra, LeftModule, ModuleAlgebra, RelativeHopfModule, RightComodule,
)
from .presets import (
    UnknownInstance, comodule_algebra, hopf_module, module_algebra,
)

COMODULE_SCHEMA = "comodule_algebra.v1"
MODULE_SCHEMA = "module_algebra.v1"
HOPF_MODULE_SCHEMA = "hopf_module.v1"


def _fp_borel_commutative(bound):
    return borel_coaction(o_slq2_commutative(bound), borel_b2_commutative(bound))


FP_COMODULE_PRESETS = {
    "o_slq2": lambda bound: borel_coaction(o_slq2(bound)),
    "o_slq2_commutative": _fp_borel_commutative,
    "o_slq2_regular": lambda bound: regular_fp_coaction(o_slq2(bound)),
    "o_glq2_regular": lambda bound: regular_fp_coaction(o_glq2(bound)),
    "quantum_plane": graded_quantum_plane,
    "smash": smash_coaction,
}


def _expect(doc, schema):
    if not isinstance(doc, dict):
        raise SchemaError(f"a {schema} document must be a JSON object")
    if doc.get("schema", schema) != schema:
        raise SchemaError(f"expected schema {schema}, got {doc.get('schema')!r}")


def _algebra(doc, where, bound):
    if not isinstance(doc, dict):
        raise SchemaError(f"{where}: expected an object")
    if "preset" in doc and "params" not in doc:
        try:
            return algebra_preset(doc["preset"])
        except UnknownPreset:
            pass
    if "generators" in doc or doc.get("schema") == "fpalgebra.v1" or "preset" in doc:
        return fpalgebra_from_json(doc, bound)
    return algebra_from_json(doc)


def _wrap(where, fn, *args):
    try:
        return fn(*args)
    except (ParseError, ScalarParseError) as exc:
        raise SchemaError(f"{where}: {exc}") from None
    except (KeyError, ValueError, TypeError) as exc:
        if isinstance(exc, SchemaError):
            raise SchemaError(f"{where}: {exc}") from None
        msg = exc.args[0] if exc.args else exc
        raise SchemaError(f"{where}: {msg}") from None


def comodule_algebra_from_json(doc, bound=None):
    _expect(doc, COMODULE_SCHEMA)
    if "preset" in doc:
        name = doc["preset"]
        if name in FP_COMODULE_PRESETS:
            return FP_COMODULE_PRESETS[name](bound)
        try:
            return comodule_algebra(name)
        except UnknownInstance as exc:
            raise SchemaError(str(exc.args[0])) from None
    for key in ("algebra", "bialgebra", "coaction"):
        if key not in doc:
            raise SchemaError(f"missing field {key!r}")
    E = _algebra(doc["algebra"], "algebra", bound)
    B = _algebra(doc["bialgebra"], "bialgebra", bound)
    formulas = doc["coaction"]
    if not isinstance(formulas, dict):
        raise SchemaError("coaction: expected an object of element strings")
    name = doc.get("name")
    if isinstance(E, PresentedAlgebra):
        if not isinstance(B, PresentedAlgebra):
            raise SchemaError("a presented algebra needs a presented bialgebra")
        return _wrap("coaction", FPComoduleAlgebra, E, B, dict(formulas), name)
    if not isinstance(E, FinDimAlgebra):
        raise SchemaError("algebra: not an algebra")
    return _wrap("coaction", ComoduleAlgebra.from_formulas, E, B, dict(formulas), name)


def module_algebra_from_json(doc, bound=None):
    _expect(doc, MODULE_SCHEMA)
    if "preset" in doc:
        try:
            return module_algebra(doc["preset"])
        except UnknownInstance as exc:
            raise SchemaError(str(exc.args[0])) from None
    for key in ("algebra", "bialgebra", "action"):
        if key not in doc:
            raise SchemaError(f"missing field {key!r}")
    A = _algebra(doc["algebra"], "algebra", bound)
    B = _algebra(doc["bialgebra"], "bialgebra", bound)
    if not isinstance(A, FinDimAlgebra) or not isinstance(B, FinDimAlgebra):
        raise SchemaError("module algebras are supported for finite-dimensional algebras only")
    if not isinstance(doc["action"], dict):
        raise SchemaError("action: expected an object keyed 'b|>a'")
    return _wrap("action", ModuleAlgebra.from_formulas, A, B, dict(doc["action"]),
                 doc.get("name"))


def hopf_module_from_json(doc, bound=None):
    _expect(doc, HOPF_MODULE_SCHEMA)
    if "preset" in doc:
        try:
            return hopf_module(doc["preset"])
        except UnknownInstance as exc:
            raise SchemaError(str(exc.args[0])) from None
    for key in ("comodule_algebra", "basis", "action", "coaction"):
        if key not in doc:
            raise SchemaError(f"missing field {key!r}")
    EA = comodule_algebra_from_json(doc["comodule_algebra"], bound)
    if not isinstance(EA, ComoduleAlgebra):
        raise SchemaError("Hopf modules are supported for finite comodule algebras only")
    basis = [str(b) for b in doc["basis"]]
    n = len(basis)
    action = doc["action"]
    if not isinstance(action, list) or len(action) != EA.E.dim:
        raise SchemaError(f"action: expected {EA.E.dim} matrices")
    mats = []
    for i, m in enumerate(action):
        if not isinstance(m, list) or len(m) != n or any(
                not isinstance(r, list) or len(r) != n for r in m):
            raise SchemaError(f"action[{i}]: expected a {n}x{n} matrix")
        mats.append([[scalar_from_json(x) for x in r] for r in m])
    co = doc["coaction"]
    if not isinstance(co, list) or len(co) != n:
        raise SchemaError(f"coaction: expected {n} term lists")
    coaction = []
    for i, terms in enumerate(co):
        entry = {}
        for t in terms:
            if not isinstance(t, list) or len(t) != 3:
                raise SchemaError(f"coaction[{i}]: terms are [m, b, coeff]")
            key = (int(t[0]), int(t[1]))
            entry[key] = entry.get(key, 0) + scalar_from_json(t[2])
        coaction.append(entry)
    name = doc.get("name", "N")
    mod = _wrap("action", LeftModule, EA.E, mats, basis, name)
    comod = _wrap("coaction", RightComodule, EA.B, coaction, basis, name)
    return RelativeHopfModule(EA, mod, comod, name)


__all__ = [
    "COMODULE_SCHEMA", "FP_COMODULE_PRESETS", "HOPF_MODULE_SCHEMA", "MODULE_SCHEMA",
    "SchemaError", "comodule_algebra_from_json", "hopf_module_from_json",
    "module_algebra_from_json",
]
