"""JSON documents of kind ``fpalgebra.v1``.

::

    {"schema": "fpalgebra.v1",
     "name": "quantum_plane",                     (optional)
     "field": "Q(q)",                             (optional)
     "generators": ["x", "y"],
     "order": ["x", "y"],                         (optional; smallest first)
     "weights": {"x": 1, "y": 1},                 (optional)
     "rules": [["y x", "[q^-1]*x.y"]],
     "comult": {"x": "x (x) x"},                  (optional, with counit)
     "counit": {"x": "1"},
     "antipode": {"x": "..."}}                    (optional)

or the shorthand ``{"preset": "o_slq2", "params": {}}``.
"""

from __future__ import annotations

from ..algebra.schema import SchemaError
from .core import NFTensor, PresentationError, PresentedAlgebra, format_terms
from .presets import fp_preset

SCHEMA = "fpalgebra.v1"


def fpalgebra_from_json(doc, bound=None):
    if not isinstance(doc, dict):
        raise SchemaError("an fpalgebra.v1 document must be an object")
    if "preset" in doc:
        params = dict(doc.get("params") or {})
        if bound is not None:
            params.setdefault("bound", bound)
        return fp_preset(doc["preset"], params)
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise SchemaError(f"expected schema {SCHEMA}, got {doc.get('schema')!r}")
    try:
        gens = [str(g) for g in doc["generators"]]
        rules = [(str(l), str(r)) for l, r in doc.get("rules", [])]
        A = PresentedAlgebra(doc.get("name", "presented"), gens, rules, order=doc.get("order"),
                             weights=doc.get("weights"), bound=bound,
                             field=doc.get("field", "Q(q)"))
        if "comult" in doc:
            if "counit" not in doc:
                raise SchemaError("comult given without counit")
            A.set_hopf(doc["comult"], doc["counit"], doc.get("antipode"))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"bad fpalgebra.v1 document: {exc}") from None
    return A


def fpalgebra_to_json(A):
    doc = {
        "schema": SCHEMA,
        "name": A.name,
        "field": A.field,
        "generators": list(A.generators),
        "order": list(A.order),
        "weights": {g: w for g, w in zip(A.generators, A.weights)},
        "rules": [[A.word_str(l).replace(".", " "), _terms(A, r)] for l, r in A.rules.items()],
    }
    if A.comult is not None:
        doc["comult"] = {g: _tensor(A.comult, i) for i, g in enumerate(A.generators)}
        doc["counit"] = {g: str(A.counit.images[i].get((), 0)) for i, g in enumerate(A.generators)}
    if A.antipode is not None:
        doc["antipode"] = {g: _terms(A, {k[0]: c for k, c in A.antipode.images[i].items()})
                           for i, g in enumerate(A.generators)}
    return doc


def _terms(A, terms):
    return format_terms(A, terms)


def _tensor(f, i):
    return str(NFTensor(f.targets, f.images[i]))


__all__ = ["PresentationError", "SCHEMA", "SchemaError", "fpalgebra_from_json", "fpalgebra_to_json"]
