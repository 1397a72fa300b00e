"""JSON documents of kind ``algebra.v1``.

::

    {"schema": "algebra.v1",
     "field": "Q" | "Q(q)",
     "name": "kC2",                       (optional)
     "basis": ["1", "g"],
     "mult": [[["1","0"], ["0","1"]],      mult[i][j] = coefficients of e_i e_j
              [["0","1"], ["1","0"]]],
     "unit": ["1", "0"],
     "comult": [[[0, 0, "1"]], [[1, 1, "1"]]],   optional; list of [j, k, coeff]
     "counit": ["1", "1"],                        optional
     "antipode": [["1","0"], ["0","1"]]}          optional; row i = S(e_i)

Scalars are strings in the scalar grammar (integers are accepted too).
"""

from __future__ import annotations

from ..exactfield import Scalar, Tag, parse_scalar
from .core import Bialgebra, FinDimAlgebra, FinDimCoalgebra, HopfAlgebra, has_antipode, has_coalgebra

SCHEMA = "algebra.v1"


class SchemaError(ValueError):
    pass


def scalar_from_json(x):
    if isinstance(x, bool):
        raise SchemaError(f"boolean is not a scalar: {x!r}")
    if isinstance(x, int):
        return Scalar(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise SchemaError(f"not a scalar: {x!r}")


def field_from_json(text):
    for t in Tag:
        if t.value == text:
            return t
    raise SchemaError(f"unknown field {text!r} (expected 'Q' or 'Q(q)')")


def _vec(data, n, what):
    if not isinstance(data, list) or len(data) != n:
        raise SchemaError(f"{what}: expected a list of {n} scalars")
    return [scalar_from_json(x) for x in data]


def algebra_from_json(doc):
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise SchemaError(f"expected schema {SCHEMA}, got {doc.get('schema')!r}")
    try:
        basis = [str(b) for b in doc["basis"]]
        field = field_from_json(doc.get("field", "Q"))
        n = len(basis)
        mult_raw = doc.get("mult")
        unit = _vec(doc["unit"], n, "unit") if "unit" in doc else None
    except KeyError as exc:
        raise SchemaError(f"missing field {exc.args[0]!r}") from None
    name = doc.get("name")
    mult = None
    if mult_raw is not None:
        if len(mult_raw) != n or any(len(r) != n for r in mult_raw):
            raise SchemaError(f"mult: expected {n}x{n} array of vectors")
        mult = [[_vec(v, n, f"mult[{i}][{j}]") for j, v in enumerate(row)]
                for i, row in enumerate(mult_raw)]
        if unit is None:
            raise SchemaError("an algebra needs 'unit'")
    comult = None
    if "comult" in doc:
        comult = []
        for i, terms in enumerate(doc["comult"]):
            entry = {}
            for t in terms:
                if len(t) != 3:
                    raise SchemaError(f"comult[{i}]: terms are [j, k, coeff]")
                j, k = int(t[0]), int(t[1])
                entry[(j, k)] = entry.get((j, k), Scalar(0)) + scalar_from_json(t[2])
            comult.append(entry)
        if len(comult) != n:
            raise SchemaError(f"comult: expected {n} entries")
        if "counit" not in doc:
            raise SchemaError("a coalgebra needs 'counit'")
    counit = _vec(doc["counit"], n, "counit") if "counit" in doc else None
    antipode = None
    if "antipode" in doc:
        antipode = [_vec(v, n, f"antipode[{i}]") for i, v in enumerate(doc["antipode"])]
        if len(antipode) != n:
            raise SchemaError(f"antipode: expected {n} rows")
    if mult is None:
        if comult is None:
            raise SchemaError("document has neither 'mult' nor 'comult'")
        return FinDimCoalgebra(basis, comult, counit, field, name)
    if comult is None:
        return FinDimAlgebra(basis, mult, unit, field, name)
    if antipode is None:
        return Bialgebra(basis, mult, unit, comult, counit, field, name)
    return HopfAlgebra(basis, mult, unit, comult, counit, antipode, field, name)


def algebra_to_json(A):
    doc = {"schema": SCHEMA, "field": A.field.value, "name": A.name, "basis": list(A.basis)}
    if hasattr(A, "mult"):
        doc["mult"] = [[[str(c) for c in v] for v in row] for row in A.mult]
        doc["unit"] = [str(c) for c in A.unit]
    if has_coalgebra(A):
        doc["comult"] = [[[j, k, str(c)] for (j, k), c in sorted(d.items())] for d in A.comult]
        doc["counit"] = [str(c) for c in A.counit]
    if has_antipode(A):
        doc["antipode"] = [[str(c) for c in v] for v in A.antipode]
    return doc
