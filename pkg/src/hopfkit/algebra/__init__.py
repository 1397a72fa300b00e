from .core import (
    Bialgebra, CarrierMismatch, Element, FieldMismatch, FinDimAlgebra,
    FinDimCoalgebra, HopfAlgebra, NotAlgebraMap, TensorAlgebra, TensorElement,
    algebra_power, antipode, check_algebra_laws, check_algebra_map, comul,
    counit, has_antipode, has_coalgebra, mul, tensor_algebra, unit_vector,
)
from .presets import (
    UnknownPreset, dual_group_algebra_c2, dual_numbers, ground_field,
    group_algebra_c2, preset, sweedler_h4, truncated_polynomial,
)
from .schema import SchemaError, algebra_from_json, algebra_to_json

__all__ = [
    "Bialgebra", "CarrierMismatch", "Element", "FieldMismatch", "FinDimAlgebra",
    "FinDimCoalgebra", "HopfAlgebra", "NotAlgebraMap", "SchemaError",
    "TensorAlgebra", "TensorElement", "UnknownPreset", "algebra_from_json",
    "algebra_power", "algebra_to_json", "antipode", "check_algebra_laws",
    "check_algebra_map", "comul", "counit", "dual_group_algebra_c2",
    "dual_numbers", "ground_field", "group_algebra_c2", "has_antipode",
    "has_coalgebra", "mul", "preset", "sweedler_h4", "tensor_algebra",
    "truncated_polynomial", "unit_vector",
]
