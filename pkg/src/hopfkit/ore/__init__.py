"""Ore localization of presented algebras and localized coactions."""

from .core import (
    BoundTooSmall, CompatibleLocalization, LocTensor, NotCompatible, OreFraction, OreSet,
    WitnessNotFound, check_localization, check_ore, localize_coaction, localized_coinvariants,
    unit_localization,
)

__all__ = [
    "BoundTooSmall", "CompatibleLocalization", "LocTensor", "NotCompatible", "OreFraction",
    "OreSet", "WitnessNotFound", "check_localization", "check_ore", "localize_coaction",
    "localized_coinvariants", "unit_localization",
]
