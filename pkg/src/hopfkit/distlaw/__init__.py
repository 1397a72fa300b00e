"""Distributive laws: comodule/module-algebra laws and the localized mixed law."""

from .finite import (
    COMODULE_FORMULA, MODULE_FORMULA, ComoduleObjects, DistLaw, Kind, ModuleObjects, Space,
    check_distlaw, distlaw_comodule_algebra, distlaw_module_algebra,
)
from .localized import (
    ComonadMap, FinElem, InverseDistLaw, LiftedLocalization, LocalizedComonad,
    LocalizedDistLaw, NoAntipode, OreSetting, UnitSetting, check_comonad_map, check_inverse,
    check_lift, check_localized_comonad, check_localized_distlaw, comonad_morphism,
    invert_distlaw, lift_localization, localized_comonad, localized_distlaw, ore_setting,
    unit_setting,
)

__all__ = [
    "COMODULE_FORMULA", "MODULE_FORMULA", "ComoduleObjects", "ComonadMap", "DistLaw", "FinElem",
    "InverseDistLaw", "Kind", "LiftedLocalization", "LocalizedComonad", "LocalizedDistLaw",
    "ModuleObjects", "NoAntipode", "OreSetting", "Space", "UnitSetting", "check_comonad_map",
    "check_distlaw", "check_inverse", "check_lift", "check_localized_comonad",
    "check_localized_distlaw", "comonad_morphism", "distlaw_comodule_algebra",
    "distlaw_module_algebra", "invert_distlaw", "lift_localization", "localized_comonad",
    "localized_distlaw", "ore_setting", "unit_setting",
]
