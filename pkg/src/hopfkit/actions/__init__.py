from .coborel import Coborel, LevelTooLarge, coborel
from .coequivariant import (
    CocycleFail, ExtCache, ThetaIso, check_cocycle, is_theta_morphism, rho_from_theta,
    theta_from_rho,
)
from .comonad import ComonadG, GComodule, comonad_G, g_comodule_to_hopf, hopf_to_G_comodule
from .extension import (
    AlgebraMap, ExtendedModule, ModuleMap, composition_iso, extension_of_scalars,
    identity_iso, identity_map, nat_iso, pullback_map,
)
from .modules import (
    CompatibilityFail, ComoduleAlgebra, LeftModule, ModuleAlgebra, RelativeHopfModule,
    RightComodule, adjoint_action, character_module, check_comodule_algebra,
    check_hopf_module, check_left_module, check_module_algebra, check_right_comodule,
    comodule_direct_sum, comodule_tensor, direct_sum, free_hopf_module, grouplike_comodule,
    hopf_direct_sum, regular_coaction, regular_comodule, regular_hopf_module,
    regular_module, tensor_module, transport_comodule_algebra, transport_hopf_module,
    transport_module_algebra, trivial_action, trivial_coaction, trivial_comodule,
    trivial_module,
)
from .simplicial import SimplicialModule, hopf_to_simplicial_module
