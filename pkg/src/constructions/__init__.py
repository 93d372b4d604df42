"""The cone C𝔤 and the extensions built on it. Named fixtures live in ``fixtures``."""

from src.constructions.cone import cone, dual_cone_module
from src.constructions.extensions import (
    AlphaDatum,
    CocycleKind,
    CocycleSpec,
    central_extension_cone,
    cone_alpha_extension,
    decompose_alpha,
)
from src.constructions.semidirect import (
    ExtensionDatum,
    deform_by_e,
    fms_tower,
    semidirect,
    sigma_dgla,
)

__all__ = [
    "AlphaDatum",
    "CocycleKind",
    "CocycleSpec",
    "ExtensionDatum",
    "central_extension_cone",
    "cone",
    "cone_alpha_extension",
    "decompose_alpha",
    "deform_by_e",
    "dual_cone_module",
    "fms_tower",
    "semidirect",
    "sigma_dgla",
]
