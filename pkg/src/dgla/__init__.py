"""Dglas, CDGAs, 𝔤-differential spaces and their validators."""

from src.dgla.cdga import Cdga, cdga_tensor, exterior_algebra, exterior_contraction, validate_cdga
from src.dgla.certificate import Certificate, CheckResult
from src.dgla.cohomology import CohomologyReport, cohomology, cohomology_table, is_acyclic
from src.dgla.dgla import (
    Dgla,
    abelian_dgla,
    central_extension,
    koszul_sign,
    parity_sign,
    validate_dgla,
)
from src.dgla.gdiff import GDiffSpace, validate_gdiff
from src.dgla.lie import Form, LieAlgebra, matrix_lie_algebra, validate_lie
from src.dgla.morphisms import (
    CdgaMorphism,
    DglaMorphism,
    validate_cdga_morphism,
    validate_dgla_morphism,
)
from src.dgla.tensor import tensor_dgla

__all__ = [
    "Cdga",
    "CdgaMorphism",
    "Certificate",
    "CheckResult",
    "CohomologyReport",
    "Dgla",
    "DglaMorphism",
    "Form",
    "GDiffSpace",
    "LieAlgebra",
    "cdga_tensor",
    "abelian_dgla",
    "central_extension",
    "cohomology",
    "cohomology_table",
    "exterior_algebra",
    "exterior_contraction",
    "is_acyclic",
    "koszul_sign",
    "matrix_lie_algebra",
    "parity_sign",
    "tensor_dgla",
    "validate_cdga",
    "validate_cdga_morphism",
    "validate_dgla",
    "validate_dgla_morphism",
    "validate_gdiff",
    "validate_lie",
]
