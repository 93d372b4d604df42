"""The current-algebra functors CA and SA, their induced maps and exact sequences."""

from src.functors.current import CurrentAlgebra, Functor, ca, current_lie, sa, validate_current
from src.functors.maps import LieMorphism, ca_map, current_iso, induced_map, sa_map
from src.functors.sequence import (
    ExactnessCertificate,
    ShortExactSequence,
    central_extension_ses,
    four_term_sequence,
    ses_image,
)

__all__ = [
    "CurrentAlgebra",
    "ExactnessCertificate",
    "Functor",
    "LieMorphism",
    "ShortExactSequence",
    "ca",
    "ca_map",
    "central_extension_ses",
    "current_iso",
    "current_lie",
    "four_term_sequence",
    "induced_map",
    "sa",
    "sa_map",
    "ses_image",
    "validate_current",
]
