"""Extended linear codes over finite fields: constructions, extension by a
parity vector u, exact weight enumeration and optimality bounds."""
from .code_core import LinearCode, WeightDistribution, dual, exact_distribution, from_generator, weight_distribution
from .extension import augmented, classify, dual_of_extended, extend, search_u, standard_extend
from .gf import Field, make_field

__all__ = [
    "Field",
    "LinearCode",
    "WeightDistribution",
    "augmented",
    "classify",
    "dual",
    "dual_of_extended",
    "exact_distribution",
    "extend",
    "from_generator",
    "make_field",
    "search_u",
    "standard_extend",
    "weight_distribution",
]
