"""Exact combinatorics of cobweb posets.

Sequences index the posets; F-nomial coefficients, incidence algebra,
Whitney and Bell-like numbers, chain tilings and the classical Bell /
Dobinski pair sit on top.  Everything numeric is exact big-integer
arithmetic unless a function says otherwise.
"""

from .sequences import (
    AdmissibleSequence,
    AdmissibilityVerdict,
    GcdMorphismVerdict,
    SequenceSpecError,
    builtin_names,
    gcd_morphism_failures,
    is_cobweb_admissible,
    is_gcd_morphic,
    parse_sequence,
)
from .fnomial import FNomialTable, NonIntegralError
from .poset import (
    CobwebPoset,
    EnumerationBudgetError,
    IncidenceMatrix,
    DEFAULT_ENUMERATION_BUDGET,
)
from .layer_grid import (
    LayerGridPoset,
    bell_like,
    catalan,
    count_grid_max_chains,
    count_grid_max_chains_bruteforce,
    grid_elements,
    grid_size,
    iter_grid_max_paths,
    whitney_first,
    whitney_second,
)
from .diagonal import DiagonalPoset, bell, bell_sequence, whitney
from .tiling import (
    Block,
    TilingBudgetError,
    TilingCountResult,
    TilingInstance,
    TilingSearchResult,
    build_instance,
    count_partitions,
    exists_partition,
    instance_from_json,
    instance_to_json,
    verify_partition,
    witness_to_json,
)
from .dobinski import StirlingTable, bell_dobinski, bell_exact, stirling2

__version__ = "0.1.0"

__all__ = [
    "AdmissibleSequence",
    "AdmissibilityVerdict",
    "GcdMorphismVerdict",
    "SequenceSpecError",
    "builtin_names",
    "gcd_morphism_failures",
    "is_cobweb_admissible",
    "is_gcd_morphic",
    "parse_sequence",
    "FNomialTable",
    "NonIntegralError",
    "CobwebPoset",
    "EnumerationBudgetError",
    "IncidenceMatrix",
    "DEFAULT_ENUMERATION_BUDGET",
    "LayerGridPoset",
    "bell_like",
    "catalan",
    "count_grid_max_chains",
    "count_grid_max_chains_bruteforce",
    "grid_elements",
    "grid_size",
    "iter_grid_max_paths",
    "whitney_first",
    "whitney_second",
    "DiagonalPoset",
    "bell",
    "bell_sequence",
    "whitney",
    "Block",
    "TilingBudgetError",
    "TilingCountResult",
    "TilingInstance",
    "TilingSearchResult",
    "build_instance",
    "count_partitions",
    "exists_partition",
    "instance_from_json",
    "instance_to_json",
    "verify_partition",
    "witness_to_json",
    "StirlingTable",
    "bell_dobinski",
    "bell_exact",
    "stirling2",
]
