"""Exact decomposition of the plethysms s_nu(s_(2)) and s_nu(s_(1,1)).

Closed formulas live in :mod:`foulkes.formulas`; a slow but independent
brute-force expansion lives in :mod:`foulkes.oracle`.  Everything is
integer or Fraction arithmetic, nothing is floating point.
"""

from .errors import (
    DegreeMismatchError,
    EmptyIncludeSetError,
    FoulkesError,
    InvalidShapeError,
    NonIntegerCoefficientError,
    OddPartError,
    PartitionParseError,
    RepeatedPartsError,
    ResourceBoundError,
    UnsupportedShapeError,
)
from .expansions import (
    PowerSumExpansion,
    SchurExpansion,
    mn_character,
    omega_schur,
    powersum_to_schur,
    schur_to_powersum,
    total_dimension,
)
from .formulas import (
    TABLE_NU_KINDS,
    induce_product,
    omega_dual,
    phi_hook,
    phi_hook_depth1_closed,
    phi_one_column,
    phi_one_row,
    phi_two_column,
    phi_two_one_column_closed,
    phi_two_row,
    table_multiplicity,
    table_row_class,
)
from .lr import lr_coefficient, schur_multiply
from .oracle import (
    DEFAULT_MAX_WEIGHT,
    oracle_plethysm_e2,
    oracle_plethysm_s2,
)
from .partitions import (
    Partition,
    as_partition,
    centralizer_order,
    conjugate,
    count_even_shifts,
    diagonal_hook_lengths,
    distinct_part_count,
    double,
    double_hook,
    drop_count,
    format_partition,
    generate_distinct_partitions,
    generate_partitions,
    halve_even,
    irreducible_dimension,
    parse_partition,
    repeated_part_count,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_WEIGHT",
    "DegreeMismatchError",
    "EmptyIncludeSetError",
    "FoulkesError",
    "InvalidShapeError",
    "NonIntegerCoefficientError",
    "OddPartError",
    "Partition",
    "PartitionParseError",
    "PowerSumExpansion",
    "RepeatedPartsError",
    "ResourceBoundError",
    "SchurExpansion",
    "TABLE_NU_KINDS",
    "UnsupportedShapeError",
    "as_partition",
    "centralizer_order",
    "conjugate",
    "count_even_shifts",
    "diagonal_hook_lengths",
    "distinct_part_count",
    "double",
    "double_hook",
    "drop_count",
    "format_partition",
    "generate_distinct_partitions",
    "generate_partitions",
    "halve_even",
    "induce_product",
    "irreducible_dimension",
    "lr_coefficient",
    "mn_character",
    "omega_dual",
    "omega_schur",
    "oracle_plethysm_e2",
    "oracle_plethysm_s2",
    "parse_partition",
    "phi_hook",
    "phi_hook_depth1_closed",
    "phi_one_column",
    "phi_one_row",
    "phi_two_column",
    "phi_two_one_column_closed",
    "phi_two_row",
    "powersum_to_schur",
    "repeated_part_count",
    "schur_multiply",
    "schur_to_powersum",
    "table_multiplicity",
    "table_row_class",
    "total_dimension",
]
