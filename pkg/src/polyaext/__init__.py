"""Exact Pólya enumeration with Δ-weighted stabilizer sums.

The package computes cycle indices, weighted orbit generating functions,
the signed cycle index of the symmetric group (which yields the elementary
symmetric polynomial e_n) and the determinant of a rational matrix from the
traces of its powers.  Every formula ships with a brute-force oracle.
"""

from .algebra import MultiPoly, Rat, poly_add, poly_eval, poly_mul, poly_pow, poly_substitute
from .cycleindex import (
    cycle_index,
    cycle_index_monomial,
    cycle_index_symmetric,
    partitions,
    power_sum_vector,
    signed_cycle_index_symmetric,
)
from .enumeration import (
    DeltaWeight,
    brute_force_orbits,
    extended_enumerate,
    fixed_colorings,
    lemma_key_check,
    lhs_partition_oracle,
    lhs_stabilizer_oracle,
    polya_enumerate,
)
from .errors import DimensionError, PolyaError, ResourceError, ValidationError
from .permgroup import (
    Permutation,
    PermGroup,
    act,
    composition,
    cycle_type,
    generate_group,
    named_group,
    orbit,
    sign,
    stabilizer,
)
from .symdet import (
    RatMatrix,
    det_bareiss,
    det_via_traces,
    elementary_symmetric_direct,
    elementary_symmetric_via_cycle_index,
    trace_powers,
)

__version__ = "0.1.0"

__all__ = [
    "DeltaWeight",
    "DimensionError",
    "MultiPoly",
    "PermGroup",
    "Permutation",
    "PolyaError",
    "Rat",
    "RatMatrix",
    "ResourceError",
    "ValidationError",
    "act",
    "brute_force_orbits",
    "composition",
    "cycle_index",
    "cycle_index_monomial",
    "cycle_index_symmetric",
    "cycle_type",
    "det_bareiss",
    "det_via_traces",
    "elementary_symmetric_direct",
    "elementary_symmetric_via_cycle_index",
    "extended_enumerate",
    "fixed_colorings",
    "generate_group",
    "lemma_key_check",
    "lhs_partition_oracle",
    "lhs_stabilizer_oracle",
    "named_group",
    "orbit",
    "partitions",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "poly_pow",
    "poly_substitute",
    "polya_enumerate",
    "power_sum_vector",
    "sign",
    "signed_cycle_index_symmetric",
    "stabilizer",
    "trace_powers",
]
