"""Exact counting, bijections and q-series identities for s-modular,
s-congruent and s-duplicate partitions."""

from .partitions import (ClassSpec, InvalidClassSpec, Partition, PartitionSyntaxError, count,
                         count_with_length, enumerate_partitions, enumerate_partitions_with_length,
                         is_member, members, refined_duplicate_counts)
from .series import NonUnitConstantTerm, TruncatedSeries, UnsupportedClass, class_genfun, pochhammer_product
from .bijections import (forward_congruent, forward_duplicate, inverse_congruent, inverse_duplicate,
                         sweep)
from .recurrences import c4_triangular, c_table, d4_two_parts, d_table, m_table
from .expansions import WeightedSeries, Monomial, classical_identity_sides
from .overpartitions import enumerate_overpartitions, over_genfun

__all__ = [
    "ClassSpec", "InvalidClassSpec", "Partition", "PartitionSyntaxError", "count",
    "count_with_length", "enumerate_partitions", "enumerate_partitions_with_length",
    "is_member", "members", "refined_duplicate_counts",
    "NonUnitConstantTerm", "TruncatedSeries", "UnsupportedClass", "class_genfun", "pochhammer_product",
    "forward_congruent", "forward_duplicate", "inverse_congruent", "inverse_duplicate", "sweep",
    "c4_triangular", "c_table", "d4_two_parts", "d_table", "m_table",
    "WeightedSeries", "Monomial", "classical_identity_sides",
    "enumerate_overpartitions", "over_genfun",
]

__version__ = "0.1.0"
