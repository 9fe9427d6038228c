from __future__ import annotations

from .arithmetic import (
    euler_partition_count,
    lemma_condition_holds,
    lemma_counterexamples,
    mobius,
    necklace_count,
    witt_dimension,
)
from .dimensions import gl_dimension
from .kostka import kostka_number
from .partitions import (
    EMPTY,
    ConjClass,
    Partition,
    centralizer_order,
    class_data,
    conjugate,
    enumerate_partitions,
    format_partition,
    has_even_columns,
    hook_length_dimension,
    parse_partition,
    sign,
)
