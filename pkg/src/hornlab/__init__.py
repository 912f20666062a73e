"""Exact and numerical checks for Horn-type spectral problems.

Two independent Littlewood-Richardson counts (classical skew fillings and
Yamanouchi domino tableaux), a cell-doubling injection between them, lattice
point enumeration for the associated polytopes, and seeded rotation sampling
for the spectral set they bound.
"""

from .partitions import (
    MAX_PART,
    IncreasingSequence,
    Partition,
    doubled,
    lambda_of_sequence,
    sequence_of_partition,
    sigma_split,
    tau_partitions,
    tau_sequences,
)
from .lr import lr_coefficient, lr_nonzero
from .dominoes import (
    Domino,
    DominoTableau,
    cl_coefficient,
    enumerate_domino_tableaux,
    enumerate_yamanouchi_tableaux,
    is_domino_decomposable,
    is_yamanouchi,
    reading_word,
    yamanouchi_tableaux_by_weight,
    yamanouchi_weight_census,
)
from .duplication import duplicate, undo_duplicate

__all__ = [
    "MAX_PART",
    "Partition",
    "IncreasingSequence",
    "lambda_of_sequence",
    "sequence_of_partition",
    "tau_sequences",
    "tau_partitions",
    "sigma_split",
    "doubled",
    "lr_coefficient",
    "lr_nonzero",
    "Domino",
    "DominoTableau",
    "reading_word",
    "is_yamanouchi",
    "is_domino_decomposable",
    "enumerate_domino_tableaux",
    "enumerate_yamanouchi_tableaux",
    "yamanouchi_weight_census",
    "yamanouchi_tableaux_by_weight",
    "cl_coefficient",
    "duplicate",
    "undo_duplicate",
]
