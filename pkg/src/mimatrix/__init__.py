"""All-pairs mutual information for binary datasets.

The heavy lifting is a single bit-packed co-occurrence product per dataset;
the remaining joint counts follow in closed form from the row count and the
column sums.  See the README for the CLI and the memory guidance on very
wide matrices.
"""

from .binmat import (
    BinaryMatrix,
    SparseBinaryMatrix,
    column_sums,
    from_rows,
    to_dense,
    to_sparse,
)
from .datagen import GenSpec, generate
from .engine import (
    EngineConfig,
    MIMatrix,
    ProbabilitySet,
    binary_entropy,
    mi_all_pairs,
    mi_all_pairs_naive,
    mi_from_probabilities,
    mi_pairwise_naive,
    probabilities,
)
from .errors import (
    ConsistencyError,
    DimensionError,
    DomainError,
    FormatError,
    MiMatrixError,
)
from .gram import (
    GramSet,
    gram_complete_direct,
    gram_complete_optimized,
    gram_ones,
    gram_ones_sparse,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryMatrix",
    "SparseBinaryMatrix",
    "from_rows",
    "column_sums",
    "to_sparse",
    "to_dense",
    "GramSet",
    "gram_ones",
    "gram_ones_sparse",
    "gram_complete_optimized",
    "gram_complete_direct",
    "EngineConfig",
    "ProbabilitySet",
    "MIMatrix",
    "probabilities",
    "mi_from_probabilities",
    "mi_all_pairs",
    "mi_all_pairs_naive",
    "mi_pairwise_naive",
    "binary_entropy",
    "GenSpec",
    "generate",
    "MiMatrixError",
    "DimensionError",
    "DomainError",
    "FormatError",
    "ConsistencyError",
    "__version__",
]
