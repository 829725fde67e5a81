"""Context-dependent dissimilarity for boolean-attribute cases."""
from .context import AttributeSchema, CaseVector, ContextModel, build_context, estimate_probabilities
from .dataset import Dataset, IngestError, ingest
from .distance import (
    DissimilarityMatrix,
    Grouping,
    RankingResult,
    dissimilarity,
    dissimilarity_matrix,
    group_with,
    hamming,
    rank_by_dissimilarity,
    value_mismatch,
)
from .streaming import StreamingEstimator, new_estimator
from .weights import (
    attribute_weight,
    expected_path_length,
    joint_expected_path_length,
    similarity_weight,
)

__version__ = "0.1.0"
