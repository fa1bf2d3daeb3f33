"""Theme and contextualized keyword extraction via weighted concept graphs.

A document's words and n-word groups are matched against a concept hierarchy,
each match grows a depth-capped weighted graph, the graphs are fused with a
configurable policy, and themes fall out as the nodes with maximal outgoing
flow, keywords as the nodes lying farthest downstream of each theme.
"""

from .entity_graph import PROFILE_KINDS, EntityGraph, WeightProfile, build_entity_graph
from .evaluation import GoldIndex, MatchCounts, Metrics, aggregate, score, score_labels
from .fusion import (
    COMBINERS,
    EXCLUSIVE_POLICIES,
    ConsolidatedEdge,
    ConsolidatedGraph,
    FusionConfig,
    NgramFusionResult,
    apply_ngram_priority,
    as_fraction,
    fuse,
)
from .pipeline import ConfigError, RunConfig, extract_document, extract_with_graph
from .selection import (
    KEYWORD_MODES,
    ExtractionResult,
    Keyword,
    SelectionConfig,
    Theme,
    extract_keywords,
    hop_distance,
    node_depths,
    out_flow,
    select_themes,
)
from .taxonomy import (
    Taxonomy,
    TaxonomyFormatError,
    ValidationReport,
    load_taxonomy,
    load_taxonomy_files,
    normalize_surface,
    validate_taxonomy,
)
from .textproc import EntityMatch, Token, extract_candidates, tokenize

__version__ = "0.1.0"

__all__ = [
    "COMBINERS",
    "ConfigError",
    "ConsolidatedEdge",
    "ConsolidatedGraph",
    "EntityGraph",
    "EntityMatch",
    "EXCLUSIVE_POLICIES",
    "ExtractionResult",
    "FusionConfig",
    "GoldIndex",
    "Keyword",
    "KEYWORD_MODES",
    "MatchCounts",
    "Metrics",
    "NgramFusionResult",
    "PROFILE_KINDS",
    "RunConfig",
    "SelectionConfig",
    "Taxonomy",
    "TaxonomyFormatError",
    "Theme",
    "ThemeKeywordExtractor",
    "Token",
    "ValidationReport",
    "WeightProfile",
    "aggregate",
    "apply_ngram_priority",
    "as_fraction",
    "build_entity_graph",
    "extract_candidates",
    "extract_document",
    "extract_keywords",
    "extract_with_graph",
    "fuse",
    "hop_distance",
    "load_taxonomy",
    "load_taxonomy_files",
    "node_depths",
    "normalize_surface",
    "out_flow",
    "score",
    "score_labels",
    "select_themes",
    "tokenize",
    "validate_taxonomy",
    "__version__",
]


def __getattr__(name):
    # the estimator pulls in scikit-learn; load it only when asked for
    if name == "ThemeKeywordExtractor":
        from .estimator import ThemeKeywordExtractor

        return ThemeKeywordExtractor
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
