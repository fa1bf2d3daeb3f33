"""Scikit-learn style facade over the extraction pipeline.

The estimator binds a taxonomy at fit time and turns documents into
extraction results at transform time, so it drops into sklearn pipelines and
parameter search tooling via the standard get_params/set_params protocol.
"""

from __future__ import annotations

from typing import Iterable

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .pipeline import RunConfig, extract_document
from .selection import ExtractionResult
from .taxonomy import Taxonomy, validate_taxonomy


class ThemeKeywordExtractor(TransformerMixin, BaseEstimator):
    """Extract themes and contextualized keywords from plain-text documents.

    Parameters mirror :class:`themegraph.pipeline.RunConfig`; see there for
    ranges and semantics. ``fit`` expects a loaded :class:`Taxonomy`,
    ``transform`` an iterable of document strings and returns one
    :class:`ExtractionResult` per document.
    """

    def __init__(
        self,
        depth=5,
        profile="specific_heavy",
        combiner="sum",
        alpha=1,
        exclusive_policy="keep",
        attenuation=0.5,
        ngram_priority=True,
        ngram_max=3,
        max_themes=6,
        distance_tolerance=0,
        keyword_mode="max_distance",
    ):
        self.depth = depth
        self.profile = profile
        self.combiner = combiner
        self.alpha = alpha
        self.exclusive_policy = exclusive_policy
        self.attenuation = attenuation
        self.ngram_priority = ngram_priority
        self.ngram_max = ngram_max
        self.max_themes = max_themes
        self.distance_tolerance = distance_tolerance
        self.keyword_mode = keyword_mode

    def _run_config(self) -> RunConfig:
        return RunConfig(
            depth=self.depth,
            profile=self.profile,
            combiner=self.combiner,
            alpha=self.alpha,
            exclusive_policy=self.exclusive_policy,
            attenuation=self.attenuation,
            ngram_priority=self.ngram_priority,
            ngram_max=self.ngram_max,
            max_themes=self.max_themes,
            distance_tolerance=self.distance_tolerance,
            keyword_mode=self.keyword_mode,
        )

    def fit(self, X, y=None):
        """Bind the taxonomy; raises on invalid parameters or input type."""
        if not isinstance(X, Taxonomy):
            raise TypeError(
                f"fit expects a Taxonomy (see themegraph.load_taxonomy), got {type(X).__name__}"
            )
        self._run_config()  # fail fast on bad hyperparameters
        self.taxonomy_ = X
        self.validation_report_ = validate_taxonomy(X)
        return self

    def transform(self, X: Iterable[str]) -> list[ExtractionResult]:
        check_is_fitted(self, "taxonomy_")
        if isinstance(X, str):
            raise TypeError("transform expects an iterable of documents, not a single string")
        config = self._run_config()
        return [extract_document(doc, self.taxonomy_, config) for doc in X]

    def extract(self, text: str) -> ExtractionResult:
        """Single-document convenience wrapper around transform."""
        check_is_fitted(self, "taxonomy_")
        return extract_document(text, self.taxonomy_, self._run_config())
