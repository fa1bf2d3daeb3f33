"""Recall/precision scoring against gold annotations.

Predicted and gold labels are normalized the same way (lowercase, whitespace
and underscores unified) and compared as exact sets; counts are kept per
category so corpora aggregate by micro-average. An optional plural folding
flag strips a final "s" before comparison, off by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .selection import ExtractionResult
from .taxonomy import normalize_surface


class MatchCounts(NamedTuple):
    tp: int
    fp: int
    fn: int


@dataclass(frozen=True)
class GoldIndex:
    doc_id: str
    themes: frozenset[str]
    keywords: frozenset[str]

    def __post_init__(self) -> None:
        if not self.doc_id:
            raise ValueError("doc_id must be non-empty")


def _ratio(hits: int, total: int) -> Optional[Fraction]:
    if total == 0:
        return None
    return Fraction(hits, total)


@dataclass(frozen=True)
class Metrics:
    themes: MatchCounts
    keywords: MatchCounts

    @property
    def theme_precision(self) -> Optional[Fraction]:
        return _ratio(self.themes.tp, self.themes.tp + self.themes.fp)

    @property
    def theme_recall(self) -> Optional[Fraction]:
        return _ratio(self.themes.tp, self.themes.tp + self.themes.fn)

    @property
    def keyword_precision(self) -> Optional[Fraction]:
        return _ratio(self.keywords.tp, self.keywords.tp + self.keywords.fp)

    @property
    def keyword_recall(self) -> Optional[Fraction]:
        return _ratio(self.keywords.tp, self.keywords.tp + self.keywords.fn)

    def to_dict(self) -> dict:
        def as_float(value: Optional[Fraction]):
            return None if value is None else float(value)

        return {
            "themes": {
                "recall": as_float(self.theme_recall),
                "precision": as_float(self.theme_precision),
            },
            "keywords": {
                "recall": as_float(self.keyword_recall),
                "precision": as_float(self.keyword_precision),
            },
            "counts": {
                "themes": dict(self.themes._asdict()),
                "keywords": dict(self.keywords._asdict()),
            },
        }


def _fold_plural(label: str) -> str:
    if len(label) > 1 and label.endswith("s"):
        return label[:-1]
    return label


def _normalized_set(labels: Iterable[str], plural_fold: bool) -> set[str]:
    out = set()
    for raw in labels:
        label = normalize_surface(raw)
        if plural_fold:
            label = _fold_plural(label)
        if label:
            out.add(label)
    return out


def _count(predicted: set[str], gold: set[str]) -> MatchCounts:
    return MatchCounts(
        tp=len(predicted & gold),
        fp=len(predicted - gold),
        fn=len(gold - predicted),
    )


def score_labels(
    predicted_themes: Iterable[str],
    predicted_keywords: Iterable[str],
    gold: GoldIndex,
    *,
    plural_fold: bool = False,
) -> Metrics:
    """Exact set comparison of normalized predicted labels against gold."""
    return Metrics(
        themes=_count(
            _normalized_set(predicted_themes, plural_fold),
            _normalized_set(gold.themes, plural_fold),
        ),
        keywords=_count(
            _normalized_set(predicted_keywords, plural_fold),
            _normalized_set(gold.keywords, plural_fold),
        ),
    )


def score(predicted: ExtractionResult, gold: GoldIndex, *, plural_fold: bool = False) -> Metrics:
    return score_labels(
        (t.node for t in predicted.themes),
        (k.node for k in predicted.keywords),
        gold,
        plural_fold=plural_fold,
    )


def aggregate(per_doc: Sequence[Metrics]) -> Metrics:
    """Micro-average: sum the raw counts, ratios recompute themselves."""
    if not per_doc:
        raise ValueError("aggregate requires at least one Metrics instance")
    theme_totals = MatchCounts(
        sum(m.themes.tp for m in per_doc),
        sum(m.themes.fp for m in per_doc),
        sum(m.themes.fn for m in per_doc),
    )
    keyword_totals = MatchCounts(
        sum(m.keywords.tp for m in per_doc),
        sum(m.keywords.fp for m in per_doc),
        sum(m.keywords.fn for m in per_doc),
    )
    return Metrics(themes=theme_totals, keywords=keyword_totals)
