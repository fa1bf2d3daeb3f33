"""End-to-end wiring: text in, ranked themes and keywords out.

The defaults reproduce the reference operating point: depth 5, heavier
weights on specific relations, shared relations summed, exclusive relations
kept, word groups up to three tokens with n-gram priority on.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Optional

from .entity_graph import PROFILE_KINDS, WeightProfile, build_entity_graph
from .fusion import (
    COMBINERS,
    EXCLUSIVE_POLICIES,
    ConsolidatedGraph,
    FusionConfig,
    apply_ngram_priority,
    as_fraction,
    fuse,
)
from .selection import (
    KEYWORD_MODES,
    ExtractionResult,
    SelectionConfig,
    extract_keywords,
    select_themes,
)
from .taxonomy import Taxonomy
from .textproc import extract_candidates, tokenize


class ConfigError(ValueError):
    """Raised when a run configuration value is out of range or unknown."""


_INT_FIELDS = ("depth", "ngram_max", "max_themes", "distance_tolerance")
_RATIONAL_FIELDS = ("alpha", "attenuation")
_CHOICE_FIELDS = {
    "profile": PROFILE_KINDS,
    "combiner": COMBINERS,
    "exclusive_policy": EXCLUSIVE_POLICIES,
    "keyword_mode": KEYWORD_MODES,
}


@dataclass(frozen=True)
class RunConfig:
    depth: int = 5
    profile: str = "specific_heavy"
    combiner: str = "sum"
    alpha: Fraction = Fraction(1)
    exclusive_policy: str = "keep"
    attenuation: Fraction = Fraction(1, 2)
    ngram_priority: bool = True
    ngram_max: int = 3
    max_themes: int = 6
    distance_tolerance: int = 0
    keyword_mode: str = "max_distance"

    def __post_init__(self) -> None:
        for name in _RATIONAL_FIELDS:
            try:
                object.__setattr__(self, name, as_fraction(getattr(self, name)))
            except (ValueError, ZeroDivisionError) as exc:
                raise ConfigError(f"{name}: {exc}") from exc
        for name in _INT_FIELDS:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"{name} must be an integer, got {value!r}")
        for name, choices in _CHOICE_FIELDS.items():
            if getattr(self, name) not in choices:
                raise ConfigError(
                    f"{name} must be one of {', '.join(choices)}; got {getattr(self, name)!r}"
                )
        if not isinstance(self.ngram_priority, bool):
            raise ConfigError(f"ngram_priority must be a boolean, got {self.ngram_priority!r}")
        if self.depth < 1:
            raise ConfigError(f"depth must be >= 1, got {self.depth}")
        if self.ngram_max < 1:
            raise ConfigError(f"ngram_max must be >= 1, got {self.ngram_max}")
        if self.max_themes < 1:
            raise ConfigError(f"max_themes must be >= 1, got {self.max_themes}")
        if self.distance_tolerance < 0:
            raise ConfigError(
                f"distance_tolerance must be >= 0, got {self.distance_tolerance}"
            )
        if not 0 < self.alpha <= 1:
            raise ConfigError(f"alpha must be in (0, 1], got {self.alpha}")
        if not 0 < self.attenuation < 1:
            raise ConfigError(f"attenuation must be in (0, 1), got {self.attenuation}")

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        """Build a config from JSON data, rejecting unknown fields."""
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config field: {', '.join(unknown)}")
        return cls(**data)

    def weight_profile(self) -> WeightProfile:
        return WeightProfile(kind=self.profile, depth_cap=self.depth)

    def fusion_config(self) -> FusionConfig:
        return FusionConfig(
            combiner=self.combiner,
            alpha=self.alpha,
            exclusive_policy=self.exclusive_policy,
            attenuation=self.attenuation,
            ngram_priority=self.ngram_priority,
        )

    def selection_config(self) -> SelectionConfig:
        return SelectionConfig(
            max_themes=self.max_themes,
            distance_tolerance=self.distance_tolerance,
            keyword_mode=self.keyword_mode,
        )


def extract_with_graph(
    text: str, taxonomy: Taxonomy, config: Optional[RunConfig] = None
) -> tuple[ExtractionResult, Optional[ConsolidatedGraph]]:
    """Run the full pipeline, also returning the consolidated graph.

    The graph is None when the document matched nothing.
    """
    cfg = config if config is not None else RunConfig()
    matches = extract_candidates(tokenize(text), cfg.ngram_max, taxonomy)
    if not matches:
        return ExtractionResult((), (), 0), None
    profile = cfg.weight_profile()
    ngram_graphs = []
    word_graphs = []
    for match in matches:
        graph = build_entity_graph(taxonomy, match, profile)
        (ngram_graphs if match.arity >= 2 else word_graphs).append(graph)
    fusion_cfg = cfg.fusion_config()
    if fusion_cfg.ngram_priority:
        consolidated, ignored = apply_ngram_priority(ngram_graphs, word_graphs, fusion_cfg)
    else:
        consolidated = fuse(ngram_graphs + word_graphs, fusion_cfg)
        ignored = 0
    selection_cfg = cfg.selection_config()
    themes = select_themes(consolidated, selection_cfg)
    keywords = extract_keywords(consolidated, themes, selection_cfg)
    return ExtractionResult(tuple(themes), tuple(keywords), ignored), consolidated


def extract_document(
    text: str, taxonomy: Taxonomy, config: Optional[RunConfig] = None
) -> ExtractionResult:
    """Extract the themes and contextualized keywords of one document."""
    result, _ = extract_with_graph(text, taxonomy, config)
    return result
