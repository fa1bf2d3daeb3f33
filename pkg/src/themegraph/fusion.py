"""Fusing per-entity graphs into one consolidated graph.

Fusion is defined n-ary over the whole graph set rather than as a pairwise
fold, so the result never depends on input order: for every distinct edge the
weights contributed by all graphs containing it form a multiset, combined by
the configured combiner when shared (two or more contributors) or handled by
the exclusive-relation policy when unique. All arithmetic is exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, NamedTuple, Sequence

from .entity_graph import EntityGraph

COMBINERS = ("sum", "weighted_sum")
EXCLUSIVE_POLICIES = ("keep", "attenuate")


def as_fraction(value) -> Fraction:
    """Coerce ints, decimal strings, "p/q" strings and floats to Fraction.

    Floats go through their shortest decimal representation so a config value
    written as 0.3 means exactly 3/10.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"expected a number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"cannot interpret {value!r} as a rational number")


def weight_to_json(value: Fraction):
    """Integers stay JSON numbers; other rationals serialize as "p/q"."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class FusionConfig:
    combiner: str = "sum"
    alpha: Fraction = Fraction(1)
    exclusive_policy: str = "keep"
    attenuation: Fraction = Fraction(1, 2)
    ngram_priority: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "attenuation", as_fraction(self.attenuation))
        if self.combiner not in COMBINERS:
            raise ValueError(f"unknown combiner: {self.combiner!r}")
        if self.exclusive_policy not in EXCLUSIVE_POLICIES:
            raise ValueError(f"unknown exclusive_policy: {self.exclusive_policy!r}")
        if not 0 < self.alpha <= 1:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")
        if not 0 < self.attenuation < 1:
            raise ValueError(f"attenuation must be in (0, 1), got {self.attenuation}")


class ConsolidatedEdge(NamedTuple):
    weight: Fraction
    support: int
    min_level: int


@dataclass(frozen=True)
class ConsolidatedGraph:
    nodes: frozenset[str]
    edges: Mapping[tuple[str, str], ConsolidatedEdge]
    contributors: Mapping[str, frozenset[str]]

    @cached_property
    def out_edges(self) -> Mapping[str, tuple[tuple[str, Fraction], ...]]:
        adj: dict[str, list[tuple[str, Fraction]]] = {n: [] for n in self.nodes}
        for (src, dst), data in sorted(self.edges.items()):
            adj[src].append((dst, data.weight))
        return {n: tuple(row) for n, row in adj.items()}

    @cached_property
    def successors(self) -> Mapping[str, tuple[str, ...]]:
        return {n: tuple(dst for dst, _ in row) for n, row in self.out_edges.items()}

    def total_weight(self) -> Fraction:
        return sum((data.weight for data in self.edges.values()), Fraction(0))

    def scale_weights(self, factor: Fraction) -> "ConsolidatedGraph":
        factor = as_fraction(factor)
        if factor <= 0:
            raise ValueError(f"scale factor must be positive, got {factor}")
        scaled = {
            key: ConsolidatedEdge(data.weight * factor, data.support, data.min_level)
            for key, data in self.edges.items()
        }
        return ConsolidatedGraph(self.nodes, scaled, self.contributors)

    def to_dict(self) -> dict:
        """Debug-dump form: plain lists and maps, deterministically ordered."""
        return {
            "nodes": sorted(self.nodes),
            "edges": [
                {
                    "from": src,
                    "to": dst,
                    "weight": weight_to_json(data.weight),
                    "support": data.support,
                    "min_level": data.min_level,
                }
                for (src, dst), data in sorted(self.edges.items())
            ],
            "contributors": {n: sorted(s) for n, s in sorted(self.contributors.items())},
        }


class NgramFusionResult(NamedTuple):
    graph: ConsolidatedGraph
    ignored_word_graphs: int


def fuse(graphs: Sequence[EntityGraph], cfg: FusionConfig) -> ConsolidatedGraph:
    """N-ary fusion of entity graphs.

    A single graph passes through unchanged (no fusion happened, so the
    exclusive policy does not apply). With two or more graphs, each edge's
    weight multiset is combined: ``sum`` adds them, ``weighted_sum`` adds
    ``alpha**i * w_i`` over the weights sorted descending; an edge present in
    exactly one graph is kept or attenuated per the exclusive policy.
    """
    if not graphs:
        raise ValueError("fuse requires at least one entity graph")
    if len(graphs) == 1:
        g = graphs[0]
        edges = {
            key: ConsolidatedEdge(data.weight, 1, data.level)
            for key, data in sorted(g.edges.items())
        }
        contributors = {n: frozenset({g.leaf}) for n in sorted(g.nodes)}
        return ConsolidatedGraph(frozenset(g.nodes), edges, contributors)

    weights: dict[tuple[str, str], list[Fraction]] = {}
    min_levels: dict[tuple[str, str], int] = {}
    contributors: dict[str, set[str]] = {}
    for g in graphs:
        for node in g.nodes:
            contributors.setdefault(node, set()).add(g.leaf)
        for key, data in g.edges.items():
            weights.setdefault(key, []).append(data.weight)
            level = min_levels.get(key)
            min_levels[key] = data.level if level is None else min(level, data.level)

    edges: dict[tuple[str, str], ConsolidatedEdge] = {}
    for key in sorted(weights):
        ws = sorted(weights[key], reverse=True)
        if len(ws) >= 2:
            if cfg.combiner == "sum":
                combined = sum(ws, Fraction(0))
            else:
                combined = sum((cfg.alpha**i * w for i, w in enumerate(ws)), Fraction(0))
        elif cfg.exclusive_policy == "keep":
            combined = ws[0]
        else:
            combined = cfg.attenuation * ws[0]
        edges[key] = ConsolidatedEdge(combined, len(ws), min_levels[key])

    return ConsolidatedGraph(
        nodes=frozenset(contributors),
        edges=edges,
        contributors={n: frozenset(s) for n, s in sorted(contributors.items())},
    )


def apply_ngram_priority(
    ngram_graphs: Sequence[EntityGraph],
    word_graphs: Sequence[EntityGraph],
    cfg: FusionConfig,
) -> NgramFusionResult:
    """Fuse n-gram graphs first; admit word graphs that touch them.

    A single-word graph joins the fusion only if it shares at least one node
    with the union of the n-gram graphs; the rest are ignored and counted.
    Without any n-gram graph every word graph is admitted. Admission is
    decided against the n-gram base only, then everything admitted is fused in
    one n-ary operation.
    """
    if not ngram_graphs and not word_graphs:
        raise ValueError("apply_ngram_priority requires at least one graph")
    if not ngram_graphs:
        return NgramFusionResult(fuse(list(word_graphs), cfg), 0)
    base_nodes: set[str] = set()
    for g in ngram_graphs:
        base_nodes.update(g.nodes)
    admitted = [g for g in word_graphs if base_nodes & g.nodes]
    ignored = len(word_graphs) - len(admitted)
    return NgramFusionResult(fuse(list(ngram_graphs) + admitted, cfg), ignored)
