"""Concept hierarchy and surface-form lexicon.

The terminological resource has two parts: a directed hierarchy of concept
labels (parent -> child, generic -> specific) and a lexicon mapping normalized
surface forms to the concept nodes they attach to. Hierarchies harvested from
collaborative category systems routinely contain cycles; they are stored as-is
and neutralized during graph construction, never rewritten here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

_LABEL_SEPARATORS = re.compile(r"[\s_]+")


class TaxonomyFormatError(ValueError):
    """Raised for malformed edge or lexicon input."""


def normalize_surface(text: str) -> str:
    """Lowercase a label and collapse whitespace/underscore runs to "_".

    "Instrument de mesure" and "instrument_de_mesure" normalize identically.
    """
    return _LABEL_SEPARATORS.sub("_", text.lower()).strip("_")


@dataclass(frozen=True)
class ValidationReport:
    self_loop_count: int
    duplicate_edge_count: int
    cycle_detected: bool
    orphan_lexicon_entries: int
    node_count: int
    edge_count: int

    def is_clean(self) -> bool:
        """True when nothing was dropped and every lexicon concept is known."""
        return self.self_loop_count == 0 and self.orphan_lexicon_entries == 0

    def to_dict(self) -> dict:
        return {
            "self_loop_count": self.self_loop_count,
            "duplicate_edge_count": self.duplicate_edge_count,
            "cycle_detected": self.cycle_detected,
            "orphan_lexicon_entries": self.orphan_lexicon_entries,
            "node_count": self.node_count,
            "edge_count": self.edge_count,
        }


@dataclass(frozen=True)
class Taxonomy:
    """Immutable hierarchy plus lexicon; safe for concurrent reads."""

    edges: frozenset[tuple[str, str]]
    lexicon: Mapping[str, frozenset[str]]
    self_loop_count: int = 0
    duplicate_edge_count: int = 0

    @cached_property
    def nodes(self) -> frozenset[str]:
        """Concepts appearing as an edge endpoint."""
        return frozenset(n for edge in self.edges for n in edge)

    @cached_property
    def parents(self) -> Mapping[str, tuple[str, ...]]:
        """Child concept -> sorted tuple of its parents."""
        acc: dict[str, list[str]] = {}
        for parent, child in self.edges:
            acc.setdefault(child, []).append(parent)
        return {child: tuple(sorted(ps)) for child, ps in acc.items()}

    @cached_property
    def children(self) -> Mapping[str, tuple[str, ...]]:
        """Parent concept -> sorted tuple of its children."""
        acc: dict[str, list[str]] = {}
        for parent, child in self.edges:
            acc.setdefault(parent, []).append(child)
        return {parent: tuple(sorted(cs)) for parent, cs in acc.items()}

    def lookup(self, surface: str) -> frozenset[str]:
        """Concepts attached to a surface form, after normalization."""
        return self.lexicon.get(normalize_surface(surface), frozenset())


def _data_lines(source: Iterable[str], role: str) -> Iterable[tuple[int, str, str]]:
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise TaxonomyFormatError(
                f"{role} line {lineno}: expected 2 tab-separated fields, got {len(fields)}"
            )
        first, second = (f.strip() for f in fields)
        if not first or not second:
            raise TaxonomyFormatError(f"{role} line {lineno}: empty field")
        yield lineno, first, second


def load_taxonomy(edges_source: Iterable[str], lexicon_source: Iterable[str]) -> Taxonomy:
    """Build a Taxonomy from two line-oriented TSV streams.

    Edge lines are ``parent<TAB>child``; lexicon lines are
    ``surface_form<TAB>concept_id``. Lines starting with ``#`` and blank lines
    are skipped. Self-loop and duplicate edges are dropped but counted so
    ``validate_taxonomy`` can report them.
    """
    edges: set[tuple[str, str]] = set()
    self_loops = 0
    duplicates = 0
    for _, parent, child in _data_lines(edges_source, "edges"):
        if parent == child:
            self_loops += 1
            continue
        if (parent, child) in edges:
            duplicates += 1
            continue
        edges.add((parent, child))
    if not edges:
        raise TaxonomyFormatError("empty taxonomy: no hierarchy edges loaded")

    lexicon: dict[str, set[str]] = {}
    for lineno, surface, concept in _data_lines(lexicon_source, "lexicon"):
        normalized = normalize_surface(surface)
        if not normalized:
            raise TaxonomyFormatError(
                f"lexicon line {lineno}: surface form empty after normalization"
            )
        lexicon.setdefault(normalized, set()).add(concept)

    return Taxonomy(
        edges=frozenset(edges),
        lexicon={surface: frozenset(cs) for surface, cs in lexicon.items()},
        self_loop_count=self_loops,
        duplicate_edge_count=duplicates,
    )


def load_taxonomy_files(edges_path, lexicon_path) -> Taxonomy:
    """Convenience wrapper opening both files as UTF-8."""
    with open(edges_path, encoding="utf-8") as edges_fh:
        with open(lexicon_path, encoding="utf-8") as lexicon_fh:
            return load_taxonomy(edges_fh, lexicon_fh)


def _has_cycle(children: Mapping[str, tuple[str, ...]], nodes: Iterable[str]) -> bool:
    # iterative three-color DFS; recursion would overflow on deep hierarchies
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[str, int] = {}
    for start in sorted(nodes):
        if color.get(start, WHITE) != WHITE:
            continue
        stack: list[tuple[str, int]] = [(start, 0)]
        color[start] = GRAY
        while stack:
            node, idx = stack[-1]
            succ = children.get(node, ())
            if idx < len(succ):
                stack[-1] = (node, idx + 1)
                nxt = succ[idx]
                state = color.get(nxt, WHITE)
                if state == GRAY:
                    return True
                if state == WHITE:
                    color[nxt] = GRAY
                    stack.append((nxt, 0))
            else:
                color[node] = BLACK
                stack.pop()
    return False


def validate_taxonomy(taxonomy: Taxonomy) -> ValidationReport:
    """Read-only structural report over a loaded taxonomy."""
    edge_nodes = taxonomy.nodes
    orphans = sum(
        1
        for concepts in taxonomy.lexicon.values()
        for concept in concepts
        if concept not in edge_nodes
    )
    all_concepts = set(edge_nodes)
    for concepts in taxonomy.lexicon.values():
        all_concepts.update(concepts)
    return ValidationReport(
        self_loop_count=taxonomy.self_loop_count,
        duplicate_edge_count=taxonomy.duplicate_edge_count,
        cycle_detected=_has_cycle(taxonomy.children, edge_nodes),
        orphan_lexicon_entries=orphans,
        node_count=len(all_concepts),
        edge_count=len(taxonomy.edges),
    )
