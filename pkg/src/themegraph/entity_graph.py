"""Per-entity weighted graphs.

Each matched entity becomes the single leaf of a directed graph whose interior
nodes are taxonomy concepts. Edges point parent -> child (generic -> specific)
and terminate at the leaf. Expansion walks the hierarchy upward breadth-first,
capped at a fixed depth, and every edge carries a weight determined solely by
its level (hop count from the leaf side).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple

from .taxonomy import Taxonomy
from .textproc import EntityMatch

PROFILE_KINDS = ("specific_heavy", "generic_heavy", "constant")


@dataclass(frozen=True)
class WeightProfile:
    """Level-to-weight law plus the expansion depth cap."""

    kind: str = "specific_heavy"
    depth_cap: int = 5

    def __post_init__(self) -> None:
        if self.kind not in PROFILE_KINDS:
            raise ValueError(f"unknown weight profile kind: {self.kind!r}")
        if self.depth_cap < 1:
            raise ValueError(f"depth_cap must be >= 1, got {self.depth_cap}")

    def weight(self, level: int) -> Fraction:
        if not 1 <= level <= self.depth_cap:
            raise ValueError(f"level {level} outside 1..{self.depth_cap}")
        if self.kind == "specific_heavy":
            return Fraction(self.depth_cap - level + 1)
        if self.kind == "generic_heavy":
            return Fraction(level)
        return Fraction(1)


class EdgeData(NamedTuple):
    weight: Fraction
    level: int


@dataclass(frozen=True)
class EntityGraph:
    leaf: str
    nodes: frozenset[str]
    edges: Mapping[tuple[str, str], EdgeData]

    def total_weight(self) -> Fraction:
        return sum((data.weight for data in self.edges.values()), Fraction(0))


def build_entity_graph(taxonomy: Taxonomy, match: EntityMatch, profile: WeightProfile) -> EntityGraph:
    """Expand one entity match upward through the hierarchy.

    Level-1 edges attach the matched concepts to the leaf; each further level
    attaches taxonomy parents of the previous frontier. A node is expanded
    once, at its minimum level. An edge is refused only when it would close a
    directed cycle, so diamonds survive while cyclic category data cannot make
    a node repeat along any upward path. If a matched concept equals the leaf
    surface itself, the leaf doubles as that concept and its parents attach at
    level 1.
    """
    if not match.concepts:
        raise ValueError("entity match has no concepts")
    leaf = match.surface
    depth = profile.depth_cap
    minlevel: dict[str, int] = {leaf: 0}
    edges: dict[tuple[str, str], EdgeData] = {}
    down: dict[str, list[str]] = {}
    buckets: dict[int, list[str]] = {}

    def reaches(start: str, goal: str) -> bool:
        stack = [start]
        seen: set[str] = set()
        while stack:
            node = stack.pop()
            if node == goal:
                return True
            if node in seen:
                continue
            seen.add(node)
            stack.extend(down.get(node, ()))
        return False

    def admit(parent: str, child: str) -> None:
        if (parent, child) in edges:
            return
        known = parent in minlevel
        if known and reaches(child, parent):
            return  # would close a cycle
        level = minlevel[child] + 1
        edges[(parent, child)] = EdgeData(profile.weight(level), level)
        down.setdefault(parent, []).append(child)
        if not known:
            minlevel[parent] = level
            buckets.setdefault(level, []).append(parent)

    if leaf in match.concepts:
        buckets.setdefault(0, []).append(leaf)
    for concept in sorted(match.concepts - {leaf}):
        admit(concept, leaf)

    parents_of = taxonomy.parents
    for level in range(depth):  # expanding level k adds level k+1 edges
        for node in sorted(set(buckets.get(level, ()))):
            for parent in parents_of.get(node, ()):
                admit(parent, node)

    return EntityGraph(leaf=leaf, nodes=frozenset(minlevel), edges=edges)
