"""Theme and keyword selection over a consolidated graph.

Themes are the nodes carrying the maximal out-flow (sum of outgoing edge
weights); when several nodes tie at that maximum, only the deepest survive,
where depth is the longest path from any source of the graph. Keywords are
then read per theme from the nodes lying farthest downstream, by unweighted
hop distance.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .fusion import ConsolidatedGraph

KEYWORD_MODES = ("max_distance", "ranked_leaves")


@dataclass(frozen=True)
class SelectionConfig:
    max_themes: int = 6
    distance_tolerance: int = 0
    keyword_mode: str = "max_distance"

    def __post_init__(self) -> None:
        if self.max_themes < 1:
            raise ValueError(f"max_themes must be >= 1, got {self.max_themes}")
        if self.distance_tolerance < 0:
            raise ValueError(
                f"distance_tolerance must be >= 0, got {self.distance_tolerance}"
            )
        if self.keyword_mode not in KEYWORD_MODES:
            raise ValueError(f"unknown keyword_mode: {self.keyword_mode!r}")


@dataclass(frozen=True)
class Theme:
    node: str
    flow: Fraction
    depth: int


@dataclass(frozen=True)
class Keyword:
    node: str
    distance: int
    theme: str


@dataclass(frozen=True)
class ExtractionResult:
    themes: tuple[Theme, ...]
    keywords: tuple[Keyword, ...]
    ignored_word_graphs: int = 0


def out_flow(graph: ConsolidatedGraph, node: str) -> Fraction:
    """Exact sum of the weights leaving a node; 0 for sinks."""
    if node not in graph.nodes:
        raise ValueError(f"unknown node: {node!r}")
    return sum((w for _, w in graph.out_edges.get(node, ())), Fraction(0))


def _distances_from(graph: ConsolidatedGraph, source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    succ = graph.successors
    while queue:
        node = queue.popleft()
        for nxt in succ.get(node, ()):
            if nxt not in dist:
                dist[nxt] = dist[node] + 1
                queue.append(nxt)
    return dist


def hop_distance(graph: ConsolidatedGraph, source: str, target: str) -> Optional[int]:
    """Shortest directed path length in hops, or None when unreachable."""
    for node in (source, target):
        if node not in graph.nodes:
            raise ValueError(f"unknown node: {node!r}")
    if source == target:
        return 0
    return _distances_from(graph, source).get(target)


def _condensation_sccs(graph: ConsolidatedGraph) -> list[list[str]]:
    # Kosaraju, iterative: finish order on the graph, then sweep the transpose.
    succ = graph.successors
    pred: dict[str, list[str]] = {n: [] for n in graph.nodes}
    for (src, dst) in graph.edges:
        pred[dst].append(src)

    order: list[str] = []
    seen: set[str] = set()
    for start in sorted(graph.nodes):
        if start in seen:
            continue
        seen.add(start)
        stack: list[tuple[str, int]] = [(start, 0)]
        while stack:
            node, idx = stack[-1]
            targets = succ.get(node, ())
            if idx < len(targets):
                stack[-1] = (node, idx + 1)
                nxt = targets[idx]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append((nxt, 0))
            else:
                order.append(node)
                stack.pop()

    components: list[list[str]] = []
    assigned: set[str] = set()
    for start in reversed(order):
        if start in assigned:
            continue
        member_stack = [start]
        assigned.add(start)
        members: list[str] = []
        while member_stack:
            node = member_stack.pop()
            members.append(node)
            for prev in pred[node]:
                if prev not in assigned:
                    assigned.add(prev)
                    member_stack.append(prev)
        components.append(sorted(members))
    return components


def node_depths(graph: ConsolidatedGraph) -> dict[str, int]:
    """Longest-path depth of every node, measured from the graph's sources.

    Cycles that survive fusion are collapsed first: depth is the longest path
    over the condensation, so every node of a strongly connected component
    shares one depth.
    """
    components = _condensation_sccs(graph)
    comp_of = {node: i for i, members in enumerate(components) for node in members}
    comp_succ: dict[int, set[int]] = {i: set() for i in range(len(components))}
    indegree = [0] * len(components)
    for (src, dst) in graph.edges:
        a, b = comp_of[src], comp_of[dst]
        if a != b and b not in comp_succ[a]:
            comp_succ[a].add(b)
            indegree[b] += 1
    depth = [0] * len(components)
    queue = deque(i for i in range(len(components)) if indegree[i] == 0)
    while queue:
        comp = queue.popleft()
        for nxt in comp_succ[comp]:
            depth[nxt] = max(depth[nxt], depth[comp] + 1)
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                queue.append(nxt)
    return {node: depth[comp_of[node]] for node in graph.nodes}


def select_themes(graph: ConsolidatedGraph, cfg: SelectionConfig) -> list[Theme]:
    """Nodes with the maximal out-flow, pruned to the deepest, id order."""
    if not graph.nodes:
        return []
    flows = {node: out_flow(graph, node) for node in graph.nodes}
    candidates = sorted(node for node, flow in flows.items() if flow > 0)
    if not candidates:
        return []
    best = max(flows[node] for node in candidates)
    top = [node for node in candidates if flows[node] == best]
    depths = node_depths(graph)
    deepest = max(depths[node] for node in top)
    survivors = [node for node in top if depths[node] == deepest]
    return [Theme(node, best, deepest) for node in survivors[: cfg.max_themes]]


def extract_keywords(
    graph: ConsolidatedGraph, themes: Sequence[Theme], cfg: SelectionConfig
) -> list[Keyword]:
    """Per-theme keywords, farthest nodes first.

    ``max_distance`` keeps reachable nodes within ``distance_tolerance`` of
    the maximal hop distance; ``ranked_leaves`` keeps every reachable sink.
    Selected theme nodes never appear as keywords.
    """
    theme_nodes = {t.node for t in themes}
    for t in themes:
        if t.node not in graph.nodes:
            raise ValueError(f"unknown theme node: {t.node!r}")
    keywords: list[Keyword] = []
    for t in themes:
        dist = _distances_from(graph, t.node)
        dist.pop(t.node, None)
        if not dist:
            continue
        if cfg.keyword_mode == "max_distance":
            floor = max(dist.values()) - cfg.distance_tolerance
            picks = [
                (node, d)
                for node, d in dist.items()
                if d >= floor and node not in theme_nodes
            ]
        else:
            picks = [
                (node, d)
                for node, d in dist.items()
                if not graph.out_edges.get(node) and node not in theme_nodes
            ]
        picks.sort(key=lambda item: (-item[1], item[0]))
        keywords.extend(Keyword(node, d, t.node) for node, d in picks)
    return keywords
