"""Shared builders for tests: taxonomies, random graphs, oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import themegraph as tg
from themegraph.entity_graph import EdgeData


def make_taxonomy(edges, lexicon) -> tg.Taxonomy:
    """Taxonomy from python structures: edge tuples and surface -> concepts."""
    edge_lines = [f"{p}\t{c}" for p, c in edges]
    lex_lines = []
    for surface, concepts in lexicon.items():
        if isinstance(concepts, str):
            concepts = [concepts]
        lex_lines.extend(f"{surface}\t{c}" for c in concepts)
    return tg.load_taxonomy(iter(edge_lines), iter(lex_lines))


def entity_graph(leaf, edges) -> tg.EntityGraph:
    """EntityGraph from {(parent, child): (weight, level)} literals."""
    data = {key: EdgeData(Fraction(w), lvl) for key, (w, lvl) in edges.items()}
    nodes = {leaf}
    for key in edges:
        nodes.update(key)
    return tg.EntityGraph(leaf=leaf, nodes=frozenset(nodes), edges=data)


def consolidated(edges, contributors=None) -> tg.ConsolidatedGraph:
    """ConsolidatedGraph from {(src, dst): weight} literals."""
    built = {
        key: tg.ConsolidatedEdge(Fraction(w), 1, 1) for key, w in edges.items()
    }
    nodes = {n for key in edges for n in key}
    contrib = contributors or {n: frozenset({"test"}) for n in nodes}
    return tg.ConsolidatedGraph(frozenset(nodes), built, contrib)


def random_taxonomy_edges(rng: random.Random, n_nodes=10, n_edges=14, ensure_cycle=False):
    nodes = [f"C{i:02d}" for i in range(n_nodes)]
    target = min(n_edges, n_nodes * (n_nodes - 1))
    edges = set()
    while len(edges) < target:
        parent, child = rng.sample(nodes, 2)
        edges.add((parent, child))
    if ensure_cycle:
        ring = rng.sample(nodes, 3)
        for a, b in zip(ring, ring[1:] + ring[:1]):
            edges.add((a, b))
    return sorted(edges)


def random_acyclic_taxonomy_edges(rng: random.Random, n_nodes=10, n_edges=14):
    nodes = [f"C{i:02d}" for i in range(n_nodes)]
    edges = set()
    attempts = 0
    while len(edges) < n_edges and attempts < 200:
        attempts += 1
        i, j = sorted(rng.sample(range(n_nodes), 2))
        edges.add((nodes[j], nodes[i]))  # higher index is the parent: acyclic
    return sorted(edges)


def random_entity_graphs(rng: random.Random, n_graphs=3, cyclic=False) -> list[tg.EntityGraph]:
    """Graphs for distinct words over one shared random taxonomy.

    Sharing the taxonomy makes overlapping edges common; per-graph profiles
    vary so a shared edge can contribute different weights and levels.
    """
    edges = random_taxonomy_edges(rng, ensure_cycle=cyclic)
    concepts = sorted({n for e in edges for n in e})
    words = [f"word{i}" for i in range(n_graphs)]
    lexicon = {w: set(rng.sample(concepts, rng.randint(1, 3))) for w in words}
    taxonomy = make_taxonomy(edges, lexicon)
    graphs = []
    for word in words:
        profile = tg.WeightProfile(rng.choice(tg.PROFILE_KINDS), rng.randint(1, 6))
        match = tg.EntityMatch(word, (0, 1), 1, frozenset(lexicon[word]))
        graphs.append(tg.build_entity_graph(taxonomy, match, profile))
    return graphs


def random_dag(rng: random.Random, max_nodes=12) -> tg.ConsolidatedGraph:
    n = rng.randint(2, max_nodes)
    names = [f"N{i:02d}" for i in range(n)]
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.3:
                edges[(names[i], names[j])] = tg.ConsolidatedEdge(
                    Fraction(rng.randint(1, 5)), 1, 1
                )
    contrib = {name: frozenset({"t"}) for name in names}
    return tg.ConsolidatedGraph(frozenset(names), edges, contrib)


def shortest_paths_by_enumeration(graph: tg.ConsolidatedGraph):
    """Oracle: minimum length over exhaustive simple-path enumeration.

    Backtracking DFS walks every simple path out of each source once,
    recording the best length seen per destination.
    """
    nodes = sorted(graph.nodes)
    succ = {n: [] for n in nodes}
    for (a, b) in graph.edges:
        succ[a].append(b)
    result = {}
    for src in nodes:
        best: dict[str, int] = {}
        on_path = {src}
        stack = [(src, 0, iter(succ[src]))]
        while stack:
            node, length, children = stack[-1]
            advanced = False
            for nxt in children:
                if nxt in on_path:
                    continue
                if nxt not in best or length + 1 < best[nxt]:
                    best[nxt] = length + 1
                on_path.add(nxt)
                stack.append((nxt, length + 1, iter(succ[nxt])))
                advanced = True
                break
            if not advanced:
                stack.pop()
                on_path.discard(node)
        for dst in nodes:
            result[(src, dst)] = 0 if src == dst else best.get(dst)
    return result


def planted_corpus(n_docs=10):
    """Synthetic corpus where the correct extraction is forced by design.

    Every document gets its own diamond-shaped hierarchy island: a hub with
    two 2-deep branches holding the document's two lexicon words, plus a root
    with a direct and an indirect path to the hub. Per document the hub ties
    the root on out-flow but sits deeper, and the two words are the unique
    farthest nodes, so themes and keywords are fully determined.
    """
    edges = []
    lexicon = {}
    docs = {}
    gold = []
    for i in range(n_docs):
        root, mid, hub = f"Root{i:02d}", f"Mid{i:02d}", f"Hub{i:02d}"
        a1, a2 = f"BranchA{i:02d}", f"TipA{i:02d}"
        b1, b2 = f"BranchB{i:02d}", f"TipB{i:02d}"
        word_a, word_b = f"alpha{i:02d}", f"beta{i:02d}"
        edges += [
            (root, hub),
            (root, mid),
            (mid, hub),
            (hub, a1),
            (a1, a2),
            (hub, b1),
            (b1, b2),
        ]
        lexicon[word_a] = {a2}
        lexicon[word_b] = {b2}
        docs[f"doc{i:02d}"] = f"Le {word_a} apparaît ici, puis le {word_b} conclut."
        gold.append(
            tg.GoldIndex(
                doc_id=f"doc{i:02d}",
                themes=frozenset({hub}),
                keywords=frozenset({word_a, word_b}),
            )
        )
    return edges, lexicon, docs, gold
