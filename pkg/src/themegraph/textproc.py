"""Tokenization and lexicon matching.

Documents are reduced to a stream of normalized word tokens, then scanned for
single words and n-word groups that hit the taxonomy lexicon. Repeated
occurrences of the same entity are kept on purpose: repetition reinforces the
shared relations when the per-entity graphs are fused.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .taxonomy import Taxonomy

# maximal runs of letters/digits; hyphens and apostrophes only word-internal
_TOKEN = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*")
_APOSTROPHE = re.compile(r"['’]")


@dataclass(frozen=True)
class Token:
    text: str
    position: int


@dataclass(frozen=True)
class EntityMatch:
    """A lexicon hit: one word or one n-word group of the document."""

    surface: str
    span: tuple[int, int]  # (start position, token count)
    arity: int
    concepts: frozenset[str]


def tokenize(text: str) -> list[Token]:
    """Split text into lowercased word tokens with consecutive positions.

    Punctuation is discarded. Elided particles are dropped ("d'angles"
    becomes "angles"); hyphenated words stay whole.
    """
    tokens: list[Token] = []
    for match in _TOKEN.finditer(text):
        word = _APOSTROPHE.split(match.group().lower())[-1]
        if word:
            tokens.append(Token(word, len(tokens)))
    return tokens


def extract_candidates(tokens: list[Token], n_max: int, taxonomy: Taxonomy) -> list[EntityMatch]:
    """Match token windows against the lexicon, longest match first.

    Window sizes run from ``n_max`` down to 1; a token covered by an accepted
    match is excluded from every smaller window, so a unigram inside an
    accepted bigram never matches on its own. Overlaps between equal-arity
    matches are allowed. Matches come back in document order and duplicates
    are kept.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    texts = [t.text for t in tokens]
    covered: dict[int, int] = {}  # position -> largest arity covering it
    found: list[EntityMatch] = []
    for n in range(n_max, 0, -1):
        for start in range(len(texts) - n + 1):
            if any(covered.get(p, 0) > n for p in range(start, start + n)):
                continue
            surface = "_".join(texts[start : start + n])
            concepts = taxonomy.lexicon.get(surface)
            if not concepts:
                continue
            found.append(EntityMatch(surface, (start, n), n, concepts))
            for p in range(start, start + n):
                covered[p] = max(covered.get(p, 0), n)
    found.sort(key=lambda m: (m.span[0], -m.arity, m.surface))
    return found
