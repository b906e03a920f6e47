"""Undirected, unweighted term co-occurrence graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .preprocess import SentenceTokens, term_key

DEFAULT_WINDOW = 2


@dataclass(frozen=True)
class TextGraph:
    # term key -> display form (first occurrence wins)
    nodes: Mapping[str, str]
    adjacency: Mapping[str, frozenset[str]]

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, term: object) -> bool:
        return isinstance(term, str) and term_key(term) in self.nodes

    def edges(self) -> list[tuple[str, str]]:
        return sorted((a, b) for a, nbrs in self.adjacency.items() for b in nbrs if a < b)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], nodes: Iterable[str] = ()) -> "TextGraph":
        display: dict[str, str] = {}
        adj: dict[str, set[str]] = {}
        for n in nodes:
            display.setdefault(term_key(n), n)
            adj.setdefault(term_key(n), set())
        for a, b in edges:
            for t in (a, b):
                display.setdefault(term_key(t), t)
                adj.setdefault(term_key(t), set())
            ka, kb = term_key(a), term_key(b)
            if ka != kb:
                adj[ka].add(kb)
                adj[kb].add(ka)
        return cls(display, {k: frozenset(v) for k, v in adj.items()})


def build_graph(sentences: Iterable[SentenceTokens], window: int = DEFAULT_WINDOW) -> TextGraph:
    """Link every pair of distinct terms less than ``window`` positions apart.

    Windows never cross sentence boundaries; a pair seen twice is still one edge.
    """
    if window < 2:
        raise ValueError(f"window must be at least 2, got {window}")
    display: dict[str, str] = {}
    adj: dict[str, set[str]] = {}
    for sentence in sentences:
        keys = []
        for token in sentence.tokens:
            key = term_key(token)
            display.setdefault(key, token)
            adj.setdefault(key, set())
            keys.append(key)
        for i, a in enumerate(keys):
            for b in keys[i + 1:i + window]:
                if a != b:
                    adj[a].add(b)
                    adj[b].add(a)
    return TextGraph(display, {k: frozenset(v) for k, v in adj.items()})


def degree(graph: TextGraph, term: str) -> int:
    key = term_key(term)
    if key not in graph.adjacency:
        raise KeyError(f"unknown term {term!r}")
    return len(graph.adjacency[key])


def dump_edges(graph: TextGraph) -> str:
    """Tab-separated edge list using display forms, one edge per line."""
    return "".join(f"{graph.nodes[a]}\t{graph.nodes[b]}\n" for a, b in graph.edges())
