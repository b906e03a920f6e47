"""In-memory inverted index with boolean-OR filtering and tf-idf ranking.

A document d matching query terms T scores

    sum(sqrt(tf(t, d)) * idf(t) ** 2 for t in T if t in d) / sqrt(len(d))

with idf(t) = 1 + ln(N / (df(t) + 1)). Ties are broken by path.
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .ingest import CorpusDocument
from .preprocess import DEFAULT_MIN_LENGTH, term_key

SNAPSHOT_VERSION = 1
DEFAULT_CUTOFF = 10

_NON_WORD = re.compile(r"\W+")


class SnapshotError(ValueError):
    pass


def preprocess_source(raw_text: str, min_length: int = DEFAULT_MIN_LENGTH) -> list[str]:
    """Strip punctuation and case-fold; no stopwords removed, no stemming."""
    return [
        term_key(w) for w in _NON_WORD.sub(" ", raw_text).split()
        if len(w) >= min_length and not w.isdigit()
    ]


def query_keys(terms: Iterable[str]) -> list[str]:
    """Normalize query terms the same way documents are; duplicates dropped."""
    seen: dict[str, None] = {}
    for term in terms:
        for key in preprocess_source(term):
            seen.setdefault(key, None)
    return list(seen)


@dataclass(frozen=True)
class Index:
    postings: Mapping[str, Mapping[int, int]]
    doc_lengths: Mapping[int, int]
    paths: Mapping[int, str]

    @property
    def doc_count(self) -> int:
        return len(self.paths)

    def df(self, key: str) -> int:
        return len(self.postings.get(key, ()))

    def idf(self, key: str) -> float:
        return 1.0 + math.log(self.doc_count / (self.df(key) + 1))

    def to_json(self) -> str:
        data = {
            "format_version": SNAPSHOT_VERSION,
            "documents": [
                {"path": self.paths[i], "length": self.doc_lengths[i]} for i in sorted(self.paths)
            ],
            "postings": {
                term: [[doc, tf] for doc, tf in sorted(plist.items())]
                for term, plist in sorted(self.postings.items())
            },
        }
        return json.dumps(data, separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Index":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SnapshotError(f"index snapshot is not valid JSON: {exc}") from exc
        version = data.get("format_version") if isinstance(data, dict) else None
        if version != SNAPSHOT_VERSION:
            raise SnapshotError(f"unsupported index snapshot version: {version!r}")
        docs = data["documents"]
        paths = {i: d["path"] for i, d in enumerate(docs)}
        lengths = {i: int(d["length"]) for i, d in enumerate(docs)}
        postings = {}
        for term, plist in data["postings"].items():
            entries = {int(doc): int(tf) for doc, tf in plist}
            if not set(entries) <= set(paths):
                raise SnapshotError(f"postings for {term!r} reference unknown documents")
            postings[term] = entries
        return cls(postings, lengths, paths)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "Index":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class SearchResult:
    ranked: tuple[tuple[str, float], ...]
    cutoff: int = DEFAULT_CUTOFF

    @property
    def paths(self) -> list[str]:
        return [p for p, _ in self.ranked]

    def format(self) -> str:
        return "".join(f"{i}\t{p}\t{s:.6f}\n" for i, (p, s) in enumerate(self.ranked, 1))


def build_index(docs: Sequence[CorpusDocument]) -> Index:
    postings: dict[str, dict[int, int]] = {}
    lengths: dict[int, int] = {}
    paths: dict[int, str] = {}
    seen = set()
    for i, doc in enumerate(docs):
        if doc.path in seen:
            raise ValueError(f"duplicate document path {doc.path!r}")
        seen.add(doc.path)
        tokens = preprocess_source(doc.raw_text)
        paths[i] = doc.path
        lengths[i] = len(tokens)
        for term, tf in Counter(tokens).items():
            postings.setdefault(term, {})[i] = tf
    return Index(postings, lengths, paths)


def search(index: Index, query, cutoff: int = DEFAULT_CUTOFF) -> SearchResult:
    """Rank documents containing at least one query term.

    ``query`` is a Query (its term strings are used) or an iterable of strings.
    """
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    terms = query.words if hasattr(query, "words") else list(query)
    keys = query_keys(terms)
    weights = {k: index.idf(k) ** 2 for k in keys if k in index.postings}
    if not weights:
        return SearchResult((), cutoff)
    sums: dict[int, float] = {}
    # query-term order is kept so the float sums match a per-document scorer exactly
    for key in keys:
        if key not in weights:
            continue
        for doc, tf in index.postings[key].items():
            sums[doc] = sums.get(doc, 0.0) + math.sqrt(tf) * weights[key]
    scored = [
        (index.paths[doc], total / math.sqrt(index.doc_lengths[doc])) for doc, total in sums.items()
    ]
    scored.sort(key=lambda x: (-x[1], x[0]))
    return SearchResult(tuple(scored[:cutoff]), cutoff)
