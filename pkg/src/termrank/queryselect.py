"""Building search queries from ranked terms, plus the two baselines."""

from __future__ import annotations

import enum
import json
import math
import random
import re
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .ingest import ChangeTask
from .preprocess import Field, SentenceTokens, StopwordSet, preprocess_task, term_key, tokenize_words
from .textgraph import DEFAULT_WINDOW, build_graph
from .textrank import RankConfig, RankResult, rank

_CAMEL = re.compile(r"[a-z][A-Z]")

DEFAULT_K = {"textrank": 5, "kevic": 3, "random": 5}


class Method(str, enum.Enum):
    TEXTRANK = "textrank"
    KEVIC = "kevic"
    RANDOM = "random"


@dataclass(frozen=True)
class QueryTerm:
    term: str
    source: Field
    score: float

    @property
    def key(self) -> str:
        return term_key(self.term)


@dataclass(frozen=True)
class Query:
    task_id: str
    terms: tuple[QueryTerm, ...]
    method: Method

    @property
    def words(self) -> list[str]:
        return [t.term for t in self.terms]

    def format(self) -> str:
        return "".join(
            f"{i}\t{t.term}\t{t.score:.4f}\t{t.source.value}\n"
            for i, t in enumerate(self.terms, 1)
        )


@dataclass(frozen=True)
class HeuristicWeights:
    w_tfidf: float = 1.0
    w_inSumAndBody: float = 1.0
    w_isInMiddle: float = 1.0
    w_isCamelCase: float = 1.0
    bias: float = 0.0

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not math.isfinite(value):
                raise ValueError(f"weight {name} must be finite, got {value}")

    @classmethod
    def from_file(cls, path: str | Path) -> "HeuristicWeights":
        data = json.loads(Path(path).read_text("utf-8"))
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown weight keys: {sorted(unknown)}")
        return cls(**{k: float(v) for k, v in data.items()})


@dataclass(frozen=True)
class TaskStats:
    """Document frequencies of terms, one document per change task."""

    n_docs: int
    df: dict[str, int]

    def idf(self, key: str) -> float:
        return math.log(max(self.n_docs, 1) / max(self.df.get(key, 0), 1))


def build_task_stats(tasks: Iterable[ChangeTask], stops: StopwordSet) -> TaskStats:
    df: Counter[str] = Counter()
    n = 0
    for task in tasks:
        n += 1
        df.update({k for s in preprocess_task(task, stops) for k in s.keys})
    return TaskStats(n, dict(df))


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"query length must be >= 1, got {k}")


def select_textrank(scores: RankResult, sentences: Sequence[SentenceTokens],
                    k: int = 5, task_id: str = "") -> Query:
    """Best-scored Summary terms first, topped up from the Description."""
    _check_k(k)
    in_summary = {key for s in sentences if s.source_field is Field.SUMMARY for key in s.keys}
    ranked = scores.ranked()
    summary_pool = [s for s in ranked if s.term in in_summary][:k]
    rest = [s for s in ranked if s.term not in in_summary][:k - len(summary_pool)]
    terms = [QueryTerm(s.display, Field.SUMMARY, s.normalized) for s in summary_pool]
    terms += [QueryTerm(s.display, Field.DESCRIPTION, s.normalized) for s in rest]
    return Query(task_id, tuple(terms), Method.TEXTRANK)


def is_camel_case(token: str) -> bool:
    return _CAMEL.search(token) is not None


def kevic_features(task: ChangeTask, stats: TaskStats, stops: StopwordSet) -> dict[str, dict]:
    """Per-term feature values for the frequency/location/notation baseline."""
    sentences = preprocess_task(task, stops)
    tf: Counter[str] = Counter()
    display: dict[str, str] = {}
    fields: dict[str, set[Field]] = {}
    middle: dict[str, bool] = {}
    for s in sentences:
        last = len(s.tokens) - 1
        for pos, token in enumerate(s.tokens):
            key = term_key(token)
            tf[key] += 1
            display.setdefault(key, token)
            fields.setdefault(key, set()).add(s.source_field)
            middle[key] = middle.get(key, False) or 0 < pos < last
    return {
        key: {
            "display": display[key],
            "source": Field.SUMMARY if Field.SUMMARY in fields[key] else Field.DESCRIPTION,
            "tfidf": tf[key] * stats.idf(key),
            "inSumAndBody": float(len(fields[key]) == 2),
            "isInMiddle": float(middle[key]),
            "isCamelCase": float(is_camel_case(display[key])),
        }
        for key in tf
    }


def select_kevic(task: ChangeTask, corpus_stats: TaskStats, weights: HeuristicWeights = HeuristicWeights(),
                 k: int = 3, stops: StopwordSet | None = None) -> Query:
    _check_k(k)
    if stops is None:
        stops = StopwordSet.default()
    scored = []
    for key, f in kevic_features(task, corpus_stats, stops).items():
        score = (weights.w_tfidf * f["tfidf"]
                 + weights.w_inSumAndBody * f["inSumAndBody"]
                 + weights.w_isInMiddle * f["isInMiddle"]
                 + weights.w_isCamelCase * f["isCamelCase"]
                 + weights.bias)
        scored.append((score, key, f))
    scored.sort(key=lambda x: (-x[0], x[1]))
    terms = tuple(QueryTerm(f["display"], f["source"], score) for score, _, f in scored[:k])
    return Query(task.id, terms, Method.KEVIC)


def select_random_summary(task: ChangeTask, stops: StopwordSet, k: int = 5, seed: int = 0) -> Query:
    """Up to ``k`` distinct Summary terms drawn without replacement."""
    _check_k(k)
    candidates: dict[str, str] = {}
    for token in tokenize_words(" ".join(task.summary.split()), stops):
        candidates.setdefault(term_key(token), token)
    pool = list(candidates.values())
    picked = pool if len(pool) <= k else random.Random(seed).sample(pool, k)
    terms = tuple(QueryTerm(t, Field.SUMMARY, 0.0) for t in picked)
    return Query(task.id, terms, Method.RANDOM)


def suggest(
    task: ChangeTask,
    method: Method | str = Method.TEXTRANK,
    *,
    k: int | None = None,
    stops: StopwordSet | None = None,
    rank_config: RankConfig = RankConfig(),
    window: int = DEFAULT_WINDOW,
    weights: HeuristicWeights = HeuristicWeights(),
    task_stats: TaskStats | None = None,
    seed: int = 0,
) -> Query:
    """Run the full term-suggestion pipeline for one task."""
    method = Method(method)
    if k is None:
        k = DEFAULT_K[method.value]
    if stops is None:
        stops = StopwordSet.default()
    if method is Method.TEXTRANK:
        sentences = preprocess_task(task, stops)
        result = rank(build_graph(sentences, window), rank_config)
        return select_textrank(result, sentences, k, task.id)
    if method is Method.KEVIC:
        if task_stats is None:
            task_stats = build_task_stats([task], stops)
        return select_kevic(task, task_stats, weights, k, stops)
    return select_random_summary(task, stops, k, seed)
