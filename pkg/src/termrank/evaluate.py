"""Retrieval evaluation: tasks solved, average precision and recall at a cutoff."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .ingest import ChangeTask, SolutionSet
from .preprocess import StopwordSet
from .queryselect import DEFAULT_K, HeuristicWeights, Method, Query, build_task_stats, suggest
from .searchengine import DEFAULT_CUTOFF, Index, search
from .textgraph import DEFAULT_WINDOW
from .textrank import RankConfig


class EvaluationError(ValueError):
    pass


def _files(solution) -> frozenset[str]:
    files = solution.files if isinstance(solution, SolutionSet) else frozenset(solution)
    if not files:
        raise EvaluationError("solution set is empty")
    return files


def average_precision_at_k(ranked: Sequence[str], solution, cutoff: int = DEFAULT_CUTOFF) -> float:
    """Mean of precision@k over the relevant positions within the cutoff.

    Divides by the full solution size, so files missed entirely count against it.
    """
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    files = _files(solution)
    hits = 0
    total = 0.0
    for k, path in enumerate(ranked[:cutoff], 1):
        if path in files:
            hits += 1
            total += hits / k
    return total / len(files)


def recall_at_k(ranked: Sequence[str], solution, cutoff: int = DEFAULT_CUTOFF) -> float:
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    files = _files(solution)
    return len(files.intersection(ranked[:cutoff])) / len(files)


def mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values) if values else 0.0


@dataclass(frozen=True)
class TaskOutcome:
    task_id: str
    query: Query
    ranked_paths: tuple[str, ...]
    relevant_hits: tuple[tuple[int, str], ...]
    apk: float
    recall: float

    @property
    def solved(self) -> bool:
        return bool(self.relevant_hits)

    def to_dict(self) -> dict:
        return {
            "task_id": self.task_id,
            "query": [
                {"term": t.term, "source": t.source.value, "score": t.score}
                for t in self.query.terms
            ],
            "ranked_paths": list(self.ranked_paths),
            "relevant_hits": [[r, p] for r, p in self.relevant_hits],
            "solved": self.solved,
            "apk": self.apk,
            "recall": self.recall,
        }


@dataclass(frozen=True)
class EvalReport:
    outcomes: tuple[TaskOutcome, ...]
    k: int
    cutoff: int
    method: Method
    seed: int
    config: dict = field(default_factory=dict)

    @property
    def nts(self) -> int:
        return sum(o.solved for o in self.outcomes)

    @property
    def pts(self) -> float:
        return self.nts / len(self.outcomes)

    @property
    def mapk_all(self) -> float:
        return mean([o.apk for o in self.outcomes])

    @property
    def mapk_solved(self) -> float:
        return mean([o.apk for o in self.outcomes if o.solved])

    @property
    def mean_recall(self) -> float:
        return mean([o.recall for o in self.outcomes])

    def to_dict(self) -> dict:
        return {
            "nts": self.nts,
            "pts": self.pts,
            "mapk_all": self.mapk_all,
            "mapk_solved": self.mapk_solved,
            "mean_recall": self.mean_recall,
            "k": self.k,
            "cutoff": self.cutoff,
            "method": self.method.value,
            "seed": self.seed,
            "config": self.config,
            "outcomes": [o.to_dict() for o in self.outcomes],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def summary_rows(self) -> list[tuple[str, str]]:
        n = len(self.outcomes)
        return [
            ("No. of Tasks Solved (NTS)", f"{self.nts}({n})"),
            ("% of Tasks Solved (PTS)", f"{100 * self.pts:.2f}%"),
            ("MAP, all tasks", f"{100 * self.mapk_all:.2f}%"),
            ("MAP, solved tasks", f"{100 * self.mapk_solved:.2f}%"),
            ("Mean Recall (MR)", f"{100 * self.mean_recall:.2f}%"),
        ]

    def format_table(self) -> str:
        lines = [f"method={self.method.value} k={self.k} cutoff={self.cutoff} seed={self.seed}"]
        for o in self.outcomes:
            status = "solved" if o.solved else "missed"
            lines.append(f"  {o.task_id:<12} {status}  apk={o.apk:.4f}  recall={o.recall:.4f}"
                         f"  query={' '.join(o.query.words)}")
        width = max(len(label) for label, _ in self.summary_rows())
        lines += [f"{label:<{width}}  {value}" for label, value in self.summary_rows()]
        return "\n".join(lines) + "\n"


def check_solutions(tasks: Sequence[ChangeTask], solutions: Mapping[str, SolutionSet],
                    index: Index) -> None:
    missing = [t.id for t in tasks if t.id not in solutions]
    if missing:
        raise EvaluationError(f"tasks without a solution set: {', '.join(missing)}")
    known = set(index.paths.values())
    for t in tasks:
        absent = sorted(solutions[t.id].files - known)
        if absent:
            raise EvaluationError(f"task {t.id}: solution files not in corpus: {', '.join(absent)}")


def evaluate_run(
    tasks: Sequence[ChangeTask],
    solutions: Mapping[str, SolutionSet],
    index: Index,
    method: Method | str = Method.TEXTRANK,
    k: int | None = None,
    cutoff: int = DEFAULT_CUTOFF,
    seed: int = 0,
    *,
    stops: StopwordSet | None = None,
    rank_config: RankConfig = RankConfig(),
    window: int = DEFAULT_WINDOW,
    weights: HeuristicWeights = HeuristicWeights(),
) -> EvalReport:
    method = Method(method)
    if k is None:
        k = DEFAULT_K[method.value]
    if not tasks:
        raise EvaluationError("no tasks to evaluate")
    check_solutions(tasks, solutions, index)
    if stops is None:
        stops = StopwordSet.default()
    stats = build_task_stats(tasks, stops) if method is Method.KEVIC else None
    outcomes = []
    for task in tasks:
        query = suggest(task, method, k=k, stops=stops, rank_config=rank_config,
                        window=window, weights=weights, task_stats=stats, seed=seed)
        ranked = search(index, query, cutoff).paths
        gold = solutions[task.id]
        hits = tuple((r, p) for r, p in enumerate(ranked, 1) if p in gold.files)
        outcomes.append(TaskOutcome(
            task.id, query, tuple(ranked), hits,
            average_precision_at_k(ranked, gold, cutoff), recall_at_k(ranked, gold, cutoff),
        ))
    config = {
        "damping": rank_config.damping,
        "init_score": rank_config.init_score,
        "epsilon": rank_config.epsilon,
        "max_iterations": rank_config.max_iterations,
        "window": window,
    }
    if method is Method.KEVIC:
        config["weights"] = {
            "w_tfidf": weights.w_tfidf, "w_inSumAndBody": weights.w_inSumAndBody,
            "w_isInMiddle": weights.w_isInMiddle, "w_isCamelCase": weights.w_isCamelCase,
            "bias": weights.bias,
        }
    return EvalReport(tuple(outcomes), k, cutoff, method, seed, config)


def format_comparison(reports: Sequence[EvalReport]) -> str:
    """Side-by-side metrics, one column per report."""
    headers = [f"{r.method.value} (k={r.k})" for r in reports]
    rows = [label for label, _ in reports[0].summary_rows()]
    values = [dict(r.summary_rows()) for r in reports]
    lw = max(len(x) for x in rows + ["Metric"])
    cw = [max(len(h), *(len(v[row]) for row in rows)) for h, v in zip(headers, values)]
    out = ["  ".join(["Metric".ljust(lw)] + [h.rjust(w) for h, w in zip(headers, cw)])]
    for row in rows:
        out.append("  ".join([row.ljust(lw)] + [v[row].rjust(w) for v, w in zip(values, cw)]))
    return "\n".join(out) + "\n"
