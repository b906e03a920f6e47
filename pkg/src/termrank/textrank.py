"""TextRank scores by damped power iteration over a text graph."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .textgraph import TextGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankConfig:
    damping: float = 0.85
    init_score: float = 0.25
    epsilon: float = 0.0001
    max_iterations: int = 100

    def __post_init__(self):
        if not 0.0 <= self.damping <= 1.0:
            raise ValueError(f"damping must lie in [0, 1], got {self.damping}")
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")


@dataclass(frozen=True)
class TermScore:
    term: str
    display: str
    raw: float
    normalized: float


@dataclass(frozen=True)
class RankResult:
    scores: Mapping[str, TermScore]
    iterations_used: int
    converged: bool
    last_delta: float = 0.0

    def ranked(self) -> list[TermScore]:
        """Highest raw score first; equal scores fall back to term order."""
        return sorted(self.scores.values(), key=lambda s: (-s.raw, s.term))


def rank(graph: TextGraph, config: RankConfig = RankConfig()) -> RankResult:
    """Iterate S(v) = (1 - d) + d * sum(S(u) / deg(u) for u adjacent to v).

    Updates are synchronous. Iteration stops once the largest per-node change
    drops below ``config.epsilon`` or after ``config.max_iterations`` rounds.
    """
    keys = sorted(graph.adjacency)
    if not keys:
        return RankResult({}, 0, True)
    d = config.damping
    deg = {k: len(graph.adjacency[k]) for k in keys}
    scores = {k: config.init_score for k in keys}
    converged = False
    delta = float("inf")
    it = 0
    for it in range(1, config.max_iterations + 1):
        new = {}
        for k in keys:
            total = 0.0
            for j in sorted(graph.adjacency[k]):
                total += scores[j] / deg[j]
            new[k] = (1.0 - d) + d * total
        delta = max(abs(new[k] - scores[k]) for k in keys)
        scores = new
        if delta < config.epsilon:
            converged = True
            break
    if not converged:
        logger.warning("TextRank did not converge after %d iterations (last delta %.3g)",
                       it, delta)
    top = max(scores.values())
    result = {
        k: TermScore(k, graph.nodes[k], v, v / top if top > 0 else 0.0)
        for k, v in scores.items()
    }
    return RankResult(result, it, converged, delta)


def solve_exact(graph: TextGraph, damping: float = 0.85) -> dict[str, float]:
    """Solve the TextRank fixed point directly as a linear system.

    (I - d M) S = (1 - d) 1 with M[i, j] = 1 / deg(j) for each edge j -> i.
    Meant as a check on :func:`rank` for small graphs.
    """
    keys = sorted(graph.adjacency)
    n = len(keys)
    if n > 50:
        raise ValueError(f"solve_exact is limited to 50 nodes, got {n}")
    if n == 0:
        return {}
    index = {k: i for i, k in enumerate(keys)}
    m = np.zeros((n, n))
    for j, k in enumerate(keys):
        nbrs = graph.adjacency[k]
        for other in nbrs:
            m[index[other], j] = 1.0 / len(nbrs)
    a = np.eye(n) - damping * m
    try:
        s = np.linalg.solve(a, np.full(n, 1.0 - damping))
    except np.linalg.LinAlgError as exc:
        raise ValueError("TextRank system is singular") from exc
    return {k: float(s[i]) for i, k in enumerate(keys)}
