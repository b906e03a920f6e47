"""Search-term suggestion for software change tasks via TextRank, with a
small tf-idf code search engine and IR metrics for evaluating the queries."""

from .ingest import ChangeTask, CorpusDocument, SolutionSet, load_corpus, load_solutions, load_tasks
from .preprocess import Field, SentenceTokens, StopwordSet, preprocess_task
from .queryselect import HeuristicWeights, Method, Query, suggest
from .searchengine import Index, build_index, search
from .textgraph import TextGraph, build_graph
from .textrank import RankConfig, RankResult, rank

__all__ = [
    "ChangeTask", "CorpusDocument", "SolutionSet", "load_corpus", "load_solutions", "load_tasks",
    "Field", "SentenceTokens", "StopwordSet", "preprocess_task",
    "HeuristicWeights", "Method", "Query", "suggest",
    "Index", "build_index", "search",
    "TextGraph", "build_graph",
    "RankConfig", "RankResult", "rank",
]
