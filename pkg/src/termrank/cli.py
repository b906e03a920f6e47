"""Command-line interface: suggest, index, search, evaluate, compare."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import ingest
from .evaluate import EvaluationError, evaluate_run, format_comparison
from .preprocess import StopwordSet, preprocess_task
from .queryselect import HeuristicWeights, Method, build_task_stats, suggest
from .searchengine import DEFAULT_CUTOFF, Index, SnapshotError, build_index, search
from .textgraph import DEFAULT_WINDOW, build_graph, dump_edges
from .textrank import RankConfig

DEFAULTS = {
    "method": "textrank",
    "k": None,
    "cutoff": DEFAULT_CUTOFF,
    "damping": 0.85,
    "epsilon": 0.0001,
    "max_iters": 100,
    "init": 0.25,
    "window": DEFAULT_WINDOW,
    "seed": 0,
    "glob": list(ingest.DEFAULT_GLOBS),
    "stopwords": None,
    "weights": None,
    "json": False,
}


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _add_common(p: argparse.ArgumentParser, *, methods: bool = True) -> None:
    p.add_argument("--config", help="JSON file of option defaults (flags override it)")
    p.add_argument("--stopwords", help="stopword file replacing the shipped list")
    p.add_argument("--json", action="store_true", default=None, help="machine-readable output")
    if methods:
        p.add_argument("--tasks", help="tasks JSON file")
        p.add_argument("--k", type=_positive_int, help="query length (default: 5, or 3 for kevic)")
        p.add_argument("--damping", type=float)
        p.add_argument("--epsilon", type=float)
        p.add_argument("--max-iters", dest="max_iters", type=_positive_int)
        p.add_argument("--init", type=float, help="initial TextRank score")
        p.add_argument("--window", type=int, help="co-occurrence window size")
        p.add_argument("--seed", type=int, help="seed for the random baseline")
        p.add_argument("--weights", help="JSON file of kevic heuristic weights")


def _add_corpus(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", help="source corpus root directory")
    p.add_argument("--glob", action="append", help="include pattern, repeatable (default **/*.java)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="termrank", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("suggest", help="suggest search terms for change tasks")
    _add_common(p)
    p.add_argument("--method", choices=[m.value for m in Method])
    p.add_argument("--id", action="append", dest="ids", help="task id, repeatable (default: all)")
    p.add_argument("--dump-graph", help="write the text graph edge list of each task here")

    p = sub.add_parser("index", help="build an index snapshot of a corpus")
    _add_common(p, methods=False)
    _add_corpus(p)
    p.add_argument("--out", required=True, help="snapshot file to write")

    p = sub.add_parser("search", help="run one query against a corpus or snapshot")
    _add_common(p, methods=False)
    _add_corpus(p)
    p.add_argument("--index", help="index snapshot (instead of --corpus)")
    p.add_argument("--cutoff", type=_positive_int)
    p.add_argument("terms", nargs="+")

    for name, help_text in (("evaluate", "evaluate one method on a task set"),
                            ("compare", "evaluate two methods side by side")):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        _add_corpus(p)
        p.add_argument("--solutions", help="solutions JSON file")
        p.add_argument("--index", help="index snapshot (instead of --corpus)")
        p.add_argument("--cutoff", type=_positive_int)
        if name == "evaluate":
            p.add_argument("--method", choices=[m.value for m in Method])
        else:
            p.add_argument("--methods", nargs=2, default=["textrank", "kevic"],
                           choices=[m.value for m in Method], metavar="METHOD")
    return parser


def resolve(args: argparse.Namespace) -> dict:
    """Merge flags over the optional config file over built-in defaults."""
    cfg = dict(DEFAULTS)
    if getattr(args, "config", None):
        path = Path(args.config)
        if not path.is_file():
            raise UsageError(f"no such config file: {path}")
        cfg.update(json.loads(path.read_text("utf-8")))
    for key, value in vars(args).items():
        if value is not None:
            cfg[key] = value
    return cfg


def _stops(cfg: dict) -> StopwordSet:
    if cfg["stopwords"]:
        path = Path(cfg["stopwords"])
        if not path.is_file():
            raise UsageError(f"no such stopword file: {path}")
        return StopwordSet.from_file(path)
    return StopwordSet.default()


def _rank_config(cfg: dict) -> RankConfig:
    return RankConfig(cfg["damping"], cfg["init"], cfg["epsilon"], cfg["max_iters"])


def _weights(cfg: dict) -> HeuristicWeights:
    return HeuristicWeights.from_file(cfg["weights"]) if cfg["weights"] else HeuristicWeights()


def _require(cfg: dict, *keys: str) -> None:
    for key in keys:
        if not cfg.get(key):
            raise UsageError(f"--{key} is required")


def _index(cfg: dict) -> Index:
    if cfg.get("index"):
        return Index.load(cfg["index"])
    _require(cfg, "corpus")
    report = ingest.LoadReport()
    docs = ingest.load_corpus(cfg["corpus"], cfg["glob"], report)
    for path, reason in report.skipped:
        print(f"warning: skipped {path}: {reason}", file=sys.stderr)
    return build_index(docs)


def cmd_suggest(cfg: dict, out) -> None:
    _require(cfg, "tasks")
    tasks = ingest.load_tasks(cfg["tasks"])
    if cfg.get("ids"):
        by_id = {t.id: t for t in tasks}
        unknown = [i for i in cfg["ids"] if i not in by_id]
        if unknown:
            raise UsageError(f"unknown task id(s): {', '.join(unknown)}")
        selected = [by_id[i] for i in cfg["ids"]]
    else:
        selected = tasks
    stops = _stops(cfg)
    method = Method(cfg["method"])
    stats = build_task_stats(tasks, stops) if method is Method.KEVIC else None
    if cfg.get("dump_graph"):
        with open(cfg["dump_graph"], "w", encoding="utf-8") as fh:
            for task in selected:
                fh.write(f"# {task.id}\n")
                fh.write(dump_edges(build_graph(preprocess_task(task, stops), cfg["window"])))
    queries = [
        suggest(task, method, k=cfg["k"], stops=stops, rank_config=_rank_config(cfg),
                window=cfg["window"], weights=_weights(cfg), task_stats=stats, seed=cfg["seed"])
        for task in selected
    ]
    if cfg["json"]:
        payload = [
            {"task_id": q.task_id, "method": q.method.value,
             "terms": [{"term": t.term, "source": t.source.value, "score": t.score} for t in q.terms]}
            for q in queries
        ]
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        return
    for q in queries:
        if len(queries) > 1:
            out.write(f"# {q.task_id}\n")
        out.write(q.format())


def cmd_index(cfg: dict, out) -> None:
    index = _index(cfg)
    index.save(cfg["out"])
    print(f"indexed {index.doc_count} documents, {len(index.postings)} terms -> {cfg['out']}",
          file=sys.stderr)


def cmd_search(cfg: dict, out) -> None:
    result = search(_index(cfg), cfg["terms"], cfg["cutoff"])
    if cfg["json"]:
        out.write(json.dumps([{"path": p, "score": s} for p, s in result.ranked], indent=2) + "\n")
    else:
        out.write(result.format())


def _run(cfg: dict, method: str, index: Index, tasks, solutions):
    return evaluate_run(
        tasks, solutions, index, method, cfg["k"], cfg["cutoff"], cfg["seed"],
        stops=_stops(cfg), rank_config=_rank_config(cfg), window=cfg["window"],
        weights=_weights(cfg),
    )


def _load_eval_inputs(cfg: dict):
    _require(cfg, "tasks", "solutions")
    return ingest.load_tasks(cfg["tasks"]), ingest.load_solutions(cfg["solutions"]), _index(cfg)


def cmd_evaluate(cfg: dict, out) -> None:
    tasks, solutions, index = _load_eval_inputs(cfg)
    report = _run(cfg, cfg["method"], index, tasks, solutions)
    out.write(report.to_json() if cfg["json"] else report.format_table())


def cmd_compare(cfg: dict, out) -> None:
    tasks, solutions, index = _load_eval_inputs(cfg)
    reports = [_run(cfg, m, index, tasks, solutions) for m in cfg["methods"]]
    if cfg["json"]:
        out.write(json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(format_comparison(reports))


COMMANDS = {
    "suggest": cmd_suggest,
    "index": cmd_index,
    "search": cmd_search,
    "evaluate": cmd_evaluate,
    "compare": cmd_compare,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = resolve(args)
        if cfg["k"] is not None and cfg["k"] < 1:
            raise UsageError("--k must be >= 1")
        COMMANDS[args.command](cfg, out)
    except UsageError as exc:
        parser.error(str(exc))
    except (ingest.IngestError, EvaluationError, SnapshotError, ValueError, OSError) as exc:
        print(f"termrank: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
