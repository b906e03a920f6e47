"""Loading change tasks, gold solution sets and source corpora from disk."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

logger = logging.getLogger(__name__)

DEFAULT_GLOBS = ("**/*.java",)


class IngestError(ValueError):
    """Raised when an input file is missing or violates its format."""


@dataclass(frozen=True)
class ChangeTask:
    id: str
    product: str
    component: str
    summary: str
    description: str


@dataclass(frozen=True)
class SolutionSet:
    task_id: str
    files: frozenset[str]


@dataclass(frozen=True)
class CorpusDocument:
    path: str
    raw_text: str


@dataclass
class LoadReport:
    """Files matched by the corpus globs but skipped because they could not be read."""

    matched: int = 0
    skipped: list[tuple[str, str]] = field(default_factory=list)


def _read_text(path: Path) -> str:
    return path.read_bytes().decode("utf-8", errors="replace")


def _read_json(path: str | Path):
    path = Path(path)
    if not path.is_file():
        raise IngestError(f"no such file: {path}")
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise IngestError(f"{path}: malformed JSON ({exc})") from exc


def normalize_path(path: str) -> str:
    return path.replace("\\", "/").lstrip("/")


def parse_tasks(records) -> list[ChangeTask]:
    if not isinstance(records, list):
        raise IngestError("tasks file must hold a JSON array")
    tasks = []
    seen = set()
    for n, rec in enumerate(records):
        if not isinstance(rec, dict):
            raise IngestError(f"task record {n} is not an object")
        values = {}
        for key in ("id", "product", "component", "summary", "description"):
            value = rec.get(key, "")
            if not isinstance(value, str):
                raise IngestError(f"task record {n}: field {key!r} must be a string")
            values[key] = value
        if not values["id"]:
            raise IngestError(f"task record {n} has an empty id")
        if values["id"] in seen:
            raise IngestError(f"duplicate task id {values['id']!r}")
        if not values["summary"].strip() and not values["description"].strip():
            raise IngestError(f"task {values['id']!r} has neither summary nor description")
        seen.add(values["id"])
        tasks.append(ChangeTask(**values))
    return tasks


def load_tasks(path: str | Path) -> list[ChangeTask]:
    """Read a JSON array of task records, preserving file order."""
    return parse_tasks(_read_json(path))


def parse_solutions(records) -> dict[str, SolutionSet]:
    if not isinstance(records, list):
        raise IngestError("solutions file must hold a JSON array")
    out: dict[str, SolutionSet] = {}
    for n, rec in enumerate(records):
        if not isinstance(rec, dict) or not isinstance(rec.get("id"), str) or not rec["id"]:
            raise IngestError(f"solution record {n} is malformed")
        files = rec.get("files")
        if not isinstance(files, list) or not all(isinstance(f, str) for f in files):
            raise IngestError(f"solution {rec['id']!r}: 'files' must be a list of strings")
        if not files:
            raise IngestError(f"solution {rec['id']!r} has an empty file list")
        if rec["id"] in out:
            raise IngestError(f"duplicate solution id {rec['id']!r}")
        out[rec["id"]] = SolutionSet(rec["id"], frozenset(normalize_path(f) for f in files))
    return out


def load_solutions(path: str | Path) -> dict[str, SolutionSet]:
    return parse_solutions(_read_json(path))


def dump_tasks(tasks: Iterable[ChangeTask]) -> str:
    records = [
        {"id": t.id, "product": t.product, "component": t.component,
         "summary": t.summary, "description": t.description}
        for t in tasks
    ]
    return json.dumps(records, indent=2, ensure_ascii=False) + "\n"


def dump_solutions(solutions: dict[str, SolutionSet]) -> str:
    records = [{"id": s.task_id, "files": sorted(s.files)} for s in solutions.values()]
    return json.dumps(records, indent=2, ensure_ascii=False) + "\n"


def load_corpus(
    root: str | Path,
    include_globs: Sequence[str] = DEFAULT_GLOBS,
    report: LoadReport | None = None,
) -> list[CorpusDocument]:
    """Collect every file under ``root`` matching any of ``include_globs``.

    Documents come back sorted by their root-relative, '/'-separated path.
    Unreadable files are logged, recorded in ``report`` and skipped.
    """
    root = Path(root)
    if not root.is_dir():
        raise IngestError(f"corpus root is not a directory: {root}")
    matched: dict[str, Path] = {}
    for pattern in include_globs:
        for p in root.glob(pattern):
            if p.is_file():
                matched.setdefault(p.relative_to(root).as_posix(), p)
    if not matched:
        raise IngestError(f"no files under {root} match {list(include_globs)}")
    if report is None:
        report = LoadReport()
    report.matched = len(matched)
    docs = []
    for rel in sorted(matched):
        try:
            text = _read_text(matched[rel])
        except OSError as exc:
            logger.warning("skipping unreadable file %s: %s", rel, exc)
            report.skipped.append((rel, str(exc)))
            continue
        docs.append(CorpusDocument(rel, text))
    return docs
