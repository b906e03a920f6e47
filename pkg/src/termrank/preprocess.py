"""Turning change-task text into per-sentence token lists.

Stopwords are removed and dotted identifiers are split into their segments.
Camel-case words are kept whole and nothing is stemmed, so class and method
names survive as search terms.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

from .ingest import ChangeTask

_WORD = re.compile(r"\w+")
_BLANK_LINE = re.compile(r"\n\s*\n")
_TERMINATORS = ".!?"

DEFAULT_MIN_LENGTH = 2


class Field(str, enum.Enum):
    SUMMARY = "Summary"
    DESCRIPTION = "Description"


@dataclass(frozen=True)
class SentenceTokens:
    source_field: Field
    tokens: tuple[str, ...]

    @property
    def keys(self) -> list[str]:
        return [term_key(t) for t in self.tokens]


class StopwordSet:
    """Immutable, case-insensitive set of words to drop."""

    def __init__(self, words: Iterable[str] = ()):
        self._words = frozenset(w.strip().lower() for w in words if w.strip())

    def __contains__(self, word: object) -> bool:
        return isinstance(word, str) and word.lower() in self._words

    def __len__(self) -> int:
        return len(self._words)

    def __iter__(self):
        return iter(sorted(self._words))

    @property
    def words(self) -> frozenset[str]:
        return self._words

    def union(self, words: Iterable[str]) -> "StopwordSet":
        return StopwordSet(self._words | {w.lower() for w in words})

    @classmethod
    def parse(cls, text: str) -> "StopwordSet":
        words = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                words.append(line)
        return cls(words)

    @classmethod
    def from_file(cls, path: str | Path) -> "StopwordSet":
        return cls.parse(Path(path).read_bytes().decode("utf-8", errors="replace"))

    @classmethod
    def default(cls) -> "StopwordSet":
        text = resources.files("termrank").joinpath("data/stopwords.txt").read_text("utf-8")
        return cls.parse(text)


def term_key(token: str) -> str:
    return token.lower()


def split_sentences(text: str) -> list[str]:
    """Split on '.', '!', '?' and blank lines.

    A dot with a letter or digit on both sides belongs to a qualified name
    and does not end the sentence.
    """
    sentences = []
    for para in _BLANK_LINE.split(text):
        start = 0
        i = 0
        n = len(para)
        while i < n:
            c = para[i]
            if c in _TERMINATORS:
                if (c == "." and 0 < i < n - 1
                        and para[i - 1].isalnum() and para[i + 1].isalnum()):
                    i += 1
                    continue
                while i + 1 < n and para[i + 1] in _TERMINATORS:
                    i += 1
                chunk = " ".join(para[start:i + 1].split())
                if chunk:
                    sentences.append(chunk)
                start = i + 1
            i += 1
        chunk = " ".join(para[start:].split())
        if chunk:
            sentences.append(chunk)
    return sentences


def split_dotted(token: str) -> list[str]:
    return [seg for seg in token.split(".") if seg]


def _keep(word: str, stops: StopwordSet, min_length: int) -> bool:
    return len(word) >= min_length and not word.isdigit() and word not in stops


def tokenize_words(sentence: str, stops: StopwordSet,
                   min_length: int = DEFAULT_MIN_LENGTH) -> list[str]:
    tokens = []
    for chunk in sentence.split():
        for segment in split_dotted(chunk):
            for word in _WORD.findall(segment):
                if _keep(word, stops, min_length):
                    tokens.append(word)
    return tokens


def tokenize_sentence(sentence: str, stops: StopwordSet,
                      source_field: Field = Field.DESCRIPTION,
                      min_length: int = DEFAULT_MIN_LENGTH) -> SentenceTokens:
    return SentenceTokens(Field(source_field), tuple(tokenize_words(sentence, stops, min_length)))


def preprocess_task(task: ChangeTask, stops: StopwordSet,
                    min_length: int = DEFAULT_MIN_LENGTH) -> list[SentenceTokens]:
    """Summary (always a single sentence) first, then description sentences.

    Sentences left empty after filtering are dropped.
    """
    out = []
    summary = " ".join(task.summary.split())
    if summary:
        out.append(tokenize_sentence(summary, stops, Field.SUMMARY, min_length))
    for sentence in split_sentences(task.description):
        out.append(tokenize_sentence(sentence, stops, Field.DESCRIPTION, min_length))
    return [s for s in out if s.tokens]
