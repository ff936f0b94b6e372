"""Corpus ingestion: JSON-Lines loading and whitespace tokenization.

A corpus is an ordered collection of summary records, each tokenized once
under a single tokenizer configuration. All downstream analyses (n-gram
indexing, repetition scores, regression) operate on these records.
"""

from __future__ import annotations

import json
import sys
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import CorpusLoadError, InputError

REQUIRED_FIELDS = ("id", "summary", "architecture", "test_dataset")
OPTIONAL_FIELDS = ("input", "train_dataset")


@dataclass(frozen=True)
class TokenizerConfig:
    """Normalization applied before token streams are compared.

    punctuation_mode "split" peels leading and trailing punctuation off each
    whitespace unit into standalone tokens, so phrase matches survive clause
    boundaries; "attached" keeps units exactly as split on whitespace.
    """

    case_fold: bool = True
    punctuation_mode: str = "split"

    def __post_init__(self):
        if self.punctuation_mode not in ("split", "attached"):
            raise ValueError(
                f"punctuation_mode must be 'split' or 'attached', got {self.punctuation_mode!r}"
            )


@dataclass(frozen=True)
class TokenSequence:
    """A normalized token stream plus the raw text it came from."""

    tokens: tuple[str, ...]
    text: str

    @property
    def source_char_count(self) -> int:
        return len(self.text)

    def __len__(self) -> int:
        return len(self.tokens)


def _is_punctuation(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _split_unit(unit: str) -> list[str]:
    start, end = 0, len(unit)
    while start < end and _is_punctuation(unit[start]):
        start += 1
    while end > start and _is_punctuation(unit[end - 1]):
        end -= 1
    parts = list(unit[:start])
    if start < end:
        parts.append(unit[start:end])
    parts.extend(unit[end:])
    return parts


def tokenize(raw_text: str, config: TokenizerConfig | None = None) -> TokenSequence:
    """Tokenize text deterministically under ``config``.

    Whitespace-delimited units, optionally case folded, optionally with
    leading/trailing punctuation split into separate tokens. Total function:
    empty text yields an empty sequence.
    """
    if config is None:
        config = TokenizerConfig()
    text = raw_text.lower() if config.case_fold else raw_text
    tokens: list[str] = []
    for unit in text.split():
        if config.punctuation_mode == "split":
            tokens.extend(_split_unit(unit))
        else:
            tokens.append(unit)
    # interning dedups token storage across a large corpus
    return TokenSequence(tokens=tuple(sys.intern(t) for t in tokens), text=raw_text)


@dataclass(frozen=True)
class SummaryRecord:
    """One summary with its generation metadata.

    ``train_dataset`` is absent for human-written references; ``input`` is
    the paired source document, needed only for abstractiveness.
    """

    id: str
    summary: TokenSequence
    architecture: str
    test_dataset: str
    train_dataset: str | None = None
    input: TokenSequence | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("record id must be a non-empty string")
        if self.architecture == "Human" and self.train_dataset is not None:
            raise ValueError(
                f"record {self.id!r}: architecture 'Human' cannot carry a train_dataset"
            )

    @property
    def length_tokens(self) -> int:
        return len(self.summary.tokens)


@dataclass(frozen=True)
class Corpus:
    """An ordered, immutable collection of records sharing one tokenizer."""

    records: tuple[SummaryRecord, ...]
    name: str = ""

    def __post_init__(self):
        seen: set[str] = set()
        for rec in self.records:
            if rec.id in seen:
                raise InputError(f"duplicate summary id {rec.id!r} in corpus {self.name!r}")
            seen.add(rec.id)

    def __len__(self) -> int:
        return len(self.records)

    def ids(self) -> frozenset[str]:
        return frozenset(rec.id for rec in self.records)


def _record_from_object(obj: dict, config: TokenizerConfig) -> SummaryRecord:
    for field_name in REQUIRED_FIELDS:
        if field_name not in obj:
            raise ValueError(f"missing required field {field_name!r}")
        if not isinstance(obj[field_name], str):
            raise ValueError(f"field {field_name!r} must be a string")
    for field_name in OPTIONAL_FIELDS:
        value = obj.get(field_name)
        if value is not None and not isinstance(value, str):
            raise ValueError(f"field {field_name!r} must be a string or omitted")
    return SummaryRecord(
        id=obj["id"],
        summary=tokenize(obj["summary"], config),
        architecture=obj["architecture"],
        test_dataset=obj["test_dataset"],
        train_dataset=obj.get("train_dataset"),
        input=tokenize(obj["input"], config) if obj.get("input") is not None else None,
    )


def load_corpus(
    path: str | Path,
    config: TokenizerConfig | None = None,
    *,
    name: str | None = None,
    allowed_architectures: Iterable[str] | None = None,
    allowed_datasets: Iterable[str] | None = None,
) -> Corpus:
    """Load a JSON-Lines corpus file, one summary record per line.

    Each line is an object with required fields "id", "summary",
    "architecture", "test_dataset" and optional "input", "train_dataset".
    Blank lines are skipped. Errors report the file and line number.
    The optional whitelists reject unknown categorical labels.
    """
    if config is None:
        config = TokenizerConfig()
    path = Path(path)
    arch_whitelist = set(allowed_architectures) if allowed_architectures is not None else None
    ds_whitelist = set(allowed_datasets) if allowed_datasets is not None else None
    records: list[SummaryRecord] = []
    seen_ids: dict[str, int] = {}
    try:
        fh = path.open("r", encoding="utf-8")
    except OSError as exc:
        raise CorpusLoadError(f"{path}: cannot open: {exc.strerror or exc}") from exc
    with fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusLoadError(f"{path}:{lineno}: invalid JSON: {exc.msg}") from exc
            if not isinstance(obj, dict):
                raise CorpusLoadError(f"{path}:{lineno}: expected a JSON object")
            try:
                record = _record_from_object(obj, config)
            except ValueError as exc:
                raise CorpusLoadError(f"{path}:{lineno}: {exc}") from exc
            if record.id in seen_ids:
                raise CorpusLoadError(
                    f"{path}:{lineno}: duplicate id {record.id!r} "
                    f"(first seen on line {seen_ids[record.id]})"
                )
            seen_ids[record.id] = lineno
            if arch_whitelist is not None and record.architecture not in arch_whitelist:
                raise CorpusLoadError(
                    f"{path}:{lineno}: unknown architecture label {record.architecture!r}"
                )
            if ds_whitelist is not None:
                for label in (record.train_dataset, record.test_dataset):
                    if label is not None and label not in ds_whitelist:
                        raise CorpusLoadError(
                            f"{path}:{lineno}: unknown dataset label {label!r}"
                        )
            records.append(record)
    return Corpus(records=tuple(records), name=name if name is not None else path.stem)


def record_to_object(record: SummaryRecord) -> dict:
    """Serialize a record back to its JSON-Lines object form."""
    obj: dict = {"id": record.id, "summary": record.summary.text}
    if record.input is not None:
        obj["input"] = record.input.text
    obj["architecture"] = record.architecture
    if record.train_dataset is not None:
        obj["train_dataset"] = record.train_dataset
    obj["test_dataset"] = record.test_dataset
    return obj


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write a corpus as JSON-Lines; reloading under the same tokenizer
    configuration reproduces the records exactly."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for record in corpus.records:
            fh.write(json.dumps(record_to_object(record), ensure_ascii=False))
            fh.write("\n")
