"""Repetition scores, abstractiveness percentages, and length statistics.

The per-summary score is ln(1 + sum of containing-summary counts over the
summary's repeating n-grams); the dataset score is the fraction of
summaries holding at least one repeating n-gram. Both are pure functions
of a corpus and its repetition index.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import NamedTuple

from .corpus import Corpus, SummaryRecord
from .errors import EmptyCorpusError, MissingPairedInputError
from .ngrams import NGram, RepetitionIndex, extract_ngrams

SCORE_MODES = ("all_ngrams", "maximal_only")


@dataclass(frozen=True)
class SummaryRepetitionScore:
    """Repetition of one summary: m distinct repeating n-grams whose
    containing-summary counts sum to raw_sum; score = ln(raw_sum + 1)."""

    summary_id: str
    m: int
    raw_sum: int
    score: float


@dataclass(frozen=True)
class DatasetRepetitionScore:
    dataset: str
    repeating_summaries: int
    total_summaries: int
    score: float


@dataclass(frozen=True)
class AbstractivenessRow:
    """Percent of summary n-gram instances absent from the paired input."""

    dataset: str
    n: int
    percent_novel: float


class LengthStats(NamedTuple):
    mean: float
    median: float
    minimum: int
    maximum: int


def _repeating_types(tokens: tuple[str, ...], index: RepetitionIndex) -> list[NGram]:
    """Distinct repeating n-gram types occurring in ``tokens``, all lengths.

    Walks lengths upward; a repeating (n+1)-gram can only start where two
    adjacent repeating n-grams start, so the walk stops as soon as a level
    comes up empty.
    """
    entries = index.entries
    found: list[NGram] = []
    positions: list[int] | None = None
    n = index.min_n
    while n <= index.max_observed_n:
        limit = len(tokens) - n + 1
        scan = range(limit) if positions is None else positions
        good = [p for p in scan if tokens[p : p + n] in entries]
        if not good:
            break
        found.extend({tokens[p : p + n] for p in good})
        good_set = set(good)
        positions = [p for p in good if p + 1 in good_set]
        if not positions:
            break
        n += 1
    return found


def _drop_nested(types: list[NGram]) -> list[NGram]:
    type_set = set(types)
    covered: set[NGram] = set()
    for gram in type_set:
        covered.add(gram[:-1])
        covered.add(gram[1:])
    return [gram for gram in type_set if gram not in covered]


def summary_repetition_score(
    record: SummaryRecord, index: RepetitionIndex, *, mode: str = "all_ngrams"
) -> SummaryRepetitionScore:
    """Score one summary against the index it was built into.

    mode "all_ngrams" counts every distinct repeating n-gram type including
    nested ones (a repeated 5-gram also contributes its two 4-grams);
    "maximal_only" keeps only types not contained in a longer repeating
    type of the same summary.
    """
    if mode not in SCORE_MODES:
        raise ValueError(f"mode must be one of {SCORE_MODES}, got {mode!r}")
    if record.id not in index.summary_ids:
        raise ValueError(f"summary {record.id!r} was not part of the indexed corpus")
    types = _repeating_types(record.summary.tokens, index)
    if mode == "maximal_only":
        types = _drop_nested(types)
    raw_sum = sum(len(index.entries[gram]) for gram in types)
    return SummaryRepetitionScore(
        summary_id=record.id, m=len(types), raw_sum=raw_sum, score=math.log1p(raw_sum)
    )


def dataset_repetition_score(corpus: Corpus, index: RepetitionIndex) -> DatasetRepetitionScore:
    """Fraction of summaries containing at least one repeating n-gram."""
    if not corpus.records:
        raise EmptyCorpusError(f"corpus {corpus.name!r} has no records to score")
    if index.summary_ids != corpus.ids():
        raise ValueError("index was not built over this corpus")
    repeating: set[str] = set()
    for ids in index.entries.values():
        repeating.update(ids)
    total = len(corpus.records)
    return DatasetRepetitionScore(
        dataset=corpus.name,
        repeating_summaries=len(repeating),
        total_summaries=total,
        score=len(repeating) / total,
    )


def abstractiveness(
    corpus: Corpus, n: int, *, per_summary_average: bool = False
) -> AbstractivenessRow:
    """Percent of summary n-gram instances that never occur in the paired
    input document.

    Instances are counted with multiplicity and aggregated over the corpus;
    summaries shorter than n contribute nothing. With per_summary_average,
    each summary's novel fraction is averaged instead (equal weight per
    summary regardless of length).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not corpus.records:
        raise EmptyCorpusError(f"corpus {corpus.name!r} has no records")
    missing = [rec.id for rec in corpus.records if rec.input is None]
    if missing:
        raise MissingPairedInputError(missing)

    novel_instances = 0
    total_instances = 0
    fractions: list[float] = []
    for rec in corpus.records:
        assert rec.input is not None
        input_grams = set(extract_ngrams(rec.input, n))
        windows = extract_ngrams(rec.summary, n)
        if not windows:
            continue
        novel = sum(1 for gram in windows if gram not in input_grams)
        novel_instances += novel
        total_instances += len(windows)
        fractions.append(novel / len(windows))

    if per_summary_average:
        percent = 100.0 * statistics.fmean(fractions) if fractions else 0.0
    else:
        percent = 100.0 * novel_instances / total_instances if total_instances else 0.0
    return AbstractivenessRow(dataset=corpus.name, n=n, percent_novel=percent)


def length_statistics(corpus: Corpus) -> LengthStats:
    """Mean, median, min, max of summary token counts."""
    if not corpus.records:
        raise EmptyCorpusError(f"corpus {corpus.name!r} has no records")
    lengths = [rec.length_tokens for rec in corpus.records]
    return LengthStats(
        mean=statistics.fmean(lengths),
        median=float(statistics.median(lengths)),
        minimum=min(lengths),
        maximum=max(lengths),
    )
