"""Deterministic rendering of analysis results to CSV, Markdown, and JSON.

Numbers in CSV and JSON keep full precision (shortest round-trip repr);
Markdown tables round for reading. No timestamps or environment state go
into any report, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from typing import Iterable, Sequence

from .metrics import (
    AbstractivenessRow,
    DatasetRepetitionScore,
    LengthStats,
    SummaryRepetitionScore,
)
from .ngrams import RepeatRow
from .regression import LrTestResult, RegressionFit

_NGRAM_SIZE_NAMES = {1: "Unigram", 2: "Bigram", 3: "Trigram"}


def format_freq(count: int, total: int) -> str:
    return f"{count}/{total}"


def ngram_size_label(n: int) -> str:
    return _NGRAM_SIZE_NAMES.get(n, f"{n}-gram")


def number(x: float) -> str:
    return repr(float(x))


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def markdown_table(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    lines = [
        "| " + " | ".join(str(h) for h in header) + " |",
        "|" + "|".join(" --- " for _ in header) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(str(cell) for cell in row) + " |")
    return "\n".join(lines) + "\n"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def sha256_file(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


# dataset repetition scores


def dataset_scores_csv(scores: Sequence[DatasetRepetitionScore]) -> str:
    return csv_text(
        ("dataset", "repeating_summaries", "total_summaries", "score"),
        [(s.dataset, s.repeating_summaries, s.total_summaries, number(s.score)) for s in scores],
    )


def dataset_scores_markdown(scores: Sequence[DatasetRepetitionScore]) -> str:
    return markdown_table(
        ("Dataset", "Repeating", "Total", "Score"),
        [
            (s.dataset, s.repeating_summaries, s.total_summaries, f"{s.score:.2f}")
            for s in scores
        ],
    )


def dataset_scores_json(scores: Sequence[DatasetRepetitionScore]) -> str:
    return canonical_json(
        [
            {
                "dataset": s.dataset,
                "repeating_summaries": s.repeating_summaries,
                "total_summaries": s.total_summaries,
                "score": s.score,
            }
            for s in scores
        ]
    )


# per-summary scores


def summary_scores_csv(scores: Sequence[SummaryRepetitionScore]) -> str:
    return csv_text(
        ("id", "m", "raw_sum", "score"),
        [(s.summary_id, s.m, s.raw_sum, number(s.score)) for s in scores],
    )


# repeating n-gram reports


def repeats_csv(rows: Sequence[RepeatRow], examples: dict[tuple, tuple[str, str]]) -> str:
    out = []
    for row in rows:
        example_id, example_text = examples.get(row.ngram, ("", ""))
        out.append(
            (
                " ".join(row.ngram),
                len(row.ngram),
                row.count,
                row.corpus_size,
                format_freq(row.count, row.corpus_size),
                example_id,
                example_text,
            )
        )
    return csv_text(("ngram", "n", "count", "total", "freq", "example_id", "example"), out)


def repeats_markdown(rows: Sequence[RepeatRow], examples: dict[tuple, tuple[str, str]]) -> str:
    body = []
    for row in rows:
        _, example_text = examples.get(row.ngram, ("", ""))
        body.append(
            (
                " ".join(row.ngram),
                format_freq(row.count, row.corpus_size),
                example_text.replace("|", "\\|"),
            )
        )
    return markdown_table(("Repeating n-gram", "Freq", "Example"), body)


# abstractiveness


def abstractiveness_csv(rows: Sequence[AbstractivenessRow]) -> str:
    return csv_text(
        ("dataset", "n", "percent_novel"),
        [(r.dataset, r.n, number(r.percent_novel)) for r in rows],
    )


def abstractiveness_markdown(rows: Sequence[AbstractivenessRow]) -> str:
    by_dataset: dict[str, dict[int, float]] = {}
    ns: list[int] = []
    for row in rows:
        by_dataset.setdefault(row.dataset, {})[row.n] = row.percent_novel
        if row.n not in ns:
            ns.append(row.n)
    header = ["Dataset"] + [ngram_size_label(n) for n in ns]
    body = []
    for dataset, values in by_dataset.items():
        body.append(
            [dataset] + [f"{values[n]:.2f}" if n in values else "" for n in ns]
        )
    return markdown_table(header, body)


def abstractiveness_json(rows: Sequence[AbstractivenessRow]) -> str:
    return canonical_json(
        [{"dataset": r.dataset, "n": r.n, "percent_novel": r.percent_novel} for r in rows]
    )


# summary lengths


def lengths_csv(rows: Sequence[tuple[str, LengthStats]]) -> str:
    return csv_text(
        ("dataset", "mean_length", "median_length", "min_length", "max_length"),
        [
            (name, number(s.mean), number(s.median), s.minimum, s.maximum)
            for name, s in rows
        ],
    )


def lengths_markdown(rows: Sequence[tuple[str, LengthStats]]) -> str:
    return markdown_table(
        ("Dataset", "Mean", "Median", "Min", "Max"),
        [(name, f"{s.mean:.2f}", f"{s.median:.1f}", s.minimum, s.maximum) for name, s in rows],
    )


# regression


def fit_csv(fit: RegressionFit) -> str:
    return csv_text(
        ("predictor", "coef", "p_value", "ci_low", "ci_high"),
        [
            (
                name,
                number(fit.coefficients[j]),
                number(fit.p_values[j]),
                number(fit.ci_lower[j]),
                number(fit.ci_upper[j]),
            )
            for j, name in enumerate(fit.column_names)
        ],
    )


def fit_markdown(fit: RegressionFit) -> str:
    lo = (1.0 - fit.confidence_level) / 2.0
    hi = 1.0 - lo
    header = ("", "Coef", "P>|t|", f"[{lo:.3f}", f"{hi:.3f}]")
    body = [
        (
            name,
            f"{fit.coefficients[j]:.4f}",
            f"{fit.p_values[j]:.3f}",
            f"{fit.ci_lower[j]:.3f}",
            f"{fit.ci_upper[j]:.3f}",
        )
        for j, name in enumerate(fit.column_names)
    ]
    return markdown_table(header, body)


def lr_test_json(result: LrTestResult) -> str:
    return canonical_json(
        {
            "statistic": result.statistic,
            "df": result.df,
            "p_value": result.p_value,
            "reject": result.reject,
        }
    )
