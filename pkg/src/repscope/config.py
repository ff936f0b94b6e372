"""Serializable analysis configuration shared by all CLI commands.

A config fully determines an analysis: feeding the same config and the
same input files to any command reproduces its reports byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path

from .corpus import TokenizerConfig
from .errors import InputError
from .metrics import SCORE_MODES
from .regression import RegressionSpec

OUTPUT_FORMATS = ("csv", "json", "markdown")


@dataclass(frozen=True)
class AnalysisConfig:
    tokenizer: TokenizerConfig = TokenizerConfig()
    min_n: int = 4
    eq1_mode: str = "all_ngrams"
    abstractiveness_ns: tuple[int, ...] = (1, 2, 3, 4)
    regression: RegressionSpec = RegressionSpec()
    output_dir: str = "reports"
    output_formats: tuple[str, ...] = OUTPUT_FORMATS

    def __post_init__(self):
        if self.min_n < 1:
            raise ValueError(f"min_n must be >= 1, got {self.min_n}")
        if self.eq1_mode not in SCORE_MODES:
            raise ValueError(f"eq1_mode must be one of {SCORE_MODES}, got {self.eq1_mode!r}")
        if not self.abstractiveness_ns or any(n < 1 for n in self.abstractiveness_ns):
            raise ValueError("abstractiveness_ns must be a non-empty list of integers >= 1")
        unknown = [f for f in self.output_formats if f not in OUTPUT_FORMATS]
        if unknown:
            raise ValueError(f"unknown output format(s): {unknown}; choose from {OUTPUT_FORMATS}")
        if not self.output_formats:
            raise ValueError("output_formats must not be empty")

    def to_dict(self) -> dict:
        return {
            "tokenizer": {
                "case_fold": self.tokenizer.case_fold,
                "punctuation_mode": self.tokenizer.punctuation_mode,
            },
            "min_n": self.min_n,
            "eq1_mode": self.eq1_mode,
            "abstractiveness_ns": list(self.abstractiveness_ns),
            "regression": {
                "reference_architecture": self.regression.reference_architecture,
                "reference_train": self.regression.reference_train,
                "reference_test": self.regression.reference_test,
                "include_interactions": self.regression.include_interactions,
                "confidence_level": self.regression.confidence_level,
                "lr_critical_value": self.regression.lr_critical_value,
                "human_train_from_test": self.regression.human_train_from_test,
            },
            "output_dir": self.output_dir,
            "output_formats": sorted(self.output_formats),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisConfig":
        if not isinstance(data, dict):
            raise ValueError("config must be a JSON object")
        defaults = cls()
        tok = data.get("tokenizer", {})
        reg = data.get("regression", {})
        try:
            return cls(
                tokenizer=TokenizerConfig(
                    case_fold=tok.get("case_fold", defaults.tokenizer.case_fold),
                    punctuation_mode=tok.get(
                        "punctuation_mode", defaults.tokenizer.punctuation_mode
                    ),
                ),
                min_n=data.get("min_n", defaults.min_n),
                eq1_mode=data.get("eq1_mode", defaults.eq1_mode),
                abstractiveness_ns=tuple(
                    data.get("abstractiveness_ns", defaults.abstractiveness_ns)
                ),
                regression=RegressionSpec(
                    reference_architecture=reg.get(
                        "reference_architecture", defaults.regression.reference_architecture
                    ),
                    reference_train=reg.get("reference_train", defaults.regression.reference_train),
                    reference_test=reg.get("reference_test", defaults.regression.reference_test),
                    include_interactions=reg.get(
                        "include_interactions", defaults.regression.include_interactions
                    ),
                    confidence_level=reg.get(
                        "confidence_level", defaults.regression.confidence_level
                    ),
                    lr_critical_value=reg.get(
                        "lr_critical_value", defaults.regression.lr_critical_value
                    ),
                    human_train_from_test=reg.get(
                        "human_train_from_test", defaults.regression.human_train_from_test
                    ),
                ),
                output_dir=data.get("output_dir", defaults.output_dir),
                output_formats=tuple(data.get("output_formats", defaults.output_formats)),
            )
        except (TypeError, ValueError) as exc:
            raise ValueError(f"invalid config: {exc}") from exc

    def with_overrides(self, **kwargs) -> "AnalysisConfig":
        """Copy with top-level fields replaced; None values are ignored."""
        updates = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **updates) if updates else self


def load_config(path: str | Path) -> AnalysisConfig:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: cannot open config: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON in config: {exc.msg}") from exc
    try:
        return AnalysisConfig.from_dict(data)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc
