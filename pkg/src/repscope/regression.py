"""OLS regression of repetition scores on generation metadata.

The design matrix one-hot encodes architecture, train dataset, and test
dataset against reference categories, z-scores summary length, and
optionally crosses non-reference train and test datasets as interaction
indicators. Fitting uses a pivoted QR decomposition; inference uses the
t distribution; nested models are compared with a likelihood ratio test
in the Gaussian form n * ln(rss_nested / rss_full).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import scipy.linalg

from .corpus import SummaryRecord
from .errors import DegenerateDesignError, RankDeficiencyError
from .special import chi2_sf, t_critical, t_two_sided_p

INTERCEPT = "Intercept"
LENGTH = "Summary length (z)"


@dataclass(frozen=True)
class RegressionSpec:
    """Reference categories and inference settings for the fit.

    Records without a train dataset (human references) get an all-zero
    train indicator group and no interactions; with human_train_from_test
    they are instead treated as trained on their test dataset.
    """

    reference_architecture: str = "Human"
    reference_train: str = "CNN/DailyMail"
    reference_test: str = "CNN/DailyMail"
    include_interactions: bool = True
    confidence_level: float = 0.95
    lr_critical_value: float = 0.001
    human_train_from_test: bool = False

    def __post_init__(self):
        if not 0.0 < self.confidence_level < 1.0:
            raise ValueError(f"confidence_level must be in (0, 1), got {self.confidence_level}")
        if not 0.0 < self.lr_critical_value < 1.0:
            raise ValueError(f"lr_critical_value must be in (0, 1), got {self.lr_critical_value}")


@dataclass(frozen=True)
class DesignMatrix:
    matrix: np.ndarray
    column_names: tuple[str, ...]
    response: np.ndarray

    @property
    def n_rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_cols(self) -> int:
        return self.matrix.shape[1]


@dataclass(frozen=True)
class RegressionFit:
    column_names: tuple[str, ...]
    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_statistics: np.ndarray
    p_values: np.ndarray
    ci_lower: np.ndarray
    ci_upper: np.ndarray
    rss: float
    n_rows: int
    n_params: int
    confidence_level: float

    @property
    def degrees_of_freedom(self) -> int:
        return self.n_rows - self.n_params


@dataclass(frozen=True)
class LrTestResult:
    statistic: float
    df: int
    p_value: float
    reject: bool
    critical_value: float = field(default=0.001)


def _effective_train(record: SummaryRecord, spec: RegressionSpec) -> str | None:
    if record.train_dataset is not None:
        return record.train_dataset
    return record.test_dataset if spec.human_train_from_test else None


def build_design_matrix(
    records: Sequence[SummaryRecord],
    scores: Sequence[float],
    spec: RegressionSpec | None = None,
) -> DesignMatrix:
    """Assemble the regression design from scored records.

    Columns, in order: intercept, z-scored summary length, non-reference
    architecture indicators, non-reference train indicators, non-reference
    test indicators, and (when enabled) one indicator per non-reference
    train x test pair, named "TRAIN - TEST". Label groups are sorted so the
    layout is deterministic. Warns about constant columns, which will fail
    rank checks downstream.
    """
    if spec is None:
        spec = RegressionSpec()
    if len(records) != len(scores):
        raise ValueError(f"{len(records)} records but {len(scores)} scores")
    if not records:
        raise DegenerateDesignError("no records to regress on")

    arch_labels = sorted({r.architecture for r in records})
    train_labels = sorted(
        {t for r in records if (t := _effective_train(r, spec)) is not None}
    )
    test_labels = sorted({r.test_dataset for r in records})
    if spec.reference_architecture not in arch_labels:
        raise DegenerateDesignError(
            f"reference architecture {spec.reference_architecture!r} not present "
            f"in the data (labels: {arch_labels})"
        )
    if train_labels and spec.reference_train not in train_labels:
        raise DegenerateDesignError(
            f"reference train dataset {spec.reference_train!r} not present "
            f"in the data (labels: {train_labels})"
        )
    if spec.reference_test not in test_labels:
        raise DegenerateDesignError(
            f"reference test dataset {spec.reference_test!r} not present "
            f"in the data (labels: {test_labels})"
        )

    arch_cols = [a for a in arch_labels if a != spec.reference_architecture]
    train_cols = [t for t in train_labels if t != spec.reference_train]
    test_cols = [t for t in test_labels if t != spec.reference_test]
    inter_cols = (
        [(tr, te) for tr in train_cols for te in test_cols]
        if spec.include_interactions
        else []
    )

    names: list[str] = [INTERCEPT, LENGTH]
    names.extend(arch_cols)
    names.extend(f"Train {t}" for t in train_cols)
    names.extend(f"Test {t}" for t in test_cols)
    names.extend(f"{tr} - {te}" for tr, te in inter_cols)
    col_of = {name: j for j, name in enumerate(names)}

    n = len(records)
    matrix = np.zeros((n, len(names)))
    matrix[:, 0] = 1.0
    lengths = np.array([r.length_tokens for r in records], dtype=float)
    sd = float(lengths.std())
    if sd == 0.0:
        raise DegenerateDesignError("summary lengths are constant; z-score is undefined")
    matrix[:, 1] = (lengths - lengths.mean()) / sd

    for i, record in enumerate(records):
        if record.architecture != spec.reference_architecture:
            matrix[i, col_of[record.architecture]] = 1.0
        train = _effective_train(record, spec)
        train_active = train is not None and train != spec.reference_train
        test_active = record.test_dataset != spec.reference_test
        if train_active:
            matrix[i, col_of[f"Train {train}"]] = 1.0
        if test_active:
            matrix[i, col_of[f"Test {record.test_dataset}"]] = 1.0
        if spec.include_interactions and train_active and test_active:
            matrix[i, col_of[f"{train} - {record.test_dataset}"]] = 1.0

    constant = [names[j] for j in range(2, len(names)) if np.ptp(matrix[:, j]) == 0.0]
    if constant:
        warnings.warn(
            "constant design column(s): " + ", ".join(repr(c) for c in constant),
            RuntimeWarning,
            stacklevel=2,
        )

    response = np.asarray(scores, dtype=float)
    return DesignMatrix(matrix=matrix, column_names=tuple(names), response=response)


def ols_fit(design: DesignMatrix, *, confidence_level: float = 0.95) -> RegressionFit:
    """Least squares fit with t-based inference.

    Solves via pivoted QR, which tolerates the collinear indicator blocks
    better than explicit normal equations; rank deficiency is an error that
    names the dependent columns rather than a silent pseudo-inverse.
    """
    X = design.matrix
    y = design.response
    n, p = X.shape
    if n <= p:
        raise DegenerateDesignError(
            f"need more rows than parameters, got {n} rows for {p} parameters"
        )

    q, r, pivot = scipy.linalg.qr(X, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    tol = (diag[0] if diag.size else 0.0) * max(n, p) * np.finfo(float).eps
    rank = int(np.count_nonzero(diag > tol))
    if rank < p:
        raise RankDeficiencyError(sorted(design.column_names[j] for j in pivot[rank:]))

    coef_pivoted = scipy.linalg.solve_triangular(r, q.T @ y)
    coef = np.empty(p)
    coef[pivot] = coef_pivoted
    residuals = y - X @ coef
    rss = float(residuals @ residuals)
    dof = n - p
    sigma2 = rss / dof

    r_inv = scipy.linalg.solve_triangular(r, np.eye(p))
    cov_diag_pivoted = np.sum(r_inv * r_inv, axis=1) * sigma2
    se = np.empty(p)
    se[pivot] = np.sqrt(cov_diag_pivoted)

    with np.errstate(divide="ignore", invalid="ignore"):
        t_stats = coef / se
    t_stats = np.where(np.isnan(t_stats), 0.0, t_stats)  # 0/0 on a perfect fit
    p_values = np.array([t_two_sided_p(t, dof) for t in t_stats])
    crit = t_critical(confidence_level, dof)
    return RegressionFit(
        column_names=design.column_names,
        coefficients=coef,
        standard_errors=se,
        t_statistics=t_stats,
        p_values=p_values,
        ci_lower=coef - crit * se,
        ci_upper=coef + crit * se,
        rss=rss,
        n_rows=n,
        n_params=p,
        confidence_level=confidence_level,
    )


def likelihood_ratio_test(
    full: RegressionFit, nested: RegressionFit, *, critical_value: float = 0.001
) -> LrTestResult:
    """Compare nested OLS fits on the same rows and response.

    The statistic n * ln(rss_nested / rss_full) is twice the difference of
    the maximized Gaussian log-likelihoods; it is referred to chi-square
    with one degree of freedom per dropped column.
    """
    if full.n_rows != nested.n_rows:
        raise ValueError(
            f"row counts differ: full has {full.n_rows}, nested has {nested.n_rows}"
        )
    full_cols = set(full.column_names)
    nested_cols = set(nested.column_names)
    if not nested_cols < full_cols:
        raise ValueError(
            "models are not strictly nested: the nested model's columns must be "
            "a strict subset of the full model's"
        )
    df = full.n_params - nested.n_params
    if full.rss == 0.0:
        statistic = math.inf if nested.rss > 0.0 else 0.0
    else:
        statistic = max(0.0, full.n_rows * math.log(nested.rss / full.rss))
    p_value = chi2_sf(statistic, df) if not math.isinf(statistic) else 0.0
    return LrTestResult(
        statistic=statistic,
        df=df,
        p_value=p_value,
        reject=p_value < critical_value,
        critical_value=critical_value,
    )
