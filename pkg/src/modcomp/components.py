"""Modularity components: construction, projection, embedding, deflation and the assumption audit.

Component indices are 1-based throughout (component 1 has the largest
modularity), matching ``X_1 = X`` in the deflation sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dpr1 import Y_TOL, Dpr1Spectrum, solve_dpr1
from .errors import (
    AllZeroMatrix,
    ComponentCountTooLarge,
    ConvergenceFailure,
    DegenerateGraph,
    DimensionMismatch,
    IndexOutOfRange,
    RankTooSmall,
    SeparationViolated,
)
from .linalg import DEFAULT_RANK_TOL, SvdFactors, as_data_matrix, thin_svd
from .modularity import ModularityStats, degree_weights, dpr1_problem, eigenpairs_from_spectrum, modularity_score, stats

DEFAULT_SEP_TOL = 1e-8

VIOLATION_KINDS = (
    "beta_equals_alpha_i",
    "beta_equals_alpha_next",
    "alpha_tie",
    "y_component_zero",
    "degenerate_graph",
    "solver_failure",
)


@dataclass(frozen=True)
class Violation:
    i: int
    kind: str
    gap: float


@dataclass(frozen=True)
class AssumptionReport:
    """Outcome of checking that the leading modularity eigenvalues strictly interlace the Gram spectrum.

    `alpha` holds all ``k`` nonzero Gram eigenvalues and `beta` the ``k - 1``
    largest modularity eigenvalues, or is empty when they could not be computed.
    """

    k: int
    positive_alpha_count: int
    beta_count: int
    violations: tuple[Violation, ...]
    alpha: np.ndarray
    beta: np.ndarray
    advisories: tuple[str, ...] = ()
    two_m: float | None = None

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def degenerate(self) -> bool:
        return any(v.kind == "degenerate_graph" for v in self.violations)


@dataclass(frozen=True)
class ComponentRecord:
    index: int
    beta: float
    b: np.ndarray
    gamma: np.ndarray
    m: np.ndarray
    c: np.ndarray
    modularity: float


@dataclass(frozen=True)
class McaModel:
    components: tuple[ComponentRecord, ...]
    stats: ModularityStats
    factors: SvdFactors
    report: AssumptionReport
    row_scale: np.ndarray | None = field(default=None)

    @property
    def rank(self) -> int:
        return self.factors.rank

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def beta(self) -> np.ndarray:
        return np.array([rec.beta for rec in self.components])

    @property
    def C(self) -> np.ndarray:
        """Components as columns, shape (p, r)."""
        p = self.factors.U.shape[0]
        if not self.components:
            return np.empty((p, 0))
        return np.column_stack([rec.c for rec in self.components])

    def prepare(self, X) -> np.ndarray:
        """Validate `X` against the fitted shape and apply the fitted row scaling."""
        X = as_data_matrix(X)
        p = self.factors.U.shape[0]
        if X.shape[0] != p:
            raise DimensionMismatch(f"model was fitted on {p} attributes, X has {X.shape[0]}")
        if self.row_scale is not None:
            X = X * self.row_scale[:, None]
        return X


def row_scale_factors(X) -> np.ndarray:
    """Factors that give every nonzero row of `X` unit 2-norm; zero rows keep factor 1."""
    norms = np.linalg.norm(as_data_matrix(X), axis=1)
    return np.where(norms > 0, 1.0 / np.where(norms > 0, norms, 1.0), 1.0)


def _audit(X, rank_tol, sep_tol):
    """Shared work of `check_assumptions` and `fit`.

    Returns (report, factors, stats, w, spectrum); trailing items are None when
    the audit could not get that far.
    """
    violations = []
    advisories = []
    try:
        factors = thin_svd(X, rank_tol)
    except AllZeroMatrix:
        report = AssumptionReport(
            k=0, positive_alpha_count=0, beta_count=0,
            violations=(Violation(0, "degenerate_graph", 0.0),),
            alpha=np.empty(0), beta=np.empty(0),
            advisories=("data matrix is identically zero",), two_m=0.0,
        )
        return report, None, None, None, None

    alpha = factors.alpha
    k = factors.rank
    scale = alpha[0]
    for j in np.flatnonzero(alpha[:-1] - alpha[1:] <= sep_tol * scale):
        violations.append(Violation(int(j) + 1, "alpha_tie", float(alpha[j] - alpha[j + 1])))

    try:
        st = stats(X)
    except DegenerateGraph as exc:
        violations.append(Violation(0, "degenerate_graph", 0.0))
        advisories.append(str(exc))
        report = AssumptionReport(k, k, 0, tuple(violations), alpha, np.empty(0), tuple(advisories), two_m=0.0)
        return report, factors, None, None, None

    beta = np.empty(0)
    w = spectrum = None
    if k < 2:
        advisories.append(f"rank {k} < 2: no modularity components exist")
    else:
        w = degree_weights(factors)
        y = w / np.linalg.norm(w)
        for j in np.flatnonzero(np.abs(y) <= Y_TOL):
            violations.append(Violation(int(j) + 1, "y_component_zero", float(abs(y[j]))))
        try:
            problem, w = dpr1_problem(factors, st)
            spectrum = solve_dpr1(problem)
        except (SeparationViolated, ConvergenceFailure) as exc:
            spectrum = None
            if not violations:
                violations.append(Violation(0, "solver_failure", 0.0))
            advisories.append(f"modularity eigenvalues not computed: {exc}")
        else:
            beta = spectrum.beta
            rows = np.arange(k - 1)
            # gaps[i, j] = alpha_j - beta_i, accurate even when beta_i hugs a pole.
            above = spectrum.gaps[rows, rows]
            below = -spectrum.gaps[rows, rows + 1]
            for i in rows:
                if above[i] <= sep_tol * scale:
                    violations.append(Violation(int(i) + 1, "beta_equals_alpha_i", float(above[i])))
                if below[i] <= sep_tol * scale:
                    violations.append(Violation(int(i) + 1, "beta_equals_alpha_next", float(below[i])))

    report = AssumptionReport(
        k=k, positive_alpha_count=int(np.count_nonzero(alpha > 0)), beta_count=int(beta.shape[0]),
        violations=tuple(violations), alpha=alpha, beta=beta, advisories=tuple(advisories), two_m=st.two_m,
    )
    return report, factors, st, w, spectrum


def check_assumptions(X, rank_tol: float = DEFAULT_RANK_TOL, sep_tol: float = DEFAULT_SEP_TOL) -> AssumptionReport:
    """Audit whether modularity components are well defined for `X`.

    Counts the positive Gram eigenvalues ``alpha_j = sigma_j**2``, computes the
    ``k - 1`` largest modularity eigenvalues and records every place where the
    interlacing ``alpha_{i+1} < beta_i < alpha_i`` is not strict at relative
    tolerance `sep_tol` (relative to ``alpha_1``). Never raises on
    assumption failures; a report is always produced.
    """
    return _audit(as_data_matrix(X), rank_tol, sep_tol)[0]


def fit(
    X,
    num_components: int | None = None,
    rank_tol: float = DEFAULT_RANK_TOL,
    sep_tol: float = DEFAULT_SEP_TOL,
    normalize_rows: bool = False,
) -> McaModel:
    """Fit modularity components to the uncentered data matrix `X` (p x n, columns are points).

    Parameters
    ----------
    X : array_like, shape (p, n)
    num_components : int, optional
        Number of components ``r <= k - 1``; defaults to ``k - 1``.
    rank_tol : float
        Relative singular value cutoff for the numerical rank ``k``.
    sep_tol : float
        Relative separation demanded by the assumption audit. Fitting refuses
        to proceed when the audit fails.
    normalize_rows : bool
        Scale each attribute (row) to unit 2-norm first.

    Returns
    -------
    McaModel
    """
    X = as_data_matrix(X)
    row_scale = row_scale_factors(X) if normalize_rows else None
    if row_scale is not None:
        X = X * row_scale[:, None]
    report, factors, st, w, spectrum = _audit(X, rank_tol, sep_tol)
    if report.degenerate:
        raise DegenerateGraph("; ".join(report.advisories) or "degenerate data")
    if report.k < 2:
        raise RankTooSmall(f"data rank is {report.k}; at least 2 is needed for a modularity component")
    r = report.k - 1 if num_components is None else int(num_components)
    if r < 0 or r > report.k - 1:
        raise ComponentCountTooLarge(f"requested {r} components but rank {report.k} allows at most {report.k - 1}")
    if not report.passed:
        first = report.violations[0]
        raise SeparationViolated(
            f"{len(report.violations)} assumption violation(s), first: {first.kind} at i={first.i} (gap {first.gap:.3g})"
        )

    top = Dpr1Spectrum(spectrum.beta[:r], spectrum.vectors[:r], spectrum.gaps[:r])
    pairs = eigenpairs_from_spectrum(factors, st, w, top)
    records = []
    for i in range(r):
        m = factors.U @ (pairs.gamma[i] / factors.sigma)
        records.append(
            ComponentRecord(
                index=i + 1,
                beta=float(pairs.beta[i]),
                b=pairs.b[i],
                gamma=pairs.gamma[i],
                m=m,
                c=m / np.linalg.norm(m),
                modularity=modularity_score(X, st, pairs.b[i]),
            )
        )
    return McaModel(tuple(records), st, factors, report, row_scale)


def _component(model: McaModel, i: int) -> ComponentRecord:
    if not 1 <= i <= model.num_components:
        raise IndexOutOfRange(f"component index {i} outside 1..{model.num_components}")
    return model.components[i - 1]


def project_onto_component(model: McaModel, X, i: int) -> np.ndarray:
    """``c_i c_i^T X``; for the fitted data this equals ``sqrt(beta_i) c_i b_i^T``."""
    c = _component(model, i).c
    X = model.prepare(X)
    return np.outer(c, c @ X)


def embed(model: McaModel, X, r: int | None = None) -> np.ndarray:
    """Scores ``C_r^T X`` (r x n). Row i equals ``sqrt(beta_i) b_i^T`` on the fitted data."""
    r = model.num_components if r is None else int(r)
    if not 0 <= r <= model.num_components:
        raise IndexOutOfRange(f"cannot embed with {r} components; model has {model.num_components}")
    X = model.prepare(X)
    return model.C[:, :r].T @ X


def deflate(X, model: McaModel, i: int) -> np.ndarray:
    """``X_i = (I - sum_{j<i} c_j c_j^T) X``, valid for ``1 <= i <= r + 1``."""
    if not 1 <= i <= model.num_components + 1:
        raise IndexOutOfRange(f"deflation index {i} outside 1..{model.num_components + 1}")
    X = model.prepare(X)
    C = model.C[:, : i - 1]
    return X - C @ (C.T @ X)
