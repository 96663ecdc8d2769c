"""Development curves of network groups and the summary statistics used on them."""
from __future__ import annotations

import csv
import math
import warnings
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .mesoscale import CommunityPartition, CorePartition


class DegenerateStatisticError(ValueError):
    """Raised when a statistic is undefined, e.g. for constant input."""


@dataclass(frozen=True)
class DevelopmentCurve:
    """Fraction of a group introduced by normalized time ``t``.

    With ``step=True`` the curve holds ``c[k]`` on ``[t[k], t[k+1])`` and the
    last value until ``t = 1``; otherwise it interpolates linearly between
    the samples.
    """

    t: np.ndarray
    c: np.ndarray
    group: str = ""
    step: bool = True

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        c = np.asarray(self.c, dtype=float)
        if t.shape != c.shape or t.ndim != 1 or len(t) == 0:
            raise ValueError("t and c must be equal-length 1-d arrays")
        if np.any(np.diff(t) <= 0) or t[0] < 0 or t[-1] > 1:
            raise ValueError("t must increase strictly within [0, 1]")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "c", c)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.step:
            k = np.searchsorted(self.t, x, side="right") - 1
            return np.where(k >= 0, self.c[np.clip(k, 0, None)], 0.0)
        return np.interp(x, self.t, self.c)

    def integral(self) -> float:
        """Exact integral over ``[0, 1]`` (zero before the first sample)."""
        edges = np.append(self.t, 1.0)
        widths = np.diff(edges)
        if self.step:
            return float(np.dot(self.c, widths))
        inner = float(np.dot((self.c[:-1] + self.c[1:]) / 2, widths[:-1]))
        return inner + float(self.c[-1] * widths[-1])


def cumulative_curve(births: Sequence[int], n_steps: int, group: str = "") -> DevelopmentCurve:
    """Cumulative fraction of ``births`` at ``t = k / n_steps`` for ``k = 0..n_steps``."""
    births = np.asarray(births, dtype=int)
    if len(births) == 0:
        raise ValueError("group is empty")
    counts = np.bincount(np.clip(births, 0, n_steps), minlength=n_steps + 1)
    c = np.cumsum(counts) / len(births)
    return DevelopmentCurve(np.arange(n_steps + 1) / n_steps, c, group)


def introduction_curves(filt, partition: CorePartition) -> dict[str, DevelopmentCurve]:
    """Core and periphery node introduction curves; empty groups are omitted."""
    out = {}
    for label, group in (("core", partition.core), ("periphery", partition.periphery)):
        births = [filt.node_birth[v] for v in group if v in filt.node_birth]
        if births:
            out[label] = cumulative_curve(births, filt.length, label)
        else:
            warnings.warn(f"{label} group is empty; curve omitted", stacklevel=2)
    return out


def edge_group(u: str, v: str, partition: CorePartition,
               communities: CommunityPartition) -> str:
    cu, cv = u in partition.core, v in partition.core
    if cu and cv:
        return "intra-core"
    if cu or cv:
        return "core-periphery"
    a, b = communities.assignment.get(u, -1), communities.assignment.get(v, -1)
    if a == b and a >= 0:
        return f"intra-community:{a}"
    return "inter-periphery"


def edge_group_curves(filt, partition: CorePartition,
                      communities: CommunityPartition) -> dict[str, DevelopmentCurve]:
    """Edge introduction curve for every non-empty edge group."""
    births: dict[str, list[int]] = {}
    for (u, v), b in filt.edge_birth.items():
        births.setdefault(edge_group(u, v, partition, communities), []).append(b)
    return {g: cumulative_curve(bs, filt.length, g) for g, bs in sorted(births.items())}


def curve_area_diff(a: DevelopmentCurve, b: DevelopmentCurve) -> float:
    """Integral of ``a(t) - b(t)`` over ``[0, 1]``; positive when ``a`` leads."""
    return a.integral() - b.integral()


def ks_to_diagonal(curve: DevelopmentCurve) -> float:
    """Largest ``|c(t) - t|`` on ``(0, 1)``, including one-sided limits at jumps."""
    t, c = curve.t, curve.c
    right = np.append(t[1:], 1.0)
    if curve.step:
        cands = [np.abs(c - t), np.abs(c - right)]
        if t[0] > 0:
            cands.append(np.array([t[0]]))  # zero before the first sample
    else:
        cands = [np.abs(c - t), np.abs(c[-1] - right[-1:])]
        if t[0] > 0:
            cands.append(np.array([t[0]]))
    return float(max(np.max(x) for x in cands))


@dataclass(frozen=True)
class StatResult:
    statistic: float
    pvalue: float
    n: int

    def to_dict(self) -> dict:
        return {"statistic": self.statistic, "pvalue": self.pvalue, "n": self.n}


def _pair(x, y, min_n: int) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be equal-length 1-d sequences")
    if len(x) < min_n:
        raise ValueError(f"need at least {min_n} observations")
    return x, y


def _correlation_p(r: float, n: int) -> float:
    if abs(r) >= 1.0:
        return 0.0
    t = r * math.sqrt((n - 2) / (1.0 - r * r))
    return float(min(1.0, 2 * stats.t.sf(abs(t), n - 2)))


def pearson(x, y) -> StatResult:
    x, y = _pair(x, y, 3)
    dx, dy = x - x.mean(), y - y.mean()
    sxx, syy = np.dot(dx, dx), np.dot(dy, dy)
    if sxx == 0 or syy == 0:
        raise DegenerateStatisticError("correlation undefined for constant input")
    r = float(np.clip(np.dot(dx, dy) / math.sqrt(sxx * syy), -1.0, 1.0))
    return StatResult(r, _correlation_p(r, len(x)), len(x))


def spearman(x, y) -> StatResult:
    """Pearson correlation of average ranks; p from the t approximation."""
    x, y = _pair(x, y, 3)
    return pearson(stats.rankdata(x), stats.rankdata(y))


def t_test_one_sample(x, mu0: float = 0.0) -> StatResult:
    """Two-sided one-sample t-test with ``n - 1`` degrees of freedom."""
    x = np.asarray(x, dtype=float)
    n = len(x)
    if n < 2:
        raise ValueError("need at least 2 observations")
    sd = x.std(ddof=1)
    if sd == 0:
        raise DegenerateStatisticError("t statistic undefined for zero variance")
    t = (x.mean() - mu0) / (sd / math.sqrt(n))
    return StatResult(float(t), float(min(1.0, 2 * stats.t.sf(abs(t), n - 1))), n)


def correlation_matrix(features: Mapping[str, Sequence[float]], method: str = "spearman"):
    """Pairwise correlations; returns ``(names, rho, p)`` with NaN where undefined."""
    fn = {"spearman": spearman, "pearson": pearson}[method]
    names = list(features)
    k = len(names)
    rho = np.full((k, k), np.nan)
    p = np.full((k, k), np.nan)
    for i in range(k):
        for j in range(k):
            try:
                res = fn(features[names[i]], features[names[j]])
            except DegenerateStatisticError:
                continue
            rho[i, j], p[i, j] = res.statistic, res.pvalue
    return names, rho, p


def write_curves_csv(curves: Mapping[str, DevelopmentCurve], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t", "value", "group"])
        for name, cur in curves.items():
            for t, c in zip(cur.t, cur.c):
                writer.writerow([repr(float(t)), repr(float(c)), name])


def write_correlation_csv(names, rho, p, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["feature_a", "feature_b", "rho", "p"])
        for i, a in enumerate(names):
            for j, b in enumerate(names):
                writer.writerow([a, b, repr(float(rho[i, j])), repr(float(p[i, j]))])
