"""Null-model ensembles for semantic networks and their filtrations."""
from __future__ import annotations

import json
import math
import warnings
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .network import (
    ExpositionalFiltration,
    SemanticNetwork,
    UnitStepFiltration,
    build_filtration,
)
from .text import PLACEHOLDERS, StopList, TokenizedDocument

MODEL_KINDS = ("random_index", "random_sentence", "cont_config", "random_edge", "node_ordered")

# scipy distribution name -> keyword arguments held fixed during fitting
FAMILIES = {
    "pareto": {},
    "lognorm": {"floc": 0},
    "levy": {"floc": 0},
    "burr": {"floc": 0},
    "fisk": {"floc": 0},
    "loggamma": {},
    "loglaplace": {"floc": 0},
    "powerlaw": None,  # continuous power law above the smallest observation
}


def member_seeds(master_seed: int, size: int) -> list[int]:
    """Distinct 63-bit member seeds derived from ``master_seed``."""
    if size < 1:
        raise ValueError("ensemble size must be at least 1")
    children = np.random.SeedSequence(master_seed).spawn(size)
    seeds = [int(c.generate_state(1, np.uint64)[0] >> np.uint64(1)) for c in children]
    if len(set(seeds)) != size:
        raise RuntimeError("member seed collision")
    return seeds


@dataclass
class NullEnsemble:
    kind: str
    master_seed: int
    members: list = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def seeds(self) -> list[int]:
        return [s for s, _ in self.members]

    def artifacts(self) -> list:
        return [a for _, a in self.members]

    def manifest(self, paths: Sequence[str] | None = None) -> dict:
        return {"model": self.kind, "master_seed": self.master_seed,
                "member_seeds": self.seeds,
                "artifact_paths": list(paths) if paths is not None else []}


def make_ensemble(kind: str, builder: Callable[[int], object], size: int = 100,
                  master_seed: int = 0) -> NullEnsemble:
    """Call ``builder(seed)`` once per derived member seed."""
    if kind not in MODEL_KINDS:
        raise ValueError(f"unknown null model {kind!r}")
    return NullEnsemble(kind, master_seed,
                        [(s, builder(s)) for s in member_seeds(master_seed, size)])


# -- data-level nulls ---------------------------------------------------------

def random_index_words(doc: TokenizedDocument, stoplist: StopList, size: int, seed=None) -> list[str]:
    pool = sorted({t for t in doc.tokens() if t not in stoplist and t not in PLACEHOLDERS})
    if size > len(pool):
        raise ValueError(f"cannot draw {size} words from a pool of {len(pool)}")
    rng = np.random.default_rng(seed)
    return sorted(pool[i] for i in rng.choice(len(pool), size=size, replace=False))


def random_index(doc: TokenizedDocument, stoplist: StopList, size: int, seed=None) -> ExpositionalFiltration:
    """Filtration on ``size`` random non-stop words used as pseudo-concepts."""
    return build_filtration(doc, random_index_words(doc, stoplist, size, seed))


def random_sentence_order(doc: TokenizedDocument, index, seed=None,
                          order: Sequence[int] | None = None) -> ExpositionalFiltration:
    """Filtration of the index phrases over a shuffled sentence order."""
    if order is None:
        order = np.random.default_rng(seed).permutation(doc.n_sentences)
    return build_filtration(doc.permuted(order), index)


# -- continuous configuration model --------------------------------------------

@dataclass(frozen=True)
class WeightFit:
    family: str
    params: tuple
    ks_stat: float
    ks_pvalue: float
    degenerate: bool = False
    candidates: dict = field(default_factory=dict, compare=False)

    def distribution(self):
        if self.degenerate:
            return None
        if self.family == "powerlaw":
            alpha, xmin = self.params
            return stats.pareto(alpha - 1.0, scale=xmin)
        return getattr(stats, self.family)(*self.params)

    def sample(self, size: int, rng: np.random.Generator) -> np.ndarray:
        if self.degenerate:
            return np.full(size, self.params[0])
        return self.distribution().rvs(size=size, random_state=rng)

    def to_dict(self) -> dict:
        return {"family": self.family, "params": [float(p) for p in self.params],
                "D": self.ks_stat, "p": self.ks_pvalue, "degenerate": self.degenerate}

    @classmethod
    def from_dict(cls, d: dict) -> "WeightFit":
        return cls(d["family"], tuple(d["params"]), d["D"], d["p"], d.get("degenerate", False))


def normalized_weights(net: SemanticNetwork) -> np.ndarray:
    """``w_uv * d_uv / s_uv`` for every edge, in ``net.edges`` order."""
    deg, strength = net.degrees(), net.strengths()
    d_total = sum(deg.values())
    s_total = sum(strength.values())
    out = []
    for u, v in net.edges:
        d_uv = deg[u] * deg[v] / d_total
        s_uv = strength[u] * strength[v] / s_total
        out.append(net.weights[(u, v)] * d_uv / s_uv)
    return np.asarray(out, dtype=float)


def fit_powerlaw(x: np.ndarray) -> tuple[float, float]:
    """MLE exponent of ``p(x) ~ x^-alpha`` for ``x >= min(x)``."""
    xmin = float(np.min(x))
    logs = np.log(x / xmin).sum()
    if logs <= 0:
        raise ValueError("power law needs spread above xmin")
    return 1.0 + len(x) / logs, xmin


def fit_samples(x, families=None) -> WeightFit:
    """Fit every candidate family by maximum likelihood and keep the smallest K-S D."""
    x = np.asarray(x, dtype=float)
    if len(x) == 0:
        raise ValueError("no samples to fit")
    if np.any(x <= 0):
        raise ValueError("normalized weights must be positive")
    if np.ptp(x) <= 1e-12 * abs(x.mean()):
        return WeightFit("point_mass", (float(x[0]),), 0.0, 1.0, degenerate=True)
    results = {}
    for name in (families or FAMILIES):
        try:
            with warnings.catch_warnings(), np.errstate(all="ignore"):
                warnings.simplefilter("ignore")
                if name == "powerlaw":
                    params = fit_powerlaw(x)
                    cdf = stats.pareto(params[0] - 1.0, scale=params[1]).cdf
                else:
                    dist = getattr(stats, name)
                    params = dist.fit(x, **FAMILIES[name])
                    cdf = dist(*params).cdf
                ks = stats.kstest(x, cdf, method="asymp")
        except (ValueError, RuntimeError, FloatingPointError):
            continue
        if np.isfinite(ks.statistic):
            results[name] = (tuple(float(p) for p in params), float(ks.statistic),
                             float(ks.pvalue))
    if not results:
        raise RuntimeError("no distribution family could be fitted")
    best = min(results, key=lambda k: (results[k][1], k))
    params, d, p = results[best]
    return WeightFit(best, params, d, p, candidates={k: v[1] for k, v in results.items()})


def fit_weights(net: SemanticNetwork, families=None) -> WeightFit:
    if net.n_edges == 0:
        raise ValueError("network has no edges")
    return fit_samples(normalized_weights(net), families)


def _degree_strength(net: SemanticNetwork) -> tuple[np.ndarray, np.ndarray]:
    deg, strength = net.degrees(), net.strengths()
    return (np.array([deg[v] for v in net.nodes], dtype=float),
            np.array([strength[v] for v in net.nodes], dtype=float))


def edge_probabilities(net: SemanticNetwork) -> np.ndarray:
    """Matrix of ``min(1, d_u d_v / d_T)`` in node order, zero diagonal."""
    d, _ = _degree_strength(net)
    if d.sum() == 0:
        return np.zeros((len(d), len(d)))
    p = np.minimum(np.outer(d, d) / d.sum(), 1.0)
    np.fill_diagonal(p, 0.0)
    return p


def cont_config(net: SemanticNetwork, fit: WeightFit, seed=None) -> SemanticNetwork:
    """One draw of the continuous configuration model.

    Each node pair gets an edge with probability ``min(1, d_u d_v / d_T)`` and
    weight ``(s_uv / d_uv) * xi`` with ``xi`` drawn from ``fit``.
    """
    rng = np.random.default_rng(seed)
    d, s = _degree_strength(net)
    if d.sum() == 0:
        return SemanticNetwork(net.nodes, {})
    iu, ju = np.triu_indices(len(d), 1)
    d_uv = d[iu] * d[ju] / d.sum()
    s_uv = s[iu] * s[ju] / s.sum()
    present = rng.random(len(iu)) < np.minimum(d_uv, 1.0)
    xi = fit.sample(int(present.sum()), rng)
    w = s_uv[present] / d_uv[present] * xi
    nodes = net.nodes
    weights = {(nodes[i], nodes[j]): float(wij)
               for i, j, wij in zip(iu[present], ju[present], w) if wij > 0}
    return SemanticNetwork(nodes, weights)


# -- filtration-level nulls ----------------------------------------------------

def random_edge(filt, seed=None, order: Sequence[int] | None = None) -> UnitStepFiltration:
    """Total-network edges in uniform random order.

    Each node enters right before the first edge that uses it; nodes without
    edges are appended at the end in random order. ``order`` fixes the
    permutation of the sorted edge list instead of drawing one.
    """
    rng = np.random.default_rng(seed)
    edges = sorted(filt.edge_birth)
    if order is None:
        order = rng.permutation(len(edges))
    elif sorted(order) != list(range(len(edges))):
        raise ValueError("order must be a permutation of edge indices")
    added: set[str] = set()
    steps = []
    for k in order:
        u, v = edges[k]
        for x in (u, v):
            if x not in added:
                added.add(x)
                steps.append(("node", x))
        steps.append(("edge", (u, v)))
    isolated = sorted(set(filt.node_birth) - added)
    steps.extend(("node", isolated[i]) for i in rng.permutation(len(isolated)))
    return UnitStepFiltration(tuple(steps))


def node_ordered(filt, seed=None) -> UnitStepFiltration:
    """Nodes in order of introduction, each followed by all its edges to earlier nodes.

    Nodes introduced together are shuffled; each node's edges are shuffled.
    """
    rng = np.random.default_rng(seed)
    names = sorted(filt.node_birth)
    tiebreak = rng.permutation(len(names))
    order = sorted(range(len(names)), key=lambda i: (filt.node_birth[names[i]], tiebreak[i]))
    nbrs: dict[str, list[str]] = {v: [] for v in names}
    for u, v in filt.edge_birth:
        nbrs[u].append(v)
        nbrs[v].append(u)
    added: set[str] = set()
    steps = []
    for i in order:
        v = names[i]
        steps.append(("node", v))
        back = sorted(u for u in nbrs[v] if u in added)
        steps.extend(("edge", (back[j], v)) for j in rng.permutation(len(back)))
        added.add(v)
    return UnitStepFiltration(tuple(steps))


def write_ensemble_manifest(ensemble: NullEnsemble, paths, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(ensemble.manifest(paths), fh, indent=2)


def write_fit_json(fit: WeightFit, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(fit.to_dict(), fh, indent=2, sort_keys=True)


def percentile_of(value: float, null_values) -> float:
    """Percentage of null values at or below ``value`` (NaN for an empty ensemble)."""
    vals = [v for v in null_values if v is not None and not math.isnan(v)]
    if not vals:
        return math.nan
    return 100.0 * sum(1 for v in vals if v <= value) / len(vals)
