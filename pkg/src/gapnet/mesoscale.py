"""Core-periphery and community structure of weighted networks.

Core-ness of a bipartition (core ``C_c``, periphery ``C_p``)::

    Q_C = (1 / v_C) * ( sum_{i != j in C_c} (w_ij - gamma * wbar)
                      - sum_{i != j in C_p} (w_ij - gamma * wbar) )

with ``wbar`` the mean weight over all node pairs (non-edges count as 0) and
``v_C = sum_{i != j} |w_ij - gamma * wbar|``. Modularity uses ``v_M = 2m``,
the total weight summed over ordered pairs.
"""
from __future__ import annotations

import csv
import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import numpy as np

from .network import SemanticNetwork


@dataclass(frozen=True)
class CorePartition:
    core: frozenset
    periphery: frozenset
    q_core: float
    gamma_c: float = 1.0
    norm_vc: float = 1.0
    degenerate: bool = False
    seed: int | None = None


@dataclass(frozen=True)
class CommunityPartition:
    assignment: Mapping[str, int] = field(default_factory=dict)
    q_mod: float = 0.0
    gamma_m: float = 1.0
    norm_vm: float = 0.0
    seed: int | None = None

    @property
    def n_communities(self) -> int:
        return len(set(self.assignment.values()))

    def communities(self) -> list[list[str]]:
        groups: dict[int, list[str]] = {}
        for v, c in self.assignment.items():
            groups.setdefault(c, []).append(v)
        return [sorted(groups[c]) for c in sorted(groups)]


def _matrix(net) -> tuple[np.ndarray, tuple]:
    if isinstance(net, SemanticNetwork):
        return net.adjacency(), net.nodes
    W = np.asarray(net, dtype=float)
    return W, tuple(range(len(W)))


def _core_mask(nodes, core) -> np.ndarray:
    core = np.asarray(list(core)) if not isinstance(core, (set, frozenset)) else core
    if isinstance(core, np.ndarray) and core.dtype == bool:
        if len(core) != len(nodes):
            raise ValueError("mask length does not match node count")
        return core.copy()
    members = set(core.tolist() if isinstance(core, np.ndarray) else core)
    unknown = members - set(nodes)
    if unknown:
        raise ValueError(f"unknown core nodes: {sorted(map(str, unknown))[:5]}")
    return np.array([v in members for v in nodes], dtype=bool)


def coreness_terms(W: np.ndarray, gamma: float = 1.0) -> np.ndarray:
    """``w_ij - gamma * wbar`` with the diagonal zeroed."""
    n = len(W)
    if n < 2:
        return np.zeros((n, n))
    off = ~np.eye(n, dtype=bool)
    wbar = W[off].mean()
    B = W - gamma * wbar
    B[~off] = 0.0
    return B


def eval_coreness(net, core, gamma: float = 1.0) -> float:
    """Core-ness ``Q_C`` of the partition whose core is ``core``.

    ``core`` may be a boolean mask or a collection of node names.
    """
    W, nodes = _matrix(net)
    if len(W) == 0:
        raise ValueError("empty graph")
    mask = _core_mask(nodes, core)
    B = coreness_terms(W, gamma)
    norm = np.abs(B).sum()
    if norm == 0:
        return 0.0
    bracket = B[np.ix_(mask, mask)].sum() - B[np.ix_(~mask, ~mask)].sum()
    return float(bracket / norm)


def optimize_coreness(net, gamma_c: float = 1.0, seed=None, restarts: int = 10) -> CorePartition:
    """Maximize core-ness by greedy single-node label swaps from random starts.

    Flipping node ``i`` into the core changes the bracket by twice its row
    sum of ``w_ij - gamma * wbar`` regardless of the other labels, so every
    sweep that stops improving sits on the global optimum; restarts only
    guard the tie-breaking. Zero-gain nodes are left in the periphery, which
    makes an edgeless graph all-periphery.
    """
    W, nodes = _matrix(net)
    n = len(W)
    if n == 0:
        raise ValueError("empty graph")
    B = coreness_terms(W, gamma_c)
    norm = float(np.abs(B).sum())
    rng = np.random.default_rng(seed)
    best_mask, best_val = None, -np.inf
    for _ in range(max(1, restarts)):
        mask = rng.random(n) < 0.5
        improved = True
        while improved:
            improved = False
            for i in rng.permutation(n):
                # gain of moving i to the core, computed from the current labels
                r = B[i].sum()
                want_core = r > 0
                if mask[i] != want_core:
                    mask[i] = want_core
                    improved = True
        val = B[np.ix_(mask, mask)].sum() - B[np.ix_(~mask, ~mask)].sum()
        if val > best_val + 1e-12:
            best_mask, best_val = mask.copy(), val
    core = frozenset(v for v, m in zip(nodes, best_mask) if m)
    periphery = frozenset(v for v, m in zip(nodes, best_mask) if not m)
    q = 0.0 if norm == 0 else float(best_val / norm)
    return CorePartition(core, periphery, q, gamma_c, norm,
                         degenerate=not core or not periphery,
                         seed=None if seed is None else int(seed))


def modularity(net, labels, gamma: float = 1.0) -> float:
    """Modularity ``Q_M``; ``labels`` is a sequence aligned with the nodes or a mapping."""
    W, nodes = _matrix(net)
    if isinstance(labels, Mapping):
        labels = [labels[v] for v in nodes]
    labels = np.asarray(labels)
    s = W.sum(axis=1)
    two_m = s.sum()
    if two_m == 0:
        return 0.0
    same = labels[:, None] == labels[None, :]
    return float(((W - gamma * np.outer(s, s) / two_m) * same).sum() / two_m)


def _local_moves(W, gamma, two_m, rng) -> tuple[np.ndarray, bool]:
    n = len(W)
    comm = np.arange(n)
    k = W.sum(axis=1)
    tot = k.copy()
    moved_any = False
    improved = True
    while improved:
        improved = False
        for i in rng.permutation(n):
            ci = comm[i]
            tot[ci] -= k[i]
            links = np.bincount(comm, weights=W[i], minlength=n)
            links[ci] -= W[i, i]
            gain = links - gamma * tot * k[i] / two_m
            stay = gain[ci]
            best = int(np.argmax(gain))
            if gain[best] > stay + 1e-12:
                comm[i] = best
                improved = moved_any = True
            tot[comm[i]] += k[i]
    _, comm = np.unique(comm, return_inverse=True)
    return comm, moved_any


def louvain_labels(W: np.ndarray, gamma: float = 1.0, seed=None) -> np.ndarray:
    """Louvain local moving and aggregation until no move improves ``Q_M``."""
    W = np.asarray(W, dtype=float)
    n = len(W)
    rng = np.random.default_rng(seed)
    labels = np.arange(n)
    two_m = W.sum()
    if n == 0 or two_m == 0:
        return labels
    Wc = W
    while True:
        comm, moved = _local_moves(Wc, gamma, two_m, rng)
        if not moved:
            break
        labels = comm[labels]
        P = np.zeros((len(Wc), comm.max() + 1))
        P[np.arange(len(Wc)), comm] = 1.0
        Wc = P.T @ Wc @ P
    return _first_appearance(labels)


def _first_appearance(labels: np.ndarray) -> np.ndarray:
    remap: dict[int, int] = {}
    return np.array([remap.setdefault(int(c), len(remap)) for c in labels], dtype=int)


def louvain_communities(subnet, gamma_m: float = 1.0, seed=None) -> CommunityPartition:
    """Communities of ``subnet`` (usually the periphery-induced subgraph)."""
    W, nodes = _matrix(subnet)
    labels = louvain_labels(W, gamma_m, seed)
    return CommunityPartition(
        {v: int(c) for v, c in zip(nodes, labels)},
        modularity(W, labels, gamma_m), gamma_m, float(W.sum()),
        seed=None if seed is None else int(seed),
    )


def write_partition_csv(core: CorePartition, communities: CommunityPartition | None,
                        nodes: Iterable[str], path) -> None:
    assign = communities.assignment if communities else {}
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["node", "role", "community_id"])
        for v in nodes:
            role = "core" if v in core.core else "periphery"
            writer.writerow([v, role, assign.get(v, -1)])


def partition_record(core: CorePartition, communities: CommunityPartition | None) -> dict:
    return {
        "q_core": core.q_core,
        "q_mod": communities.q_mod if communities else None,
        "gamma_c": core.gamma_c,
        "gamma_m": communities.gamma_m if communities else None,
        "core_seed": core.seed,
        "community_seed": communities.seed if communities else None,
        "degenerate_core": core.degenerate,
    }


def write_partition_json(core: CorePartition, communities: CommunityPartition | None, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(partition_record(core, communities), fh, indent=2, sort_keys=True)
