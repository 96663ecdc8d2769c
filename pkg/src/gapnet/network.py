"""Weighted co-occurrence networks and their sentence-by-sentence growth."""
from __future__ import annotations

import csv
import warnings
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .text import TokenizedDocument

Edge = tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    if u == v:
        raise ValueError(f"self-loop on {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SemanticNetwork:
    """Undirected weighted graph on concept names.

    ``weights`` maps canonical (sorted) node pairs to positive weights.
    """

    nodes: tuple[str, ...]
    weights: Mapping[Edge, float] = field(default_factory=dict)

    def __post_init__(self):
        nodes = tuple(self.nodes)
        if len(set(nodes)) != len(nodes):
            raise ValueError("duplicate node names")
        known = set(nodes)
        clean = {}
        for (u, v), w in self.weights.items():
            if u not in known or v not in known:
                raise ValueError(f"edge ({u!r}, {v!r}) references unknown node")
            if w <= 0:
                raise ValueError(f"non-positive weight on ({u!r}, {v!r})")
            clean[edge_key(u, v)] = w
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", clean)

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return len(self.weights)

    @property
    def edges(self) -> list[Edge]:
        return sorted(self.weights)

    def density(self) -> float:
        n = self.n_nodes
        return 0.0 if n < 2 else self.n_edges / (n * (n - 1) / 2)

    def adjacency(self) -> np.ndarray:
        """Symmetric weight matrix in ``self.nodes`` order."""
        pos = {v: i for i, v in enumerate(self.nodes)}
        W = np.zeros((self.n_nodes, self.n_nodes))
        for (u, v), w in self.weights.items():
            W[pos[u], pos[v]] = W[pos[v], pos[u]] = w
        return W

    @classmethod
    def from_adjacency(cls, W, nodes: Iterable[str] | None = None) -> "SemanticNetwork":
        W = np.asarray(W, dtype=float)
        nodes = tuple(nodes) if nodes is not None else tuple(str(i) for i in range(len(W)))
        iu, ju = np.nonzero(np.triu(W, 1))
        return cls(nodes, {(nodes[i], nodes[j]): W[i, j] for i, j in zip(iu, ju)})

    def degrees(self) -> dict[str, int]:
        deg = dict.fromkeys(self.nodes, 0)
        for u, v in self.weights:
            deg[u] += 1
            deg[v] += 1
        return deg

    def strengths(self) -> dict[str, float]:
        s = dict.fromkeys(self.nodes, 0.0)
        for (u, v), w in self.weights.items():
            s[u] += w
            s[v] += w
        return s

    def subgraph(self, nodes: Iterable[str]) -> "SemanticNetwork":
        keep = set(nodes)
        return SemanticNetwork(
            tuple(v for v in self.nodes if v in keep),
            {e: w for e, w in self.weights.items() if e[0] in keep and e[1] in keep},
        )

    def binarized(self) -> "SemanticNetwork":
        return SemanticNetwork(self.nodes, dict.fromkeys(self.weights, 1))


@dataclass(frozen=True)
class ExpositionalFiltration:
    """Total network plus the sentence (1..N) that introduced each node and edge."""

    total: SemanticNetwork
    node_birth: Mapping[str, int]
    edge_birth: Mapping[Edge, int]
    n_sentences: int

    @property
    def length(self) -> int:
        return self.n_sentences

    def sentence_additions(self) -> list[tuple[list[str], list[Edge]]]:
        """Nodes and edges first introduced by each sentence, in sorted order."""
        adds: list[tuple[list[str], list[Edge]]] = [([], []) for _ in range(self.n_sentences)]
        for v in sorted(self.node_birth):
            adds[self.node_birth[v] - 1][0].append(v)
        for e in sorted(self.edge_birth):
            adds[self.edge_birth[e] - 1][1].append(e)
        return adds


@dataclass(frozen=True)
class UnitStepFiltration:
    """Filtration adding exactly one node or one edge per step.

    ``steps`` holds ``("node", name)`` or ``("edge", (u, v))`` entries;
    step ``i`` (0-based) has filtration value ``i + 1``.
    """

    steps: tuple

    def __post_init__(self):
        seen: set[str] = set()
        for kind, item in self.steps:
            if kind == "node":
                seen.add(item)
            elif kind == "edge":
                if item[0] not in seen or item[1] not in seen:
                    raise ValueError(f"edge {item} added before its endpoints")
            else:
                raise ValueError(f"unknown step kind {kind!r}")
        object.__setattr__(self, "steps", tuple(self.steps))

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def node_birth(self) -> dict[str, int]:
        return {item: i for i, (kind, item) in enumerate(self.steps, 1) if kind == "node"}

    @property
    def edge_birth(self) -> dict[Edge, int]:
        return {edge_key(*item): i for i, (kind, item) in enumerate(self.steps, 1)
                if kind == "edge"}

    def final_graph(self) -> SemanticNetwork:
        return SemanticNetwork(
            tuple(item for kind, item in self.steps if kind == "node"),
            dict.fromkeys(self.edge_birth, 1),
        )


def build_filtration(doc: TokenizedDocument, index) -> ExpositionalFiltration:
    """Sentence-level co-occurrence network of the index phrases.

    ``index`` is an :class:`~gapnet.concepts.IndexList` or an iterable of
    phrase strings. Edge weights count sentences containing both phrases;
    births record the first such sentence.
    """
    phrases = getattr(index, "phrases", index)
    token_phrases = {tuple(p.split()): p for p in phrases}
    if not token_phrases:
        raise ValueError("index list is empty")
    by_first: dict[str, list[tuple[str, ...]]] = {}
    for p in token_phrases:
        by_first.setdefault(p[0], []).append(p)

    node_birth: dict[str, int] = {}
    edge_birth: dict[Edge, int] = {}
    weights: dict[Edge, int] = {}
    for k, sent in enumerate(doc.sentences, start=1):
        present = set()
        for i, tok in enumerate(sent):
            for p in by_first.get(tok, ()):
                if sent[i:i + len(p)] == p:
                    present.add(token_phrases[p])
        for v in present:
            node_birth.setdefault(v, k)
        for u, v in combinations(sorted(present), 2):
            weights[(u, v)] = weights.get((u, v), 0) + 1
            edge_birth.setdefault((u, v), k)

    missing = sorted(set(token_phrases.values()) - set(node_birth))
    if missing:
        warnings.warn(f"{len(missing)} index phrases never matched: {missing[:5]}",
                      stacklevel=2)
    nodes = tuple(sorted(node_birth, key=lambda v: (node_birth[v], v)))
    return ExpositionalFiltration(
        SemanticNetwork(nodes, weights), node_birth, edge_birth, doc.n_sentences
    )


def snapshot(filt, k: int) -> SemanticNetwork:
    """Binary graph of everything born at or before step ``k``."""
    if not 1 <= k <= filt.length:
        raise ValueError(f"k={k} outside 1..{filt.length}")
    nodes = tuple(v for v, b in sorted(filt.node_birth.items(), key=lambda x: (x[1], x[0]))
                  if b <= k)
    return SemanticNetwork(nodes, {e: 1 for e, b in filt.edge_birth.items() if b <= k})


def oaat_unfurl(filt: ExpositionalFiltration, seed=None) -> UnitStepFiltration:
    """Unfurl a sentence filtration into single node/edge additions.

    Within each sentence the new nodes come first in random order, then the
    new edges in random order.
    """
    rng = np.random.default_rng(seed)
    steps = []
    for nodes, edges in filt.sentence_additions():
        steps.extend(("node", nodes[i]) for i in rng.permutation(len(nodes)))
        steps.extend(("edge", edges[i]) for i in rng.permutation(len(edges)))
    return UnitStepFiltration(tuple(steps))


def write_filtration_csv(filt, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["kind", "u", "v", "birth"])
        for v, b in sorted(filt.node_birth.items(), key=lambda x: (x[1], x[0])):
            writer.writerow(["node", v, "", b])
        for (u, v), b in sorted(filt.edge_birth.items(), key=lambda x: (x[1], x[0])):
            writer.writerow(["edge", u, v, b])


def read_filtration_csv(path, total: SemanticNetwork | None = None,
                        n_sentences: int | None = None) -> ExpositionalFiltration:
    node_birth, edge_birth = {}, {}
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            if row["kind"] == "node":
                node_birth[row["u"]] = int(row["birth"])
            else:
                edge_birth[edge_key(row["u"], row["v"])] = int(row["birth"])
    if total is None:
        nodes = tuple(sorted(node_birth, key=lambda v: (node_birth[v], v)))
        total = SemanticNetwork(nodes, dict.fromkeys(edge_birth, 1))
    n = n_sentences or max([*node_birth.values(), *edge_birth.values(), 1])
    return ExpositionalFiltration(total, node_birth, edge_birth, n)


def write_network_csv(net: SemanticNetwork, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["u", "v", "weight"])
        for (u, v) in net.edges:
            writer.writerow([u, v, net.weights[(u, v)]])


def read_network_csv(path, nodes: Iterable[str] | None = None) -> SemanticNetwork:
    weights = {}
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            w = float(row["weight"])
            weights[edge_key(row["u"], row["v"])] = int(w) if w.is_integer() else w
    if nodes is None:
        nodes = sorted({v for e in weights for v in e})
    return SemanticNetwork(tuple(nodes), weights)
