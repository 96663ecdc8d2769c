"""Persistent homology of growing graphs through their flag (clique) complexes.

Simplices are totally ordered by ``(value, dimension, vertex key)``, where a
simplex's value is the latest birth among its edges (or its own birth for a
vertex). Homology is computed over the two-element field:

* dimension 0 by union-find with the elder rule;
* dimensions 1 and 2 by column reduction of the boundary matrices, with each
  column stored as a Python integer bitmask (bit ``i`` set when face ``i`` is
  present, faces numbered in filtration order) so a column addition is a
  single XOR and the pivot is ``bit_length() - 1``.

Rows of simplices already known to be negative are dropped from the next
boundary matrix ("compression"); this does not change the pivots.
"""
from __future__ import annotations

import csv
import math
from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

INF = math.inf
MAX_SIMPLICES = 20_000_000


class ResourceLimitError(RuntimeError):
    """Raised when a flag complex exceeds the configured simplex budget."""


@dataclass(frozen=True)
class FlagFiltration:
    """Ordered simplices of a clique complex with their filtration values.

    ``simplices[d]`` lists the ``d``-simplices as sorted vertex-index tuples,
    already in filtration order; ``values[d]`` holds their values.
    """

    vertex_names: tuple
    simplices: tuple[tuple[tuple[int, ...], ...], ...]
    values: tuple[tuple[float, ...], ...]
    length: int

    @property
    def max_dim(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> list[int]:
        return [len(s) for s in self.simplices]

    def stream(self) -> list[tuple[tuple[int, ...], float]]:
        """All simplices in the global total order."""
        items = [(self.values[d][i], d, s, i)
                 for d in range(len(self.simplices))
                 for i, s in enumerate(self.simplices[d])]
        items.sort(key=lambda x: (x[0], x[1], x[2]))
        return [(s, v) for v, _, s, _ in items]

    def names(self, simplex) -> tuple:
        return tuple(self.vertex_names[i] for i in simplex)


def flag_filtration(node_birth: Mapping, edge_birth: Mapping, length: int,
                    max_dim: int = 3, max_simplices: int = MAX_SIMPLICES
                    ) -> FlagFiltration:
    """Clique complex of a graph filtration, up to ``max_dim``-simplices."""
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1")
    names = sorted(node_birth, key=lambda v: (node_birth[v], v))
    index = {v: i for i, v in enumerate(names)}
    vbirth = [node_birth[v] for v in names]

    edge_val: dict[tuple[int, int], float] = {}
    for (a, b), t in edge_birth.items():
        i, j = sorted((index[a], index[b]))
        edge_val[(i, j)] = max(t, vbirth[i], vbirth[j])

    fwd: list[set[int]] = [set() for _ in names]
    for i, j in edge_val:
        fwd[i].add(j)

    levels: list[list[tuple[float, tuple[int, ...]]]] = [
        [(vbirth[i], (i,)) for i in range(len(names))],
        [(t, e) for e, t in edge_val.items()],
    ]
    budget = max_simplices - len(names) - len(edge_val)
    prev = levels[1]
    for _ in range(2, max_dim + 1):
        cur = []
        for t, simplex in prev:
            common = set.intersection(*(fwd[i] for i in simplex))
            for w in common:
                tw = t
                for i in simplex:
                    e = edge_val[(i, w)]
                    if e > tw:
                        tw = e
                cur.append((tw, simplex + (w,)))
            budget -= len(common)
            if budget < 0:
                raise ResourceLimitError(
                    f"flag complex exceeds {max_simplices} simplices "
                    f"(vertices={len(names)}, edges={len(edge_val)}, "
                    f"dim {len(levels)} so far={len(cur)})"
                )
        levels.append(cur)
        prev = cur

    for level in levels:
        level.sort()
    return FlagFiltration(
        tuple(names),
        tuple(tuple(s for _, s in level) for level in levels),
        tuple(tuple(t for t, _ in level) for level in levels),
        length,
    )


def build_flag_filtration(filt, max_dim: int = 3,
                          max_simplices: int = MAX_SIMPLICES) -> FlagFiltration:
    """Clique complex of an expositional or unit-step filtration."""
    return flag_filtration(filt.node_birth, filt.edge_birth, filt.length,
                           max_dim, max_simplices)


@dataclass(frozen=True)
class Barcode:
    """Persistence intervals ``[birth, death)`` in one homology dimension.

    ``generators[i]`` names the simplex that created bar ``i`` and the one
    that destroyed it (``None`` for an infinite bar).
    """

    dim: int
    intervals: tuple[tuple[float, float], ...]
    generators: tuple = ()

    @property
    def m(self) -> int:
        return len(self.intervals)

    def __len__(self):
        return len(self.intervals)

    @property
    def births(self) -> np.ndarray:
        return np.array([b for b, _ in self.intervals], dtype=float)

    @property
    def deaths(self) -> np.ndarray:
        return np.array([d for _, d in self.intervals], dtype=float)

    def n_infinite(self) -> int:
        return sum(1 for _, d in self.intervals if d == INF)


def _make_barcode(dim, pairs, flag: FlagFiltration) -> Barcode:
    bars = []
    for (bdim, bi), death in pairs:
        b = flag.values[bdim][bi]
        if death is None:
            d, killer = INF, None
        else:
            d = flag.values[bdim + 1][death]
            killer = flag.names(flag.simplices[bdim + 1][death])
        if b < d:
            bars.append(((b, d), (flag.names(flag.simplices[bdim][bi]), killer)))
    bars.sort(key=lambda x: (x[0][0], x[0][1], x[1][0]))
    return Barcode(dim, tuple(iv for iv, _ in bars), tuple(g for _, g in bars))


def _reduce(columns, keep_rows: int | None):
    """Reduce bitmask columns; return ``{pivot_row: column_index}`` and zero columns."""
    pivot_col: dict[int, int] = {}
    reduced: dict[int, int] = {}
    zero = []
    for j, col in enumerate(columns):
        if keep_rows is not None:
            col &= keep_rows
        while col:
            low = col.bit_length() - 1
            other = reduced.get(low)
            if other is None:
                reduced[low] = col
                pivot_col[low] = j
                break
            col ^= other
        else:
            zero.append(j)
    return pivot_col, zero


def persistence(flag: FlagFiltration, dims=(0, 1, 2)) -> dict[int, Barcode]:
    """Barcodes of the flag filtration in the requested dimensions (at most 2)."""
    dims = tuple(sorted(set(dims)))
    if dims and (dims[0] < 0 or dims[-1] > 2):
        raise ValueError("dimensions must lie in {0, 1, 2}")
    top = max(dims, default=0)
    if flag.max_dim < top + 1 and top > 0:
        raise ValueError(f"need simplices up to dimension {top + 1}")
    verts, edges = flag.simplices[0], flag.simplices[1]
    n = len(verts)

    # H0: union-find, the component with the older root survives a merge.
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # vertex indices are assigned in filtration order, so a smaller root is older
    order = {s[0]: i for i, s in enumerate(verts)}
    h0_pairs, positive_edges, negative_edge_mask = [], [], 0
    for j, (a, b) in enumerate(edges):
        ra, rb = find(a), find(b)
        if ra == rb:
            positive_edges.append(j)
            continue
        elder, younger = (ra, rb) if order[ra] < order[rb] else (rb, ra)
        h0_pairs.append(((0, order[younger]), j))
        parent[younger] = elder
        negative_edge_mask |= 1 << j
    roots = sorted(order[i] for i in range(n) if find(i) == i)
    h0_pairs.extend(((0, r), None) for r in roots)

    out: dict[int, Barcode] = {}
    if 0 in dims:
        out[0] = _make_barcode(0, h0_pairs, flag)
    if top == 0:
        return out

    edge_index = {e: j for j, e in enumerate(edges)}
    tri_cols = [
        (1 << edge_index[(b, c)]) | (1 << edge_index[(a, c)]) | (1 << edge_index[(a, b)])
        for a, b, c in flag.simplices[2]
    ]
    all_edges = (1 << len(edges)) - 1
    pivots2, zero2 = _reduce(tri_cols, all_edges ^ negative_edge_mask)
    del tri_cols
    if 1 in dims:
        pairs = [((1, e), t) for e, t in pivots2.items()]
        pairs.extend(((1, e), None) for e in positive_edges if e not in pivots2)
        out[1] = _make_barcode(1, pairs, flag)
    if top == 1:
        return out

    tris = flag.simplices[2]
    tri_index = {t: j for j, t in enumerate(tris)}
    positive_tri_mask = 0
    for j in zero2:
        positive_tri_mask |= 1 << j
    tet_cols = []
    for a, b, c, d in flag.simplices[3]:
        col = ((1 << tri_index[(b, c, d)]) | (1 << tri_index[(a, c, d)])
               | (1 << tri_index[(a, b, d)]) | (1 << tri_index[(a, b, c)]))
        tet_cols.append(col)
    pivots3, _ = _reduce(tet_cols, positive_tri_mask)
    pairs = [((2, t), q) for t, q in pivots3.items()]
    pairs.extend(((2, t), None) for t in zero2 if t not in pivots3)
    out[2] = _make_barcode(2, pairs, flag)
    return out


def barcodes(filt, dims=(0, 1, 2), max_simplices: int = MAX_SIMPLICES) -> dict[int, Barcode]:
    """Flag complex and persistence of a graph filtration in one call."""
    top = max(dims)
    flag = build_flag_filtration(filt, max_dim=max(top + 1, 1), max_simplices=max_simplices)
    return persistence(flag, dims)


def betti_curve(barcode: Barcode, horizon: int) -> np.ndarray:
    """``beta[t - 1]`` = number of bars containing ``t``, for ``t = 1..horizon``."""
    finite = [d for _, d in barcode.intervals if d != INF]
    if finite and max(finite) > horizon + 1:
        raise ValueError("horizon is shorter than the last finite death")
    delta = np.zeros(horizon + 2, dtype=np.int64)
    for b, d in barcode.intervals:
        lo = max(int(math.ceil(b)), 1)
        hi = horizon + 1 if d == INF else min(int(math.ceil(d)), horizon + 1)
        if lo < hi:
            delta[lo] += 1
            delta[hi] -= 1
    return np.cumsum(delta)[1:horizon + 1]


def betti_curves(bars: Mapping[int, Barcode], horizon: int) -> np.ndarray:
    """Array of shape ``(horizon, 3)`` with columns beta0, beta1, beta2."""
    out = np.zeros((horizon, 3), dtype=np.int64)
    for dim, bc in bars.items():
        out[:, dim] = betti_curve(bc, horizon)
    return out


def nacl(barcode: Barcode, n_steps: int) -> float:
    """Normalized average cycle lifetime; infinite deaths count as ``n_steps + 1``."""
    if n_steps < 1:
        raise ValueError("n_steps must be positive")
    if barcode.m == 0:
        return 0.0
    total = sum((n_steps + 1 if d == INF else d) - b for b, d in barcode.intervals)
    return total / (barcode.m * n_steps)


def write_barcodes_csv(bars: Mapping[int, Barcode], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["dim", "birth", "death"])
        for dim in sorted(bars):
            for b, d in bars[dim].intervals:
                writer.writerow([dim, _fmt(b), "inf" if d == INF else _fmt(d)])


def read_barcodes_csv(path) -> dict[int, Barcode]:
    rows: dict[int, list] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            rows.setdefault(int(row["dim"]), []).append(
                (float(row["birth"]), float(row["death"]))
            )
    return {d: Barcode(d, tuple(iv)) for d, iv in rows.items()}


def write_betti_csv(curves: np.ndarray, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t", "beta0", "beta1", "beta2"])
        for t, row in enumerate(curves, start=1):
            writer.writerow([t, *(int(x) for x in row)])


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))
