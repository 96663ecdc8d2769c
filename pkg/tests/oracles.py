"""Independent brute-force references used by the test suite.

Nothing here imports the code under test except plain data types.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np


def brute_cliques(nodes, edges, max_size=4):
    """All cliques of size 1..max_size by testing every vertex subset."""
    adj = {frozenset(e) for e in edges}
    out = []
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(sorted(nodes), k):
            if all(frozenset(p) in adj for p in itertools.combinations(combo, 2)):
                out.append(combo)
    return out


def naive_barcodes(node_birth, edge_birth, dims=(0, 1, 2)):
    """Persistence by full dense boundary-matrix reduction, no shortcuts.

    Simplices are ordered by (value, dimension, vertex key), with vertices
    keyed by (birth, name) exactly like the engine under test; returns
    ``{dim: sorted list of (birth, death, birth_simplex, death_simplex)}``
    with zero-length bars removed.
    """
    names = sorted(node_birth, key=lambda v: (node_birth[v], v))
    idx = {v: i for i, v in enumerate(names)}
    ebirth = {}
    for (a, b), t in edge_birth.items():
        i, j = sorted((idx[a], idx[b]))
        ebirth[(i, j)] = max(t, node_birth[a], node_birth[b])

    simplices = []
    for combo in brute_cliques(range(len(names)), list(ebirth), max_size=4):
        if len(combo) == 1:
            val = node_birth[names[combo[0]]]
        else:
            val = max(ebirth[p] for p in itertools.combinations(combo, 2))
        simplices.append((val, len(combo) - 1, combo))
    simplices.sort()
    pos = {s[2]: i for i, s in enumerate(simplices)}
    n = len(simplices)
    D = np.zeros((n, n), dtype=np.uint8)
    for j, (_, dim, combo) in enumerate(simplices):
        if dim == 0:
            continue
        for face in itertools.combinations(combo, dim):
            D[pos[face], j] = 1

    def low(col):
        nz = np.flatnonzero(col)
        return nz[-1] if len(nz) else -1

    lows = {}
    pivot_of_col = [-1] * n
    for j in range(n):
        while True:
            lj = low(D[:, j])
            if lj < 0 or lj not in lows:
                break
            D[:, j] ^= D[:, lows[lj]]
        if lj >= 0:
            lows[lj] = j
            pivot_of_col[j] = lj

    paired_birth = set(lows)
    result = {d: [] for d in dims}

    def named(combo):
        return tuple(names[i] for i in combo)

    for i, (val, dim, combo) in enumerate(simplices):
        if dim not in result:
            continue
        if i in lows:
            j = lows[i]
            dval = simplices[j][0]
            if val < dval:
                result[dim].append((val, dval, named(combo), named(simplices[j][2])))
        elif pivot_of_col[i] < 0:
            result[dim].append((val, math.inf, named(combo), None))
    for d in result:
        result[d].sort(key=lambda x: (x[0], x[1], x[2]))
    return result


def ranks_average(x):
    """Average ranks (1-based) by counting, O(n^2)."""
    out = []
    for xi in x:
        less = sum(1 for xj in x if xj < xi)
        equal = sum(1 for xj in x if xj == xi)
        out.append(less + (equal + 1) / 2)
    return out


def pearson_exact(x, y):
    """Pearson r from exact rational moments."""
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    n = len(x)
    mx, my = sum(x) / n, sum(y) / n
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    return float(sxy) / math.sqrt(float(sxx) * float(syy))


def t_stat_exact(x, mu0):
    x = [Fraction(v) for v in x]
    n = len(x)
    mean = sum(x) / n
    var = sum((a - mean) ** 2 for a in x) / (n - 1)
    return float(mean - Fraction(mu0)) / math.sqrt(float(var) / n)


def student_t_sf_two_sided(t, dof):
    """Two-sided tail of Student's t by numerical integration of the density."""
    from scipy import integrate

    c = math.exp(math.lgamma((dof + 1) / 2) - math.lgamma(dof / 2)) / math.sqrt(dof * math.pi)

    def pdf(u):
        return c * (1 + u * u / dof) ** (-(dof + 1) / 2)

    tail, _ = integrate.quad(pdf, abs(t), math.inf, epsabs=1e-14, epsrel=1e-12)
    return min(1.0, 2 * tail)


def coreness_bracket(W, core, gamma=1.0):
    """Q_C bracket by explicit double loop over ordered pairs i != j."""
    n = len(W)
    pairs = n * (n - 1)
    wbar = sum(W[i][j] for i in range(n) for j in range(n) if i != j) / pairs if pairs else 0.0
    total = 0.0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if core[i] and core[j]:
                total += W[i][j] - gamma * wbar
            elif not core[i] and not core[j]:
                total -= W[i][j] - gamma * wbar
    return total


def brute_coreness_optimum(W, gamma=1.0):
    """Best bracket value over all 2^n core/periphery assignments."""
    n = len(W)
    best, arg = -math.inf, None
    for bits in itertools.product((False, True), repeat=n):
        val = coreness_bracket(W, bits, gamma)
        if val > best + 1e-12:
            best, arg = val, bits
    return best, arg


def modularity_loop(W, labels, gamma=1.0):
    n = len(W)
    s = [sum(W[i]) for i in range(n)]
    two_m = sum(s)
    if two_m == 0:
        return 0.0
    q = 0.0
    for i in range(n):
        for j in range(n):
            if labels[i] == labels[j]:
                q += W[i][j] - gamma * s[i] * s[j] / two_m
    return q / two_m


def set_partitions(n, max_blocks):
    """Restricted-growth strings of length n with at most max_blocks blocks."""
    def rec(prefix, used):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(min(used + 1, max_blocks)):
            yield from rec(prefix + [b], max(used, b + 1))
    yield from rec([], 0)
