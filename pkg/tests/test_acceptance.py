"""Acceptance criteria, one test per criterion, each reporting a PASS/FAIL line."""
import itertools
import json
import shutil
import statistics
import time
import warnings

import numpy as np
import pytest

from gapnet import analysis, mesoscale, nulls, topology
from gapnet.config import load_config
from gapnet.network import ExpositionalFiltration, SemanticNetwork, oaat_unfurl, snapshot
from gapnet.pipeline import export_report, run_pipeline

from conftest import ACCEPTANCE, data_path
from oracles import (
    brute_coreness_optimum,
    coreness_bracket,
    naive_barcodes,
    pearson_exact,
    ranks_average,
    student_t_sf_two_sided,
    t_stat_exact,
)


def record(num: int, ok: bool, detail: str) -> None:
    ACCEPTANCE.append((num, ok, detail))
    print(f"AC{num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def random_filtration(rng, n_max=12, steps=12):
    n = int(rng.integers(2, n_max + 1))
    names = [f"v{i}" for i in range(n)]
    node_birth = {v: int(rng.integers(1, steps + 1)) for v in names}
    p = rng.uniform(0.2, 0.9)
    edge_birth = {}
    for a, b in itertools.combinations(names, 2):
        if rng.random() < p:
            edge_birth[(a, b)] = int(rng.integers(max(node_birth[a], node_birth[b]), steps + 1))
    return node_birth, edge_birth, steps


def test_ac1_persistence_oracle():
    rng = np.random.default_rng(20240601)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(200):
        nb, eb, steps = random_filtration(rng)
        bars = topology.persistence(topology.flag_filtration(nb, eb, steps))
        got = {d: sorted((b, e, g[0], g[1]) for (b, e), g in zip(bc.intervals, bc.generators))
               for d, bc in bars.items()}
        mismatches += got != naive_barcodes(nb, eb)
    elapsed = time.perf_counter() - t0
    record(1, mismatches == 0 and elapsed < 60,
           f"200 random filtrations, {mismatches} mismatches vs naive reduction, {elapsed:.1f}s")


def test_ac2_known_topology():
    square = topology.persistence(topology.flag_filtration(
        dict.fromkeys("abcd", 1),
        {("a", "b"): 1, ("b", "c"): 2, ("c", "d"): 3, ("a", "d"): 4, ("a", "c"): 5}, 5))
    ok_square = square[1].intervals == ((4, 5),) and square[2].m == 0

    antipodal = {(0, 5), (1, 3), (2, 4)}
    shell = [e for e in itertools.combinations(range(6), 2) if e not in antipodal]
    eb = {e: i + 1 for i, e in enumerate(shell)}
    eb.update({e: 13 + i for i, e in enumerate(sorted(antipodal))})
    octa = topology.persistence(topology.flag_filtration(dict.fromkeys(range(6), 1), eb, 15))
    ok_octa = octa[2].m == 1

    rng = np.random.default_rng(7)
    ok_trees = True
    for _ in range(50):
        n = int(rng.integers(2, 30))
        nb = {i: int(rng.integers(1, 10)) for i in range(n)}
        tree = {}
        for i in range(1, n):
            j = int(rng.integers(0, i))
            tree[(j, i)] = int(rng.integers(max(nb[i], nb[j]), 11))
        bars = topology.persistence(topology.flag_filtration(nb, tree, 10))
        ok_trees &= bars[1].m == 0 and bars[2].m == 0
    record(2, ok_square and ok_octa and ok_trees,
           f"4-cycle dim1 {square[1].intervals}, octahedron dim2 bars {octa[2].m}, "
           f"50 trees without dim1/2 bars: {ok_trees}")


def test_ac3_nacl():
    a = topology.nacl(topology.Barcode(1, ((2, 5),)), 10)
    b = topology.nacl(topology.Barcode(1, ((4, topology.INF),)), 10)
    record(3, a == 0.3 and b == 0.7, f"[2,5) N=10 -> {a!r}; [4,inf) N=10 -> {b!r}")


def test_ac4_mesoscale_oracles():
    rng = np.random.default_rng(99)
    hits = 0
    for trial in range(100):
        n = int(rng.integers(2, 11))
        W = np.zeros((n, n))
        for i, j in itertools.combinations(range(n), 2):
            if rng.random() < rng.uniform(0.2, 0.8):
                W[i, j] = W[j, i] = rng.uniform(0.5, 5)
        best, _ = brute_coreness_optimum(W)
        part = mesoscale.optimize_coreness(W, seed=trial)
        mask = [i in part.core for i in range(n)]
        hits += coreness_bracket(W, mask) >= best - 1e-9

    W = np.zeros((10, 10))
    for block in (range(5), range(5, 10)):
        for i, j in itertools.combinations(block, 2):
            W[i, j] = W[j, i] = 1
    W[4, 5] = W[5, 4] = 1
    planted = [[0, 1, 2, 3, 4], [5, 6, 7, 8, 9]]
    recovered = sum(mesoscale.louvain_communities(W, seed=s).communities() == planted
                    for s in range(100))
    record(4, hits >= 95 and recovered >= 99,
           f"Q_C optimum attained in {hits}/100 graphs; two-K5 recovered in {recovered}/100 seeds")


def test_ac5_null_contracts(synthetic):
    doc, index, filt = synthetic
    ok_sentence = all(nulls.random_sentence_order(doc, index, s).total.weights
                      == filt.total.weights for s in range(20))
    binary = snapshot(filt, filt.length).weights
    ok_unit = all(fn(filt, s).final_graph().weights == binary
                  for fn in (nulls.random_edge, nulls.node_ordered) for s in range(20))

    rng = np.random.default_rng(5)
    n = 200
    names = [f"n{i:03d}" for i in range(n)]
    weights = {e: float(rng.lognormal(-0.125, 0.5)) for e in itertools.combinations(names, 2)
               if rng.random() < 0.4}
    net = SemanticNetwork(tuple(names), weights)
    fit = nulls.fit_weights(net)
    deg = np.array([net.degrees()[v] for v in names], float)
    stg = np.array([net.strengths()[v] for v in names], float)
    sum_deg = np.zeros(n)
    sum_stg = np.zeros(n)
    for s in nulls.member_seeds(17, 100):
        m = nulls.cont_config(net, fit, s)
        d, st = m.degrees(), m.strengths()
        sum_deg += [d[v] for v in names]
        sum_stg += [st[v] for v in names]
    dev_deg = np.max(np.abs(sum_deg / 100 - deg) / deg)
    dev_stg = np.max(np.abs(sum_stg / 100 - stg) / stg)
    record(5, ok_sentence and ok_unit and dev_deg <= 0.05 and dev_stg <= 0.10,
           f"sentence-order totals equal: {ok_sentence}; unit-step finals equal: {ok_unit}; "
           f"cont_config worst node degree dev {dev_deg:.3f}, strength dev {dev_stg:.3f} "
           f"(fit {fit.family})")


def k_tree_filtration(n, k, rng):
    """Chordal graph grown by attaching each new node to an existing k-clique."""
    names = [f"t{i:02d}" for i in range(n)]
    cliques = [tuple(range(k + 1))]
    edges = set(itertools.combinations(range(k + 1), 2))
    for v in range(k + 1, n):
        base = cliques[int(rng.integers(len(cliques)))]
        face = tuple(sorted(rng.choice(base, size=k, replace=False).tolist()))
        edges |= {(u, v) for u in face}
        cliques.append(face + (v,))
    nb = {names[i]: i + 1 for i in range(n)}
    eb = {(names[a], names[b]): b + 1 for a, b in edges}
    return ExpositionalFiltration(SemanticNetwork(tuple(names), dict.fromkeys(eb, 1)), nb, eb, n)


def test_ac6_qualitative_ordering(synthetic):
    _, _, filt = synthetic
    t0 = time.perf_counter()

    def dim1(unit):
        return topology.barcodes(unit, dims=(0, 1))[1].m

    emp = statistics.median(dim1(oaat_unfurl(filt, s)) for s in nulls.member_seeds(1, 100))
    node = statistics.median(dim1(nulls.node_ordered(filt, s)) for s in nulls.member_seeds(2, 100))
    edge = statistics.median(dim1(nulls.random_edge(filt, s)) for s in nulls.member_seeds(3, 100))

    rng = np.random.default_rng(0)
    cone_bars = 0
    chordal = [k_tree_filtration(25, 3, rng), k_tree_filtration(30, 2, rng)]
    names = [f"c{i}" for i in range(12)]
    eb = dict.fromkeys(itertools.combinations(names, 2), 12)
    chordal.append(ExpositionalFiltration(SemanticNetwork(tuple(names), dict.fromkeys(eb, 1)),
                                          {v: i + 1 for i, v in enumerate(names)}, eb, 12))
    for f in chordal:
        for s in nulls.member_seeds(4, 100):
            bars = topology.barcodes(nulls.node_ordered(f, s))
            cone_bars += bars[1].m + bars[2].m
    elapsed = time.perf_counter() - t0
    record(6, node <= emp <= edge and cone_bars == 0 and elapsed < 600,
           f"median dim-1 bars node_ordered {node} <= empirical {emp} <= random_edge {edge}; "
           f"chordal node_ordered dim-1/2 bars {cone_bars}; {elapsed:.1f}s")


def test_ac7_statistics():
    rng = np.random.default_rng(77)
    worst = 0.0
    checked = 0
    for _ in range(1000):
        n = int(rng.integers(3, 11))
        x = rng.integers(0, 5, n).tolist()
        y = rng.integers(0, 5, n).tolist()
        if len(set(x)) < 2 or len(set(y)) < 2:
            x[0], x[1], y[0], y[1] = 0, 4, 0, 4
        rs = pearson_exact(ranks_average(x), ranks_average(y))
        rp = pearson_exact(x, y)
        res_s, res_p = analysis.spearman(x, y), analysis.pearson(x, y)
        errs = [abs(res_s.statistic - rs), abs(res_p.statistic - rp)]
        for r, res in ((rs, res_s), (rp, res_p)):
            if abs(r) < 1:
                t = r * np.sqrt((n - 2) / (1 - r * r))
                errs.append(abs(res.pvalue - student_t_sf_two_sided(t, n - 2)))
        tt = analysis.t_test_one_sample(x, 1.5)
        t_ref = t_stat_exact(x, 1.5)
        errs += [abs(tt.statistic - t_ref),
                 abs(tt.pvalue - student_t_sf_two_sided(t_ref, n - 1))]
        worst = max(worst, *errs)
        checked += 1
    record(7, worst <= 1e-9, f"{checked} vectors with ties, worst abs deviation {worst:.2e}")


def test_ac8_lognormal_recovery():
    hits = 0
    worst_d = 0.0
    for seed in range(100):
        x = np.random.default_rng(seed).lognormal(0.3, 0.8, 2000)
        fit = nulls.fit_samples(x)
        ok = fit.family == "lognorm" and fit.ks_stat < 0.05
        hits += ok
        worst_d = max(worst_d, fit.ks_stat)
    record(8, hits >= 95, f"log-normal identified with D<0.05 in {hits}/100 seeds "
                          f"(max D {worst_d:.4f})")


def test_ac9_determinism(tmp_path):
    outputs = []
    for run in ("a", "b"):
        base = tmp_path / run
        shutil.copytree(data_path("toy"), base)
        (base / "run.cfg").write_text(
            "corpus = text1.txt, text2.txt, text3.txt, text4.txt\nratings = ratings.csv\n"
            "ensemble_size = 5\noaat_instances = 2\nseed = 2024\noutput_dir = out\n")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report = export_report(run_pipeline(load_config(base / "run.cfg")))
        files = sorted(report.rglob("*.json"))
        outputs.append({p.relative_to(report).as_posix(): p.read_bytes() for p in files})
    same = outputs[0] == outputs[1] and len(outputs[0]) > 0
    n_metrics = len(json.loads(outputs[0]["summary.json"])["texts"])
    record(9, same, f"{len(outputs[0])} report JSON files byte-identical across two full runs "
                    f"({n_metrics} texts)")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
