import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gapnet import text
from gapnet.concepts import default_frequency_table, extract_index
from gapnet.network import UnitStepFiltration, build_filtration
from gapnet.topology import (
    INF,
    Barcode,
    ResourceLimitError,
    barcodes,
    betti_curve,
    betti_curves,
    flag_filtration,
    nacl,
    persistence,
    read_barcodes_csv,
    write_barcodes_csv,
    write_betti_csv,
)

from conftest import data_path
from oracles import brute_cliques, naive_barcodes


def random_filtration(rng, n_max=12, steps=10):
    n = int(rng.integers(2, n_max + 1))
    names = [f"v{i}" for i in range(n)]
    node_birth = {v: int(rng.integers(1, steps + 1)) for v in names}
    p = rng.uniform(0.2, 0.8)
    edge_birth = {}
    for a, b in itertools.combinations(names, 2):
        if rng.random() < p:
            lo = max(node_birth[a], node_birth[b])
            edge_birth[(a, b)] = int(rng.integers(lo, steps + 1))
    return node_birth, edge_birth, steps


def engine_bars(node_birth, edge_birth, length):
    flag = flag_filtration(node_birth, edge_birth, length)
    bars = persistence(flag)
    return {d: sorted((b, e, g[0], g[1]) for (b, e), g in zip(bc.intervals, bc.generators))
            for d, bc in bars.items()}


def test_triangle_enters_at_last_edge():
    flag = flag_filtration({"a": 1, "b": 1, "c": 1},
                           {("a", "b"): 1, ("b", "c"): 2, ("a", "c"): 3}, 3)
    assert flag.values[2] == (3,)


def test_k4_counts():
    nodes = {v: 1 for v in "abcd"}
    edges = {e: 1 for e in itertools.combinations("abcd", 2)}
    flag = flag_filtration(nodes, edges, 1)
    assert flag.counts() == [4, 6, 4, 1]
    assert all(v == 1 for level in flag.values for v in level)


def test_faces_precede_cofaces():
    rng = np.random.default_rng(3)
    nb, eb, L = random_filtration(rng)
    flag = flag_filtration(nb, eb, L)
    seen = set()
    for simplex, _ in flag.stream():
        if len(simplex) > 1:
            for face in itertools.combinations(simplex, len(simplex) - 1):
                assert face in seen
        seen.add(simplex)
    values = [v for _, v in flag.stream()]
    assert values == sorted(values)


def test_cliques_match_brute_force():
    rng = np.random.default_rng(11)
    for _ in range(5):
        names = [f"n{i:02d}" for i in range(20)]
        edges = [e for e in itertools.combinations(names, 2) if rng.random() < 0.35]
        flag = flag_filtration(dict.fromkeys(names, 1), dict.fromkeys(edges, 1), 1)
        got = sorted(tuple(sorted(flag.names(s))) for level in flag.simplices for s in level)
        assert got == sorted(brute_cliques(names, edges, 4))


def test_elder_rule():
    bars = barcodes(UnitStepFiltration((("node", "a"), ("node", "b"), ("edge", ("a", "b")))))
    assert bars[0].intervals == ((1, INF), (2, 3))


def square_with_chord():
    nodes = dict.fromkeys("abcd", 1)
    edges = {("a", "b"): 1, ("b", "c"): 2, ("c", "d"): 3, ("a", "d"): 4, ("a", "c"): 5}
    return nodes, edges


def test_four_cycle_single_bar():
    nodes, edges = square_with_chord()
    bars = persistence(flag_filtration(nodes, edges, 5))
    assert bars[1].intervals == ((4, 5),)
    assert bars[2].intervals == ()


def octahedron():
    nodes = dict.fromkeys(range(6), 1)
    antipodal = {(0, 5), (1, 3), (2, 4)}
    shell = [e for e in itertools.combinations(range(6), 2) if e not in antipodal]
    edges = {e: i + 1 for i, e in enumerate(shell)}
    edges.update({e: 13 + i for i, e in enumerate(sorted(antipodal))})
    return nodes, edges


def test_octahedron_single_void():
    nodes, edges = octahedron()
    bars = persistence(flag_filtration(nodes, edges, 15))
    assert len(bars[2].intervals) == 1
    assert bars[2].intervals[0][0] == 12


def test_tree_has_no_cycles():
    rng = np.random.default_rng(0)
    for _ in range(20):
        n = int(rng.integers(2, 15))
        edges = {(f"v{int(rng.integers(0, i))}", f"v{i}"): int(rng.integers(1, 10))
                 for i in range(1, n)}
        nodes = {f"v{i}": 1 for i in range(n)}
        bars = persistence(flag_filtration(nodes, edges, 10))
        assert bars[1].m == 0 and bars[2].m == 0
        assert bars[0].n_infinite() == 1


def test_matches_naive_reduction():
    rng = np.random.default_rng(2024)
    for _ in range(40):
        nb, eb, L = random_filtration(rng, n_max=10)
        assert engine_bars(nb, eb, L) == naive_barcodes(nb, eb)


def test_zero_infinite_count_matches_components():
    rng = np.random.default_rng(1)
    for _ in range(20):
        nb, eb, L = random_filtration(rng)
        bars = persistence(flag_filtration(nb, eb, L))
        parent = {v: v for v in nb}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x
        for a, b in eb:
            parent[find(a)] = find(b)
        assert bars[0].n_infinite() == len({find(v) for v in nb})


def test_euler_characteristic_without_4_cliques():
    rng = np.random.default_rng(8)
    checked = 0
    while checked < 25:
        nb, eb, L = random_filtration(rng, n_max=9)
        flag = flag_filtration(nb, eb, L)
        if flag.counts()[3]:
            continue
        bars = persistence(flag)
        curves = betti_curves(bars, L)
        for t in range(1, L + 1):
            chi = sum((-1) ** d * sum(1 for v in flag.values[d] if v <= t) for d in range(3))
            assert chi == curves[t - 1, 0] - curves[t - 1, 1] + curves[t - 1, 2]
        checked += 1


def test_resource_limit():
    nodes = dict.fromkeys(range(10), 1)
    edges = dict.fromkeys(itertools.combinations(range(10), 2), 1)
    with pytest.raises(ResourceLimitError, match="simplices"):
        flag_filtration(nodes, edges, 1, max_simplices=100)


def test_betti_curve_examples():
    assert (betti_curve(Barcode(1, ()), 10) == 0).all()
    assert (betti_curve(Barcode(0, ((1, INF),)), 10) == 1).all()
    assert betti_curve(Barcode(1, ((2, 5),)), 6).tolist() == [0, 1, 1, 1, 0, 0]


@pytest.mark.filterwarnings("ignore:.*never matched")
def test_betti_zero_peaks_early_on_toy_text():
    stop = text.default_stoplist()
    raw = text.read_document(data_path("toy", "text3.txt"))
    doc = text.preprocess(raw, stop, text.default_dictionary())
    filt = build_filtration(doc, extract_index(doc, stop, default_frequency_table()))
    curve = betti_curves(barcodes(filt), filt.length)[:, 0]
    assert curve.max() > 1
    assert int(np.argmax(curve)) < filt.length // 3
    assert curve[-1] == 1


@pytest.mark.parametrize("intervals, n, expected", [
    (((2, 5),), 10, 0.3),
    (((4, INF),), 10, 0.7),
    ((), 10, 0.0),
])
def test_nacl_examples(intervals, n, expected):
    assert nacl(Barcode(1, intervals), n) == pytest.approx(expected, abs=0)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 50), st.lists(st.tuples(st.integers(1, 50), st.integers(1, 51)),
                                    max_size=20))
def test_nacl_bounds(n, raw):
    ivs = tuple((min(b, n), INF if d > n else max(d, min(b, n) + 1)) for b, d in raw)
    ivs = tuple((b, d) for b, d in ivs if d == INF or d <= n + 1)
    val = nacl(Barcode(1, ivs), n)
    assert 0 <= val <= (n + 1) / n


def test_barcode_csv_roundtrip(tmp_path):
    nodes, edges = square_with_chord()
    bars = persistence(flag_filtration(nodes, edges, 5))
    write_barcodes_csv(bars, tmp_path / "b.csv")
    lines = (tmp_path / "b.csv").read_text().splitlines()
    assert lines[0] == "dim,birth,death" and "0,1,inf" in lines
    back = read_barcodes_csv(tmp_path / "b.csv")
    assert back[1].intervals == bars[1].intervals
    write_betti_csv(betti_curves(bars, 5), tmp_path / "c.csv")
    assert (tmp_path / "c.csv").read_text().splitlines()[0] == "t,beta0,beta1,beta2"


def test_dims_validated():
    flag = flag_filtration({"a": 1}, {}, 1, max_dim=1)
    with pytest.raises(ValueError):
        persistence(flag, dims=(3,))
    assert math.isinf(persistence(flag, dims=(0,))[0].intervals[0][1])
