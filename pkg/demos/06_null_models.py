"""
Five null models
================

Each null keeps part of the empirical structure and randomizes the rest.
Here they run on the bundled synthetic exposition and are compared on the
number of one-dimensional cavities.
"""
import statistics
import warnings
from importlib import resources
from pathlib import Path

from gapnet import concepts, network, nulls, text, topology

warnings.simplefilter("ignore")
path = Path(str(resources.files("gapnet") / "data" / "synthetic_exposition.txt"))
stop = text.default_stoplist()
doc = text.preprocess(text.read_document(path), stop, text.default_dictionary())
index = concepts.extract_index(doc, stop, concepts.default_frequency_table())
filt = network.build_filtration(doc, index)
print(filt.total.n_nodes, "nodes", filt.total.n_edges, "edges")

size = 20


def dim1(f):
    return topology.barcodes(f, dims=(0, 1))[1].m


# (a) random words as concepts, (b) shuffled sentences
ri = nulls.make_ensemble("random_index", lambda s: nulls.random_index(doc, stop, index.size, s),
                         size, master_seed=1)
rs = nulls.make_ensemble("random_sentence", lambda s: nulls.random_sentence_order(doc, index, s),
                         size, master_seed=2)
print("random index median dim-1 bars", statistics.median(map(dim1, ri.artifacts())))
print("random sentence median dim-1 bars", statistics.median(map(dim1, rs.artifacts())))
print("sentence shuffle keeps the total network:",
      all(f.total.weights == filt.total.weights for f in rs.artifacts()))

# (c) continuous configuration model with a fitted weight distribution
fit = nulls.fit_weights(filt.total)
print("weight fit", fit.family, f"D={fit.ks_stat:.3f}")
cc = nulls.cont_config(filt.total, fit, seed=3)
print("cont_config edges", cc.n_edges, "vs", filt.total.n_edges)

# (d) random edge order and (e) node order, against the unfurled empirical text
seeds = nulls.member_seeds(4, size)
emp = statistics.median(dim1(network.oaat_unfurl(filt, s)) for s in seeds)
node = statistics.median(dim1(nulls.node_ordered(filt, s)) for s in seeds)
edge = statistics.median(dim1(nulls.random_edge(filt, s)) for s in seeds)
print(f"median dim-1 bars: node ordered {node}, empirical {emp}, random edge {edge}")
