"""
The growing co-occurrence network
=================================

Concepts become nodes, sentences that mention two concepts become weighted
edges, and the first such sentence is the birth of each node and edge.
"""
from gapnet import network
from gapnet.text import TokenizedDocument

doc = TokenizedDocument((
    ("the", "vector", "space", "has", "a", "basis"),
    ("a", "linear", "map", "acts", "on", "the", "vector", "space"),
    ("the", "basis", "fixes", "the", "linear", "map"),
    ("kernel", "alone"),
))
index = ["vector space", "basis", "linear map", "kernel"]

filt = network.build_filtration(doc, index)
print("nodes  ", filt.total.nodes)
print("weights", filt.total.weights)
print("births ", filt.node_birth, filt.edge_birth)

# binarized snapshots are nested
for k in range(1, filt.length + 1):
    g = network.snapshot(filt, k)
    print(k, g.n_nodes, "nodes", g.n_edges, "edges")

# one node or edge per step, nodes of a sentence before its edges
unit = network.oaat_unfurl(filt, seed=0)
for step in unit.steps:
    print(step)
