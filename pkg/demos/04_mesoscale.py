"""
Core, periphery and communities
===============================

Core-ness rewards dense connections among core nodes and sparse ones among
periphery nodes. Modularity finds communities in the periphery.
"""
import itertools

import numpy as np

from gapnet import mesoscale
from gapnet.network import SemanticNetwork

# a K4 core with one pendant per core node
W = np.zeros((8, 8))
for i, j in itertools.combinations(range(4), 2):
    W[i, j] = W[j, i] = 1
for i in range(4):
    W[i, i + 4] = W[i + 4, i] = 1
net = SemanticNetwork.from_adjacency(W, [f"c{i}" for i in range(4)] + [f"p{i}" for i in range(4)])

part = mesoscale.optimize_coreness(net, gamma_c=1.0, seed=0)
print("core     ", sorted(part.core))
print("periphery", sorted(part.periphery))
print("Q_C", round(part.q_core, 4), "all-core Q_C", round(mesoscale.eval_coreness(net, net.nodes), 4))

# two five-cliques joined by a single edge
B = np.zeros((10, 10))
for block in (range(5), range(5, 10)):
    for i, j in itertools.combinations(block, 2):
        B[i, j] = B[j, i] = 1
B[4, 5] = B[5, 4] = 1
comm = mesoscale.louvain_communities(B, gamma_m=1.0, seed=3)
print("communities", comm.communities(), "Q_M", round(comm.q_mod, 4))
