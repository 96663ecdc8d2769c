"""
Knowledge gaps as persistent cavities
=====================================

The clique complex of each snapshot is filled in as the exposition grows.
Cycles that appear and later get tessellated show up as finite bars.
"""
import itertools

from gapnet import topology

# a square closed at step 4 and filled by a chord at step 5
nodes = dict.fromkeys("abcd", 1)
edges = {("a", "b"): 1, ("b", "c"): 2, ("c", "d"): 3, ("a", "d"): 4, ("a", "c"): 5}
flag = topology.flag_filtration(nodes, edges, length=5)
print("simplices per dimension", flag.counts())
bars = topology.persistence(flag)
for dim, bc in bars.items():
    print(f"dim {dim}: {bc.intervals}")

# the octahedron is a hollow sphere until an antipodal edge fills it
antipodal = {(0, 5), (1, 3), (2, 4)}
shell = [e for e in itertools.combinations(range(6), 2) if e not in antipodal]
eb = {e: i + 1 for i, e in enumerate(shell)}
eb.update({e: 13 + i for i, e in enumerate(sorted(antipodal))})
octa = topology.persistence(topology.flag_filtration(dict.fromkeys(range(6), 1), eb, 15))
print("octahedron dim 2 bars", octa[2].intervals)

# Betti curves and normalized average cycle lifetime
print(topology.betti_curves(bars, 5))
for dim, bc in bars.items():
    print(f"NACL dim {dim}: {topology.nacl(bc, 5):.3f}")
print(topology.nacl(topology.Barcode(1, ((4, topology.INF),)), 10))
