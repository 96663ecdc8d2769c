"""
Development curves and correlations
===================================

How early does the core get introduced compared with the periphery, and
does any network feature track reader ratings?
"""
import warnings
from importlib import resources
from pathlib import Path

from gapnet import analysis, concepts, mesoscale, network, text

warnings.simplefilter("ignore")
path = Path(str(resources.files("gapnet") / "data" / "synthetic_exposition.txt"))
stop = text.default_stoplist()
doc = text.preprocess(text.read_document(path), stop, text.default_dictionary())
filt = network.build_filtration(doc, concepts.extract_index(doc, stop))

core = mesoscale.optimize_coreness(filt.total, seed=0)
periphery = filt.total.subgraph(sorted(core.periphery))
comm = mesoscale.louvain_communities(periphery, seed=0)
curves = analysis.introduction_curves(filt, core)
print("core size", len(core.core), "communities", comm.n_communities)
print("area core - periphery", round(analysis.curve_area_diff(curves["core"], curves["periphery"]), 4))

for group, curve in analysis.edge_group_curves(filt, core, comm).items():
    print(f"{group:>22}: K-S to diagonal {analysis.ks_to_diagonal(curve):.3f}")

# Spearman with the t approximation for the p-value
ratings = [4.1, 3.9, 3.6, 4.4, 3.2, 3.8, 4.0]
feature = [0.11, 0.14, 0.19, 0.07, 0.21, 0.12, 0.13]
print(analysis.spearman(feature, ratings))
print(analysis.t_test_one_sample([0.12, 0.09, 0.15, 0.2, 0.11], 0.0))
