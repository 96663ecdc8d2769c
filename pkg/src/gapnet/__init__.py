"""Growing semantic networks of expository text and their topological gaps."""
from .analysis import (
    DevelopmentCurve,
    curve_area_diff,
    edge_group_curves,
    introduction_curves,
    ks_to_diagonal,
    pearson,
    spearman,
    t_test_one_sample,
)
from .concepts import IndexList, extract_index
from .config import ConfigError, RunConfig, load_config
from .mesoscale import eval_coreness, louvain_communities, modularity, optimize_coreness
from .network import (
    ExpositionalFiltration,
    SemanticNetwork,
    UnitStepFiltration,
    build_filtration,
    oaat_unfurl,
    snapshot,
)
from .nulls import (
    cont_config,
    fit_weights,
    make_ensemble,
    node_ordered,
    random_edge,
    random_index,
    random_sentence_order,
)
from .pipeline import RunManifest, export_report, run_pipeline
from .text import TokenizedDocument, preprocess, read_document
from .topology import Barcode, barcodes, betti_curves, nacl, persistence

__version__ = "0.1.0"
