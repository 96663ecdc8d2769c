"""Staged execution of the full analysis with an on-disk cache.

Every text goes through ``ingest -> extract -> build -> mesoscale -> nulls
-> topology -> analysis``. Each stage writes a JSON or TSV artifact under
``<output_dir>/cache/<config hash>/<text id>/`` and later runs reuse it. An
unreadable artifact is recomputed rather than trusted.
"""
from __future__ import annotations

import csv
import json
import math
import os
import statistics
import time
import warnings
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import analysis, concepts, mesoscale, network, nulls, text, topology
from .config import ConfigError, RunConfig

STAGES = ("ingest", "extract", "build", "mesoscale", "nulls", "topology", "analysis")
DIMS = (0, 1, 2)
# fixed tags that keep the derived seed streams of one text apart
SEED_TAGS = {**{m: i for i, m in enumerate(nulls.MODEL_KINDS)},
             "core": 10, "communities": 11, "oaat": 12}
_CACHE_ERRORS = (OSError, ValueError, KeyError, TypeError, IndexError)


class StageError(RuntimeError):
    """A pipeline stage failed for one text."""

    def __init__(self, stage: str, doc_id: str, cause: BaseException):
        super().__init__(f"stage '{stage}' failed for '{doc_id}': {cause}")
        self.stage = stage
        self.doc_id = doc_id


@dataclass
class RunManifest:
    config_hash: str
    output_dir: str
    seed: int
    stages: list[str]
    documents: dict = field(default_factory=dict)
    ratings: str | None = None
    timings: dict = field(default_factory=dict)

    @property
    def cache_dir(self) -> Path:
        return Path(self.output_dir) / "cache" / self.config_hash

    @property
    def complete(self) -> bool:
        return all(d["status"] == "complete" for d in self.documents.values())

    def save(self) -> Path:
        path = Path(self.output_dir) / "manifest.json"
        _write_json(path, asdict(self))
        return path

    @classmethod
    def load(cls, path) -> "RunManifest":
        with open(path, encoding="utf-8") as fh:
            return cls(**json.load(fh))


# -- helpers ------------------------------------------------------------------

def derive_seed(*parts: int) -> int:
    state = np.random.SeedSequence([int(p) for p in parts]).generate_state(1, np.uint64)[0]
    return int(state >> np.uint64(1))


def text_seed(master: int, doc_id: str, tag: str) -> int:
    return derive_seed(master, zlib.crc32(doc_id.encode()), SEED_TAGS[tag])


def _clean(x):
    """JSON-safe copy: numpy scalars to Python, NaN and inf to None."""
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else None
    return x


def _write_json(path: Path, obj) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(_clean(obj), fh, indent=2, sort_keys=True, allow_nan=False)
        fh.write("\n")
    os.replace(tmp, path)


def _read_json(path: Path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# -- serialization of intermediate objects --------------------------------------

def filtration_to_dict(filt: network.ExpositionalFiltration) -> dict:
    return {
        "n_sentences": filt.n_sentences,
        "nodes": [[v, filt.node_birth[v]] for v in filt.total.nodes],
        "edges": [[u, v, filt.total.weights[(u, v)], filt.edge_birth[(u, v)]]
                  for u, v in filt.total.edges],
    }


def filtration_from_dict(d: dict) -> network.ExpositionalFiltration:
    nodes = tuple(v for v, _ in d["nodes"])
    weights = {network.edge_key(u, v): w for u, v, w, _ in d["edges"]}
    return network.ExpositionalFiltration(
        network.SemanticNetwork(nodes, weights),
        {v: int(b) for v, b in d["nodes"]},
        {network.edge_key(u, v): int(b) for u, v, _, b in d["edges"]},
        int(d["n_sentences"]),
    )


def network_to_dict(net: network.SemanticNetwork) -> dict:
    return {"nodes": list(net.nodes),
            "edges": [[u, v, net.weights[(u, v)]] for u, v in net.edges]}


def network_from_dict(d: dict) -> network.SemanticNetwork:
    return network.SemanticNetwork(tuple(d["nodes"]),
                                   {network.edge_key(u, v): w for u, v, w in d["edges"]})


def steps_to_list(filt: network.UnitStepFiltration) -> list:
    return [[kind, item] if kind == "node" else [kind, list(item)] for kind, item in filt.steps]


def steps_from_list(steps: list) -> network.UnitStepFiltration:
    return network.UnitStepFiltration(tuple(
        (kind, item) if kind == "node" else (kind, tuple(item)) for kind, item in steps))


def partition_to_dict(core: mesoscale.CorePartition,
                      comm: mesoscale.CommunityPartition | None) -> dict:
    return {
        "core": sorted(core.core), "periphery": sorted(core.periphery),
        "q_core": core.q_core, "gamma_c": core.gamma_c, "norm_vc": core.norm_vc,
        "degenerate": core.degenerate, "core_seed": core.seed,
        "communities": None if comm is None else {
            "assignment": dict(sorted(comm.assignment.items())), "q_mod": comm.q_mod,
            "gamma_m": comm.gamma_m, "norm_vm": comm.norm_vm, "seed": comm.seed,
        },
    }


def partition_from_dict(d: dict):
    core = mesoscale.CorePartition(frozenset(d["core"]), frozenset(d["periphery"]),
                                   d["q_core"], d["gamma_c"], d["norm_vc"],
                                   d["degenerate"], d["core_seed"])
    c = d["communities"]
    comm = None if c is None else mesoscale.CommunityPartition(
        c["assignment"], c["q_mod"], c["gamma_m"], c["norm_vm"], c["seed"])
    return core, comm


def barcodes_to_dict(bars) -> dict:
    return {str(k): [[b, None if d == topology.INF else d] for b, d in bc.intervals]
            for k, bc in bars.items()}


def barcodes_from_dict(d: dict) -> dict:
    return {int(k): topology.Barcode(int(k), tuple(
        (float(b), topology.INF if e is None else float(e)) for b, e in iv))
        for k, iv in d.items()}


# -- metrics shared by the empirical text and its null members ---------------------

def mesoscale_partition(net: network.SemanticNetwork, cfg: RunConfig, core_seed: int,
                        comm_seed: int):
    core = mesoscale.optimize_coreness(net, cfg.gamma_c, core_seed, cfg.core_restarts)
    comm = None
    if core.periphery:
        sub = net.subgraph(sorted(core.periphery, key=net.nodes.index))
        comm = mesoscale.louvain_communities(sub, cfg.gamma_m, comm_seed)
    return core, comm


def network_metrics(net, core, comm) -> dict:
    return {
        "n_nodes": net.n_nodes,
        "n_edges": net.n_edges,
        "edge_density": net.density(),
        "q_core": core.q_core,
        "core_size": len(core.core),
        "q_mod": None if comm is None else comm.q_mod,
        "n_communities": 0 if comm is None else comm.n_communities,
    }


def area_metric(filt, core) -> float | None:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        curves = analysis.introduction_curves(filt, core)
    if "core" in curves and "periphery" in curves:
        return analysis.curve_area_diff(curves["core"], curves["periphery"])
    return None


def topology_metrics(bars, n_steps: int, prefix: str) -> dict:
    out = {}
    for k in DIMS:
        out[f"nacl_{prefix}_d{k}"] = topology.nacl(bars[k], n_steps)
        out[f"bars_{prefix}_d{k}"] = bars[k].m
    out[f"nacl_{prefix}_mean"] = float(np.mean([out[f"nacl_{prefix}_d{k}"] for k in DIMS]))
    return out


def filtration_metrics(filt, cfg: RunConfig, member_seed: int) -> dict:
    core, comm = mesoscale_partition(filt.total, cfg, derive_seed(member_seed, 1),
                                     derive_seed(member_seed, 2))
    out = network_metrics(filt.total, core, comm)
    out["area_core_periphery"] = area_metric(filt, core)
    bars = topology.barcodes(filt, DIMS, cfg.max_simplices)
    out.update(topology_metrics(bars, filt.length, "sentence"))
    return out


def member_metrics(kind: str, artifact, cfg: RunConfig, member_seed: int) -> dict:
    if kind in ("random_index", "random_sentence"):
        return filtration_metrics(artifact, cfg, member_seed)
    if kind == "cont_config":
        core, comm = mesoscale_partition(artifact, cfg, derive_seed(member_seed, 1),
                                         derive_seed(member_seed, 2))
        return network_metrics(artifact, core, comm)
    bars = topology.barcodes(artifact, DIMS, cfg.max_simplices)
    return topology_metrics(bars, artifact.length, "oaat")


# -- per-text runner -----------------------------------------------------------------

class TextRun:
    """Runs the stages of one text against its cache directory."""

    def __init__(self, cfg: RunConfig, path: str, cache_root: Path):
        self.cfg = cfg
        self.path = path
        self.doc_id = Path(path).stem
        self.dir = cache_root / self.doc_id
        self.timings: dict[str, float] = {}
        self._res = None

    def seed(self, tag: str) -> int:
        return text_seed(self.cfg.seed, self.doc_id, tag)

    @property
    def resources(self):
        if self._res is None:
            cfg = self.cfg
            self._res = {
                "stoplist": text.load_stoplist(cfg.stoplist) if cfg.stoplist
                else text.default_stoplist(),
                "dictionary": text.WordListDictionary.from_file(cfg.dictionary)
                if cfg.dictionary else text.default_dictionary(),
                "abbreviations": frozenset(text.read_word_file(cfg.abbreviations))
                if cfg.abbreviations else text.default_abbreviations(),
                "table": concepts.FrequencyTable.from_tsv(cfg.frequency_table)
                if cfg.frequency_table else concepts.default_frequency_table(),
            }
        return self._res

    def _cached(self, name: str, load, compute, save):
        path = self.dir / name
        if path.exists():
            try:
                return load(path)
            except _CACHE_ERRORS:
                pass  # damaged artifact, fall through and rebuild it
        value = compute()
        path.parent.mkdir(parents=True, exist_ok=True)
        save(value, path)
        return value

    def _json(self, name: str, compute, to_obj=lambda x: x, from_obj=lambda x: x):
        return self._cached(name, lambda p: from_obj(_read_json(p)), compute,
                            lambda v, p: _write_json(p, to_obj(v)))

    # stages ------------------------------------------------------------------
    def ingest(self) -> text.TokenizedDocument:
        def compute():
            r = self.resources
            raw = text.read_document(self.path, self.doc_id)
            return text.preprocess(raw, r["stoplist"], r["dictionary"],
                                   abbreviations=r["abbreviations"])
        return self._json(
            "tokens.json", compute,
            lambda d: {"doc_id": d.doc_id, "sentences": [list(s) for s in d.sentences]},
            lambda o: text.TokenizedDocument(tuple(tuple(s) for s in o["sentences"]),
                                             o["doc_id"]))

    def extract(self) -> concepts.IndexList:
        def compute():
            cfg, r = self.cfg, self.resources
            return concepts.extract_index(
                self.ingest(), r["stoplist"], r["table"], cfg.index_fraction,
                cfg.min_keyword_length, cfg.min_keyword_frequency, cfg.max_phrase_length)

        def load(p):
            index = concepts.read_index_tsv(p)
            if index.size == 0:
                raise ValueError("empty index")
            return index
        return self._cached("index.tsv", load, compute, concepts.write_index_tsv)

    def build(self) -> network.ExpositionalFiltration:
        return self._json("filtration.json",
                          lambda: network.build_filtration(self.ingest(), self.extract()),
                          filtration_to_dict, filtration_from_dict)

    def mesoscale(self):
        def compute():
            return mesoscale_partition(self.build().total, self.cfg, self.seed("core"),
                                       self.seed("communities"))
        return self._json("partition.json", compute, lambda v: partition_to_dict(*v),
                          partition_from_dict)

    def weight_fit(self) -> nulls.WeightFit:
        return self._json("fit.json", lambda: nulls.fit_weights(self.build().total),
                          lambda f: f.to_dict(), nulls.WeightFit.from_dict)

    def _member_builder(self, kind: str):
        filt = self.build()
        if kind == "random_index":
            doc, stop, size = self.ingest(), self.resources["stoplist"], self.extract().size
            return (lambda s: nulls.random_index(doc, stop, size, s),
                    filtration_to_dict, filtration_from_dict)
        if kind == "random_sentence":
            doc, index = self.ingest(), self.extract()
            return (lambda s: nulls.random_sentence_order(doc, index, s),
                    filtration_to_dict, filtration_from_dict)
        if kind == "cont_config":
            fit = self.weight_fit()
            return (lambda s: nulls.cont_config(filt.total, fit, s),
                    network_to_dict, network_from_dict)
        fn = nulls.random_edge if kind == "random_edge" else nulls.node_ordered
        return lambda s: fn(filt, s), steps_to_list, steps_from_list

    def nulls(self) -> dict:
        """Members of every ensemble with their metric records, cached per (model, seed)."""
        out = {}
        for kind in nulls.MODEL_KINDS:
            master = self.seed(kind)
            build, to_obj, from_obj = self._member_builder(kind)
            records = []
            for s in nulls.member_seeds(master, self.cfg.ensemble_size):
                def compute(s=s):
                    art = build(s)
                    return {"artifact": to_obj(art),
                            "metrics": member_metrics(kind, art, self.cfg, s)}

                def load(obj):
                    from_obj(obj["artifact"])  # must parse; raises if damaged
                    if not isinstance(obj["metrics"], dict):
                        raise TypeError("bad metrics record")
                    return obj
                rec = self._json(f"nulls/{kind}/{s}.json", compute, from_obj=load)
                records.append((s, rec["metrics"]))
            out[kind] = {"master_seed": master, "members": records}
        return out

    def topology(self) -> dict:
        def compute():
            filt = self.build()
            out = {"sentence": barcodes_to_dict(topology.barcodes(filt, DIMS,
                                                                  self.cfg.max_simplices)),
                   "oaat": []}
            seeds = nulls.member_seeds(self.seed("oaat"), self.cfg.oaat_instances)
            for s in seeds:
                unit = network.oaat_unfurl(filt, s)
                bars = topology.barcodes(unit, DIMS, self.cfg.max_simplices)
                out["oaat"].append({"seed": s, "length": unit.length,
                                    "bars": barcodes_to_dict(bars)})
            return out

        def load(obj):
            barcodes_from_dict(obj["sentence"])
            for inst in obj["oaat"]:
                barcodes_from_dict(inst["bars"])
            return obj
        return self._json("barcodes.json", compute, from_obj=load)

    def analysis(self) -> dict:
        return self._json("metrics.json", self._compute_metrics)

    def _compute_metrics(self) -> dict:
        filt = self.build()
        core, comm = self.mesoscale()
        topo = self.topology()
        metrics = network_metrics(filt.total, core, comm)
        metrics["n_sentences"] = filt.n_sentences
        metrics["area_core_periphery"] = area_metric(filt, core)
        metrics.update(topology_metrics(barcodes_from_dict(topo["sentence"]),
                                        filt.length, "sentence"))
        oaat = [topology_metrics(barcodes_from_dict(i["bars"]), i["length"], "oaat")
                for i in topo["oaat"]]
        for key in oaat[0]:
            metrics[key] = float(np.mean([o[key] for o in oaat]))

        comm_or_empty = comm or mesoscale.CommunityPartition()
        ks = {g: analysis.ks_to_diagonal(c)
              for g, c in analysis.edge_group_curves(filt, core, comm_or_empty).items()}

        ensembles = self.nulls()
        blocks = {}
        for kind, ens in ensembles.items():
            names = sorted(set.intersection(*(set(m) for _, m in ens["members"]))
                           & set(metrics))
            block = {}
            for name in names:
                vals = [m[name] for _, m in ens["members"] if m[name] is not None]
                emp = metrics[name]
                block[name] = {
                    "empirical": emp,
                    "null_median": statistics.median(vals) if vals else None,
                    "percentile": None if emp is None else nulls.percentile_of(emp, vals),
                }
            blocks[kind] = {"master_seed": ens["master_seed"],
                            "n_members": len(ens["members"]), "metrics": block}
        return {"text_id": self.doc_id, "metrics": metrics, "ks_diagonal": ks,
                "weight_fit": self.weight_fit().to_dict(), "null_percentiles": blocks,
                "seeds": {"core": core.seed,
                          "communities": None if comm is None else comm.seed,
                          "oaat": [i["seed"] for i in topo["oaat"]]}}

    def run(self, until: str) -> dict:
        status = {"status": "complete", "failed_stage": None, "error": None}
        for stage in STAGES[:STAGES.index(until) + 1]:
            t0 = time.perf_counter()
            try:
                getattr(self, stage)()
            except Exception as exc:  # reported with the stage name below
                status.update(status="partial", failed_stage=stage,
                              error=f"{type(exc).__name__}: {exc}")
                break
            finally:
                self.timings[stage] = time.perf_counter() - t0
        if status["status"] == "complete" and until != STAGES[-1]:
            status["status"] = f"stopped_after_{until}"
        root = self.dir.parent.parent.parent
        artifacts = sorted(p.relative_to(root).as_posix() for p in self.dir.rglob("*")
                           if p.is_file()) if self.dir.exists() else []
        return {**status, "source": Path(self.path).name, "timings": self.timings,
                "artifacts": artifacts, "seeds": {t: self.seed(t) for t in SEED_TAGS}}


def _run_text(args):
    cfg, path, cache_root, until = args
    tr = TextRun(cfg, path, Path(cache_root))
    return tr.doc_id, tr.run(until)


def run_pipeline(cfg: RunConfig, jobs: int | None = None, only: str | None = None,
                 raise_on_error: bool = True) -> RunManifest:
    """Run all stages (or up to ``only``) for every corpus text.

    Stage failures are recorded in the manifest; with ``raise_on_error`` the
    first one is then raised as :class:`StageError`.
    """
    cfg.validate()
    until = only or STAGES[-1]
    if until not in STAGES:
        raise ConfigError(f"unknown stage {until!r}; choose from {', '.join(STAGES)}")
    manifest = RunManifest(cfg.config_hash(), str(cfg.output_dir), cfg.seed,
                           list(STAGES[:STAGES.index(until) + 1]), ratings=cfg.ratings)
    cache_root = manifest.cache_dir
    cache_root.mkdir(parents=True, exist_ok=True)
    tasks = [(cfg, p, str(cache_root), until) for p in cfg.corpus]
    jobs = jobs or cfg.jobs
    t0 = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_text, tasks))
    else:
        results = [_run_text(t) for t in tasks]
    for doc_id, rec in results:
        manifest.timings[doc_id] = rec.pop("timings")
        manifest.documents[doc_id] = rec
    manifest.timings["_total"] = time.perf_counter() - t0
    manifest.save()
    if raise_on_error:
        for doc_id, rec in manifest.documents.items():
            if rec["status"] == "partial":
                raise StageError(rec["failed_stage"], doc_id, RuntimeError(rec["error"]))
    return manifest


# -- reporting -------------------------------------------------------------------------

def read_ratings(path) -> dict[str, tuple[float, int]]:
    out = {}
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        missing = {"text_id", "avg_rating", "n_ratings"} - set(reader.fieldnames or ())
        if missing:
            raise ValueError(f"ratings table lacks columns {sorted(missing)}")
        for row in reader:
            out[row["text_id"].strip()] = (float(row["avg_rating"]), int(row["n_ratings"]))
    return out


def correlation_block(summaries: dict, ratings: dict, min_ratings: int = 5) -> dict:
    """Spearman and Pearson correlation of every metric with the average rating."""
    kept = sorted(t for t in summaries if t in ratings and ratings[t][1] >= min_ratings)
    block = {"texts": kept, "min_ratings": min_ratings, "metrics": {}}
    if len(kept) < 3:
        block["note"] = "fewer than 3 rated texts; correlations not computed"
        return block
    y = [ratings[t][0] for t in kept]
    for name in sorted(summaries[kept[0]]["metrics"]):
        x = [summaries[t]["metrics"].get(name) for t in kept]
        if any(v is None for v in x):
            continue
        entry = {}
        for label, fn in (("spearman", analysis.spearman), ("pearson", analysis.pearson)):
            try:
                entry[label] = fn(x, y).to_dict()
            except analysis.DegenerateStatisticError:
                entry[label] = None
        block["metrics"][name] = entry
    return block


def export_report(manifest: RunManifest | str | os.PathLike) -> Path:
    """Write per-text summaries, CSVs and the corpus summary under ``report/``."""
    if not isinstance(manifest, RunManifest):
        manifest = RunManifest.load(manifest)
    out = Path(manifest.output_dir) / "report"
    out.mkdir(parents=True, exist_ok=True)
    summaries, notes = {}, []
    for doc_id, rec in sorted(manifest.documents.items()):
        cdir = manifest.cache_dir / doc_id
        mpath = cdir / "metrics.json"
        if not mpath.exists():
            notes.append(f"{doc_id}: {rec['status']}; no metrics available")
            continue
        summary = _read_json(mpath)
        summaries[doc_id] = summary
        tdir = out / doc_id
        tdir.mkdir(exist_ok=True)
        _write_json(tdir / "summary.json", summary)
        _export_text_files(cdir, tdir, summary)

    corpus = {"config_hash": manifest.config_hash, "texts": summaries}
    features = {}
    if manifest.ratings and Path(manifest.ratings).is_file():
        ratings = read_ratings(manifest.ratings)
        corpus["correlations"] = correlation_block(summaries, ratings)
        kept = corpus["correlations"]["texts"]
        if len(kept) >= 3:
            features["avg_rating"] = [ratings[t][0] for t in kept]
            for name in corpus["correlations"]["metrics"]:
                features[name] = [summaries[t]["metrics"][name] for t in kept]
    else:
        notes.append("no ratings table; correlation block omitted")
    if features:
        names, rho, p = analysis.correlation_matrix(features)
        analysis.write_correlation_csv(names, rho, p, out / "correlation_matrix.csv")
    corpus["notes"] = notes
    _write_json(out / "summary.json", corpus)
    return out


def _export_text_files(cdir: Path, tdir: Path, summary: dict) -> None:
    filt = filtration_from_dict(_read_json(cdir / "filtration.json"))
    core, comm = partition_from_dict(_read_json(cdir / "partition.json"))
    topo = _read_json(cdir / "barcodes.json")
    network.write_network_csv(filt.total, tdir / "network.csv")
    network.write_filtration_csv(filt, tdir / "filtration.csv")
    mesoscale.write_partition_csv(core, comm, filt.total.nodes, tdir / "partition.csv")
    with open(cdir / "index.tsv", encoding="utf-8") as src:
        (tdir / "index.tsv").write_text(src.read(), encoding="utf-8")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        curves = analysis.introduction_curves(filt, core)
    analysis.write_curves_csv(curves, tdir / "curves.csv")
    analysis.write_curves_csv(
        analysis.edge_group_curves(filt, core, comm or mesoscale.CommunityPartition()),
        tdir / "edge_curves.csv")
    bars = barcodes_from_dict(topo["sentence"])
    topology.write_barcodes_csv(bars, tdir / "barcodes_sentence.csv")
    topology.write_betti_csv(topology.betti_curves(bars, filt.length), tdir / "betti_sentence.csv")
    for i, inst in enumerate(topo["oaat"]):
        topology.write_barcodes_csv(barcodes_from_dict(inst["bars"]),
                                    tdir / f"barcodes_oaat_{i}.csv")
    ndir = tdir / "nulls"
    ndir.mkdir(exist_ok=True)
    for kind, block in summary["null_percentiles"].items():
        ens = nulls.NullEnsemble(kind, block["master_seed"], [
            (s, None) for s in nulls.member_seeds(block["master_seed"], block["n_members"])])
        paths = [f"cache/{cdir.parent.name}/{cdir.name}/nulls/{kind}/{s}.json" for s in ens.seeds]
        _write_json(ndir / f"{kind}.json", ens.manifest(paths))
    if (cdir / "fit.json").exists():
        _write_json(tdir / "weight_fit.json", _read_json(cdir / "fit.json"))
