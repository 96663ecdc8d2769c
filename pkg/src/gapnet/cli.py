"""Command-line entry point: ``validate``, ``run`` and ``report``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, load_config
from .pipeline import STAGES, RunManifest, StageError, export_report, run_pipeline


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapnet", description="Semantic networks and knowledge gaps of expository texts.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--config", required=True, type=Path, help="key = value config file")
        p.add_argument("--seed", type=int, default=None, help="override the master seed")

    p = sub.add_parser("validate", help="check the config and its input files")
    common(p)
    p = sub.add_parser("run", help="run the pipeline and write the report")
    common(p)
    p.add_argument("--jobs", type=int, default=None, help="worker processes across texts")
    p.add_argument("--only", choices=STAGES, default=None,
                   help="stop after this stage, reusing cached upstream results")
    p = sub.add_parser("report", help="rewrite the report from a finished run")
    common(p)
    return parser


def _load(args):
    cfg = load_config(args.config)
    if args.seed is not None:
        if not 0 <= args.seed < 2**64:
            raise ConfigError("--seed must be an unsigned 64-bit integer")
        cfg.seed = args.seed
    return cfg.validate()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _load(args)
        if args.verb == "validate":
            print(f"config ok: {len(cfg.corpus)} texts, hash {cfg.config_hash()}")
            return 0
        if args.verb == "run":
            if args.jobs is not None and args.jobs < 1:
                raise ConfigError("--jobs must be at least 1")
            manifest = run_pipeline(cfg, jobs=args.jobs, only=args.only)
            if args.only in (None, STAGES[-1]):
                print(f"report written to {export_report(manifest)}")
            else:
                print(f"stopped after stage '{args.only}'")
            return 0
        path = Path(cfg.output_dir) / "manifest.json"
        if not path.is_file():
            raise ConfigError(f"no manifest at {path}; run the pipeline first")
        manifest = RunManifest.load(path)
        if manifest.config_hash != cfg.config_hash():
            raise ConfigError("manifest was produced by a different config")
        print(f"report written to {export_report(manifest)}")
        return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except StageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
