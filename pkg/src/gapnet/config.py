"""Run configuration: a flat ``key = value`` text file."""
from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path


class ConfigError(ValueError):
    """Invalid or inconsistent run configuration."""


PATH_KEYS = ("stoplist", "dictionary", "frequency_table", "ratings", "abbreviations")
# settings that change how a run executes but not what it computes
NON_SEMANTIC = ("output_dir", "jobs")


@dataclass
class RunConfig:
    corpus: list[str] = field(default_factory=list)
    output_dir: str = "gapnet-out"
    stoplist: str | None = None
    dictionary: str | None = None
    frequency_table: str | None = None
    ratings: str | None = None
    abbreviations: str | None = None
    index_fraction: float = 0.5
    min_keyword_frequency: int = 5
    max_phrase_length: int = 4
    min_keyword_length: int = 3
    gamma_c: float = 1.0
    gamma_m: float = 1.0
    core_restarts: int = 10
    oaat_instances: int = 10
    ensemble_size: int = 100
    seed: int = 0
    jobs: int = 1
    max_simplices: int = 20_000_000

    def validate(self) -> "RunConfig":
        if not self.corpus:
            raise ConfigError("no corpus files configured")
        for p in self.corpus:
            if not Path(p).is_file():
                raise ConfigError(f"corpus file not found: {p}")
        for key in PATH_KEYS:
            value = getattr(self, key)
            if value is not None and not Path(value).is_file():
                raise ConfigError(f"{key} file not found: {value}")
        if not 0 < self.index_fraction <= 1:
            raise ConfigError("index_fraction must lie in (0, 1]")
        if self.ensemble_size < 1:
            raise ConfigError("ensemble_size must be at least 1")
        for key in ("min_keyword_frequency", "max_phrase_length", "min_keyword_length",
                    "core_restarts", "oaat_instances", "jobs", "max_simplices"):
            if getattr(self, key) < 1:
                raise ConfigError(f"{key} must be at least 1")
        ids = [Path(p).stem for p in self.corpus]
        if len(set(ids)) != len(ids):
            raise ConfigError("corpus file names must have distinct stems")
        return self

    def semantic_dict(self) -> dict:
        d = asdict(self)
        for key in NON_SEMANTIC:
            d.pop(key)
        for key in PATH_KEYS:
            if d[key] is not None:
                d[key] = _file_digest(d[key])
        d["corpus"] = [[Path(p).stem, _file_digest(p)] for p in self.corpus]
        return d

    def config_hash(self) -> str:
        blob = json.dumps(self.semantic_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


def _file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _coerce(name: str, raw: str, base: Path):
    types = {f.name: f.type for f in fields(RunConfig)}
    if name not in types:
        raise ConfigError(f"unknown config key {name!r}")
    if name == "corpus":
        out = []
        for item in (s.strip() for s in raw.split(",")):
            if not item:
                continue
            path = _resolve(item, base)
            if Path(path).is_dir():
                out.extend(str(p) for p in sorted(Path(path).glob("*.txt")))
            else:
                out.append(path)
        return out
    if name in PATH_KEYS or name == "output_dir":
        return _resolve(raw, base) if raw else None
    kind = types[name]
    try:
        if "int" in str(kind):
            return int(raw)
        if "float" in str(kind):
            return float(raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for {name}: {raw!r}") from exc
    return raw


def _resolve(value: str, base: Path) -> str:
    p = Path(value).expanduser()
    return str(p if p.is_absolute() else (base / p))


def parse_config(text: str, base_dir=".") -> RunConfig:
    """Parse ``key = value`` lines; ``#`` starts a comment line."""
    base = Path(base_dir)
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, raw = (s.strip() for s in line.split("=", 1))
        values[key] = _coerce(key, raw, base)
    return RunConfig(**values)


def load_config(path) -> RunConfig:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    return parse_config(path.read_text(encoding="utf-8"), path.parent)


def dump_config(cfg: RunConfig) -> str:
    lines = []
    for f in fields(RunConfig):
        value = getattr(cfg, f.name)
        if value is None:
            continue
        if f.name == "corpus":
            value = ", ".join(value)
        lines.append(f"{f.name} = {value}")
    return "\n".join(lines) + "\n"
