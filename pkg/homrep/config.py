# config.py

import logging
import os
from functools import lru_cache

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from homrep.utilities.errors import ContractViolation
from homrep.utilities.utils import get_root_directory

ENV_PREFIX = "HOMREP_"


class Tolerances(BaseModel):
    model_config = ConfigDict(frozen=True)

    rank_eps: float = Field(1e-9, gt=0)
    idempotent_tol: float = Field(1e-6, gt=0)
    verify_tol: float = Field(1e-6, gt=0)
    snap_tol: float = Field(1e-6, gt=0)
    snap_max_denominator: int = Field(10_000, ge=1)
    flow_round_tol: float = Field(1e-9, gt=0)


class SliceBudget(BaseModel):
    """Rows with at most k + extra_nodes nodes and k + extra_edges edges."""
    model_config = ConfigDict(frozen=True)

    extra_nodes: int = Field(3, ge=0)
    extra_edges: int = Field(4, ge=0)
    max_rows: int | None = Field(120, ge=1)


class AlgebraBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    extra_nodes: int = Field(2, ge=1)
    extra_edges: int = Field(3, ge=0)
    max_levels: int = Field(3, ge=1)
    min_levels: int = Field(2, ge=1)


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int = 0
    threads: int = Field(1, ge=1)
    log_level: str = "INFO"
    cache_dir: str = ""
    cache_max_entries: int | None = Field(1_000_000, ge=1)
    psd_levels: int = Field(2, ge=0)
    heldout_graphs: int = Field(50, ge=0)
    heldout_max_nodes: int = Field(6, ge=0)
    elimination_max_entries: int = Field(10_000_000, ge=1)
    tolerances: Tolerances = Tolerances()
    slice_budget: SliceBudget = SliceBudget()
    algebra_budget: AlgebraBudget = AlgebraBudget()


def default_config_path():
    return os.path.join(get_root_directory(), "config.yaml")


def _env_overrides(environ):
    overrides = {}
    for key, raw in environ.items():
        if not key.startswith(ENV_PREFIX):
            continue
        path = key[len(ENV_PREFIX):].lower().split("__")
        node = overrides
        for part in path[:-1]:
            node = node.setdefault(part, {})
        # yaml typing turns "1e-6" or "200" into numbers
        node[path[-1]] = yaml.safe_load(raw) if raw != "" else ""
    return overrides


def _merge(base, extra):
    merged = dict(base)
    for key, value in extra.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_settings(path=None, environ=None, **overrides):
    """Read config.yaml, apply HOMREP_* environment overrides, then keyword overrides."""
    load_dotenv()
    path = path or default_config_path()
    data = {}
    if os.path.exists(path):
        with open(path, "r") as file:
            data = yaml.safe_load(file) or {}
    else:
        logging.warning(f"config file {path} not found, using built-in defaults")
    data = _merge(data, _env_overrides(os.environ if environ is None else environ))
    data = _merge(data, {k: v for k, v in overrides.items() if v is not None})
    try:
        return Settings.model_validate(data)
    except ValidationError as e:
        raise ContractViolation(f"invalid configuration: {e}") from e


@lru_cache(maxsize=1)
def get_settings():
    return load_settings()
