"""Run parameters, config file loading, and config hashing."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass
from pathlib import Path


@dataclass
class ScenarioParams:
    """Scheduling knobs shared by the builders, the valuer, and the engine.

    dwell_h        max hours a parcel may wait at a hub after arrival
    max_work_h     working-hour cap, per shift and per worker-day
    work_rate      parcels one worker processes per hour
    replan_min     minutes between forecast refreshes
    horizon_h      planning horizon in hour slots
    urgency_weight / utilization_weight / continuity_weight
                   value-function weights (must sum to 1)
    fix_lead_h     lead time scale of the urgency term
    fix_threshold  minimum value at which a candidate shift is fixed
    max_gap_h      largest idle gap allowed inside a merged shift
    """

    dwell_h: int = 1
    max_work_h: int = 8
    work_rate: int = 150
    replan_min: int = 60
    horizon_h: int = 24
    urgency_weight: float = 0.4
    utilization_weight: float = 0.3
    continuity_weight: float = 0.3
    fix_lead_h: float = 4.0
    fix_threshold: float = 0.9
    max_gap_h: int = 2
    seed: int = 0

    def __post_init__(self):
        self.validate()

    def validate(self):
        w = (self.urgency_weight, self.utilization_weight, self.continuity_weight)
        if any(x < 0 for x in w):
            raise ValueError("value weights must be non-negative")
        if abs(sum(w) - 1.0) > 1e-9:
            raise ValueError(f"value weights must sum to 1, got {sum(w)}")
        if not 0.0 <= self.fix_threshold <= 1.0:
            raise ValueError("fix_threshold must lie in [0, 1]")
        if self.dwell_h < 0:
            raise ValueError("dwell_h must be >= 0")
        if self.max_work_h <= 0:
            raise ValueError("max_work_h must be positive")
        if self.work_rate <= 0:
            raise ValueError("work_rate must be positive")
        if self.replan_min <= 0:
            raise ValueError("replan_min must be positive")
        if self.horizon_h < 1:
            raise ValueError("horizon_h must be >= 1")
        if self.max_gap_h < 0:
            raise ValueError("max_gap_h must be >= 0")
        if self.fix_lead_h <= 0:
            raise ValueError("fix_lead_h must be positive")

    @property
    def replan_h(self) -> float:
        return self.replan_min / 60.0


DEFAULT_CONFIG = {
    "seed": 42,
    "network": {
        "hubs": 52,
        "gateways": 3,
        "area_km": 24.0,
        "move_radius_m": 3000.0,
        "walk_speed_m_per_h": 15000.0,
    },
    "arrivals": {
        "daily_volume": 1_173_253,
        "gateway_weight": 8.0,
        "hub_jitter": 0.2,
        "cell_jitter": 0.25,
        "local_peak_h": 12,
        "gateway_peak_h": 2,
    },
    "params": {},  # overrides of ScenarioParams fields
}


def load_config(path=None) -> dict:
    """Read a config JSON file and fill in defaults for missing sections."""
    cfg = json.loads(json.dumps(DEFAULT_CONFIG))  # deep copy
    if path is not None:
        user = json.loads(Path(path).read_text())
        for key, value in user.items():
            if isinstance(value, dict) and isinstance(cfg.get(key), dict):
                cfg[key].update(value)
            else:
                cfg[key] = value
    return cfg


def params_from_config(cfg: dict, seed=None) -> ScenarioParams:
    kwargs = dict(cfg.get("params", {}))
    kwargs["seed"] = cfg["seed"] if seed is None else seed
    return ScenarioParams(**kwargs)


def config_hash(cfg: dict) -> str:
    """Short stable digest of a config dict, stamped into output files."""
    blob = json.dumps(cfg, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def file_header(seed, cfg_hash: str) -> str:
    """Comment line carried at the top of every emitted CSV."""
    return f"# seed={seed} config={cfg_hash}\n"


def params_dict(params: ScenarioParams) -> dict:
    return asdict(params)
