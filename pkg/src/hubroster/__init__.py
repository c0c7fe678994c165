"""Rolling-horizon workforce scheduling and relocation for parcel hub networks."""

from ._kernels import get_backend
from .config import ScenarioParams
from .demand import (
    ArrivalSeries,
    GeneratorConfig,
    deduct_assigned,
    forecast,
    generate_arrivals,
    labor_demand,
)
from .engine import ScenarioConfig, SimReport, replay_execution, run_scenario
from .ledger import CostLedger, CostRates, emergency_penalty, moving_payment
from .network import Hub, HubNetwork, MovingPair, build_moving_pairs, distance, random_network
from .pool import Worker, WorkforcePool
from .shifts import Segment, Shift, combine_within_hub, init_max_shifts, merge_across_hubs
from .valuation import ValueWeights, shift_value, should_fix

__version__ = "0.1.0"

__all__ = [
    "ArrivalSeries",
    "CostLedger",
    "CostRates",
    "GeneratorConfig",
    "Hub",
    "HubNetwork",
    "MovingPair",
    "ScenarioConfig",
    "ScenarioParams",
    "Segment",
    "Shift",
    "SimReport",
    "Worker",
    "WorkforcePool",
    "ValueWeights",
    "build_moving_pairs",
    "combine_within_hub",
    "deduct_assigned",
    "distance",
    "emergency_penalty",
    "forecast",
    "generate_arrivals",
    "get_backend",
    "init_max_shifts",
    "labor_demand",
    "merge_across_hubs",
    "moving_payment",
    "random_network",
    "replay_execution",
    "run_scenario",
    "shift_value",
    "should_fix",
]
