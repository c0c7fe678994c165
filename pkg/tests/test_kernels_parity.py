"""Compiled and pure kernels must agree exactly on randomized instances."""

import numpy as np
import pytest

from hubroster import _kernels

_core = pytest.importorskip(
    "hubroster._kernels._core", reason="compiled kernels not built on this install"
)
from hubroster._kernels import _pure  # noqa: E402


def test_backend_reporting():
    assert "pure" in _kernels.available_backends()
    assert _kernels.get_backend() in _kernels.available_backends()


def test_part1_and_within_hub_parity():
    rng = np.random.default_rng(0)
    for _ in range(400):
        n = int(rng.integers(1, 32))
        x = [int(v) for v in rng.integers(0, 5, n)]
        rho = int(rng.integers(1, 10))
        dwell = int(rng.integers(0, 4))
        start_min = int(rng.integers(0, n))
        assert _pure.part1_runs(x, rho, start_min) == _core.part1_runs(x, rho, start_min)
        assert _pure.within_hub_runs(x, dwell, rho, start_min) == _core.within_hub_runs(
            x, dwell, rho, start_min
        )


def test_fifo_parity():
    rng = np.random.default_rng(1)
    for _ in range(400):
        n = int(rng.integers(1, 32))
        demand = [int(v) for v in rng.integers(0, 5, n)]
        cap = [int(v) for v in rng.integers(0, 5, n)]
        dwell = int(rng.integers(0, 4))
        assert _pure.fifo_match_units(demand, cap, dwell) == _core.fifo_match_units(
            demand, cap, dwell
        )
        arrivals = [int(v) * 149 for v in demand]
        assert _pure.fifo_replay(arrivals, cap, dwell, 150) == _core.fifo_replay(
            arrivals, cap, dwell, 150
        )


def test_merge_parity():
    rng = np.random.default_rng(2)
    for _ in range(300):
        n_hubs = int(rng.integers(2, 6))
        runs_by_hub = []
        for _h in range(n_hubs):
            runs = []
            for _ in range(int(rng.integers(0, 5))):
                s = int(rng.integers(0, 20))
                runs.append((s, min(s + int(rng.integers(1, 8)), 24)))
            runs_by_hub.append(sorted(runs))
        pairs = []
        for i in range(n_hubs):
            for j in range(i + 1, n_hubs):
                if rng.random() < 0.7:
                    pairs.append((i, j, float(rng.random() * 2)))
        assert _pure.merge_runs([list(r) for r in runs_by_hub], pairs, 8, 2) == _core.merge_runs(
            [list(r) for r in runs_by_hub], pairs, 8, 2
        )


def test_engine_identical_under_both_backends():
    from hubroster.config import ScenarioParams
    from hubroster.demand import GeneratorConfig, generate_arrivals
    from hubroster.engine import ScenarioConfig, run_scenario
    from hubroster.network import random_network

    net = random_network(n_hubs=6, n_gateways=2, area_m=5000, seed=3)
    arrivals = generate_arrivals(net, GeneratorConfig(daily_volume=60_000), 3)
    params = ScenarioParams(seed=3)

    def run():
        cfg = ScenarioConfig.for_scenario(1, net, arrivals, params, noise="paper")
        rep = run_scenario(cfg)
        return (
            rep.ledger.to_dict(),
            [(e.worker_id, e.lead_time_h, tuple((s.hub_id, s.start_h, s.end_h, s.kind) for s in e.shift.segments)) for e in rep.roster],
        )

    previous = _kernels.get_backend()
    try:
        _kernels.set_backend("pure")
        pure_out = run()
        _kernels.set_backend("compiled")
        compiled_out = run()
    finally:
        _kernels.set_backend(previous)
    assert pure_out == compiled_out
