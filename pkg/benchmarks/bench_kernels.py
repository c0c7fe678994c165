#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot kernels on synthetic workloads and a full paper-scale
scenario run under each backend:

    python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hubroster import _kernels
from hubroster.config import ScenarioParams
from hubroster.demand import GeneratorConfig, generate_arrivals
from hubroster.engine import ScenarioConfig, run_scenario
from hubroster.network import random_network


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_within_hub(impl, rows):
    def run():
        for x in rows:
            impl.within_hub_runs(x, 1, 8, 0)

    return run


def bench_merge(impl, runs_by_hub, pairs):
    def run():
        for _ in range(50):
            impl.merge_runs([list(r) for r in runs_by_hub], pairs, 8, 2, -1)

    return run


def bench_replay(impl, arrival_rows, cap_rows):
    def run():
        for arr, cap in zip(arrival_rows, cap_rows):
            impl.fifo_replay(arr, cap, 1, 150)

    return run


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    n_rows = 500 if args.quick else 5000
    rows = [[int(v) for v in rng.integers(0, 8, 24)] for _ in range(n_rows)]
    runs_by_hub = []
    for _ in range(52):
        runs = sorted(
            (int(s), int(s) + int(l))
            for s, l in zip(rng.integers(0, 18, 25), rng.integers(1, 8, 25))
        )
        runs_by_hub.append([(s, min(e, 24)) for s, e in runs])
    pairs = []
    for i in range(52):
        for j in range(i + 1, 52):
            if rng.random() < 0.12:
                pairs.append((i, j, float(rng.random())))
    arrival_rows = [[int(v) for v in rng.integers(0, 3000, 24)] for _ in range(500)]
    cap_rows = [[int(v) for v in rng.integers(0, 20, 24)] for _ in range(500)]

    backends = _kernels.available_backends()
    print(f"available backends: {backends}\n")
    results = {}
    for name in backends:
        impl = _kernels._pure if name == "pure" else __import__(
            "hubroster._kernels._core", fromlist=["_core"]
        )
        results[name] = {
            "within_hub_runs": _time(bench_within_hub(impl, rows)),
            "merge_runs": _time(bench_merge(impl, runs_by_hub, pairs)),
            "fifo_replay": _time(bench_replay(impl, arrival_rows, cap_rows)),
        }

    net = random_network(n_hubs=52, n_gateways=3, seed=42)
    volume = 100_000 if args.quick else 1_173_253
    arrivals = generate_arrivals(net, GeneratorConfig(daily_volume=volume), 42)
    params = ScenarioParams(seed=42)
    previous = _kernels.get_backend()
    try:
        for name in backends:
            _kernels.set_backend(name)
            cfg = ScenarioConfig.for_scenario(1, net, arrivals, params, noise="paper")
            results[name]["full_scenario_run"] = _time(lambda: run_scenario(cfg), repeat=1)
    finally:
        _kernels.set_backend(previous)

    width = max(len(k) for k in next(iter(results.values())))
    header = f"{'kernel':<{width}}" + "".join(f"{n:>12}" for n in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for key in next(iter(results.values())):
        row = f"{key:<{width}}" + "".join(f"{results[n][key]:>11.4f}s" for n in backends)
        if len(backends) == 2:
            row += f"{results[backends[0]][key] / results[backends[1]][key]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
