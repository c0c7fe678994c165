"""Command-line harness: generate instances, run scenarios, compare ledgers.

    hubroster generate --config cfg.json --seed 42 --out runs/base
    hubroster run      --out runs/base --scenario all --noise paper
    hubroster compare  runs/base/ledger_s1.json runs/base/ledger_s3.json

All emitted files carry the seed and config hash in a header so a rerun of
the same manifest is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .config import config_hash, file_header, load_config, params_from_config
from .demand import (
    GeneratorConfig,
    generate_arrivals,
    read_arrivals_csv,
    write_arrivals_csv,
    write_forecast_csv,
)
from .engine import (
    ScenarioConfig,
    run_scenario,
    write_flows_csv,
    write_roster_csv,
    write_series_csv,
)
from .ledger import CATEGORIES, read_ledger_json, write_ledger_csv, write_ledger_json
from .network import load_network, random_network, save_network


def _build_instance(cfg: dict, seed: int):
    net_cfg = cfg["network"]
    net = random_network(
        n_hubs=int(net_cfg["hubs"]),
        n_gateways=int(net_cfg["gateways"]),
        area_m=float(net_cfg["area_km"]) * 1000.0,
        d_max_m=float(net_cfg["move_radius_m"]),
        speed_m_per_h=float(net_cfg["walk_speed_m_per_h"]),
        seed=seed,
    )
    arr_cfg = cfg["arrivals"]
    profile = GeneratorConfig(
        daily_volume=int(arr_cfg["daily_volume"]),
        horizon_h=params_from_config(cfg, seed).horizon_h,
        gateway_weight=float(arr_cfg["gateway_weight"]),
        hub_jitter=float(arr_cfg["hub_jitter"]),
        cell_jitter=float(arr_cfg["cell_jitter"]),
        local_peak_h=int(arr_cfg["local_peak_h"]),
        gateway_peak_h=int(arr_cfg["gateway_peak_h"]),
    )
    arrivals = generate_arrivals(net, profile, seed)
    return net, arrivals


def cmd_generate(args) -> int:
    cfg = load_config(args.config)
    seed = cfg["seed"] if args.seed is None else args.seed
    cfg["seed"] = seed
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    try:
        net, arrivals = _build_instance(cfg, seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    header = file_header(seed, config_hash(cfg))
    save_network(net, out / "network.json")
    write_arrivals_csv(out / "arrivals.csv", arrivals, header)
    (out / "config.json").write_text(json.dumps(cfg, indent=2, sort_keys=True) + "\n")
    total = sum(s.total for s in arrivals.values())
    print(f"generated {len(net)} hubs, {total} arrivals -> {out}")
    return 0


def cmd_run(args) -> int:
    out = Path(args.out)
    net_path = out / "network.json"
    arr_path = out / "arrivals.csv"
    if not net_path.exists() or not arr_path.exists():
        print(f"error: no generated instance in {out} (run `generate` first)", file=sys.stderr)
        return 1
    cfg_path = out / "config.json"
    cfg = load_config(cfg_path if cfg_path.exists() else args.config)
    seed = cfg["seed"] if args.seed is None else args.seed
    cfg["seed"] = seed
    header = file_header(seed, config_hash(cfg))

    net = load_network(net_path)
    arrivals = read_arrivals_csv(arr_path)
    params = params_from_config(cfg, seed)
    scenarios = [1, 2, 3] if args.scenario == "all" else [int(args.scenario)]

    reports = []
    for num in scenarios:
        sc = ScenarioConfig.for_scenario(num, net, arrivals, params, noise=args.noise)
        report = run_scenario(
            sc,
            collect_forecasts=args.debug_forecasts,
            collect_worker_states=args.debug_workers,
        )
        reports.append(report)
        meta = {"seed": seed, "config": config_hash(cfg), "scenario": num, "noise": args.noise}
        write_ledger_json(out / f"ledger_s{num}.json", report.ledger, meta)
        write_ledger_csv(out / f"ledger_s{num}.csv", report.ledger, header)
        write_roster_csv(out / f"roster_s{num}.csv", report, header)
        write_series_csv(out / f"series_s{num}.csv", report, header)
        write_flows_csv(out / f"flows_s{num}.csv", report, header)
        if args.debug_forecasts:
            write_forecast_csv(out / f"forecasts_s{num}.csv", report.forecast_snapshots, header)
        if args.debug_workers:
            _write_worker_states(out / f"workers_s{num}.csv", report, header)
        moving_share = 100.0 * report.merged_shift_count / max(1, len(report.roster))
        print(
            f"scenario {num}: {len(report.roster)} shifts, {report.hires} workers, "
            f"{report.merged_shift_count} cross-hub ({moving_share:.1f}%), "
            f"{report.late_parcels} late parcels, total {report.ledger.total:.0f} Yuan "
            f"[{report.runtime_s:.2f}s]"
        )

    if len(reports) > 1:
        print()
        print(_comparison_table({f"scenario {r.label[-1]}": r.ledger.to_dict() for r in reports}))
    return 0


def _write_worker_states(path, report, header: str) -> None:
    import csv

    with open(path, "w", newline="") as fh:
        fh.write(header)
        writer = csv.writer(fh)
        writer.writerow(["step_h", "worker_id", "state", "shift_id"])
        for row in report.worker_states:
            writer.writerow([f"{row[0]:g}", row[1], row[2], "" if row[3] is None else row[3]])


def _comparison_table(ledgers: dict[str, dict]) -> str:
    names = list(ledgers)
    cells = [len(f"{ledgers[n][cat]:.0f}") for n in names for cat in (*CATEGORIES, "total")]
    width = max(max(len(n) for n in names), max(cells)) + 2
    lines = [f"{'cost type':<12}" + "".join(f"{n:>{width}}" for n in names)]
    for cat in (*CATEGORIES, "total"):
        lines.append(f"{cat:<12}" + "".join(f"{ledgers[n][cat]:>{width}.0f}" for n in names))
    base = names[0]
    deltas = [ledgers[n]["total"] - ledgers[base]["total"] for n in names]
    lines.append(f"{'delta':<12}" + "".join(f"{d:>{width}.0f}" for d in deltas))
    return "\n".join(lines)


def cmd_compare(args) -> int:
    if len(args.ledgers) < 2:
        print("error: compare needs at least two ledger files", file=sys.stderr)
        return 2
    try:
        ledgers = {Path(p).stem: read_ledger_json(p) for p in args.ledgers}
    except (ValueError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(_comparison_table(ledgers))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="hubroster", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="synthesize a network and its daily arrivals")
    p_gen.add_argument("--config", type=Path, default=None, help="config JSON (defaults embedded)")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--out", type=Path, required=True)
    p_gen.set_defaults(func=cmd_generate)

    p_run = sub.add_parser("run", help="run scheduling scenarios on a generated instance")
    p_run.add_argument("--config", type=Path, default=None)
    p_run.add_argument("--seed", type=int, default=None)
    p_run.add_argument("--out", type=Path, required=True)
    p_run.add_argument("--scenario", choices=["1", "2", "3", "all"], default="all")
    p_run.add_argument("--noise", choices=["paper", "perfect"], default="paper")
    p_run.add_argument("--debug-forecasts", action="store_true")
    p_run.add_argument("--debug-workers", action="store_true")
    p_run.set_defaults(func=cmd_run)

    p_cmp = sub.add_parser("compare", help="side-by-side cost comparison of ledger files")
    p_cmp.add_argument("ledgers", nargs="+")
    p_cmp.set_defaults(func=cmd_compare)

    args = parser.parse_args(argv)
    started = time.perf_counter()
    code = args.func(args)
    if code == 0 and args.command == "run":
        print(f"\ntotal wall time {time.perf_counter() - started:.2f}s")
    return code


if __name__ == "__main__":
    sys.exit(main())
