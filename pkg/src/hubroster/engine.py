"""Rolling-horizon scheduling engine and execution replay.

Every replan interval the engine refreshes arrival forecasts, converts them
to integer labor demand, subtracts what the already-fixed roster covers
(first-in-first-out, so dwell-deferred coverage is not double-booked),
rebuilds candidate shifts from the residual, fixes the high-value ones plus
everything starting before the next replan, assigns pooled workers, and
books all payments. After the last step the roster is replayed against the
actual arrivals to count parcels that missed their dwell deadline.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as kernels
from .config import ScenarioParams
from .demand import ArrivalSeries, ForecastSnapshot, forecast_matrix
from .ledger import CostLedger, CostRates, accrue_shift, lateness_penalty, moving_payment
from .network import HubNetwork, build_moving_pairs
from .pool import WorkforcePool
from .shifts import RESTING, TRAVEL, WORKING, Shift, combine_within_hub_detail, merge_across_hubs
from .valuation import ValueWeights, shift_value, should_fix

SCENARIO_PRESETS = {
    1: {"allow_cross_hub": True, "rolling": True},
    2: {"allow_cross_hub": False, "rolling": True},
    3: {"allow_cross_hub": True, "rolling": False},
}


@dataclass
class ScenarioConfig:
    network: HubNetwork
    actuals: dict[int, ArrivalSeries]
    params: ScenarioParams
    allow_cross_hub: bool = True
    rolling: bool = True
    noise: str = "paper"  # "paper" or "perfect"
    rates: CostRates = field(default_factory=CostRates)
    label: str = ""

    @classmethod
    def for_scenario(cls, number: int, network, actuals, params, noise="paper", rates=None):
        preset = SCENARIO_PRESETS[number]
        return cls(
            network=network,
            actuals=actuals,
            params=params,
            noise=noise,
            rates=rates or CostRates(),
            label=f"scenario{number}",
            **preset,
        )

    def validate(self):
        self.params.validate()
        if self.noise not in ("paper", "perfect"):
            raise ValueError(f"unknown noise mode {self.noise!r}")
        net_ids = set(self.network.hub_ids)
        if set(self.actuals) != net_ids:
            raise ValueError("arrivals must cover exactly the network's hubs")
        n = self.params.horizon_h
        for series in self.actuals.values():
            if len(series.arrivals) != n:
                raise ValueError(f"arrival series length must equal horizon {n}")


@dataclass
class RosterEntry:
    shift_id: int
    shift: Shift
    worker_id: int
    lead_time_h: float
    is_new_hire: bool


@dataclass
class SimReport:
    label: str
    ledger: CostLedger
    roster: list[RosterEntry]
    late_parcels: int
    series: dict[int, dict]  # hub -> {arrivals, working, resting}
    flows: dict[tuple[int, int, int], int]  # (from, to, window_start) -> moves
    runtime_s: float
    hires: int
    forecast_snapshots: list[ForecastSnapshot] = field(default_factory=list)
    worker_states: list[tuple] = field(default_factory=list)

    @property
    def merged_shift_count(self) -> int:
        return sum(1 for e in self.roster if e.shift.is_multi_hub)

    @property
    def multi_segment_share(self) -> float:
        if not self.roster:
            return 0.0
        return sum(1 for e in self.roster if len(e.shift.segments) > 1) / len(self.roster)


class RollingEngine:
    def __init__(self, cfg: ScenarioConfig, collect_forecasts=False, collect_worker_states=False):
        cfg.validate()
        self.cfg = cfg
        p = cfg.params
        self.hub_ids = sorted(cfg.network.hub_ids)
        self.n = p.horizon_h
        self.actual_matrix = np.array(
            [cfg.actuals[h].arrivals for h in self.hub_ids], dtype=np.int64
        )
        self.pairs = build_moving_pairs(cfg.network) if cfg.allow_cross_hub else []
        self.rng = np.random.default_rng(p.seed)
        self.pool = WorkforcePool(daily_cap_h=p.max_work_h)
        self.ledger = CostLedger(rates=cfg.rates)
        self.roster: list[RosterEntry] = []
        self.capacity = {h: [0] * self.n for h in self.hub_ids}  # workers working
        self.now_h = 0.0
        self.weights = ValueWeights.from_params(p)
        self.collect_forecasts = collect_forecasts
        self.collect_worker_states = collect_worker_states
        self.forecast_snapshots: list[ForecastSnapshot] = []
        self.worker_states: list[tuple] = []

    def _demand_units(self, now_h: float) -> tuple[dict[int, list[int]], np.ndarray]:
        """Predicted arrivals for the whole horizon (actuals up to now, noisy
        forecast beyond) converted to integer worker demand per slot."""
        first_slot = math.ceil(now_h - 1e-9)
        if first_slot < self.n and self.cfg.noise == "paper":
            u = self.rng.uniform(-1.0, 1.0, size=(len(self.hub_ids), self.n - first_slot))
        else:
            u = None
        pred_tail = forecast_matrix(self.actual_matrix, now_h, first_slot, u)
        full = np.concatenate(
            [self.actual_matrix[:, :first_slot].astype(np.float64), pred_tail], axis=1
        )
        units = np.ceil(full / self.cfg.params.work_rate).astype(np.int64)
        rows = {h: [int(v) for v in units[i]] for i, h in enumerate(self.hub_ids)}
        if self.collect_forecasts:
            self.forecast_snapshots.append(
                ForecastSnapshot(now_h, {h: [float(v) for v in full[i]] for i, h in enumerate(self.hub_ids)})
            )
        return rows, full

    def _candidates(self, residual: dict[int, list[int]], start_min: int) -> list[Shift]:
        p = self.cfg.params
        out = []
        for h in self.hub_ids:
            shifts, _served, _dropped = combine_within_hub_detail(
                residual[h], p.dwell_h, p.max_work_h, hub_id=h, start_min=start_min
            )
            out.extend(shifts)
        out.sort(key=Shift.sort_key)
        return out

    def _merge_selected(self, selected: list[Shift]) -> list[Shift]:
        """Cross-hub merge within the shifts being fixed this step, capped by
        the number of fresh hires they would otherwise require -- so every
        merge stands in for a hire, never for a free pool reuse."""
        budget = self.pool.simulate_hires(selected)
        if budget == 0:
            return selected
        p = self.cfg.params
        rates = self.cfg.rates
        per_hub = {h: [] for h in self.hub_ids}
        for s in selected:
            per_hub[s.segments[0].hub_id].append(s)
        return merge_across_hubs(
            per_hub,
            self.pairs,
            p.max_work_h,
            p.max_gap_h,
            rates.hiring_per_day,
            lambda d: moving_payment(d, rates),
            max_merges=budget,
        )

    def step(self, now_h: float, fix_all: bool = False) -> int:
        """One replan pass; returns the number of shifts fixed."""
        p = self.cfg.params
        self.pool.release_finished(now_h)
        first_slot = math.ceil(now_h - 1e-9)
        demand, _full = self._demand_units(now_h)

        residual = {
            h: kernels.fifo_match_units(demand[h], self.capacity[h], p.dwell_h)
            for h in self.hub_ids
        }
        candidates = self._candidates(residual, first_slot)

        horizon_edge = now_h + p.replan_h + 1e-9
        selected = []
        for cand in candidates:
            if cand.start_h <= horizon_edge or fix_all:
                selected.append(cand)
            elif should_fix(
                shift_value(cand, now_h, self.weights, p.max_work_h),
                self.weights.fix_threshold,
            ):
                selected.append(cand)
        if self.cfg.allow_cross_hub and len(selected) > 1:
            selected = self._merge_selected(selected)

        for cand in selected:
            shift_id = len(self.roster)
            worker, lead, new_hire = self.pool.assign(cand, now_h, shift_id)
            cand.fixed_at_h = now_h
            accrue_shift(cand, lead, new_hire, self.ledger, distance_fn=self.cfg.network.distance_m)
            self.roster.append(RosterEntry(shift_id, cand, worker.id, lead, new_hire))
            for seg in cand.segments:
                if seg.kind == WORKING:
                    cap = self.capacity[seg.hub_id]
                    for t in range(seg.start_h, seg.end_h):
                        cap[t] += 1

        self.now_h = now_h + p.replan_h
        if self.collect_worker_states:
            for w in self.pool.workers:
                self.worker_states.append((now_h, w.id, w.state, w.assigned_shift))
        return len(selected)

    def run(self) -> SimReport:
        t0 = time.perf_counter()
        p = self.cfg.params
        if self.cfg.rolling:
            steps = math.ceil(self.n / p.replan_h)
            for k in range(steps):
                self.step(k * p.replan_h)
        else:
            self.step(0.0, fix_all=True)

        late, series = replay_execution(
            {h: self.cfg.actuals[h].arrivals for h in self.hub_ids},
            self.capacity,
            p.dwell_h,
            p.work_rate,
        )
        for h in self.hub_ids:
            series[h]["resting"] = self._resting_series(h)
        lateness_penalty(late, self.ledger)
        self.pool.end_of_day()

        return SimReport(
            label=self.cfg.label,
            ledger=self.ledger,
            roster=self.roster,
            late_parcels=late,
            series=series,
            flows=self._flows(),
            runtime_s=time.perf_counter() - t0,
            hires=self.pool.hires,
            forecast_snapshots=self.forecast_snapshots,
            worker_states=self.worker_states,
        )

    def _resting_series(self, hub_id: int) -> list[int]:
        row = [0] * self.n
        for entry in self.roster:
            for seg in entry.shift.segments:
                if seg.kind == RESTING and seg.hub_id == hub_id:
                    for t in range(seg.start_h, min(seg.end_h, self.n)):
                        row[t] += 1
        return row

    def _flows(self) -> dict[tuple[int, int, int], int]:
        flows = {}
        for entry in self.roster:
            segs = entry.shift.segments
            for i, seg in enumerate(segs):
                if seg.kind != TRAVEL:
                    continue
                src = next(s.hub_id for s in reversed(segs[:i]) if s.kind == WORKING)
                dst = next(s.hub_id for s in segs[i + 1 :] if s.kind == WORKING)
                window = (seg.start_h // 6) * 6
                key = (src, dst, window)
                flows[key] = flows.get(key, 0) + 1
        return flows


def replay_execution(
    arrivals: dict[int, list[int]],
    workers_working: dict[int, list[int]],
    dwell_h: int,
    work_rate: int,
) -> tuple[int, dict[int, dict]]:
    """Replay actual arrivals against scheduled capacity, hub by hub.

    Returns (total late parcels, per-hub series with arrivals / working /
    served rows). Parcels are served first-in-first-out; one is late when
    processed after origin + dwell, or never processed although its deadline
    fell inside the horizon.
    """
    total_late = 0
    series = {}
    for h in sorted(arrivals):
        late, served, _leftover = kernels.fifo_replay(
            list(arrivals[h]), list(workers_working[h]), dwell_h, work_rate
        )
        total_late += late
        series[h] = {
            "arrivals": list(arrivals[h]),
            "working": list(workers_working[h]),
            "served": served,
        }
    return total_late, series


def run_scenario(cfg: ScenarioConfig, **engine_kwargs) -> SimReport:
    """Validate the config and execute one full scenario run."""
    return RollingEngine(cfg, **engine_kwargs).run()


# ---------------------------------------------------------------- reporting


def write_roster_csv(path, report: SimReport, header: str = "") -> None:
    with open(path, "w", newline="") as fh:
        if header:
            fh.write(header)
        writer = csv.writer(fh)
        writer.writerow(
            ["shift_id", "worker_id", "segment_idx", "hub_id", "kind", "start_h", "end_h", "fixed_at_h"]
        )
        for entry in report.roster:
            for idx, seg in enumerate(entry.shift.segments):
                writer.writerow(
                    [
                        entry.shift_id,
                        entry.worker_id,
                        idx,
                        seg.hub_id,
                        seg.kind,
                        seg.start_h,
                        seg.end_h,
                        f"{entry.shift.fixed_at_h:g}",
                    ]
                )


def write_series_csv(path, report: SimReport, header: str = "") -> None:
    with open(path, "w", newline="") as fh:
        if header:
            fh.write(header)
        writer = csv.writer(fh)
        writer.writerow(["hub_id", "slot_h", "arrivals", "workers_working", "workers_resting"])
        for h in sorted(report.series):
            rows = report.series[h]
            for t in range(len(rows["arrivals"])):
                writer.writerow([h, t, rows["arrivals"][t], rows["working"][t], rows["resting"][t]])


def write_flows_csv(path, report: SimReport, header: str = "") -> None:
    with open(path, "w", newline="") as fh:
        if header:
            fh.write(header)
        writer = csv.writer(fh)
        writer.writerow(["from_hub", "to_hub", "window_start_h", "worker_moves"])
        for (src, dst, window), count in sorted(report.flows.items()):
            writer.writerow([src, dst, window, count])
