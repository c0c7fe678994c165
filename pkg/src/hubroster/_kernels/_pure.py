"""Pure-Python scheduling kernels.

Reference implementation of the inner loops; `_core.pyx` is a compiled twin
with identical semantics. Everything here works on plain ints and tuples so
both backends stay interchangeable.

Run representation: a run is a half-open slot interval ``(start, end)`` of
contiguous working hours for one worker at one hub.
"""

from collections import deque


def part1_runs(x, max_run, start_min=0):
    """Extract maximal-length runs from a demand row, left to right.

    Repeatedly takes the first slot with positive demand at or after
    ``start_min`` and extends while demand stays positive, capped at
    ``max_run`` hours, decrementing demand along the way. The residual row
    is identically zero on return, so total run hours equal total demand.
    """
    x = list(x)
    n = len(x)
    runs = []
    start = start_min
    while start < n:
        if x[start] == 0:
            start += 1
            continue
        x[start] -= 1
        end = start + 1
        while end < n and x[end] > 0 and end - start < max_run:
            x[end] -= 1
            end += 1
        runs.append((start, end))
    return runs


def _trial_run(avail, t0, dwell, max_run, n):
    """Simulate one run starting at t0: serve one unit per slot, earliest
    effective deadline first (ties to the freshest origin), until no unit
    within its dwell window remains. Returns the (origin, slot) services."""
    out = []
    local = {}
    t = t0
    while t < n and len(out) < max_run:
        pick = -1
        best_dl = 0
        lo = t - dwell
        if lo < 0:
            lo = 0
        for s in range(lo, t + 1):
            if avail[s] - local.get(s, 0) > 0:
                dl = s + dwell
                if dl > n - 1:
                    dl = n - 1
                # min deadline, then max origin: leaves wide windows for later runs
                if pick < 0 or dl < best_dl or (dl == best_dl and s > pick):
                    pick, best_dl = s, dl
        if pick < 0:
            break
        local[pick] = local.get(pick, 0) + 1
        out.append((pick, t))
        t += 1
    return out


def within_hub_runs(x, dwell, max_run, start_min=0):
    """Combine a hub's demand into few, long runs using dwell-time deferral.

    Full-length (= max_run) runs are extracted first at their on-time
    placement. The remainder is then served one run at a time: each run's
    start is chosen within the dwell window of the earliest unserved unit
    (longest resulting run wins, earliest start on ties) and slots are
    filled earliest-deadline-first, so no unit is served more than ``dwell``
    slots after its origin. Units whose whole window lies before
    ``start_min`` cannot be scheduled and are reported as dropped.

    Returns (runs, served, dropped) where served is a sorted list of
    (origin_slot, served_slot, count) and dropped a list of (origin, count).
    """
    n = len(x)
    avail = list(x)
    served = {}
    runs = []
    dropped = []

    for s, e in part1_runs(avail, max_run, start_min):
        if e - s == max_run:
            runs.append((s, e))
            for t in range(s, e):
                avail[t] -= 1
                served[(t, t)] = served.get((t, t), 0) + 1

    s0 = 0
    while True:
        while s0 < n and avail[s0] == 0:
            s0 += 1
        if s0 == n:
            break
        lo = s0 if s0 > start_min else start_min
        hi = s0 + dwell
        if hi > n - 1:
            hi = n - 1
        if lo > hi:
            dropped.append((s0, avail[s0]))
            avail[s0] = 0
            continue
        best = None
        for t0 in range(lo, hi + 1):
            trial = _trial_run(avail, t0, dwell, max_run, n)
            if best is None or len(trial) > len(best):
                best = trial
        for origin, slot in best:
            avail[origin] -= 1
            served[(origin, slot)] = served.get((origin, slot), 0) + 1
        runs.append((best[0][1], best[-1][1] + 1))

    runs.sort()
    served_list = sorted((o, t, c) for (o, t), c in served.items())
    return runs, served_list, dropped


def merge_runs(runs_by_hub, pairs, max_work, max_gap, max_merges=-1):
    """Greedy cross-hub merge over distance-ordered pairs.

    ``pairs`` is a list of (hub_idx_a, hub_idx_b, travel_time_h) already
    sorted ascending by distance and pre-filtered to pairs whose moving
    payment undercuts a fresh hire. For each pair, feasible run combinations
    (no overlap, travel time <= gap <= max_gap, summed hours <= max_work)
    are merged earliest-start-first; each run merges at most once. A
    non-negative ``max_merges`` caps the number of merges performed.

    Returns (merges, used) where merges is a list of
    (pair_idx, run_idx_a, run_idx_b, a_goes_first) and used marks consumed
    runs per hub.
    """
    used = [[False] * len(r) for r in runs_by_hub]
    merges = []
    for p_idx, (ia, ib, travel_h) in enumerate(pairs):
        if max_merges >= 0 and len(merges) >= max_merges:
            break
        runs_a = runs_by_hub[ia]
        runs_b = runs_by_hub[ib]
        if not runs_a or not runs_b:
            continue
        combos = []
        for i, (s1, e1) in enumerate(runs_a):
            if used[ia][i]:
                continue
            for j, (s2, e2) in enumerate(runs_b):
                if used[ib][j]:
                    continue
                if e1 <= s2:
                    gap = s2 - e1
                    key = (s1, s2, e1, e2, 0, i, j)
                    a_first = 1
                elif e2 <= s1:
                    gap = s1 - e2
                    key = (s2, s1, e2, e1, 1, i, j)
                    a_first = 0
                else:
                    continue
                if travel_h > gap or gap > max_gap:
                    continue
                if (e1 - s1) + (e2 - s2) > max_work:
                    continue
                combos.append((key, i, j, a_first))
        combos.sort()
        for _key, i, j, a_first in combos:
            if max_merges >= 0 and len(merges) >= max_merges:
                break
            if used[ia][i] or used[ib][j]:
                continue
            used[ia][i] = True
            used[ib][j] = True
            merges.append((p_idx, i, j, a_first))
    return merges, used


def fifo_match_units(demand, capacity, dwell):
    """Credit per-slot capacity against unit demand within dwell windows.

    Capacity at slot t serves the oldest unserved units whose origin lies in
    [t - dwell, t]; capacity can never be credited to a unit it could only
    reach late. Returns the unserved units per origin slot -- the residual a
    re-planning pass still has to cover (expired origins included).
    """
    n = len(demand)
    rem = list(demand)
    for t in range(n):
        cap = capacity[t]
        lo = t - dwell
        if lo < 0:
            lo = 0
        for origin in range(lo, t + 1):
            if cap == 0:
                break
            if rem[origin] > 0:
                take = cap if cap < rem[origin] else rem[origin]
                rem[origin] -= take
                cap -= take
    return rem


def fifo_replay(arrivals, workers, dwell, rate):
    """Replay actual arrivals against scheduled worker capacity.

    Parcels queue first-in-first-out; capacity at slot t is workers[t] * rate.
    A parcel is late when served after origin + dwell, or never served while
    its deadline fell inside the horizon (later deadlines roll to the next
    day). Returns (late_count, served_per_slot, leftover_unserved).
    """
    n = len(arrivals)
    late = 0
    served_per_slot = [0] * n
    queue = deque()
    for t in range(n):
        if arrivals[t] > 0:
            queue.append([t, arrivals[t]])
        cap = workers[t] * rate
        while cap > 0 and queue:
            head = queue[0]
            take = cap if cap < head[1] else head[1]
            if t > head[0] + dwell:
                late += take
            head[1] -= take
            cap -= take
            served_per_slot[t] += take
            if head[1] == 0:
                queue.popleft()
    leftover = 0
    for origin, count in queue:
        leftover += count
        if origin + dwell < n:
            late += count
    return late, served_per_slot, leftover
