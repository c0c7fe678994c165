# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled scheduling kernels: a typed twin of `_pure` with identical
semantics and output. The parity tests assert equality of the two backends
on randomized instances; keep any change mirrored in `_pure.py`."""

from cpython cimport array
import array

cdef array.array _int_template = array.array('i', [])


cdef array.array _to_array(object seq):
    cdef array.array out = array.clone(_int_template, len(seq), zero=False)
    cdef Py_ssize_t i
    for i in range(len(seq)):
        out.data.as_ints[i] = seq[i]
    return out


def part1_runs(x, int max_run, int start_min=0):
    """Maximal-length runs, left to right, capped at max_run hours."""
    cdef array.array ax = _to_array(x)
    cdef int* buf = ax.data.as_ints
    cdef int n = len(x)
    cdef int start = start_min, end
    runs = []
    while start < n:
        if buf[start] == 0:
            start += 1
            continue
        buf[start] -= 1
        end = start + 1
        while end < n and buf[end] > 0 and end - start < max_run:
            buf[end] -= 1
            end += 1
        runs.append((start, end))
    return runs


def within_hub_runs(x, int dwell, int max_run, int start_min=0):
    """Dwell-smoothed combination: full-length runs first, then greedy
    longest-run extraction with earliest-deadline unit service."""
    cdef int n = len(x)
    cdef array.array a_avail = _to_array(x)
    cdef int* avail = a_avail.data.as_ints
    cdef array.array a_taken = array.clone(_int_template, n if n > 0 else 1, zero=True)
    cdef int* taken = a_taken.data.as_ints
    cdef array.array a_trial = array.clone(_int_template, max_run if max_run > 0 else 1, zero=False)
    cdef int* trial = a_trial.data.as_ints
    cdef array.array a_best = array.clone(_int_template, max_run if max_run > 0 else 1, zero=False)
    cdef int* best = a_best.data.as_ints

    cdef int s, e, t, i, s0, lo, hi, t0, pick, best_dl, dl, lo2
    cdef int length, best_len, best_t0

    runs = []
    served = {}
    dropped = []

    # full-length extraction (on-time placement)
    cdef array.array a_copy = array.copy(a_avail)
    cdef int* cbuf = a_copy.data.as_ints
    cdef int start = start_min, end
    while start < n:
        if cbuf[start] == 0:
            start += 1
            continue
        cbuf[start] -= 1
        end = start + 1
        while end < n and cbuf[end] > 0 and end - start < max_run:
            cbuf[end] -= 1
            end += 1
        if end - start == max_run:
            runs.append((start, end))
            for t in range(start, end):
                avail[t] -= 1
                key = (t, t)
                served[key] = served.get(key, 0) + 1

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
        best_len = -1
        best_t0 = lo
        for t0 in range(lo, hi + 1):
            length = 0
            t = t0
            while t < n and length < max_run:
                pick = -1
                best_dl = 0
                lo2 = t - dwell
                if lo2 < 0:
                    lo2 = 0
                for s in range(lo2, t + 1):
                    if avail[s] - taken[s] > 0:
                        dl = s + dwell
                        if dl > n - 1:
                            dl = n - 1
                        if pick < 0 or dl < best_dl or (dl == best_dl and s > pick):
                            pick = s
                            best_dl = dl
                if pick < 0:
                    break
                taken[pick] += 1
                trial[length] = pick
                length += 1
                t += 1
            for i in range(length):
                taken[trial[i]] -= 1
            if length > best_len:
                best_len = length
                best_t0 = t0
                for i in range(length):
                    best[i] = trial[i]
        for i in range(best_len):
            avail[best[i]] -= 1
            key = (best[i], best_t0 + i)
            served[key] = served.get(key, 0) + 1
        runs.append((best_t0, best_t0 + best_len))

    runs.sort()
    served_list = sorted((o, t, c) for (o, t), c in served.items())
    return runs, served_list, dropped


def merge_runs(runs_by_hub, pairs, int max_work, int max_gap, int max_merges=-1):
    """Greedy cross-hub merge over distance-ordered, pre-filtered pairs."""
    cdef int p_idx, ia, ib, i, j, s1, e1, s2, e2, gap, a_first
    cdef double travel_h
    used = [[False] * len(r) for r in runs_by_hub]
    merges = []
    for p_idx in range(len(pairs)):
        if max_merges >= 0 and len(merges) >= max_merges:
            break
        ia, ib, travel_h = pairs[p_idx]
        runs_a = runs_by_hub[ia]
        runs_b = runs_by_hub[ib]
        if not runs_a or not runs_b:
            continue
        used_a = used[ia]
        used_b = used[ib]
        combos = []
        for i in range(len(runs_a)):
            if used_a[i]:
                continue
            s1, e1 = runs_a[i]
            for j in range(len(runs_b)):
                if used_b[j]:
                    continue
                s2, e2 = runs_b[j]
                if e1 <= s2:
                    gap = s2 - e1
                    a_first = 1
                elif e2 <= s1:
                    gap = s1 - e2
                    a_first = 0
                else:
                    continue
                if travel_h > gap or gap > max_gap:
                    continue
                if (e1 - s1) + (e2 - s2) > max_work:
                    continue
                if a_first:
                    combos.append(((s1, s2, e1, e2, 0, i, j), i, j, 1))
                else:
                    combos.append(((s2, s1, e2, e1, 1, i, j), i, j, 0))
        combos.sort()
        for _key, i, j, a_first in combos:
            if max_merges >= 0 and len(merges) >= max_merges:
                break
            if used_a[i] or used_b[j]:
                continue
            used_a[i] = True
            used_b[j] = True
            merges.append((p_idx, i, j, a_first))
    return merges, used


def fifo_match_units(demand, capacity, int dwell):
    """Window-limited oldest-first matching; returns unserved units by origin."""
    cdef int n = len(demand)
    cdef array.array a_rem = _to_array(demand)
    cdef int* rem = a_rem.data.as_ints
    cdef array.array a_cap = _to_array(capacity)
    cdef int* cap_arr = a_cap.data.as_ints
    cdef int t, origin, lo, cap, take
    for t in range(n):
        cap = cap_arr[t]
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
    return [rem[t] for t in range(n)]


def fifo_replay(arrivals, workers, int dwell, int rate):
    """Replay arrivals against capacity; count dwell-deadline misses."""
    cdef int n = len(arrivals)
    cdef array.array a_rem = _to_array(arrivals)
    cdef int* rem = a_rem.data.as_ints
    cdef array.array a_w = _to_array(workers)
    cdef int* w = a_w.data.as_ints
    cdef array.array a_served = array.clone(_int_template, n if n > 0 else 1, zero=True)
    cdef int* served = a_served.data.as_ints
    cdef long long late = 0, leftover = 0
    cdef long long cap
    cdef int t, head = 0, take
    for t in range(n):
        cap = <long long> w[t] * rate
        while cap > 0 and head <= t:
            if rem[head] == 0:
                head += 1
                continue
            take = <int> (cap if cap < rem[head] else rem[head])
            if t > head + dwell:
                late += take
            rem[head] -= take
            cap -= take
            served[t] += take
    for t in range(n):
        if rem[t] > 0:
            leftover += rem[t]
            if t + dwell < n:
                late += rem[t]
    return int(late), [served[t] for t in range(n)], int(leftover)
