"""Kernel dispatch: compiled fast path with a pure-Python fallback.

The Cython extension `_core` is preferred when it built; otherwise the
pure-Python twin `_pure` is used. Both expose identical functions and must
produce identical outputs (enforced by the parity tests). Force a backend
with HUBROSTER_KERNELS=pure|compiled or at runtime via set_backend().
"""

import os

from . import _pure

_impl = _pure
BACKEND = "pure"

_requested = os.environ.get("HUBROSTER_KERNELS", "").strip().lower()
if _requested != "pure":
    try:
        from . import _core  # noqa: F401

        _impl = _core
        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise ImportError("HUBROSTER_KERNELS=compiled but the extension is not built")


def available_backends():
    names = ["pure"]
    try:
        from . import _core  # noqa: F401

        names.append("compiled")
    except ImportError:
        pass
    return names


def get_backend():
    return BACKEND


def set_backend(name):
    """Switch the active kernel implementation (used by the benchmark)."""
    global _impl, BACKEND
    if name == "pure":
        _impl = _pure
        BACKEND = "pure"
    elif name == "compiled":
        from . import _core

        _impl = _core
        BACKEND = "compiled"
    else:
        raise ValueError(f"unknown kernel backend {name!r}")


def part1_runs(x, max_run, start_min=0):
    return _impl.part1_runs(x, max_run, start_min)


def within_hub_runs(x, dwell, max_run, start_min=0):
    return _impl.within_hub_runs(x, dwell, max_run, start_min)


def merge_runs(runs_by_hub, pairs, max_work, max_gap, max_merges=-1):
    return _impl.merge_runs(runs_by_hub, pairs, max_work, max_gap, max_merges)


def fifo_match_units(demand, capacity, dwell):
    return _impl.fifo_match_units(demand, capacity, dwell)


def fifo_replay(arrivals, workers, dwell, rate):
    return _impl.fifo_replay(arrivals, workers, dwell, rate)
