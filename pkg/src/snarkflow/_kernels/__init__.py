"""Kernel backend selection.

The hot loops (subset sweeps, flow search, edge colouring, sign-vector
enumeration) exist twice: a Cython extension (``_fast``) and a pure-Python
fallback (``_pure``) with identical contracts.  The compiled backend is used
when it imported successfully and ``SNARKFLOW_PURE`` is not set.
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _fast  # type: ignore[attr-defined]
    _HAVE_FAST = getattr(_fast, "BACKEND", None) == "fast"
except ImportError:
    _fast = None  # type: ignore[assignment]
    _HAVE_FAST = False

_impl = _pure if (os.environ.get("SNARKFLOW_PURE") or not _HAVE_FAST) else _fast

BACKEND: str = _impl.BACKEND

max_excess_exhaustive = _impl.max_excess_exhaustive
enumerate_excess_target = _impl.enumerate_excess_target
max_phi_exhaustive = _impl.max_phi_exhaustive
flow_search = _impl.flow_search
color3_search = _impl.color3_search
enumerate_signings = _impl.enumerate_signings


def backends() -> dict[str, object]:
    """All importable backends, for parity tests and benchmarks."""
    out: dict[str, object] = {"pure": _pure}
    if _HAVE_FAST:
        out["fast"] = _fast
    return out
