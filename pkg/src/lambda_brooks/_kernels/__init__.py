"""Kernel backend selection.

The compiled Cython extension is used when it imported cleanly; otherwise
the pure-Python twin takes over. `LAMBDA_BROOKS_KERNEL=pure` forces the
fallback (useful for the parity tests and the benchmark), `=cython` makes a
missing extension a hard error.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _speedups  # type: ignore[attr-defined]
except ImportError:
    _speedups = None

_requested = os.environ.get("LAMBDA_BROOKS_KERNEL", "auto").lower()
if _requested not in ("auto", "pure", "cython"):
    raise RuntimeError(f"LAMBDA_BROOKS_KERNEL must be auto, pure or cython, not {_requested!r}")
if _requested == "cython" and _speedups is None:
    raise RuntimeError("LAMBDA_BROOKS_KERNEL=cython but the compiled kernel is unavailable")

ACTIVE = "pure" if _requested == "pure" or _speedups is None else "cython"

# The compiled coloring kernel packs palettes and neighborhoods into single
# 64-bit words; larger instances route to the pure kernel transparently.
_CYTHON_MAX_N = 64


def edge_connectivity(n, indptr, indices, rev, s, t):
    if ACTIVE == "cython":
        return _speedups.edge_connectivity(n, indptr, indices, rev, s, t)
    return pure.edge_connectivity(n, indptr, indices, rev, s, t)


def k_coloring(n, masks, degrees, k):
    if ACTIVE == "cython" and n <= _CYTHON_MAX_N and k <= _CYTHON_MAX_N:
        return _speedups.k_coloring(n, masks, degrees, k)
    return pure.k_coloring(n, masks, degrees, k)
