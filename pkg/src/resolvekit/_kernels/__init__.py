"""Kernel backend selection.

The compiled extension is preferred when it imports; the NumPy/Python
fallback is used otherwise. Set ``RESOLVEKIT_PURE=1`` to force the
fallback (useful for benchmarking and for testing backend equivalence).
"""

import os

from . import _fallback

if os.environ.get("RESOLVEKIT_PURE", "") not in ("", "0"):
    _active = _fallback
else:
    try:
        from . import _speedups as _active
    except ImportError:
        _active = _fallback

BACKEND = _active.BACKEND
all_pairs_bfs = _active.all_pairs_bfs
first_deficient_pair = _active.first_deficient_pair
min_pair_coverage = _active.min_pair_coverage


def available_backends():
    """Names of the backends importable in this environment."""
    names = ["python"]
    try:
        from . import _speedups  # noqa: F401
    except ImportError:
        pass
    else:
        names.append("cython")
    return names


def load_backend(name):
    """Fetch a backend module by name ("python" or "cython")."""
    if name == "python":
        return _fallback
    if name == "cython":
        from . import _speedups
        return _speedups
    raise ValueError(f"unknown kernel backend {name!r}")
