"""Backend selection: the compiled search kernels when the extension built,
otherwise the pure-Python ones.  Both expose the same entry points and must
return identical results; `get_backend` lets callers and benchmarks force
one explicitly.
"""

from __future__ import annotations

from . import _pure

try:  # pragma: no cover - exercised indirectly
    from . import _core

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover
    _core = None
    HAVE_COMPILED = False

DEFAULT = _core if HAVE_COMPILED else _pure
BACKEND = DEFAULT.BACKEND

NodeBudgetExceeded = _pure.NodeBudgetExceeded


def get_backend(name: str | None = None):
    """'compiled', 'pure', or None for the default."""
    if name is None:
        return DEFAULT
    if name == "pure":
        return _pure
    if name == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernel not available")
        return _core
    raise ValueError(f"unknown backend {name!r}")


def backend_for(name: str | None, ground_n: int, r: int):
    """Resolve a backend for an instance; the compiled kernel handles ground
    sets up to its dedup-map limit and falls back to pure beyond it."""
    be = get_backend(name)
    if be is not _pure and (ground_n > be.MAX_GROUND or r > be.MAX_R):
        if name == "compiled":
            raise RuntimeError(
                f"compiled kernel limited to n <= {be.MAX_GROUND}, r <= {be.MAX_R}"
            )
        return _pure
    return be
