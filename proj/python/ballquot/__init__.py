"""Exact Lyapunov spectra and commensurability invariants of cyclic-covering
ball quotients, backed by the C++ core."""

import os

try:
    from . import _ballquot as _core
except ImportError:  # development layout: extension sits next to the package
    import _ballquot as _core

_names = [n for n in dir(_core) if not n.startswith("_")]
globals().update({n: getattr(_core, n) for n in _names})


def packaged_data_path():
    """Path of the canonical non-arithmetic table shipped with the package."""
    here = os.path.join(os.path.dirname(__file__), "data", "nonarithmetic_types.txt")
    return here if os.path.exists(here) else _core.default_data_path()


def dataset(path=None):
    """The 16-row table of non-arithmetic types (or any file in its format)."""
    return _core.load_dataset(path if path is not None else packaged_data_path())


__all__ = _names + ["packaged_data_path", "dataset"]
