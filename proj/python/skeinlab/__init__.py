"""Exact framed link invariants, Temperley-Lieb representations and
fusion-category F-matrix verification, backed by the C++ core."""

try:
    from ._skeinlab import *  # noqa: F401,F403  (wheel layout)
    from . import _skeinlab as _core
except ImportError:  # pragma: no cover - build-tree layout
    from _skeinlab import *  # noqa: F401,F403
    import _skeinlab as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
__version__ = "0.1.0"
