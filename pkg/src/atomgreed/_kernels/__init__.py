"""Backend dispatch for the hot numeric kernels.

The compiled extension is preferred when it was built; the pure-numpy
fallback is always available.  Set ``ATOMGREED_PURE_PYTHON=1`` to force the
fallback (used by the benchmark to compare backends).
"""

import os

from . import _pure

if os.environ.get("ATOMGREED_PURE_PYTHON"):
    _impl = _pure
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND = _impl.BACKEND_NAME
subgrad_minimize = _impl.subgrad_minimize
circle_minimize = _impl.circle_minimize

__all__ = ["BACKEND", "subgrad_minimize", "circle_minimize"]
