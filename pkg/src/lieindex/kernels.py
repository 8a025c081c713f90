"""Backend selection for the integer kernels.

The compiled extension is used when it imports and the inputs are small enough
for 64-bit arithmetic; otherwise the pure-Python module handles the call.
Set ``LIEINDEX_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("LIEINDEX_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

# |coord| bound keeping sums of products well inside int64 for rank <= 16
_LIMIT = 1 << 20


def _small(*groups):
    for group in groups:
        for vec in group:
            for c in vec:
                if c > _LIMIT or c < -_LIMIT:
                    return False
    return True


def _pick(*groups):
    if _compiled is not None and _small(*groups):
        return _compiled
    return _kernels_py


def reduce_dominant(v, simple, norms):
    return _pick((v,), simple).reduce_dominant(v, simple, norms)


def orbit(v, simple, norms):
    return _pick((v,), simple).orbit(v, simple, norms)


def dominant_weights(lam, positive, simple):
    return _pick((lam,), positive).dominant_weights(lam, positive, simple)


def freudenthal(lam, rho, positive, simple, norms):
    return _pick((lam, rho), positive).freudenthal(lam, rho, positive, simple, norms)


def klimyk(shift, weights, rho, simple, norms):
    return _pick((shift, rho), [nu for nu, _ in weights], simple).klimyk(
        shift, weights, rho, simple, norms
    )
