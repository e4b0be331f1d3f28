"""Backend selection for the indexing kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or
when ``NFSTRAT_PURE_PYTHON`` is set to a non-empty value, the pure-Python
``_purekernels`` are used.  Both expose the same four functions.
"""

import os

from . import _purekernels as pure

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and not os.environ.get("NFSTRAT_PURE_PYTHON"):
    _impl = compiled
    BACKEND = "cython"
else:
    _impl = pure
    BACKEND = "python"

canonical_indices = _impl.canonical_indices
acyclic_indices = _impl.acyclic_indices
rng_total = _impl.rng_total
min_rng_bruteforce = _impl.min_rng_bruteforce

__all__ = [
    "BACKEND",
    "acyclic_indices",
    "canonical_indices",
    "compiled",
    "min_rng_bruteforce",
    "pure",
    "rng_total",
]
