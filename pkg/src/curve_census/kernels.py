"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the numpy
implementation.  ``CURVE_CENSUS_BACKEND=numpy`` forces the fallback.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"numpy": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_wanted = os.environ.get("CURVE_CENSUS_BACKEND", "cython" if _ckernels else "numpy")
backend = BACKENDS.get(_wanted, _pykernels)
BACKEND = backend.NAME

hyper_charsums = backend.hyper_charsums
squarefree_mask = backend.squarefree_mask
cubic_root_counts = backend.cubic_root_counts
quintic_fiber_sums = backend.quintic_fiber_sums
quintic_singular_mask = backend.quintic_singular_mask
