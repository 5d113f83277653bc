"""Backend selection for the complete-labelling search.

The compiled extension is used when it imports and the framework fits in
64 bits; otherwise the pure-Python search runs.  Set ``ARGNLG_PURE_PYTHON=1``
to force the fallback.
"""

from __future__ import annotations

import os

from . import _labelling_py

try:
    if os.environ.get("ARGNLG_PURE_PYTHON"):
        raise ImportError("pure Python forced")
    from . import _labelling as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def complete_labellings(n: int, attackers: list[int], backend: str | None = None) -> list[tuple[int, int]]:
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        if n <= 64:
            return _compiled.complete_labellings(n, attackers)
    return _labelling_py.complete_labellings(n, attackers)
