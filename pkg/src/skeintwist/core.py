"""Select the diagram kernel: compiled when available, pure Python otherwise.

Set ``SKEINTWIST_PURE=1`` to force the pure-Python kernel.
"""

from __future__ import annotations

import os

from . import _purecore

pure = _purecore

if os.environ.get("SKEINTWIST_PURE", "").strip() not in ("", "0"):
    kernel = _purecore
else:
    try:
        from . import _ccore as kernel  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build
        kernel = _purecore

IMPLEMENTATION = kernel.IMPLEMENTATION

__all__ = ["kernel", "pure", "IMPLEMENTATION"]
