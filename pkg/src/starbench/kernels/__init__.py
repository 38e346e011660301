"""Kernel selection: compiled extension when available, numpy fallback else.

The environment variable STARBENCH_KERNELS forces a choice:

* "compiled" — require the extension; ImportError if it is missing.
* "pure"     — ignore the extension even if present.
* unset/""   — prefer compiled, fall back silently.

``BACKEND`` reports which implementation is live. Both expose the same four
functions with identical witness semantics (tested against each other).
"""

from __future__ import annotations

import os

_choice = os.environ.get("STARBENCH_KERNELS", "").strip().lower()

if _choice == "pure":
    from . import pure as _impl
elif _choice == "compiled":
    from . import _speed as _impl  # type: ignore[no-redef]
else:
    try:
        from . import _speed as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import pure as _impl

BACKEND: str = _impl.BACKEND
first_assoc_violation = _impl.first_assoc_violation
first_distrib_violation = _impl.first_distrib_violation
first_antimult_violation = _impl.first_antimult_violation
semi_proper_witness = _impl.semi_proper_witness

__all__ = [
    "BACKEND",
    "first_assoc_violation",
    "first_distrib_violation",
    "first_antimult_violation",
    "semi_proper_witness",
]
