"""Backend selection for the hot loops.

The compiled extension is preferred when built; the numpy fallback is a
drop-in replacement.  Set ABHARMONIC_BACKEND=fallback (or =compiled) to
force a choice, e.g. for benchmarking.
"""
from __future__ import annotations

import os

_forced = os.environ.get("ABHARMONIC_BACKEND", "")
if _forced == "fallback":
    from . import _purepy as _impl

    BACKEND = "fallback"
elif _forced == "compiled":
    from . import _accel as _impl  # type: ignore[no-redef]

    BACKEND = "compiled"
else:
    try:
        from . import _accel as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _purepy as _impl  # type: ignore[no-redef]

        BACKEND = "fallback"

hyp2f1_sum = _impl.hyp2f1_sum
hyp2f1_terminating = _impl.hyp2f1_terminating
kernel_row = _impl.kernel_row
i_lambda_quad = _impl.i_lambda_quad
