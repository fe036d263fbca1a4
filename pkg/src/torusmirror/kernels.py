"""Backend selection for the series arithmetic kernels.

Prefers the compiled extension; falls back to the pure-Python kernels
when the extension was not built.  Set ``TORUSMIRROR_PURE=1`` to force
the pure backend (used by the benchmark and the equivalence tests).
"""

import os

if os.environ.get("TORUSMIRROR_PURE"):
    from torusmirror import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from torusmirror import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from torusmirror import _kernels_py as _impl

        BACKEND = "python"

conv_trunc = _impl.conv_trunc
inv_trunc = _impl.inv_trunc
