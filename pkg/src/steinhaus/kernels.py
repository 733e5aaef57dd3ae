"""Kernel backend selection.

Uses the compiled ``_kernels`` extension when it imports, else the
pure-Python twin.  Set ``STEINHAUS_PURE_PYTHON=1`` to force the fallback.
"""

import os

from steinhaus import _kernels_py

if os.environ.get("STEINHAUS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from steinhaus import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

FULL, HSYM, RSYM, DSYM, DSYM0 = 0, 1, 2, 3, 4

derive_rows = _impl.derive_rows
member = _impl.member
scan_members = _impl.scan_members
degree_parities = _impl.degree_parities
scan_graph_parity = _impl.scan_graph_parity
gf2_rank = _impl.gf2_rank

__all__ = [
    "BACKEND", "FULL", "HSYM", "RSYM", "DSYM", "DSYM0", "derive_rows", "member",
    "scan_members", "degree_parities", "scan_graph_parity", "gf2_rank",
]
