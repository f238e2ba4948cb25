"""Backend selector: compiled kernels when available, pure Python otherwise.

Set TREECAST_PURE=1 in the environment to force the pure backend (used by the
parity tests and the benchmark). Both backends expose the same functions with
identical semantics, including search order and witness tie-breaking.
"""

from __future__ import annotations

import os

if os.environ.get("TREECAST_PURE"):
    from . import _pykernels as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND: str = _impl.backend()
COMPILED: bool = BACKEND == "compiled"

bfs_all_pairs = _impl.bfs_all_pairs
packing_violation = _impl.packing_violation
independence_violation = _impl.independence_violation
multicover_violation = _impl.multicover_violation
alpha_subset_scan = _impl.alpha_subset_scan
alpha_tiny_scan = _impl.alpha_tiny_scan
pb_search = _impl.pb_search
mc_complete = _impl.mc_complete
