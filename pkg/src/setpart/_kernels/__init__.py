"""Kernel backend selection.

The compiled backend (``_speed``) is used when its extension module built;
otherwise the pure-Python twin (``_pure``) takes over.  Set the environment
variable ``SETPART_BACKEND`` to ``c`` or ``pure`` to force one side, e.g.
when checking that both produce identical results.
"""

import os

from . import _pure

_requested = os.environ.get("SETPART_BACKEND", "").strip().lower()

if _requested not in ("", "c", "pure"):
    raise ImportError(
        "SETPART_BACKEND must be unset, 'c', or 'pure'; got %r" % _requested
    )

if _requested == "pure":
    _impl = _pure
else:
    try:
        from . import _speed as _impl
    except ImportError:
        if _requested == "c":
            raise ImportError(
                "SETPART_BACKEND=c but the compiled kernel is not built"
            )
        _impl = _pure

NAME = _impl.NAME
iter_rgs = _impl.iter_rgs
count_rgs = _impl.count_rgs
iter_noncrossing = _impl.iter_noncrossing
count_noncrossing = _impl.count_noncrossing
count_noncrossing_cyclic_smirnov = _impl.count_noncrossing_cyclic_smirnov
count_noncrossing_prefix_smirnov = _impl.count_noncrossing_prefix_smirnov
