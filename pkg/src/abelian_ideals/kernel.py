"""Select the enumeration kernel at import time.

The compiled ``_kernel`` extension is used when it was built; otherwise the
pure-Python ``_kernel_py`` takes over.  Set ``ABELIAN_IDEALS_PURE_PYTHON=1`` to
force the fallback.
"""
import os

from . import _kernel_py

BACKENDS = {"python": _kernel_py}

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None
else:
    BACKENDS["cython"] = _compiled

if _compiled is not None and not os.environ.get("ABELIAN_IDEALS_PURE_PYTHON"):
    default = _compiled
else:
    default = _kernel_py

BACKEND = default.NAME


def get_backend(name=None):
    """Return the kernel module called ``name`` (default: the selected one)."""
    if name is None:
        return default
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available; have {sorted(BACKENDS)}") from None
