"""Backend selection for the search kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded.  Both expose ``cv_identity``, ``cv_defect``, ``cv_step``,
``explore``, ``image_mask`` and ``subset_closure``.
"""
from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def backend_name() -> str:
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


def get(name=None):
    """Return the kernel module ``name`` or the active one."""
    if name is None:
        return _active
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None


def use_backend(name: str) -> None:
    global _active
    _active = get(name)


__all__ = ["BACKENDS", "backend_name", "get", "use_backend"]
