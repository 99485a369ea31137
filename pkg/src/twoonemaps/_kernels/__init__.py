"""Hot kernels: the compiled extension when available, else pure Python.

Set ``TWOONEMAPS_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("TWOONEMAPS_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

active = compiled_backend or python_backend
BACKEND = active.BACKEND

rooted_code = active.rooted_code
canonical_code = active.canonical_code
escape_steps = active.escape_steps


def backends():
    """All importable backends, fallback first."""
    return [python_backend] + ([compiled_backend] if compiled_backend else [])
