"""Plane bipartite maps with one double edge: counting, arithmetic, Belyi models."""
from ._kernels import BACKEND
from .passport import Passport

__version__ = "0.1.0"
__all__ = ["BACKEND", "Passport", "__version__"]
