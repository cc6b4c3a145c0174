"""Exact computations for the signed reflection function on hyperoctahedral
groups, the cyclic Fock space of type B and the associated moment sequences."""

from .kernels import BACKEND
from .poly import QM, QP, BivarPoly

__version__ = "0.1.0"

__all__ = ["BACKEND", "BivarPoly", "QP", "QM", "__version__"]
