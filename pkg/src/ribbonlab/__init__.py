"""Ribbon tableaux, their spin generating functions, the Fock space
operators acting on them and domino insertion, all in exact arithmetic."""

from .qcoeff import LaurentPoly, RatFunc
from .symfunc import SymFunc
from .ribbonfn import G, K_poly, X_poly, q_lr
from .fock import FockVector

__all__ = ["FockVector", "G", "K_poly", "LaurentPoly", "RatFunc", "SymFunc", "X_poly", "q_lr"]
__version__ = "0.1.0"
