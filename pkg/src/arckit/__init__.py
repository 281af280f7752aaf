"""Exact diagram calculus for generalised Khovanov arc algebras, stretched
endomorphism algebras, level-two cyclotomic KLR algebras and the associated
graded Specht module theory."""

from .laurent import LaurentPoly
from .weights import Block, Params, Weight

__all__ = ["LaurentPoly", "Params", "Weight", "Block"]

__version__ = "0.1.0"
