"""Exact ideal arithmetic in quadratic orders and valuation domains, and
finite checks of the sharp-domain factorization property."""

from .domains import IdealDomain, QuadraticDomain, ValuationDomain
from .exact import ExactReal
from .report import CheckReport

__all__ = ["ExactReal", "IdealDomain", "QuadraticDomain", "ValuationDomain", "CheckReport"]
__version__ = "0.1.0"
