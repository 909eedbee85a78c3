"""
Cohomology of general stable sheaves and of their restrictions to curves.

Part of the Restriction Stability Toolkit.
"""
from .betti import BettiTable, RestrictedBetti
from .brill_noether import BNReport, RestrictionMapDims

__all__ = ["BNReport", "BettiTable", "RestrictedBetti", "RestrictionMapDims"]
