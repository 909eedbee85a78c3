"""
Bridgeland walls and restriction-stability criteria.

Part of the Restriction Stability Toolkit.
"""
from .walls import StabilityPoint, Wall, WallKind
from .criteria import Conclusion, CriterionName, CriterionReport

__all__ = [
    "Conclusion",
    "CriterionName",
    "CriterionReport",
    "StabilityPoint",
    "Wall",
    "WallKind",
]
