"""
Picard lattices and Chern characters.

Part of the Restriction Stability Toolkit.
"""
from .surface import DivisorClass, SurfaceKind, SurfaceModel, genus_of_curve, intersect, is_ample
from .chern import ChernCharacter, TwistContext

__all__ = [
    "ChernCharacter",
    "DivisorClass",
    "SurfaceKind",
    "SurfaceModel",
    "TwistContext",
    "genus_of_curve",
    "intersect",
    "is_ample",
]
