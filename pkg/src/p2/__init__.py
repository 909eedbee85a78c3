"""
Exceptional-bundle machinery on the projective plane.

Part of the Restriction Stability Toolkit.
"""
from .quadratic import QuadraticNumber
from .exceptional import ExceptionalSlope, OrthogonalInvariants

__all__ = ["ExceptionalSlope", "OrthogonalInvariants", "QuadraticNumber"]
