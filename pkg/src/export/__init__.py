"""
Report writers: CSV, JSON and plain-text tables, plus SVG wall diagrams.

Part of the Restriction Stability Toolkit.
"""
from .export_manager import ExportManager

__all__ = ["ExportManager"]
