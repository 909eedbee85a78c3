"""
Input documents for the command-line tools.

Part of the Restriction Stability Toolkit.
"""
from .input_document import InputDocument, loads, read_document

__all__ = ["InputDocument", "loads", "read_document"]
