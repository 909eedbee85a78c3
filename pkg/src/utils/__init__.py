"""
Shared utilities: typed errors, message templates and exact-rational text.

Part of the Restriction Stability Toolkit.
"""
