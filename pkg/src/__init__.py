"""
Module: __init__.py
Part of the Restriction Stability Toolkit.
"""
