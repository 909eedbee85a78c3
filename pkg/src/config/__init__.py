"""
Configuration package for the Restriction Stability Toolkit.

Exposes:
    ProfileManager  -- Named JSON profiles of computation settings, the active
                       profile marker, and settings resolution with defaults.

See also:
    src.config.app_paths -- Where ``config/`` lives.
"""
from .profile_manager import DEFAULT_SETTINGS, ProfileManager

__all__ = ["DEFAULT_SETTINGS", "ProfileManager"]
