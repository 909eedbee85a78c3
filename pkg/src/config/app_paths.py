"""
File-system path resolver for the Restriction Stability Toolkit.

Public API:
    get_project_root()  -- Directory holding ``src/`` and the shipped ``config/``.
    get_app_root()      -- Root expected by ProfileManager; honours the
                           ``RESTRICTION_TOOLKIT_HOME`` environment variable.
    get_config_dir()    -- ``<app root>/config``.

Without the environment variable the project root is also the app root, so a
checkout reads ``config/default_profile.json`` in place.
"""

from __future__ import annotations

import os
from pathlib import Path

HOME_VARIABLE = "RESTRICTION_TOOLKIT_HOME"


def get_project_root() -> Path:
    # src/config/app_paths.py -> parents[2] is the project root
    return Path(__file__).resolve().parents[2]


def get_app_root() -> Path:
    """Writable root for profiles; created when it comes from the environment."""
    override = os.environ.get(HOME_VARIABLE)
    if override:
        root = Path(override).expanduser()
        root.mkdir(parents=True, exist_ok=True)
        return root
    return get_project_root()


def get_config_dir() -> Path:
    return get_app_root() / "config"
