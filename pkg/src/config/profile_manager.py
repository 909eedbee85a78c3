"""
Configuration profile manager for the Restriction Stability Toolkit.

A "profile" is a named collection of computation settings stored as a JSON
file under ``config/profiles/<slug>/<slug>.json``. Every installation always
has a built-in "Default Settings" profile stored at
``config/default_profile.json``.

File-system layout
------------------
  config/
    active_profile.txt          -- plain-text file storing the active profile name
    default_profile.json        -- the built-in "Default Settings" profile
    profiles/
      <slug>/
        <slug>.json             -- profile settings

Profile JSON keys
-----------------
  profile_name   (str)  -- display name
  description    (str)  -- optional freeform description
  created_at     (str)  -- ISO-8601 creation timestamp
  last_modified  (str)  -- ISO-8601 last-save timestamp (optional)
  settings       (dict) -- keys of ``DEFAULT_SETTINGS``

Settings precedence, highest first: CLI flag, document ``options``, active
profile, ``DEFAULT_SETTINGS``. This module resolves the last two.
"""

import json
import logging
import shutil
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.utils import messages

logger = logging.getLogger(__name__)

DEFAULT_PROFILE = "Default Settings"

DEFAULT_SETTINGS: Dict[str, Any] = {
    "depth": 12,
    "d_max": 100,
    "output": "table",
    "max_depth": 16,
    "max_peel": 10000,
    "picard_rank_policy": "report",
    "float_digits": 6,
}


class ProfileManager:
    """Read/write access to named settings profiles.

    Responsibilities:
      - Enumerate, load, save and delete profiles.
      - Track which profile is currently active via ``active_profile.txt``.
      - Resolve a complete settings dict with fallback to the defaults.
    """

    def __init__(self, app_root: Optional[Path] = None):
        if app_root is None:
            from src.config.app_paths import get_app_root
            app_root = get_app_root()
        self.app_root = Path(app_root)
        self.profiles_dir = self.app_root / "config" / "profiles"
        self.profiles_dir.mkdir(parents=True, exist_ok=True)

        self.default_profile_path = self.app_root / "config" / "default_profile.json"
        self.active_profile_path = self.app_root / "config" / "active_profile.txt"

        if not self.default_profile_path.exists():
            self._create_default_profile()

    def _create_default_profile(self):
        """Write the built-in default profile."""
        self._write_json(self.default_profile_path, self._create_profile_data(
            DEFAULT_PROFILE, dict(DEFAULT_SETTINGS), "Factory default configuration"))

    def _profile_slug(self, name: str) -> str:
        """Return the sanitized folder/filename slug for a profile name."""
        return name.lower().replace(" ", "_").replace("/", "_")

    def get_profile_dir(self, name: str) -> Path:
        return self.profiles_dir / self._profile_slug(name)

    def _profile_path(self, name: str) -> Path:
        slug = self._profile_slug(name)
        return self.profiles_dir / slug / f"{slug}.json"

    def _normalize_profile_name(self, name: str) -> str:
        """Collapse whitespace and casefold *name* for case-insensitive comparisons."""
        return " ".join((name or "").split()).strip().casefold()

    def list_profiles(self) -> List[str]:
        """Return all profile names, with ``"Default Settings"`` always first."""
        profiles = [DEFAULT_PROFILE]
        seen = {self._normalize_profile_name(DEFAULT_PROFILE)}
        for file in sorted(self.profiles_dir.glob("*/*.json")):
            try:
                profile_name = self._load_json(file).get("profile_name", file.stem)
            except (OSError, ValueError):
                # Skip corrupted profiles
                continue
            norm = self._normalize_profile_name(profile_name)
            if norm and norm not in seen:
                seen.add(norm)
                profiles.append(profile_name)
        return profiles

    def load_profile(self, name: str) -> Optional[Dict]:
        """Return the full profile dict for *name*, or ``None`` if not found."""
        path = self.default_profile_path if name == DEFAULT_PROFILE else self._profile_path(name)
        if not path.exists():
            return None
        try:
            data = self._load_json(path)
        except (OSError, ValueError) as exc:
            logger.warning(messages.ConfigMessages.profile_error.format(name=name, error=exc))
            return None
        if self._normalize_profile_name(data.get("profile_name", "")) != self._normalize_profile_name(name):
            return None
        logger.debug(messages.ConfigMessages.profile_loaded.format(name=name))
        return data

    def save_profile(self, name: str, settings: Dict, description: str = "") -> bool:
        """Persist *settings* as a named profile, preserving ``created_at`` on update."""
        unknown = sorted(set(settings) - set(DEFAULT_SETTINGS))
        if unknown:
            raise ValueError(f"Unknown settings: {', '.join(unknown)}")
        path = self.default_profile_path if name == DEFAULT_PROFILE else self._profile_path(name)
        path.parent.mkdir(parents=True, exist_ok=True)

        existing = self.load_profile(name) if path.exists() else None
        if existing:
            profile_data = existing
            profile_data["last_modified"] = datetime.now().isoformat()
            profile_data["settings"] = settings
            if description:
                profile_data["description"] = description
        else:
            profile_data = self._create_profile_data(name, settings, description)

        self._write_json(path, profile_data)
        logger.info(messages.ConfigMessages.profile_saved.format(name=name))
        return True

    def delete_profile(self, name: str) -> bool:
        """Delete *name* from disk; ``"Default Settings"`` cannot be deleted."""
        if name == DEFAULT_PROFILE:
            return False
        profile_dir = self.get_profile_dir(name)
        if not profile_dir.exists():
            return False
        shutil.rmtree(profile_dir)
        if self._normalize_profile_name(self.get_active_profile()) == self._normalize_profile_name(name):
            self.set_active_profile(DEFAULT_PROFILE)
        logger.info(messages.ConfigMessages.profile_deleted.format(name=name))
        return True

    def get_active_profile(self) -> str:
        """Return the active profile name, defaulting to ``"Default Settings"``."""
        if self.active_profile_path.exists():
            try:
                name = self.active_profile_path.read_text(encoding="utf-8").strip()
                if name:
                    return name
            except OSError:
                pass
        return DEFAULT_PROFILE

    def set_active_profile(self, name: str):
        self.active_profile_path.parent.mkdir(parents=True, exist_ok=True)
        self.active_profile_path.write_text(name, encoding="utf-8")

    def resolve_settings(self, name: Optional[str] = None) -> Dict[str, Any]:
        """Defaults overlaid with the named (or active) profile's known settings."""
        name = name or self.get_active_profile()
        settings = dict(DEFAULT_SETTINGS)
        profile = self.load_profile(name)
        if profile is None:
            logger.warning(messages.ConfigMessages.profile_missing.format(name=name))
            return settings
        stored = profile.get("settings", {})
        if isinstance(stored, dict):
            settings.update({k: v for k, v in stored.items() if k in DEFAULT_SETTINGS})
        return settings

    def _create_profile_data(self, name: str, settings: Dict, description: str) -> Dict:
        return {
            "profile_name": name,
            "created_at": datetime.now().isoformat(),
            "description": description,
            "settings": settings,
        }

    def _load_json(self, file_path: Path) -> Dict:
        with open(file_path, encoding="utf-8") as f:
            return json.load(f)

    def _write_json(self, file_path: Path, data: Dict) -> None:
        file_path.parent.mkdir(parents=True, exist_ok=True)
        with open(file_path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2)
