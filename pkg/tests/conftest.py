"""Shared test configuration for import paths and an isolated profile root."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parent.parent
SRC_DIR = PROJECT_ROOT / "src"
DATA_DIR = Path(__file__).resolve().parent / "data"

for path in (PROJECT_ROOT, SRC_DIR):
    path_str = str(path)
    if path_str not in sys.path:
        sys.path.insert(0, path_str)


@pytest.fixture(autouse=True)
def isolated_app_root(monkeypatch, tmp_path):
    """Profiles written by a test land in its own tmp directory."""
    root = tmp_path / "app_root"
    monkeypatch.setenv("RESTRICTION_TOOLKIT_HOME", str(root))
    return root


@pytest.fixture
def data_dir():
    return DATA_DIR
