"""Pinned fixtures: cycle systems and routing plans for the worked examples."""

from __future__ import annotations

import json
from importlib import resources
from typing import Optional


def load_fixture(name: str) -> dict:
    """Load a packaged fixture by name (e.g. "k7", "k8", "k10")."""
    ref = resources.files(__package__) / f"{name.lower()}.json"
    if not ref.is_file():
        raise FileNotFoundError(f"no packaged fixture named {name!r}")
    return json.loads(ref.read_text())


def fixture_names() -> list:
    return sorted(
        p.name[:-5]
        for p in resources.files(__package__).iterdir()
        if p.name.endswith(".json")
    )


__all__ = ["load_fixture", "fixture_names"]
