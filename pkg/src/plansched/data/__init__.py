"""Bundled instance documents: the worked examples and benchmark scenario 1."""

from importlib import resources

from ..model import Instance
from ..serialize import instance_from_dict

import json


def bundled_names() -> list[str]:
    root = resources.files(__package__)
    out = []
    for entry in root.iterdir():
        if entry.name.endswith(".json"):
            out.append(entry.name)
        elif entry.name == "benchmarks":
            out.extend(f"benchmarks/{sub.name}" for sub in entry.iterdir() if sub.name.endswith(".json"))
    return sorted(out)


def load_bundled(name: str) -> Instance:
    """Load a bundled instance, e.g. ``example1.json`` or ``benchmarks/scenario1.json``."""
    root = resources.files(__package__)
    text = root.joinpath(name).read_text(encoding="utf-8")
    return instance_from_dict(json.loads(text))
