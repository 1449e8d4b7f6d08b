"""Access to the JSON webs, diagrams and move pairs shipped with the package."""

from __future__ import annotations

import json
from importlib import resources

from .tangle_diagram import Diagram, diagram_from_json
from .web import Web, web_from_json

__all__ = ["web_names", "diagram_names", "load_corpus_web", "load_corpus_diagram", "webs", "diagrams", "move_pairs"]


def _dir(kind: str):
    return resources.files("sl3spider").joinpath("data").joinpath(kind)


def _names(kind: str) -> list[str]:
    return sorted(p.name[:-5] for p in _dir(kind).iterdir() if p.name.endswith(".json"))


def web_names() -> list[str]:
    return _names("webs")


def diagram_names() -> list[str]:
    return _names("diagrams")


def load_corpus_web(name: str) -> Web:
    return web_from_json(_dir("webs").joinpath(f"{name}.json").read_text())


def load_corpus_diagram(name: str) -> Diagram:
    return diagram_from_json(_dir("diagrams").joinpath(f"{name}.json").read_text())


def webs() -> dict[str, Web]:
    return {n: load_corpus_web(n) for n in web_names()}


def diagrams() -> dict[str, Diagram]:
    return {n: load_corpus_diagram(n) for n in diagram_names()}


def move_pairs() -> list[dict]:
    """Entries with keys move (R1/R2/R3), left, right and kink (the R1 sign, else 0)."""
    text = resources.files("sl3spider").joinpath("data").joinpath("moves.json").read_text()
    return json.loads(text)["moves"]
