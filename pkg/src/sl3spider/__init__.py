"""Exact sl3 quantum invariants from webs, cables and resolution complexes."""

from __future__ import annotations

from .invariant import bracket, colored_euler_characteristic, colored_invariant, euler_characteristic, framing_factor
from .rep_ring import V, decompose_word, qdim
from .scalar_rings import RationalFunction, RingElement, parse, qint, render
from .tangle_diagram import Diagram, cable, from_braid, load_diagram, smooth
from .web import Web, evaluate, load_web

__version__ = "0.1.0"

__all__ = [
    "RingElement",
    "RationalFunction",
    "qint",
    "parse",
    "render",
    "V",
    "decompose_word",
    "qdim",
    "Web",
    "evaluate",
    "load_web",
    "Diagram",
    "from_braid",
    "smooth",
    "cable",
    "load_diagram",
    "bracket",
    "framing_factor",
    "colored_invariant",
    "euler_characteristic",
    "colored_euler_characteristic",
]
