"""The sl3 link invariant: skein expansion, colored invariant and Euler characteristics.

Crossings carry homological weights in (1/3)Z.  A crossing smoothed with
weight r contributes e^(i pi r) q^r, so the bracket is the graded Euler
characteristic of the cube of smoothings and both can be computed from the
same table of weights.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .partition_graph import build_graph, product
from .rep_ring import explicit_formula_terms
from .scalar_rings import RingElement, phase_monomial, qint
from .tangle_diagram import Diagram, cable, cable_strands, counts, crossing_sign, smooth, smooth_crossing
from .web import canonical_code, evaluate, simplify

__all__ = [
    "CONVENTIONS",
    "DEFAULT_CONVENTION",
    "crossing_weight",
    "bracket",
    "framing_factor",
    "colored_invariant",
    "hypercube_ranks",
    "euler_characteristic",
    "colored_euler_characteristic",
    "theorem_phase",
    "CrossingCapExceeded",
]

F = Fraction
# sign -> (weight of the oriented smoothing, weight of the I-web)
CONVENTIONS = {
    "g-objects": {1: (F(-2, 3), F(1, 3)), -1: (F(2, 3), F(-1, 3))},
    "complexframed": {1: (F(-1, 3), F(2, 3)), -1: (F(1, 3), F(-2, 3))},
}
DEFAULT_CONVENTION = "g-objects"
Q3 = qint(3)


class CrossingCapExceeded(ValueError):
    pass


def crossing_weight(sign: int, bit: int, convention: str = DEFAULT_CONVENTION) -> Fraction:
    return CONVENTIONS[convention][sign][bit]


def _check_closed(D: Diagram) -> None:
    if set(D.map.opp) != set(D.map.vert):
        raise ValueError("diagram is not closed")


def bracket(D: Diagram, convention: str = DEFAULT_CONVENTION, cap: int | None = 24) -> RingElement:
    """Skein expansion, simplifying webs after every crossing."""
    _check_closed(D)
    xs = D.crossings()
    if cap is not None and len(xs) > cap:
        raise CrossingCapExceeded(f"{len(xs)} crossings exceed the cap {cap}")
    signs = {c: crossing_sign(D.map, c) for c in xs}
    weights = {c: [phase_monomial(crossing_weight(signs[c], b, convention)) for b in (0, 1)] for c in xs}
    states: dict[tuple, list] = {}

    def add(coeff, m):
        key = canonical_code(m)
        cur = states.get(key)
        if cur is None:
            states[key] = [m, coeff]
        else:
            cur[1] = cur[1] + coeff

    for c, m in simplify(D.map.copy()):
        add(c, m)
    for x in xs:
        old = states
        states = {}
        for m, coeff in old.values():
            if coeff.is_zero():
                continue
            for bit in (0, 1):
                m2 = m.copy()
                smooth_crossing(m2, x, bit)
                for c2, m3 in simplify(m2):
                    add(coeff * weights[x][bit] * c2, m3)
    total = RingElement()
    for m, coeff in states.values():
        if m.rot:
            # a fully smoothed map that survives simplification is a non-empty web
            raise AssertionError("irreducible web left after skein expansion")
        total = total + coeff
    return total


def _monomial_quotient(x: RingElement, y: RingElement) -> RingElement:
    """u with x = u*y, required to be a single term."""
    if y.is_zero():
        raise ZeroDivisionError
    shift = F(max(x.terms) - max(y.terms), 6)
    for k in range(6):
        u = RingElement.zeta(k) * RingElement.q(shift)
        if u * y == x:
            return u
    raise ValueError("quotient is not a unit monomial")


def framing_factor(sign: int, convention: str = DEFAULT_CONVENTION) -> RingElement:
    """The unit picked up by the bracket under one kink of the given sign."""
    from .tangle_diagram import from_braid

    kink = from_braid(2, [sign])
    return _monomial_quotient(bracket(kink, convention), Q3)


def colored_invariant(D: Diagram, colors: Sequence[tuple[int, int]],
                      convention: str = DEFAULT_CONVENTION, cap: int | None = 24) -> RingElement:
    """Invariant colored by V(m_t, n_t) on component t, through cables L_{a,b}."""
    if len(colors) != D.num_components:
        raise ValueError(f"need {D.num_components} colors, got {len(colors)}")
    per_comp = [explicit_formula_terms(m, n) for m, n in colors]
    cache: dict[tuple, RingElement] = {}
    total = RingElement()
    for choice in itertools.product(*per_comp):
        coeff = 1
        spec = []
        for c, plus, minus in choice:
            coeff *= c
            spec.append((1,) * plus + (-1,) * minus)
        key = tuple(spec)
        if key not in cache:
            cache[key] = bracket(cable_strands(D, spec), convention, cap)
        total = total + coeff * cache[key]
    return total


def hypercube_ranks(D: Diagram, convention: str = DEFAULT_CONVENTION,
                    cap: int | None = 16) -> dict[Fraction, RingElement]:
    """Graded ranks of the cube of smoothings by homological degree.

    The smoothing s sits in degree r = sum of crossing weights and contributes
    q^r times the bracket of its web.
    """
    _check_closed(D)
    xs = D.crossings()
    if cap is not None and len(xs) > cap:
        raise CrossingCapExceeded(f"{len(xs)} crossings exceed the cap {cap}")
    signs = [crossing_sign(D.map, c) for c in xs]
    out: dict[Fraction, RingElement] = {}
    for bits in itertools.product((0, 1), repeat=len(xs)):
        r = sum((crossing_weight(sg, b, convention) for sg, b in zip(signs, bits)), F(0))
        val = evaluate(smooth(D, bits)) * RingElement.q(r)
        out[r] = out.get(r, RingElement()) + val
    return dict(sorted(out.items()))


def euler_characteristic(D: Diagram, convention: str = DEFAULT_CONVENTION,
                         cap: int | None = 16) -> RingElement:
    total = RingElement()
    for r, rank in hypercube_ranks(D, convention, cap).items():
        total = total + RingElement.zeta(int(3 * r)) * rank
    return total


def theorem_phase(D: Diagram, colors: Sequence[tuple[int, int]]) -> RingElement:
    """e^(i pi (2/3)(n_+ - n_-) sum(m - n)), with n_+ and n_- counted on D itself."""
    n_pos, n_neg = counts(D)
    k = 2 * (n_pos - n_neg) * sum(m - n for m, n in colors)
    return RingElement.zeta(k % 6)


def colored_euler_characteristic(D: Diagram, colors: Sequence[tuple[int, int]],
                                 convention: str = DEFAULT_CONVENTION,
                                 cap: int | None = 16) -> RingElement:
    """Alternating sum over the partition graph of the cables' Euler characteristics."""
    if len(colors) != D.num_components:
        raise ValueError(f"need {D.num_components} colors, got {len(colors)}")
    graph = product([build_graph(m, n) for m, n in colors])
    cache: dict[tuple, RingElement] = {}
    total = RingElement()
    for v in range(len(graph.vertices)):
        parts = graph.vertex_tuple(v)
        C = cable(D, parts)
        key = canonical_code(C.map)
        if key not in cache:
            cache[key] = euler_characteristic(C, convention, cap)
        total = total + (-1) ** graph.degree(v) * cache[key]
    return total
