"""Grothendieck ring of type-1 Uq(sl3)-modules.

Elements are virtual sums of irreducibles V(m,n).  Only tensoring with the
two fundamental modules is implemented; everything else is built from it.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping

from .scalar_rings import RingElement, qint, trinomial

__all__ = [
    "RepRingElement",
    "V",
    "tensor_fundamental",
    "decompose_word",
    "qdim",
    "dim",
    "explicit_formula_rhs",
    "explicit_formula_terms",
]


class RepRingElement:
    __slots__ = ("_mult",)

    def __init__(self, multiplicities: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (m, n), c in (multiplicities or {}).items():
            if c and m >= 0 and n >= 0:
                clean[(m, n)] = c
        self._mult = clean

    @property
    def multiplicities(self) -> dict[tuple[int, int], int]:
        return dict(self._mult)

    def __add__(self, other: "RepRingElement") -> "RepRingElement":
        out = dict(self._mult)
        for k, c in other._mult.items():
            out[k] = out.get(k, 0) + c
        return RepRingElement(out)

    def __neg__(self):
        return RepRingElement({k: -c for k, c in self._mult.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return RepRingElement({w: k * c for w, c in self._mult.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, RepRingElement):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self):
        return hash(tuple(sorted(self._mult.items())))

    def dual(self) -> "RepRingElement":
        return RepRingElement({(n, m): c for (m, n), c in self._mult.items()})

    def __str__(self):
        if not self._mult:
            return "0"
        parts = []
        for (m, n), c in sorted(self._mult.items(), reverse=True):
            body = f"V({m},{n})"
            mag = abs(c)
            if mag != 1:
                body = f"{mag}*{body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"RepRingElement({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "RepRingElement":
        text = text.strip()
        if text == "0":
            return cls()
        out: dict[tuple[int, int], int] = {}
        pattern = re.compile(r"\s*([+-])?\s*(?:(\d+)\*)?V\((\d+),(\d+)\)")
        pos = 0
        while pos < len(text):
            m = pattern.match(text, pos)
            if not m:
                raise ValueError(f"cannot parse {text[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = int(m.group(2) or 1)
            key = (int(m.group(3)), int(m.group(4)))
            out[key] = out.get(key, 0) + sign * c
            pos = m.end()
        return cls(out)


def V(m: int, n: int) -> RepRingElement:
    return RepRingElement({(m, n): 1})


def tensor_fundamental(x: RepRingElement, sign: str) -> RepRingElement:
    out: dict[tuple[int, int], int] = {}

    def put(m, n, c):
        if m >= 0 and n >= 0:
            out[(m, n)] = out.get((m, n), 0) + c

    for (m, n), c in x._mult.items():
        if sign == "+":
            put(m + 1, n, c)
            put(m - 1, n + 1, c)
            put(m, n - 1, c)
        elif sign == "-":
            put(m, n + 1, c)
            put(m + 1, n - 1, c)
            put(m - 1, n, c)
        else:
            raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return RepRingElement(out)


def decompose_word(word: Iterable[str]) -> RepRingElement:
    """Irreducible decomposition of V_{s1} x ... x V_{sk}, tensored left to right."""
    x = V(0, 0)
    for s in word:
        x = tensor_fundamental(x, s)
    return x


@lru_cache(maxsize=None)
def _qdim_irrep(m: int, n: int) -> RingElement:
    if m < 0 or n < 0:
        return RingElement()
    if (m, n) == (0, 0):
        return RingElement.from_int(1)
    if m > 0:
        # V+ x V(m-1,n) = V(m,n) + V(m-2,n+1) + V(m-1,n-1)
        return qint(3) * _qdim_irrep(m - 1, n) - _qdim_irrep(m - 2, n + 1) - _qdim_irrep(m - 1, n - 1)
    # m == 0: V- x V(0,n-1) = V(0,n) + V(1,n-2) + V(-1,n-1)
    return qint(3) * _qdim_irrep(0, n - 1) - _qdim_irrep(1, n - 2)


def qdim(x: RepRingElement) -> RingElement:
    total = RingElement()
    for (m, n), c in x._mult.items():
        total = total + c * _qdim_irrep(m, n)
    return total


def dim(x: RepRingElement) -> int:
    total = 0
    for (m, n), c in x._mult.items():
        total += c * sum(a for a, _ in _qdim_irrep(m, n).terms.values())
    return total


def explicit_formula_terms(m: int, n: int) -> list[tuple[int, int, int]]:
    """(coefficient, #plus letters, #minus letters) for the alternating formula."""
    terms = []
    for delta in (0, 1):
        for i in range(m + 1):
            for j in range(m // 2 + 1):
                a = trinomial(m - delta - i - 2 * j, i, j)
                if not a:
                    continue
                for k in range(n + 1):
                    for l in range(n // 2 + 1):
                        b = trinomial(n - delta - k - 2 * l, k, l)
                        if not b:
                            continue
                        sign = -1 if (delta + i + k) % 2 else 1
                        plus = m - 2 * i + k - 3 * j - delta
                        minus = n + i - 2 * k - 3 * l - delta
                        terms.append((sign * a * b, plus, minus))
    return terms


def explicit_formula_rhs(m: int, n: int) -> RepRingElement:
    total = RepRingElement()
    for c, plus, minus in explicit_formula_terms(m, n):
        total = total + c * decompose_word("+" * plus + "-" * minus)
    return total
