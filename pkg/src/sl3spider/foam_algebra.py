"""The Frobenius algebra A = Z[X]/(X^3) behind closed foam evaluation.

Only the scalar shadow of foams is modelled here: dotted spheres, dotted
closed surfaces reached by neck-cutting, and theta foams.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "FrobElement",
    "ONE",
    "X",
    "dot_power",
    "mult",
    "counit",
    "comult",
    "tensor_mult",
    "handle_element",
    "sphere_eval",
    "closed_surface_eval",
    "theta_eval",
    "digon_identity_terms",
    "digon_identity_scalar",
    "tube_identity_scalar",
]


@dataclass(frozen=True)
class FrobElement:
    c0: int = 0
    c1: int = 0
    c2: int = 0

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return (self.c0, self.c1, self.c2)

    def __add__(self, other: "FrobElement") -> "FrobElement":
        return FrobElement(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FrobElement") -> "FrobElement":
        return FrobElement(*(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, k: int) -> "FrobElement":
        return FrobElement(*(k * a for a in self.coeffs))

    def __mul__(self, other: "FrobElement") -> "FrobElement":
        return mult(self, other)


ONE = FrobElement(1, 0, 0)
X = FrobElement(0, 1, 0)


def dot_power(k: int) -> FrobElement:
    c = [0, 0, 0]
    if k < 3:
        c[k] = 1
    return FrobElement(*c)


def mult(a: FrobElement, b: FrobElement) -> FrobElement:
    out = [0, 0, 0]
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            if i + j < 3:
                out[i + j] += x * y
    return FrobElement(*out)


def counit(a: FrobElement) -> int:
    return a.c2


Tensor = dict[tuple[int, int], int]  # (i, j) -> coefficient of X^i (x) X^j


def comult(a: FrobElement) -> Tensor:
    """Neck-cutting: comult(1) = 1(x)X^2 + X(x)X + X^2(x)1, A-linear in the left slot."""
    out: Tensor = {}
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        for i in range(3):
            j = 2 - i
            if i + k < 3:
                out[(i + k, j)] = out.get((i + k, j), 0) + c
    return {key: c for key, c in out.items() if c}


def tensor_mult(t: Tensor) -> FrobElement:
    out = FrobElement()
    for (i, j), c in t.items():
        out = out + mult(dot_power(i), dot_power(j)).scale(c)
    return out


def handle_element() -> FrobElement:
    """mult(comult(1)) = 3X^2."""
    return tensor_mult(comult(ONE))


def sphere_eval(dots: int) -> int:
    return 1 if dots == 2 else 0


def closed_surface_eval(genus: int, dots: int) -> int:
    """Cut every handle: a genus g surface becomes a sum of dotted spheres."""
    if genus < 0 or dots < 0:
        raise ValueError("genus and dots must be non-negative")
    if genus == 0:
        return sphere_eval(dots)
    # cutting the neck of one handle keeps the surface connected; each term
    # of comult(1) leaves its dots on the genus g-1 remainder
    return sum(c * closed_surface_eval(genus - 1, dots + i + j) for (i, j), c in comult(ONE).items())


_THETA_POS = {(0, 1, 2), (1, 2, 0), (2, 0, 1)}
_THETA_NEG = {(0, 2, 1), (2, 1, 0), (1, 0, 2)}


def theta_eval(k: int, l: int, m: int) -> int:
    t = (k, l, m)
    if t in _THETA_POS:
        return 1
    if t in _THETA_NEG:
        return -1
    return 0


def digon_identity_terms() -> list[int]:
    """Scalars of the two terms of the digon relation inside the composite.

    Each term closes up to a dotted theta foam.  The two terms differ by
    exchanging the roles of the two digon facets and enter with opposite
    signs, so antisymmetry of theta_eval makes them contribute equally.
    """
    first = theta_eval(1, 2, 0)
    second = -theta_eval(2, 1, 0)
    return [first, second]


def digon_identity_scalar() -> int:
    return sum(digon_identity_terms())


def tube_identity_scalar() -> int:
    """The knotted torus closes to genus 1 with no dots."""
    return closed_surface_eval(1, 0)

