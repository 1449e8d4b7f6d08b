"""Exact scalars: Laurent polynomials in q^(1/6) over Z[z] (z a primitive
sixth root of unity), quantum integers, trinomials, and rational functions
in s = q^(1/2).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial, gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "RingElement",
    "RationalFunction",
    "qint",
    "trinomial",
    "phase_monomial",
    "evaluate_at",
    "zeta_mul",
    "parse",
    "render",
]

Rational = Union[int, Fraction]


# --- Z[z], z^2 = z - 1 ----------------------------------------------------

def zeta_mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    a, b = x
    c, d = y
    bd = b * d
    return (a * c - bd, a * d + b * c + bd)


# powers of z: z^0..z^5
_ZPOW = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]


def _frac_sixths(r) -> int:
    r = Fraction(r)
    six = r * 6
    if six.denominator != 1:
        raise ValueError(f"exponent {r} is not a multiple of 1/6")
    return int(six)


class RingElement:
    """Element of Z[z][q^(+-1/6)].

    ``terms`` maps an exponent counted in sixths of a q-power to a
    coefficient ``(a, b)`` standing for ``a + b*z``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, tuple[int, int]] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c[0] or c[1]:
                    clean[int(e)] = (int(c[0]), int(c[1]))
        self._terms = clean
        self._hash = None

    # constructors
    @classmethod
    def from_int(cls, n: int) -> "RingElement":
        return cls({0: (n, 0)})

    @classmethod
    def q(cls, power: Rational = 1, coeff: int | tuple[int, int] = 1) -> "RingElement":
        if isinstance(coeff, int):
            coeff = (coeff, 0)
        return cls({_frac_sixths(power): coeff})

    @classmethod
    def zeta(cls, k: int = 1) -> "RingElement":
        return cls({0: _ZPOW[k % 6]})

    @classmethod
    def from_laurent(cls, coeffs: Mapping[int, int]) -> "RingElement":
        """Build from integer q-exponents to integer coefficients."""
        return cls({6 * e: (c, 0) for e, c in coeffs.items()})

    @property
    def terms(self) -> dict[int, tuple[int, int]]:
        return dict(self._terms)

    # arithmetic
    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            return other
        if isinstance(other, int):
            return RingElement.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, (a, b) in other._terms.items():
            c = out.get(e, (0, 0))
            out[e] = (c[0] + a, c[1] + b)
        return RingElement(out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement({e: (-a, -b) for e, (a, b) in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, tuple[int, int]] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                p = zeta_mul(c1, c2)
                e = e1 + e2
                c = out.get(e)
                out[e] = p if c is None else (c[0] + p[0], c[1] + p[1])
        return RingElement(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = RingElement.from_int(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "RingElement":
        """Inverse of a unit monomial (root of unity times a q-power)."""
        if len(self._terms) != 1:
            raise ValueError("only monomials with unit coefficient are invertible")
        (e, c), = self._terms.items()
        for k, z in enumerate(_ZPOW):
            if z == c:
                return RingElement({-e: _ZPOW[(-k) % 6]})
        raise ValueError(f"coefficient {c} is not a unit")

    # comparison
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # structure
    def is_zero(self) -> bool:
        return not self._terms

    def is_laurent(self) -> bool:
        """True when this is a plain integer Laurent polynomial in q."""
        return all(e % 6 == 0 and b == 0 for e, (a, b) in self._terms.items())

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def laurent_coefficients(self) -> dict[int, int]:
        if not self.is_laurent():
            raise ValueError("not a plain q-Laurent polynomial")
        return {e // 6: a for e, (a, _) in self._terms.items()}

    def bar(self) -> "RingElement":
        """The involution q -> q^-1 (coefficients untouched)."""
        return RingElement({-e: c for e, c in self._terms.items()})

    def is_palindromic(self) -> bool:
        return self.bar() == self

    def has_nonnegative_coefficients(self) -> bool:
        return all(b == 0 and a > 0 for a, b in self._terms.values())

    def __repr__(self):
        return f"RingElement({str(self)!r})"

    def __str__(self):
        return render(self)


# --- rendering and parsing -----------------------------------------------

def _render_zcoeff(a: int, b: int) -> str:
    zpart = {1: "z", -1: "-z"}.get(b, f"{b}z")
    if a == 0:
        return f"({zpart})"
    sign = "+" if b > 0 else ""
    return f"({a}{sign}{zpart})"


def _render_mono(e: int) -> str:
    r = Fraction(e, 6)
    if r.denominator == 1:
        k = r.numerator
        return "q" if k == 1 else f"q^{k}"
    return f"q^{{{r.numerator}/{r.denominator}}}"


def render(x: RingElement) -> str:
    items = sorted(x._terms.items(), reverse=True)
    if not items:
        return "0"
    parts: list[str] = []
    for e, (a, b) in items:
        if b == 0:
            neg = a < 0
            mag = abs(a)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = _render_mono(e)
            else:
                body = f"{mag}*{_render_mono(e)}"
        else:
            neg = False
            c = _render_zcoeff(a, b)
            body = c if e == 0 else f"{c}*{_render_mono(e)}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(\d+|[()*^{}/+\-]|q|z)")


def _tokens(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse near {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        t = self.peek()
        if t is None or (expected is not None and t != expected):
            raise ValueError(f"expected {expected!r}, got {t!r}")
        self.i += 1
        return t

    def integer(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        t = self.take()
        if not t.isdigit():
            raise ValueError(f"expected integer, got {t!r}")
        return sign * int(t)

    def zcoeff(self) -> tuple[int, int]:
        # inside parentheses: signed sum of integers and integer multiples of z
        a = b = 0
        sign = 1
        first = True
        while self.peek() != ")":
            t = self.peek()
            if t in "+-" and t is not None:
                self.take()
                sign = -1 if t == "-" else 1
            elif not first:
                raise ValueError("missing operator in coefficient")
            mag = 1
            if self.peek() is not None and self.peek().isdigit():
                mag = int(self.take())
            if self.peek() == "*":
                self.take()
            if self.peek() == "z":
                self.take()
                b += sign * mag
            else:
                a += sign * mag
            sign = 1
            first = False
        return a, b

    def mono(self) -> int:
        self.take("q")
        if self.peek() != "^":
            return 6
        self.take("^")
        if self.peek() == "{":
            self.take("{")
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.take("/")
                den = self.integer()
            self.take("}")
            return _frac_sixths(Fraction(num, den))
        return 6 * self.integer()

    def term(self, sign: int) -> RingElement:
        coeff = (sign, 0)
        t = self.peek()
        if t == "(":
            self.take("(")
            a, b = self.zcoeff()
            self.take(")")
            coeff = (sign * a, sign * b)
            if self.peek() == "*":
                self.take()
                return RingElement({self.mono(): coeff})
            return RingElement({0: coeff})
        if t == "z":
            self.take()
            coeff = (0, sign)
            if self.peek() == "*":
                self.take()
                return RingElement({self.mono(): coeff})
            return RingElement({0: coeff})
        if t is not None and t.isdigit():
            n = int(self.take())
            if self.peek() == "*":
                self.take()
                return RingElement({self.mono(): (sign * n, 0)})
            return RingElement({0: (sign * n, 0)})
        return RingElement({self.mono(): coeff})

    def expr(self) -> RingElement:
        total = RingElement()
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        total = total + self.term(sign)
        while self.peek() is not None:
            op = self.take()
            if op not in "+-":
                raise ValueError(f"unexpected token {op!r}")
            total = total + self.term(-1 if op == "-" else 1)
        return total


def parse(text: str) -> RingElement:
    """Inverse of ``str(RingElement)``."""
    p = _Parser(text)
    value = p.expr()
    if p.peek() is not None:
        raise ValueError(f"trailing input {p.toks[p.i:]}")
    return value


RingElement.parse = staticmethod(parse)  # type: ignore[attr-defined]


# --- named scalars ------------------------------------------------------------

def qint(n: int) -> RingElement:
    """Quantum integer [n] = (q^n - q^-n)/(q - q^-1)."""
    if n < 0:
        raise ValueError("qint expects n >= 0")
    return RingElement({6 * (n - 1 - 2 * k): (1, 0) for k in range(n)})


def trinomial(n: int, a: int, b: int) -> int:
    c = n - a - b
    if a < 0 or b < 0 or c < 0:
        return 0
    return factorial(n) // (factorial(a) * factorial(b) * factorial(c))


def phase_monomial(r: Rational) -> RingElement:
    """e^(i pi r) q^r for r in (1/3)Z."""
    six = _frac_sixths(r)
    if six % 2:
        # e^(i pi/6) and i are not in Z[z]
        raise ValueError(f"phase e^(i pi {Fraction(r)}) is outside Z[z]")
    return RingElement({six: _ZPOW[(six // 2) % 6]})


def _exact_root(x: Fraction, d: int) -> Fraction:
    def iroot(n: int) -> int:
        lo, hi = 0, 1
        while hi ** d <= n:
            hi *= 2
        while lo < hi - 1:
            mid = (lo + hi) // 2
            if mid ** d <= n:
                lo = mid
            else:
                hi = mid
        if lo ** d != n:
            raise ValueError(f"{x} has no rational {d}-th root")
        return lo

    if x < 0:
        if d % 2 == 0:
            raise ValueError(f"{x} has no real {d}-th root")
        return -_exact_root(-x, d)
    return Fraction(iroot(x.numerator), iroot(x.denominator))


def evaluate_at(x, q0: Rational):
    """Exact specialisation at q = q0.

    A RingElement gives a pair (u, v) of rationals meaning u + v*z; a
    RationalFunction gives a Fraction (s = q0^(1/2) must be rational).
    """
    q0 = Fraction(q0)
    if q0 == 0:
        raise ZeroDivisionError("q0 must be nonzero")
    if isinstance(x, RationalFunction):
        return x.evaluate_s(_exact_root(q0, 2))
    if isinstance(x, int):
        return (Fraction(x), Fraction(0))
    u = v = Fraction(0)
    for e, (a, b) in x._terms.items():
        r = Fraction(e, 6)
        p = q0 ** r.numerator if r.denominator == 1 else _exact_root(q0, r.denominator) ** r.numerator
        u += a * p
        v += b * p
    return (u, v)


# --- rational functions in s ------------------------------------------------

Poly = tuple[int, ...]  # coefficients, lowest degree first


def _trim(p: Iterable[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p: Poly, r: Poly) -> Poly:
    n = max(len(p), len(r))
    return _trim((p[i] if i < len(p) else 0) + (r[i] if i < len(r) else 0) for i in range(n))


def _pmul(p: Poly, r: Poly) -> Poly:
    if not p or not r:
        return ()
    out = [0] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(r):
                out[i + j] += a * b
    return _trim(out)


def _content(p: Poly) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _pdivmod_q(p: list[Fraction], r: list[Fraction]):
    p = list(p)
    quo = [Fraction(0)] * max(len(p) - len(r) + 1, 1)
    while len(p) >= len(r) and any(p):
        shift = len(p) - len(r)
        f = p[-1] / r[-1]
        quo[shift] = f
        for i, c in enumerate(r):
            p[i + shift] -= f * c
        while p and p[-1] == 0:
            p.pop()
    return quo, p


def _pgcd(p: Poly, r: Poly) -> Poly:
    a = [Fraction(c) for c in p]
    b = [Fraction(c) for c in r]
    while b:
        _, rem = _pdivmod_q(a, b)
        a, b = b, rem
    if not a:
        return ()
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = _content(ints)
    return _trim(c // g for c in ints)


def _pexact_div(p: Poly, r: Poly) -> Poly:
    quo, rem = _pdivmod_q([Fraction(c) for c in p], [Fraction(c) for c in r])
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return _trim(int(c) for c in quo)


def _low_order(p: Poly) -> int:
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    return k


class RationalFunction:
    """Reduced quotient of integer polynomials in s (s = q^(1/2)).

    The denominator has positive leading coefficient and the pair has no
    common factor, so equal values have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable[int] = (), den: Iterable[int] = (1,), _reduced=False):
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
        if not num:
            return (), (1,)
        # strip common powers of s
        k = min(_low_order(num), _low_order(den))
        if k:
            num, den = num[k:], den[k:]
        if len(den) > 1 and any(den[:-1]):
            g = _pgcd(num, den)
            if len(g) > 1:
                num, den = _pexact_div(num, g), _pexact_div(den, g)
        c = gcd(_content(num), _content(den))
        if den[-1] < 0:
            c = -c
        if c != 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        return num, den

    @classmethod
    def from_int(cls, n: int) -> "RationalFunction":
        return cls((n,), (1,), _reduced=True) if n else cls((), (1,), _reduced=True)

    @classmethod
    def s_power(cls, k: int, coeff: int = 1) -> "RationalFunction":
        if coeff == 0:
            return cls.from_int(0)
        if k >= 0:
            return cls((0,) * k + (coeff,), (1,), _reduced=True)
        return cls((coeff,), (0,) * (-k) + (1,), _reduced=True)

    @classmethod
    def q_power(cls, k: int, coeff: int = 1) -> "RationalFunction":
        return cls.s_power(2 * k, coeff)

    @classmethod
    def from_laurent_s(cls, coeffs: Mapping[int, int]) -> "RationalFunction":
        coeffs = {e: c for e, c in coeffs.items() if c}
        if not coeffs:
            return cls.from_int(0)
        lo = min(coeffs)
        shift = -lo if lo < 0 else 0
        num = [0] * (max(coeffs) + shift + 1)
        for e, c in coeffs.items():
            num[e + shift] = c
        return cls(num, (0,) * shift + (1,))

    def is_zero(self) -> bool:
        return not self.num

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalFunction(_padd(self.num, other.num), self.den)
        return RationalFunction(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(tuple(-c for c in self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RationalFunction.from_int(0)
        return RationalFunction(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate_s(self, s0: Rational) -> Fraction:
        s0 = Fraction(s0)

        def ev(p: Poly) -> Fraction:
            acc = Fraction(0)
            for c in reversed(p):
                acc = acc * s0 + c
            return acc

        d = ev(self.den)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at s = {s0}")
        return ev(self.num) / d

    def evaluate_mod(self, s0: int, p: int) -> int:
        """Value at s = s0 in Z/p (s0 already reduced mod p)."""
        def ev(poly: Poly) -> int:
            acc = 0
            for c in reversed(poly):
                acc = (acc * s0 + c) % p
            return acc

        d = ev(self.den)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes mod p")
        return ev(self.num) * pow(d, -1, p) % p

    def to_ring_element(self) -> RingElement:
        """Convert a Laurent polynomial in s (monomial denominator) to q-powers."""
        k = len(self.den) - 1
        if self.den != (0,) * k + (1,):
            raise ValueError("not a Laurent polynomial in s")
        return RingElement({3 * (i - k): (c, 0) for i, c in enumerate(self.num) if c})

    def __repr__(self):
        def show(p: Poly) -> str:
            if not p:
                return "0"
            bits = []
            for i, c in enumerate(p):
                if c:
                    bits.append(f"{c}" if i == 0 else f"{c}*s^{i}")
            return " + ".join(bits)

        if self.den == (1,):
            return f"RationalFunction({show(self.num)})"
        return f"RationalFunction(({show(self.num)}) / ({show(self.den)}))"
