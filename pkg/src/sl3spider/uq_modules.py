"""Matrix models of Uq(sl3)-modules over rational functions in s = q^(1/2).

Matrices act on column vectors: entry (r, c) is the coefficient of basis
vector r in the image of basis vector c.  Tensor products use
Delta(E) = E(x)K + 1(x)E and Delta(F) = F(x)1 + K^-1(x)F, the coproduct for
which the cup, cap and trivalent maps below are module maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .scalar_rings import RationalFunction

__all__ = [
    "Matrix",
    "UqModule",
    "ModuleMap",
    "GENERATORS",
    "fundamental",
    "trivial",
    "tensor",
    "tensor_word",
    "check_module",
    "elementary_morphism",
    "check_morphism",
    "compose",
    "pad_with_identities",
    "identity_map",
    "weight",
    "duality_relations",
]

RF = RationalFunction
ZERO = RF.from_int(0)
ONE = RF.from_int(1)


def s(k: int, c: int = 1) -> RF:
    return RF.s_power(k, c)


def q(k: int, c: int = 1) -> RF:
    return RF.s_power(2 * k, c)


QINT2 = q(1) + q(-1)


class Matrix:
    """Sparse matrix with RationalFunction entries."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: Mapping[tuple[int, int], RF] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {k: v for k, v in (entries or {}).items() if not v.is_zero()}

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols)

    @classmethod
    def diagonal(cls, values: Sequence[RF]) -> "Matrix":
        return cls(len(values), len(values), {(i, i): v for i, v in enumerate(values)})

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, RF]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], RF] = {}
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                key = (r, c)
                prod = a * b
                cur = out.get(key)
                out[key] = prod if cur is None else cur + prod
        return Matrix(self.nrows, other.ncols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        out = dict(self.entries)
        for k, v in other.entries.items():
            cur = out.get(k)
            out[k] = v if cur is None else cur + v
        return Matrix(self.nrows, self.ncols, out)

    def __neg__(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c: RF | int) -> "Matrix":
        if isinstance(c, int):
            c = RF.from_int(c)
        return Matrix(self.nrows, self.ncols, {k: c * v for k, v in self.entries.items()})

    def kron(self, other: "Matrix") -> "Matrix":
        out = {}
        for (r1, c1), a in self.entries.items():
            for (r2, c2), b in other.entries.items():
                out[(r1 * other.nrows + r2, c1 * other.ncols + c2)] = a * b
        return Matrix(self.nrows * other.nrows, self.ncols * other.ncols, out)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __getitem__(self, key: tuple[int, int]) -> RF:
        return self.entries.get(key, ZERO)

    def column(self, c: int) -> dict[int, RF]:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def evaluate_mod(self, s0: int, p: int):
        import numpy as np

        out = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for (r, c), v in self.entries.items():
            out[r, c] = v.evaluate_mod(s0, p)
        return out

    def render(self) -> str:
        """Aligned text for debugging."""
        cells = [[repr(self[(r, c)])[len("RationalFunction("):-1] if (r, c) in self.entries else "0"
                  for c in range(self.ncols)] for r in range(self.nrows)]
        width = max((len(x) for row in cells for x in row), default=1)
        return "\n".join(" ".join(x.rjust(width) for x in row) for row in cells)


GENERATORS = ("K1", "K1inv", "K2", "K2inv", "E1", "E2", "F1", "F2")


@dataclass
class UqModule:
    basis_labels: list[tuple]
    action: dict[str, Matrix]
    word: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def __getitem__(self, g: str) -> Matrix:
        return self.action[g]


def _module_from_table(sign: str, k1, k2, e1, e2, f1, f2) -> UqModule:
    # basis order v_{-1}, v_0, v_1
    idx = {-1: 0, 0: 1, 1: 2}

    def op(pairs):
        return Matrix(3, 3, {(idx[t], idx[src]): ONE for src, t in pairs})

    act = {
        "K1": Matrix.diagonal([q(e) for e in k1]),
        "K1inv": Matrix.diagonal([q(-e) for e in k1]),
        "K2": Matrix.diagonal([q(e) for e in k2]),
        "K2inv": Matrix.diagonal([q(-e) for e in k2]),
        "E1": op(e1),
        "E2": op(e2),
        "F1": op(f1),
        "F2": op(f2),
    }
    return UqModule([((sign, i),) for i in (-1, 0, 1)], act, sign)


def fundamental(sign: str) -> UqModule:
    if sign == "+":
        return _module_from_table(
            "+", k1=(0, -1, 1), k2=(-1, 1, 0),
            e1=[(0, 1)], e2=[(-1, 0)], f1=[(1, 0)], f2=[(0, -1)],
        )
    if sign == "-":
        return _module_from_table(
            "-", k1=(-1, 1, 0), k2=(0, -1, 1),
            e1=[(-1, 0)], e2=[(0, 1)], f1=[(0, -1)], f2=[(1, 0)],
        )
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def trivial() -> UqModule:
    one = Matrix.identity(1)
    z = Matrix.zero(1, 1)
    return UqModule([()], {"K1": one, "K1inv": one, "K2": one, "K2inv": one,
                           "E1": z, "E2": z, "F1": z, "F2": z})


def tensor(M: UqModule, N: UqModule) -> UqModule:
    IM, IN = Matrix.identity(M.dim), Matrix.identity(N.dim)
    act = {}
    for i in ("1", "2"):
        K, Kinv = f"K{i}", f"K{i}inv"
        act[K] = M[K].kron(N[K])
        act[Kinv] = M[Kinv].kron(N[Kinv])
        act[f"E{i}"] = M[f"E{i}"].kron(N[K]) + IM.kron(N[f"E{i}"])
        act[f"F{i}"] = M[f"F{i}"].kron(IN) + M[Kinv].kron(N[f"F{i}"])
    labels = [a + b for a in M.basis_labels for b in N.basis_labels]
    return UqModule(labels, act, M.word + N.word)


_WORD_CACHE: dict[str, UqModule] = {}


def tensor_word(word: str) -> UqModule:
    """V_{w1} (x) ... (x) V_{wk}; the empty word is the trivial module."""
    if word not in _WORD_CACHE:
        if word == "":
            _WORD_CACHE[word] = trivial()
        elif len(word) == 1:
            _WORD_CACHE[word] = fundamental(word)
        else:
            _WORD_CACHE[word] = tensor(tensor_word(word[:-1]), fundamental(word[-1]))
    return _WORD_CACHE[word]


def _q_exponent(val: RF) -> int:
    num, den = val.num, val.den
    if den == (1,) and num == (0,) * (len(num) - 1) + (1,):
        e = len(num) - 1
    elif num == (1,) and den == (0,) * (len(den) - 1) + (1,):
        e = -(len(den) - 1)
    else:
        raise ValueError("not a power of q")
    if e % 2:
        raise ValueError("not an integral power of q")
    return e // 2


def weight(M: UqModule, v: int) -> tuple[int, int]:
    """Exponents (a, b) with K1 v = q^a v, K2 v = q^b v for a weight basis vector."""
    return (_q_exponent(M["K1"][(v, v)]), _q_exponent(M["K2"][(v, v)]))


def check_module(M: UqModule) -> list[str]:
    """Names of violated defining relations (empty list means all hold)."""
    I = Matrix.identity(M.dim)
    bad = []

    def need(name, lhs, rhs):
        if lhs != rhs:
            bad.append(name)

    K = {i: M[f"K{i}"] for i in (1, 2)}
    Ki = {i: M[f"K{i}inv"] for i in (1, 2)}
    E = {i: M[f"E{i}"] for i in (1, 2)}
    F = {i: M[f"F{i}"] for i in (1, 2)}
    for i in (1, 2):
        need(f"K{i}K{i}^-1=1", K[i] @ Ki[i], I)
        need(f"K{i}^-1K{i}=1", Ki[i] @ K[i], I)
    need("K1K2=K2K1", K[1] @ K[2], K[2] @ K[1])
    for i in (1, 2):
        for j in (1, 2):
            a = 2 if i == j else -1
            need(f"K{i}E{j}=q^{a}E{j}K{i}", K[i] @ E[j], (E[j] @ K[i]).scale(q(a)))
            need(f"K{i}F{j}=q^{-a}F{j}K{i}", K[i] @ F[j], (F[j] @ K[i]).scale(q(-a)))
    for i in (1, 2):
        need(f"(q-q^-1)(E{i}F{i}-F{i}E{i})=K{i}-K{i}^-1",
             (E[i] @ F[i] - F[i] @ E[i]).scale(q(1) - q(-1)), K[i] - Ki[i])
    need("E1F2=F2E1", E[1] @ F[2], F[2] @ E[1])
    need("E2F1=F1E2", E[2] @ F[1], F[1] @ E[2])
    for X, name in ((E, "E"), (F, "F")):
        for i, j in ((1, 2), (2, 1)):
            lhs = X[i] @ X[i] @ X[j] - (X[i] @ X[j] @ X[i]).scale(QINT2) + X[j] @ X[i] @ X[i]
            if not lhs.is_zero():
                bad.append(f"Serre {name}{i}^2{name}{j}")
    return bad


@dataclass
class ModuleMap:
    source: UqModule
    target: UqModule
    matrix: Matrix
    name: str = ""
    verified: bool = field(default=False)

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match "
                             f"{self.target.dim}x{self.source.dim}")


def identity_map(M: UqModule) -> ModuleMap:
    return ModuleMap(M, M, Matrix.identity(M.dim), "id", True)


def _vec_index(word: str, idx: Sequence[int]) -> int:
    out = 0
    for i in idx:
        out = out * 3 + (i + 1)
    return out


def elementary_morphism(kind: str) -> ModuleMap:
    """One of 'b-+', 'b+-', 'd-+', 'd+-', 'h++-', 'h--+'."""
    one = trivial()
    if kind in ("b-+", "b+-"):
        word = kind[1:]
        tgt = tensor_word(word)
        ent = {
            (_vec_index(word, (-1, 1)), 0): q(-1, -1),
            (_vec_index(word, (0, 0)), 0): ONE,
            (_vec_index(word, (1, -1)), 0): q(1, -1),
        }
        return ModuleMap(one, tgt, Matrix(tgt.dim, 1, ent), kind)
    if kind in ("d-+", "d+-"):
        word = kind[1:]
        src = tensor_word(word)
        ent = {
            (0, _vec_index(word, (-1, 1))): q(-1, -1),
            (0, _vec_index(word, (0, 0))): ONE,
            (0, _vec_index(word, (1, -1))): q(1, -1),
        }
        return ModuleMap(src, one, Matrix(1, src.dim, ent), kind)
    if kind in ("h++-", "h--+"):
        word = kind[1:3]
        src = tensor_word(word)
        tgt = fundamental(kind[3])
        ent = {}
        for (a, b), out in (((-1, 0), -1), ((-1, 1), 0), ((0, 1), 1)):
            ent[(out + 1, _vec_index(word, (a, b)))] = s(-1)
            ent[(out + 1, _vec_index(word, (b, a)))] = s(1, -1)
        return ModuleMap(src, tgt, Matrix(3, 9, ent), kind)
    raise ValueError(f"unknown morphism {kind!r}")


def check_morphism(f: ModuleMap) -> str | None:
    """First generator that f fails to intertwine, or None."""
    for g in GENERATORS:
        if f.matrix @ f.source[g] != f.target[g] @ f.matrix:
            return g
    return None


def compose(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    """g o f."""
    if f.target.dim != g.source.dim or f.target.word != g.source.word:
        raise ValueError(f"cannot compose {g.name} after {f.name}")
    return ModuleMap(f.source, g.target, g.matrix @ f.matrix, f"{g.name}o{f.name}",
                     f.verified and g.verified)


def pad_with_identities(f: ModuleMap, left: Iterable[UqModule] = (), right: Iterable[UqModule] = ()) -> ModuleMap:
    """id_left (x) f (x) id_right."""
    left = list(left)
    right = list(right)
    lw = "".join(M.word for M in left)
    rw = "".join(M.word for M in right)
    ldim = 1
    for M in left:
        ldim *= M.dim
    rdim = 1
    for M in right:
        rdim *= M.dim
    mat = Matrix.identity(ldim).kron(f.matrix).kron(Matrix.identity(rdim))
    src = tensor_word(lw + f.source.word + rw)
    tgt = tensor_word(lw + f.target.word + rw)
    return ModuleMap(src, tgt, mat, f.name, f.verified)


def duality_relations() -> dict[str, bool]:
    """The four zigzag identities and the two h-compatibility identities.

    The second zigzag on each line pairs b and d of the other orientation,
    the only reading under which the composites are defined.
    """
    em = elementary_morphism
    ident = Matrix.identity(3)
    out = {}
    for a, b in (("+", "-"), ("-", "+")):
        M = fundamental(a)
        z1 = compose(pad_with_identities(em(f"d{b}{a}"), left=[M]), pad_with_identities(em(f"b{a}{b}"), right=[M]))
        z2 = compose(pad_with_identities(em(f"d{a}{b}"), right=[M]), pad_with_identities(em(f"b{b}{a}"), left=[M]))
        out[f"(id(x)d{b}{a})o(b{a}{b}(x)id)=id"] = z1.matrix == ident
        out[f"(d{a}{b}(x)id)o(id(x)b{b}{a})=id"] = z2.matrix == ident
    for a, b in (("+", "-"), ("-", "+")):
        h = em(f"h{a}{a}{b}")
        M = fundamental(a)
        lhs = compose(em(f"d{a}{b}"), pad_with_identities(h, left=[M]))
        rhs = compose(em(f"d{b}{a}"), pad_with_identities(h, right=[M]))
        out[f"d{a}{b}o(id(x)h{a}{a}{b})=d{b}{a}o(h{a}{a}{b}(x)id)"] = lhs.matrix == rhs.matrix
    return out
