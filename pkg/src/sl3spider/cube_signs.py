"""Cubical sets in B_n over F2 and the sign-assignment problem.

Faces are strings over {'0', '*', '1'}.  Linear algebra over F2 uses Python
ints as bit rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _iproduct
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Face",
    "CubicalSet",
    "SignAssignment",
    "face_dim",
    "boundary",
    "coboundary",
    "full_cube",
    "consistent_closure",
    "inductive_closure",
    "is_consistent",
    "is_inductive",
    "is_strong_inductive",
    "homology_f2",
    "solve_sign_assignment",
    "compare_assignments",
    "standard_cube_signs",
    "graph_to_cube",
    "square_defect",
    "gf2_rank",
]

Face = str


def face_dim(f: Face) -> int:
    return f.count("*")


def _boundary_faces(f: Face) -> list[Face]:
    out = []
    for i, c in enumerate(f):
        if c == "*":
            out.append(f[:i] + "0" + f[i + 1:])
            out.append(f[:i] + "1" + f[i + 1:])
    return out


def face_vertices(f: Face) -> list[Face]:
    stars = [i for i, c in enumerate(f) if c == "*"]
    out = []
    for bits in _iproduct("01", repeat=len(stars)):
        g = list(f)
        for i, b in zip(stars, bits):
            g[i] = b
        out.append("".join(g))
    return out


@dataclass(frozen=True)
class CubicalSet:
    n: int
    faces: frozenset[Face]

    def __post_init__(self):
        for f in self.faces:
            if len(f) != self.n or set(f) - set("0*1"):
                raise ValueError(f"bad face {f!r} for n={self.n}")

    def of_dim(self, k: int) -> list[Face]:
        return sorted(f for f in self.faces if face_dim(f) == k)

    @property
    def vertices(self) -> list[Face]:
        return self.of_dim(0)

    @property
    def edges(self) -> list[Face]:
        return self.of_dim(1)

    @property
    def squares(self) -> list[Face]:
        return self.of_dim(2)

    @property
    def cubes(self) -> list[Face]:
        return self.of_dim(3)

    def max_dim(self) -> int:
        return max((face_dim(f) for f in self.faces), default=-1)

    def is_consistent(self) -> bool:
        return is_consistent(self)

    def is_inductive(self) -> bool:
        return is_inductive(self)

    def is_strong_inductive(self) -> bool:
        return is_strong_inductive(self)


@dataclass
class SignAssignment:
    """A map from edges of a cubical set to {0, 1}; missing edges read as 0."""

    values: dict[Face, int] = field(default_factory=dict)

    def __getitem__(self, e: Face) -> int:
        return self.values.get(e, 0)

    def __add__(self, other: "SignAssignment") -> "SignAssignment":
        keys = set(self.values) | set(other.values)
        return SignAssignment({k: (self[k] + other[k]) % 2 for k in sorted(keys)})


def boundary(f: Face, S: CubicalSet | None = None) -> frozenset[Face]:
    """The F2 sum of codimension-one faces, as the set of its terms."""
    if S is not None and f not in S.faces:
        raise ValueError(f"{f} is not a face of the cubical set")
    return frozenset(_boundary_faces(f))


def coboundary(values: Mapping[Face, int], S: CubicalSet, k: int) -> dict[Face, int]:
    """(d* x)(g) = sum of x over the boundary of g, for each (k+1)-face g of S."""
    out = {}
    for g in S.of_dim(k + 1):
        out[g] = sum(values.get(f, 0) for f in _boundary_faces(g)) % 2
    return out


def full_cube(n: int) -> CubicalSet:
    return CubicalSet(n, frozenset("".join(t) for t in _iproduct("0*1", repeat=n)))


def consistent_closure(n: int, vertices: Iterable[Face]) -> CubicalSet:
    """All faces of B_n whose vertices lie in the given set."""
    vs = set(vertices)
    faces = [f for f in ("".join(t) for t in _iproduct("0*1", repeat=n))
             if all(v in vs for v in face_vertices(f))]
    return CubicalSet(n, frozenset(faces))


def inductive_closure(n: int, maximal: Iterable[Face]) -> CubicalSet:
    """Everything below the given faces for the order 0 < * < 1."""
    tops = list(maximal)
    faces = set()
    for t in tops:
        choices = [{"0": "0", "*": "0*", "1": "0*1"}[c] for c in t]
        faces.update("".join(x) for x in _iproduct(*choices))
    return CubicalSet(n, frozenset(faces))


def is_consistent(S: CubicalSet) -> bool:
    for t in _iproduct("0*1", repeat=S.n):
        f = "".join(t)
        if face_dim(f) == 0:
            continue
        if (f in S.faces) != all(g in S.faces for g in _boundary_faces(f)):
            return False
    return True


def _lower_covers(f: Face) -> list[Face]:
    out = []
    for i, c in enumerate(f):
        if c == "1":
            out.append(f[:i] + "*" + f[i + 1:])
        elif c == "*":
            out.append(f[:i] + "0" + f[i + 1:])
    return out


def _upper_covers(f: Face) -> list[Face]:
    out = []
    for i, c in enumerate(f):
        if c == "0":
            out.append(f[:i] + "*" + f[i + 1:])
        elif c == "*":
            out.append(f[:i] + "1" + f[i + 1:])
    return out


def is_inductive(S: CubicalSet) -> bool:
    return all(g in S.faces for f in S.faces for g in _lower_covers(f))


def is_strong_inductive(S: CubicalSet) -> bool:
    if not is_inductive(S):
        return False
    for f in S.faces:
        if face_dim(f) > 0 and not any(g in S.faces for g in _upper_covers(f)):
            return False
    return True


# --- F2 linear algebra ---------------------------------------------------------

def gf2_rank(rows: Iterable[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                break
    return len(basis)


def homology_f2(S: CubicalSet) -> list[int]:
    if not is_consistent(S):
        raise ValueError("homology is only defined for consistent cubical sets")
    top = S.max_dim()
    if top < 0:
        return []
    by_dim = [S.of_dim(k) for k in range(top + 1)]
    index = [{f: i for i, f in enumerate(fs)} for fs in by_dim]
    ranks = [0] * (top + 2)  # ranks[k] = rank of boundary C_k -> C_{k-1}
    for k in range(1, top + 1):
        rows = []
        for f in by_dim[k]:
            r = 0
            for g in _boundary_faces(f):
                r |= 1 << index[k - 1][g]
            rows.append(r)
        ranks[k] = gf2_rank(rows)
    return [len(by_dim[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def square_defect(S: CubicalSet, gamma: Mapping[Face, int]) -> list[Face]:
    """Cubes of S on which the coboundary of gamma does not vanish."""
    bad = []
    for c in S.cubes:
        if sum(gamma.get(s, 0) for s in _boundary_faces(c)) % 2:
            bad.append(c)
    return bad


def solve_sign_assignment(S: CubicalSet, gamma: Mapping[Face, int] | int = 1,
                          order: Sequence[Face] | None = None) -> SignAssignment:
    """A sign assignment delta with d*delta = gamma on every square of S.

    ``gamma`` may be a constant.  Among all solutions the lexicographically
    least one for ``order`` (default: sorted edges) is returned.
    """
    if not is_strong_inductive(S):
        raise ValueError("cubical set is not strong-inductive")
    if isinstance(gamma, int):
        gamma = {s: gamma % 2 for s in S.squares}
    bad = square_defect(S, gamma)
    if bad:
        raise ValueError(f"gamma is not a cocycle (fails on cubes {bad[:3]}): not a pre-complex")
    edges = list(order) if order is not None else S.edges
    if sorted(edges) != S.edges:
        raise ValueError("order must list every edge exactly once")
    nv = len(edges)
    # bit (nv-1-i) encodes edge i so that higher bits are earlier edges
    pos = {e: nv - 1 - i for i, e in enumerate(edges)}
    rows = []
    for s in S.squares:
        r = 0
        for e in _boundary_faces(s):
            r ^= 1 << pos[e]
        if gamma.get(s, 0):
            r |= 1 << nv
        rows.append(r)
    sol = _lex_least_solution_msb(rows, nv)
    if sol is None:
        raise RuntimeError("no sign assignment found on a strong-inductive set")
    return SignAssignment({e: sol[pos[e]] for e in sorted(edges)})


def _lex_least_solution_msb(rows: list[int], nvars: int) -> list[int] | None:
    """Lexicographically least solution where the highest bit is most significant.

    Elimination pivots on the lowest set bit so that every pivot variable is
    expressed through more significant free variables, which are set to 0.
    """
    rhs_bit = 1 << nvars
    var_mask = rhs_bit - 1
    basis: dict[int, int] = {}
    for r in rows:
        while r & var_mask:
            low = ((r & var_mask) & -(r & var_mask)).bit_length() - 1
            if low in basis:
                r ^= basis[low]
            else:
                basis[low] = r
                break
        else:
            if r & rhs_bit:
                return None
    x = [0] * nvars
    for p in sorted(basis, reverse=True):
        r = basis[p]
        v = 1 if r & rhs_bit else 0
        rest = r & var_mask & ~(1 << p)
        while rest:
            j = (rest & -rest).bit_length() - 1
            v ^= x[j]
            rest &= rest - 1
        x[p] = v
    return x


def compare_assignments(S: CubicalSet, delta1: SignAssignment, delta2: SignAssignment) -> dict[Face, int]:
    """A vertex potential kappa with d*kappa = delta1 + delta2."""
    verts = S.vertices
    nv = len(verts)
    pos = {v: nv - 1 - i for i, v in enumerate(verts)}
    rows = []
    for e in S.edges:
        r = 0
        for v in _boundary_faces(e):
            r ^= 1 << pos[v]
        if (delta1[e] + delta2[e]) % 2:
            r |= 1 << nv
        rows.append(r)
    sol = _lex_least_solution_msb(rows, nv)
    if sol is None:
        raise RuntimeError("assignments do not differ by a coboundary")
    return {v: sol[pos[v]] for v in verts}


def standard_cube_signs(n: int, order: Sequence[int] | None = None) -> SignAssignment:
    """delta(e) = #{y before x : s(y) = 1} mod 2, x the free coordinate of e.

    ``order`` lists coordinates 0..n-1 from first to last (default natural).
    """
    order = list(range(n)) if order is None else list(order)
    rank = {c: i for i, c in enumerate(order)}
    values = {}
    for e in full_cube(n).edges:
        x = e.index("*")
        values[e] = sum(1 for y, c in enumerate(e) if c == "1" and rank[y] < rank[x]) % 2
    return SignAssignment(values)


def graph_to_cube(graph) -> tuple[CubicalSet, dict[int, Face]]:
    """Image of a partition graph in B_{m+n-1}, with the vertex map.

    Position i of the face is '1' when dots i+1 and i+2 (1-based) share a block.
    """
    n = max(graph.m + graph.n - 1, 0)
    vmap = {}
    for k, p in enumerate(graph.vertices):
        s = p.strands
        vmap[k] = "".join("1" if i + 1 in s else "0" for i in range(n))
    return inductive_closure(n, vmap.values()), vmap
