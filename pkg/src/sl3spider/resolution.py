"""Resolution complexes of the simple modules V(m,n) built on the partition graph.

Each admissible partition is sent to a tensor product of fundamental and
trivial modules (one factor per block, left to right) and each merge to a
padded elementary morphism.  A sign assignment on the image of the graph in
the hypercube turns the commuting diagram into a complex, whose exactness is
then certified by ranks at a rational specialisation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cube_signs import CubicalSet, SignAssignment, compare_assignments, graph_to_cube, solve_sign_assignment
from .partition_graph import EDGE_MORPHISM, PartitionGraph, build_graph, classify_edge
from .rep_ring import RepRingElement, decompose_word, qdim
from .scalar_rings import RingElement
from .uq_modules import (Matrix, ModuleMap, UqModule, check_morphism, compose, elementary_morphism,
                         fundamental, pad_with_identities, tensor_word)
from .uq_modules import q as q_power

__all__ = [
    "ShapedPreComplex",
    "GradedComplex",
    "RankReport",
    "BLOCK_WORD",
    "vertex_word",
    "build_precomplex",
    "verify_commuting_squares",
    "to_complex",
    "verify_d_squared",
    "cohomology_ranks_at",
    "euler_characteristic",
    "highest_weight_vector",
    "check_highest_weight",
    "check_maps",
    "check_sign_independence",
    "rank_mod_p",
    "DEFAULT_POINTS",
    "PRIME",
]

# block signs -> tensor word of the module attached to the block
BLOCK_WORD = {"+": "+", "-": "-", "++": "-", "--": "+", "+-": "", "+++": "", "---": ""}
DEFAULT_POINTS = (Fraction(7, 5), Fraction(11, 7), Fraction(13, 9))
PRIME = 2_147_483_629  # largest prime below 2^31, so products fit in int64


def vertex_word(p) -> str:
    return "".join(BLOCK_WORD[p.block_signs(b)] for b in p.blocks)


@dataclass
class ShapedPreComplex:
    graph: PartitionGraph
    module_at: list[UqModule]
    map_at: list[ModuleMap]
    cube: CubicalSet
    vertex_face: dict[int, str]

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def n(self) -> int:
        return self.graph.n

    def edge_between(self, u: int, v: int) -> int:
        for k in self.graph.out_edges[u]:
            if self.graph.edges[k].target == v:
                return k
        raise KeyError((u, v))


def _edge_map(graph: PartitionGraph, k: int) -> ModuleMap:
    e = graph.edges[k]
    p = graph.vertices[e.source]
    kind = EDGE_MORPHISM[classify_edge(graph, e)]
    i = p.blocks.index(e.left)
    before = "".join(BLOCK_WORD[p.block_signs(b)] for b in p.blocks[:i])
    after = "".join(BLOCK_WORD[p.block_signs(b)] for b in p.blocks[i + 2:])
    f = elementary_morphism(kind)
    return pad_with_identities(f, [fundamental(c) for c in before], [fundamental(c) for c in after])


def build_precomplex(m: int, n: int) -> ShapedPreComplex:
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("need m, n >= 0 with m + n >= 1")
    graph = build_graph(m, n)
    modules = [tensor_word(vertex_word(p)) for p in graph.vertices]
    maps = [_edge_map(graph, k) for k in range(len(graph.edges))]
    for k, f in enumerate(maps):
        e = graph.edges[k]
        assert f.source.word == modules[e.source].word and f.target.word == modules[e.target].word
    cube, vmap = graph_to_cube(graph)
    return ShapedPreComplex(graph, modules, maps, cube, vmap)


def check_maps(pc: ShapedPreComplex) -> list[int]:
    """Edges whose map fails to be a module map."""
    return [k for k, f in enumerate(pc.map_at) if check_morphism(f) is not None]


def _squares(pc: ShapedPreComplex):
    """(bottom, left, right, top) vertex indices of every square of the cube image."""
    face_to_vertex = {f: v for v, f in pc.vertex_face.items()}
    for s in pc.cube.squares:
        i, j = [k for k, c in enumerate(s) if c == "*"]

        def at(a, b):
            f = list(s)
            f[i], f[j] = a, b
            return face_to_vertex["".join(f)]

        yield s, at("0", "0"), at("1", "0"), at("0", "1"), at("1", "1")


def verify_commuting_squares(pc: ShapedPreComplex) -> str | None:
    """The first square (as a face string) whose two paths differ, or None."""
    for s, b, l, r, t in _squares(pc):
        path1 = compose(pc.map_at[pc.edge_between(l, t)], pc.map_at[pc.edge_between(b, l)])
        path2 = compose(pc.map_at[pc.edge_between(r, t)], pc.map_at[pc.edge_between(b, r)])
        if path1.matrix != path2.matrix:
            return s
    return None


@dataclass
class GradedComplex:
    pc: ShapedPreComplex
    signs: SignAssignment
    degrees: list[list[int]]  # vertex indices by degree
    edge_sign: list[int] = field(default_factory=list)  # +1 / -1 per graph edge

    @property
    def length(self) -> int:
        return len(self.degrees)

    def dims(self) -> list[int]:
        return [sum(self.pc.module_at[v].dim for v in vs) for vs in self.degrees]

    def _offsets(self, i: int) -> dict[int, int]:
        out, pos = {}, 0
        for v in self.degrees[i]:
            out[v] = pos
            pos += self.pc.module_at[v].dim
        return out

    def differential_blocks(self, i: int):
        """(source vertex, target vertex, signed matrix) for d_i: C_i -> C_{i+1}."""
        g = self.pc.graph
        inset = set(self.degrees[i])
        for k, e in enumerate(g.edges):
            if e.source in inset:
                yield e.source, e.target, self.edge_sign[k], self.pc.map_at[k].matrix

    def differential(self, i: int) -> Matrix:
        dims = self.dims()
        if i < 0 or i + 1 >= self.length:
            rows = dims[i + 1] if 0 <= i + 1 < self.length else 0
            cols = dims[i] if 0 <= i < self.length else 0
            return Matrix.zero(rows, cols)
        src, tgt = self._offsets(i), self._offsets(i + 1)
        ent = {}
        for u, v, sg, M in self.differential_blocks(i):
            for (r, c), val in M.entries.items():
                ent[(tgt[v] + r, src[u] + c)] = val if sg > 0 else -val
        return Matrix(dims[i + 1], dims[i], ent)

    def differential_mod(self, i: int, s0: int, p: int) -> np.ndarray:
        dims = self.dims()
        src, tgt = self._offsets(i), self._offsets(i + 1)
        out = np.zeros((dims[i + 1], dims[i]), dtype=np.int64)
        for u, v, sg, M in self.differential_blocks(i):
            block = M.evaluate_mod(s0, p)
            if sg < 0:
                block = (-block) % p
            r0, c0 = tgt[v], src[u]
            out[r0:r0 + block.shape[0], c0:c0 + block.shape[1]] += block
        return out % p


def to_complex(pc: ShapedPreComplex, order: Sequence[str] | None = None,
               check: bool = True) -> GradedComplex:
    """Attach signs from a sign assignment with gamma = 1 (all squares commute)."""
    if check:
        bad = verify_commuting_squares(pc)
        if bad is not None:
            raise ValueError(f"square {bad} does not commute")
    delta = solve_sign_assignment(pc.cube, 1, order)
    g = pc.graph
    edge_sign = []
    for e in g.edges:
        fs, ft = pc.vertex_face[e.source], pc.vertex_face[e.target]
        face = "".join("*" if a != b else a for a, b in zip(fs, ft))
        edge_sign.append(-1 if delta[face] else 1)
    by_deg = g.by_degree()
    degrees = [by_deg.get(i, []) for i in range(max(by_deg) + 1)]
    c = GradedComplex(pc, delta, degrees, edge_sign)
    if check and not verify_d_squared(c):
        raise AssertionError("d^2 != 0 after applying the sign assignment")
    return c


def verify_d_squared(c: GradedComplex) -> bool:
    """Exact check of d_{i+1} d_i = 0, block by block over rational functions."""
    g = c.pc.graph
    for i in range(c.length - 2):
        acc: dict[tuple[int, int], Matrix] = {}
        for u in c.degrees[i]:
            for k1 in g.out_edges[u]:
                v = g.edges[k1].target
                for k2 in g.out_edges[v]:
                    w = g.edges[k2].target
                    prod = (c.pc.map_at[k2].matrix @ c.pc.map_at[k1].matrix).scale(
                        c.edge_sign[k1] * c.edge_sign[k2])
                    key = (u, w)
                    acc[key] = prod if key not in acc else acc[key] + prod
        if any(not M.is_zero() for M in acc.values()):
            return False
    return True


# --- ranks ---------------------------------------------------------------------

def rank_mod_p(A: np.ndarray, p: int = PRIME) -> int:
    """Rank over F_p by row reduction with int64 arithmetic."""
    M = np.array(A, dtype=np.int64) % p
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        below = np.nonzero(M[r + 1:, c])[0] + r + 1
        if below.size:
            f = M[below, c].copy()
            M[below] = (M[below] - (f[:, None] * M[r]) % p) % p
        r += 1
    return r


@dataclass
class RankReport:
    point: Fraction
    dims: list[int]
    ranks: list[int]  # rank of d_i for i = 0 .. length-2
    cohomology: list[int]
    certified: bool


def _s_mod(s0: Fraction, p: int) -> int:
    return (s0.numerator % p) * pow(s0.denominator % p, p - 2, p) % p


def cohomology_ranks_at(c: GradedComplex, q0: Fraction | None = None,
                        points: Sequence[Fraction] = DEFAULT_POINTS, p: int = PRIME) -> RankReport:
    """Ranks of H^i at a specialisation s = s0 of s = q^(1/2).

    Differential ranks are computed over F_p.  They bound the ranks over Q at
    s0, which in turn bound the generic ranks, from below.  When
    rank d_{i-1} + rank d_i = dim C_i for every i >= 1 the lower bounds are
    attained, so the reported cohomology is the generic one.  If ``q0`` is
    given only that point is tried; otherwise the points are tried in turn.
    """
    tries = [Fraction(q0)] if q0 is not None else [Fraction(x) for x in points]
    report = None
    for s0 in tries:
        if s0 in (0, 1, -1):
            raise ValueError("the specialisation must avoid 0 and +-1")
        sp = _s_mod(s0, p)
        dims = c.dims()
        ranks = [rank_mod_p(c.differential_mod(i, sp, p), p) for i in range(c.length - 1)]
        padded = [0] + ranks + [0]
        coh = [dims[i] - padded[i] - padded[i + 1] for i in range(c.length)]
        certified = all(h == 0 for h in coh[1:])
        report = RankReport(s0, dims, ranks, coh, certified)
        if certified:
            return report
    return report


def euler_characteristic(c: GradedComplex) -> tuple[int, RingElement, RepRingElement]:
    """Alternating sums of dimensions, quantum dimensions and classes of the C_i."""
    cls = RepRingElement()
    for i, vs in enumerate(c.degrees):
        for v in vs:
            x = decompose_word(c.pc.module_at[v].word)
            cls = cls + (x if i % 2 == 0 else -x)
    dim = sum((-1) ** i * d for i, d in enumerate(c.dims()))
    return dim, qdim(cls), cls


# --- witnesses -----------------------------------------------------------------

def highest_weight_vector(c: GradedComplex) -> tuple[int, int]:
    """(vertex, basis index) of v+_1^(x)m (x) v-_1^(x)n in the degree-0 module."""
    (v0,) = c.degrees[0]
    M = c.pc.module_at[v0]
    return v0, M.dim - 1


def check_highest_weight(c: GradedComplex) -> dict[str, bool]:
    v0, idx = highest_weight_vector(c)
    M = c.pc.module_at[v0]
    m, n = c.pc.m, c.pc.n
    out = {
        "E1": not M["E1"].column(idx),
        "E2": not M["E2"].column(idx),
        "K1": M["K1"].column(idx) == {idx: q_power(m)},
        "K2": M["K2"].column(idx) == {idx: q_power(n)},
    }
    d0 = c.differential(0) if c.length > 1 else Matrix.zero(0, M.dim)
    out["kernel"] = not d0.column(idx)
    return out


def check_sign_independence(pc: ShapedPreComplex) -> dict[str, object]:
    """Compare the complexes from two edge orders via the vertex potential kappa."""
    c1 = to_complex(pc, check=False)
    c2 = to_complex(pc, order=list(reversed(pc.cube.edges)), check=False)
    kappa = compare_assignments(pc.cube, c1.signs, c2.signs)
    flip = {v: kappa[pc.vertex_face[v]] for v in range(len(pc.graph.vertices))}
    ok = True
    for k, e in enumerate(pc.graph.edges):
        # D_kappa d1 D_kappa on this block
        conj = c1.edge_sign[k] * (-1) ** (flip[e.source] + flip[e.target])
        if conj != c2.edge_sign[k]:
            ok = False
    differ = sum(1 for a, b in zip(c1.edge_sign, c2.edge_sign) if a != b)
    return {"isomorphic": ok, "edges_differing": differ, "kappa": kappa}
