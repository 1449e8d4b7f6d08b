"""Admissible partitions of the sign sequence +^m -^n and the graph they form.

A partition cuts positions 1..m+n into consecutive blocks of size 1 to 3;
a block of size 3 must be monochrome.  Equivalently it is the set of
"strands" i meaning positions i and i+1 lie in the same block.  Edges of
the graph merge two adjacent blocks (finer -> coarser).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct
from typing import Iterator, Sequence

__all__ = [
    "AdmissiblePartition",
    "PartitionGraph",
    "MultiPartitionGraph",
    "Edge",
    "EDGE_MORPHISM",
    "build_graph",
    "degree",
    "pitchfork",
    "join",
    "product",
    "classify_edge",
    "block_kind",
    "block_dim",
    "alternating_dimension",
    "to_dot",
    "vertex_label",
]

Block = tuple[int, int]  # inclusive interval, 1-based


@dataclass(frozen=True, order=True)
class AdmissiblePartition:
    m: int
    n: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        expect = 1
        for a, b in self.blocks:
            if a != expect or b < a:
                raise ValueError(f"blocks {self.blocks} do not tile 1..{self.m + self.n}")
            if b - a + 1 > 3:
                raise ValueError(f"block {(a, b)} has more than 3 elements")
            if b - a + 1 == 3 and a <= self.m < b:
                raise ValueError(f"block {(a, b)} of size 3 is not monochrome")
            expect = b + 1
        if expect != self.m + self.n + 1:
            raise ValueError(f"blocks {self.blocks} do not tile 1..{self.m + self.n}")

    @classmethod
    def canonical(cls, m: int, n: int) -> "AdmissiblePartition":
        return cls(m, n, tuple((i, i) for i in range(1, m + n + 1)))

    @classmethod
    def from_strands(cls, m: int, n: int, strands) -> "AdmissiblePartition":
        strands = set(strands)
        blocks = []
        start = 1
        for i in range(1, m + n + 1):
            if i not in strands:
                blocks.append((start, i))
                start = i + 1
        return cls(m, n, tuple(blocks))

    @property
    def strands(self) -> frozenset[int]:
        return frozenset(i for a, b in self.blocks for i in range(a, b))

    def sign(self, i: int) -> str:
        return "+" if i <= self.m else "-"

    def block_signs(self, block: Block) -> str:
        return "".join(self.sign(i) for i in range(block[0], block[1] + 1))

    def degree(self) -> int:
        return self.m + self.n - len(self.blocks)

    def __str__(self):
        return vertex_label(self)


def vertex_label(p: AdmissiblePartition) -> str:
    return "".join(f"[{p.block_signs(b)}]" for b in p.blocks) or "[]"


def degree(p: AdmissiblePartition) -> int:
    return p.degree()


def _is_admissible(m: int, n: int, strands) -> bool:
    try:
        AdmissiblePartition.from_strands(m, n, strands)
    except ValueError:
        return False
    return True


def block_kind(p: AdmissiblePartition, block: Block) -> str:
    """One of '+', '-', '++', '--', '+-', '+++', '---'."""
    return p.block_signs(block)


_BLOCK_DIM = {"+": 3, "-": 3, "++": 3, "--": 3, "+-": 1, "+++": 1, "---": 1}


def block_dim(kind: str) -> int:
    return _BLOCK_DIM[kind]


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    left: Block
    right: Block

    @property
    def merged(self) -> Block:
        return (self.left[0], self.right[1])


# what each merge type is sent to by the dictionary
EDGE_MORPHISM = {
    "+|-": "d+-",
    "+|+": "h++-",
    "-|-": "h--+",
    "++|+": "d-+",
    "+|++": "d+-",
    "--|-": "d+-",
    "-|--": "d-+",
}


@dataclass
class PartitionGraph:
    m: int
    n: int
    vertices: list[AdmissiblePartition]
    edges: list[Edge]

    def __post_init__(self):
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.out_edges: list[list[int]] = [[] for _ in self.vertices]
        self.in_edges: list[list[int]] = [[] for _ in self.vertices]
        for k, e in enumerate(self.edges):
            self.out_edges[e.source].append(k)
            self.in_edges[e.target].append(k)

    def degree(self, v: int) -> int:
        return self.vertices[v].degree()

    def by_degree(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, v in enumerate(self.vertices):
            out.setdefault(v.degree(), []).append(i)
        return out

    @property
    def colors(self) -> list[tuple[int, int]]:
        return [(self.m, self.n)]

    def vertex_tuple(self, v: int) -> tuple[AdmissiblePartition, ...]:
        return (self.vertices[v],)


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in (1, 2, 3):
        if first <= total:
            for rest in _compositions(total - first):
                yield (first,) + rest


def build_graph(m: int, n: int) -> PartitionGraph:
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    parts = []
    for comp in _compositions(m + n):
        blocks, start = [], 1
        for size in comp:
            blocks.append((start, start + size - 1))
            start += size
        try:
            parts.append(AdmissiblePartition(m, n, tuple(blocks)))
        except ValueError:
            continue
    parts.sort(key=lambda p: (p.degree(), sorted(p.strands)))
    index = {p: i for i, p in enumerate(parts)}
    edges = []
    for i, p in enumerate(parts):
        for k in range(len(p.blocks) - 1):
            left, right = p.blocks[k], p.blocks[k + 1]
            merged = p.blocks[:k] + ((left[0], right[1]),) + p.blocks[k + 2:]
            try:
                q = AdmissiblePartition(m, n, merged)
            except ValueError:
                continue
            edges.append(Edge(i, index[q], left, right))
    return PartitionGraph(m, n, parts, edges)


def classify_edge(graph: PartitionGraph, e: Edge | int) -> str:
    """Merge type written as '<left block signs>|<right block signs>'."""
    if isinstance(e, int):
        e = graph.edges[e]
    p = graph.vertices[e.source]
    kind = f"{p.block_signs(e.left)}|{p.block_signs(e.right)}"
    if kind not in EDGE_MORPHISM:
        raise ValueError(f"unexpected merge {kind}")
    return kind


def pitchfork(p1: AdmissiblePartition, p2: AdmissiblePartition) -> bool:
    if (p1.m, p1.n) != (p2.m, p2.n):
        raise ValueError("partitions of different sign sequences")
    s1, s2 = p1.strands, p2.strands
    if s1 & s2:
        return False
    return _is_admissible(p1.m, p1.n, s1 | s2)


def join(p1: AdmissiblePartition, p2: AdmissiblePartition) -> AdmissiblePartition:
    if not pitchfork(p1, p2):
        raise ValueError("join is only defined when the pitchfork relation holds")
    j = AdmissiblePartition.from_strands(p1.m, p1.n, p1.strands | p2.strands)
    # least upper bound: any common coarsening must contain both strand sets,
    # and strand sets determine partitions, so j is the unique candidate
    assert j.strands == p1.strands | p2.strands
    return j


def alternating_dimension(graph: PartitionGraph) -> int:
    total = 0
    for p in graph.vertices:
        d = 1
        for b in p.blocks:
            d *= block_dim(block_kind(p, b))
        total += (-1) ** p.degree() * d
    return total


@dataclass(frozen=True)
class ProductEdge:
    source: int
    target: int
    coordinate: int
    factor_edge: int


@dataclass
class MultiPartitionGraph:
    """Cartesian product of partition graphs, one factor per link component."""

    factors: list[PartitionGraph]
    vertices: list[tuple[int, ...]]
    edges: list[ProductEdge]

    def __post_init__(self):
        self.index = {v: i for i, v in enumerate(self.vertices)}

    def degree(self, v: int) -> int:
        return sum(f.degree(i) for f, i in zip(self.factors, self.vertices[v]))

    def by_degree(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i in range(len(self.vertices)):
            out.setdefault(self.degree(i), []).append(i)
        return out

    @property
    def colors(self) -> list[tuple[int, int]]:
        return [(f.m, f.n) for f in self.factors]

    def vertex_tuple(self, v: int) -> tuple[AdmissiblePartition, ...]:
        return tuple(f.vertices[i] for f, i in zip(self.factors, self.vertices[v]))


def product(graphs: Sequence[PartitionGraph]) -> MultiPartitionGraph:
    graphs = list(graphs)
    verts = list(_iproduct(*[range(len(g.vertices)) for g in graphs]))
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for i, v in enumerate(verts):
        for c, g in enumerate(graphs):
            for k in g.out_edges[v[c]]:
                w = v[:c] + (g.edges[k].target,) + v[c + 1:]
                edges.append(ProductEdge(i, index[w], c, k))
    return MultiPartitionGraph(graphs, verts, edges)


def to_dot(graph: PartitionGraph | MultiPartitionGraph, name: str = "Gamma") -> str:
    """DOT text with one rank row per degree (coarser partitions further right)."""
    def label(i: int) -> str:
        return " ".join(vertex_label(p) for p in graph.vertex_tuple(i))

    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box, fontname=monospace];"]
    for d, verts in sorted(graph.by_degree().items()):
        lines.append(f"  subgraph degree_{d} {{")
        lines.append("    rank=same;")
        for i in verts:
            lines.append(f'    v{i} [label="{label(i)}"];')
        lines.append("  }")
    for e in graph.edges:
        lines.append(f"  v{e.source} -> v{e.target};")
    lines.append("}")
    return "\n".join(lines) + "\n"
