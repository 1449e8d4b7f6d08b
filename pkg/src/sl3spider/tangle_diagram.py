"""Oriented link diagrams with blackboard framing, their smoothings and cablings.

Diagrams live on the same combinatorial maps as webs.  A crossing is a
4-valent vertex whose two opposite dart pairs are the strands; the over strand
is flagged on its darts.  Every dart carries a component label.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .partition_graph import AdmissiblePartition
from .web import PlanarMap, Web, validate as _validate_map

__all__ = [
    "Diagram",
    "from_braid",
    "smooth",
    "smooth_crossing",
    "cable",
    "cable_strands",
    "block_orientations",
    "counts",
    "crossing_sign",
    "cyclic_darts",
    "diagram_from_json",
    "diagram_to_json",
    "load_diagram",
    "DIAGRAM_SCHEMA",
]

DIAGRAM_SCHEMA = "sl3spider/diagram@1"


@dataclass
class Diagram:
    map: PlanarMap
    comp: dict[int, int] = field(default_factory=dict)  # dart -> component
    loop_components: list[int] = field(default_factory=list)
    num_components: int = 0
    name: str = ""

    def copy(self) -> "Diagram":
        return Diagram(self.map.copy(), dict(self.comp), list(self.loop_components),
                       self.num_components, self.name)

    def crossings(self) -> list[int]:
        return self.map.crossings()

    def counts(self) -> tuple[int, int]:
        return counts(self)

    def validate(self) -> list[str]:
        bad = _validate_map(self.map, allow_crossings=True)
        for d, e in self.map.opp.items():
            if self.comp.get(d) != self.comp.get(e):
                bad.append(f"edge at darts {d},{e} changes component")
                break
        for c in self.crossings():
            r = self.map.rot[c]
            if self.comp[r[0]] != self.comp[r[2]] or self.comp[r[1]] != self.comp[r[3]]:
                bad.append(f"crossing {c} changes component along a strand")
        if self.map.free_loops != len(self.loop_components):
            bad.append("free loop count and loop component labels disagree")
        return bad

    def reversed(self, components: Sequence[int] | None = None) -> "Diagram":
        """Reverse the orientation of the given components (default: all)."""
        comps = set(range(self.num_components)) if components is None else set(components)
        out = self.copy()
        for d in out.map.darts:
            if out.comp[d] in comps:
                out.map.head[d] = not out.map.head[d]
        return out

    def mirror(self) -> "Diagram":
        out = self.copy()
        for c in out.crossings():
            for d in out.map.rot[c]:
                out.map.over[d] = not out.map.over[d]
        return out

    def __repr__(self):
        n_pos, n_neg = counts(self)
        return (f"Diagram({self.name!r}, components={self.num_components}, "
                f"crossings={n_pos}+{n_neg}, free_loops={self.map.free_loops})")


# --- crossings ------------------------------------------------------------------

def cyclic_darts(m: PlanarMap, c: int) -> tuple[int, int, int, int]:
    """(i1, i2, o1, o2) in ccw order: two incoming darts, then o1 opposite i1."""
    r = m.rot[c]
    for k in range(4):
        a, b = r[k], r[(k + 1) % 4]
        if m.head[a] and m.head[b]:
            return (a, b, r[(k + 2) % 4], r[(k + 3) % 4])
    raise ValueError(f"crossing {c} does not have two adjacent incoming darts")


def crossing_sign(m: PlanarMap, c: int) -> int:
    r = m.rot[c]
    (over_in,) = [d for d in r if m.over[d] and m.head[d]]
    return 1 if not m.over[m.sigma(over_in)] and m.head[m.sigma(over_in)] else -1


def counts(D: Diagram | PlanarMap) -> tuple[int, int]:
    m = D.map if isinstance(D, Diagram) else D
    signs = [crossing_sign(m, c) for c in m.crossings()]
    return (signs.count(1), signs.count(-1))


def smooth_crossing(m: PlanarMap, c: int, bit: int) -> None:
    """In place: 0 gives the oriented smoothing, 1 the I-web (sink, edge, source)."""
    i1, i2, o1, o2 = cyclic_darts(m, c)
    if bit == 0:
        m.splice([c], {i1: o2, o2: i1, i2: o1, o1: i2})
        return
    if bit != 1:
        raise ValueError("smoothing values are 0 or 1")
    t = m.add_vertex("sink")
    u = m.add_vertex("source")
    for d, v in ((i1, t), (i2, t), (o1, u), (o2, u)):
        m.vert[d] = v
        m.over[d] = False
    m.rot[t] = [i1, i2]
    m.rot[u] = [o1, o2]
    mt = m.add_dart(t, head=True)
    mu = m.add_dart(u, head=False)
    m.link(mt, mu)
    del m.rot[c]
    del m.kind[c]


def smooth(D: Diagram | PlanarMap, s: Mapping[int, int] | Sequence[int]) -> Web:
    """The s-smoothing; ``s`` maps crossings (or their sorted positions) to 0/1."""
    m = (D.map if isinstance(D, Diagram) else D).copy()
    xs = m.crossings()
    if not isinstance(s, Mapping):
        if len(s) != len(xs):
            raise ValueError(f"need {len(xs)} smoothing values, got {len(s)}")
        s = dict(zip(xs, s))
    if set(s) != set(xs):
        raise ValueError("smoothing function must be defined on every crossing")
    for c in xs:
        smooth_crossing(m, c, s[c])
    return Web.from_map(m)


# --- braid closures -------------------------------------------------------------

def from_braid(strands: int, word: Sequence[int], name: str = "",
               reverse: Sequence[int] = ()) -> Diagram:
    """Closure of a braid word; letter i > 0 is sigma_i, -i its inverse.

    Strands run upward.  Components are numbered by their leftmost bottom
    position; ``reverse`` lists components whose orientation is flipped.
    """
    m = PlanarMap()
    current: list[int | None] = [None] * strands
    first: list[int | None] = [None] * strands
    perm = list(range(strands))  # perm[pos] = starting column of the strand now at pos
    for letter in word:
        i = abs(letter) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"letter {letter} out of range for {strands} strands")
        c = m.add_vertex("crossing")
        pos_over = letter > 0
        bl = m.add_dart(c, head=True, over=pos_over)
        br = m.add_dart(c, head=True, over=not pos_over)
        tr = m.add_dart(c, head=False, over=pos_over)
        tl = m.add_dart(c, head=False, over=not pos_over)
        for col, dart in ((i, bl), (i + 1, br)):
            if current[col] is None:
                first[col] = dart
            else:
                m.link(current[col], dart)
        current[i], current[i + 1] = tl, tr
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    loops = []
    for col in range(strands):
        if first[col] is None:
            loops.append(col)
        else:
            m.link(current[col], first[col])
    m.free_loops = len(loops)
    # components: cycles of the closing permutation, labelled by least column
    label_of_col: dict[int, int] = {}
    ncomp = 0
    for col in range(strands):
        if col in label_of_col:
            continue
        x = col
        while x not in label_of_col:
            label_of_col[x] = ncomp
            x = _next_col(perm, x)
        ncomp += 1
    comp = {}
    for col in range(strands):
        if first[col] is not None:
            _label_strand(m, first[col], label_of_col[col], comp)
    D = Diagram(m, comp, [label_of_col[c] for c in loops], ncomp, name)
    if reverse:
        D = D.reversed(reverse)
    return D


def _next_col(perm: list[int], col: int) -> int:
    # the strand starting at bottom column col ends at the top position p with perm[p] == col
    return perm.index(col)


def _label_strand(m: PlanarMap, start: int, label: int, comp: dict[int, int]) -> None:
    """Label darts along a strand, crossing straight through crossings."""
    d = start
    while d not in comp:
        comp[d] = label
        r = m.rot[m.vert[d]]
        e = r[(r.index(d) + 2) % 4]
        comp[e] = label
        d = m.opp[e]


# --- cabling --------------------------------------------------------------------

_BLOCK_ORIENTATION = {"+": 1, "-": -1, "++": -1, "--": 1}


def block_orientations(p: AdmissiblePartition) -> list[int]:
    """Strand orientations (+1 kept, -1 reversed) contributed by the blocks, left to right."""
    out = []
    for b in p.blocks:
        o = _BLOCK_ORIENTATION.get(p.block_signs(b))
        if o is not None:
            out.append(o)
    return out


def cable(D: Diagram, partitions: Sequence[AdmissiblePartition]) -> Diagram:
    if len(partitions) != D.num_components:
        raise ValueError(f"need one partition per component ({D.num_components})")
    return cable_strands(D, [block_orientations(p) for p in partitions])


def cable_strands(D: Diagram, orientations: Sequence[Sequence[int]]) -> Diagram:
    """Replace component t by len(orientations[t]) blackboard parallels.

    Copy j of an edge is the j-th from the left when facing along the edge;
    orientation -1 reverses that copy.  Components of the result are
    numbered (t, j) lexicographically, skipping empty cables.
    """
    m = D.map
    if any(m.kind[v] != "crossing" for v in m.vertices):
        raise ValueError("cabling is only implemented for diagrams without trivalent vertices")
    if len(orientations) != D.num_components:
        raise ValueError(f"need orientations for {D.num_components} components")
    orientations = [list(o) for o in orientations]
    new_label = {}
    for t, o in enumerate(orientations):
        for j in range(len(o)):
            new_label[(t, j)] = len(new_label)
    out = PlanarMap()
    comp: dict[int, int] = {}
    port: dict[tuple[int, int], int] = {}
    for c in m.vertices:
        r = m.rot[c]
        k0 = r.index([d for d in r if m.head[d]][0])
        # rotate so that X enters from the west
        a_in, r1, a_out, r3 = (r[(k0 + i) % 4] for i in range(4))
        tX, tY = D.comp[a_in], D.comp[r1]
        oX, oY = orientations[tX], orientations[tY]
        kX, kY = len(oX), len(oY)
        y_south_to_north = m.head[r1]  # r1 sits south
        x_over = m.over[a_in]
        grid: dict[tuple[int, int], tuple[int, int, int, int]] = {}
        for x in range(kY):
            j = x if y_south_to_north else kY - 1 - x
            for y in range(kX):
                i = kX - 1 - y
                v = out.add_vertex("crossing")
                fwd_x = oX[i] == 1
                fwd_y = (oY[j] == 1) == y_south_to_north  # copy runs S->N
                W = out.add_dart(v, head=fwd_x, over=x_over)
                S = out.add_dart(v, head=fwd_y, over=not x_over)
                E = out.add_dart(v, head=not fwd_x, over=x_over)
                N = out.add_dart(v, head=not fwd_y, over=not x_over)
                grid[(x, y)] = (W, S, E, N)
                for dd in (W, E):
                    comp[dd] = new_label[(tX, i)]
                for dd in (S, N):
                    comp[dd] = new_label[(tY, j)]
        for x in range(kY):
            for y in range(kX):
                if x + 1 < kY:
                    out.link(grid[(x, y)][2], grid[(x + 1, y)][0])
                if y + 1 < kX:
                    out.link(grid[(x, y)][3], grid[(x, y + 1)][1])
        if kX and kY:
            for i in range(kX):
                y = kX - 1 - i
                port[(a_in, i)] = grid[(0, y)][0]
                port[(a_out, i)] = grid[(kY - 1, y)][2]
            for j in range(kY):
                x = j if y_south_to_north else kY - 1 - j
                south, north = grid[(x, 0)][1], grid[(x, kX - 1)][3]
                port[(r1, j)] = south
                port[(r3, j)] = north
        else:
            # nothing crosses: copies of the non-empty strand pass straight through
            for (d_in, d_out, k) in ((a_in, a_out, kX), (r1, r3, kY)):
                for i in range(k):
                    v = out.add_vertex("pass")
                    t = D.comp[d_in]
                    fwd = orientations[t][i] == 1
                    p1 = out.add_dart(v, head=fwd == m.head[d_in])
                    p2 = out.add_dart(v, head=fwd == m.head[d_out])
                    comp[p1] = comp[p2] = new_label[(t, i)]
                    port[(d_in, i)] = p1
                    port[(d_out, i)] = p2
    for d in m.darts:
        e = m.opp[d]
        if d > e:
            continue
        t = D.comp[d]
        for j in range(len(orientations[t])):
            out.link(port[(d, j)], port[(e, j)])
    # contract pass-through vertices
    loops: list[int] = []
    for v in [v for v in out.vertices if out.kind[v] == "pass"]:
        p1, p2 = out.rot[v]
        a, b = out.opp[p1], out.opp[p2]
        label = comp[p1]
        if a == p2:
            loops.append(label)
        else:
            out.link(a, b)
        out.remove_vertex(v)
        comp.pop(p1)
        comp.pop(p2)
    for t in D.loop_components:
        loops.extend(new_label[(t, j)] for j in range(len(orientations[t])))
    out.free_loops = len(loops)
    return Diagram(out, comp, sorted(loops), len(new_label), f"{D.name}-cable" if D.name else "")


# --- JSON -----------------------------------------------------------------------

def diagram_to_json(D: Diagram) -> dict:
    m = D.map
    vids = {v: i for i, v in enumerate(m.vertices)}
    arcs = []
    arc_of: dict[int, int] = {}
    for d in m.darts:
        if d in arc_of:
            continue
        e = m.opp[d]
        tail, tip = (e, d) if m.head[d] else (d, e)
        arc_of[d] = arc_of[e] = len(arcs)
        arcs.append({"id": len(arcs), "from": vids[m.vert[tail]], "to": vids[m.vert[tip]],
                     "component": D.comp[d]})
    nodes = []
    for v in m.vertices:
        node = {"id": vids[v], "kind": m.kind[v],
                "rotation": [[arc_of[d], "in" if m.head[d] else "out"] for d in m.rot[v]]}
        if m.kind[v] == "crossing":
            node["over"] = [k for k, d in enumerate(m.rot[v]) if m.over[d]]
        nodes.append(node)
    return {"schema": DIAGRAM_SCHEMA, "name": D.name, "components": D.num_components,
            "nodes": nodes, "arcs": arcs, "free_loops": list(D.loop_components)}


def diagram_from_json(obj: dict | str) -> Diagram:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if obj.get("schema", DIAGRAM_SCHEMA) != DIAGRAM_SCHEMA:
        raise ValueError(f"unsupported schema {obj.get('schema')!r}")
    m = PlanarMap()
    vmap = {}
    for node in obj["nodes"]:
        vmap[node["id"]] = m.add_vertex(node["kind"])
    arcs = {a["id"]: a for a in obj["arcs"]}
    ends: dict[tuple[int, str], int] = {}
    comp = {}
    for node in obj["nodes"]:
        v = vmap[node["id"]]
        over = set(node.get("over", []))
        for k, (aid, end) in enumerate(node["rotation"]):
            a = arcs[aid]
            want = a["to"] if end == "in" else a["from"]
            if want != node["id"]:
                raise ValueError(f"arc {aid} does not {end} at node {node['id']}")
            if (aid, end) in ends:
                raise ValueError(f"arc {aid} end {end!r} listed twice")
            d = m.add_dart(v, head=end == "in", over=k in over)
            ends[(aid, end)] = d
            comp[d] = a["component"]
    for aid in arcs:
        if (aid, "in") not in ends or (aid, "out") not in ends:
            raise ValueError(f"arc {aid} is missing from a rotation")
        m.link(ends[(aid, "out")], ends[(aid, "in")])
    loops = [int(c) for c in obj.get("free_loops", [])]
    m.free_loops = len(loops)
    ncomp = obj.get("components")
    if ncomp is None:
        ncomp = 1 + max(list(comp.values()) + loops, default=-1)
    return Diagram(m, comp, loops, int(ncomp), obj.get("name", ""))


def load_diagram(path: str | Path) -> Diagram:
    return diagram_from_json(json.loads(Path(path).read_text()))
