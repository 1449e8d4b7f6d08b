"""Closed planar webs as combinatorial maps, and their Kuperberg evaluation.

A map is a set of darts (half-edges) with an involution ``opp`` gluing darts
into edges and a counterclockwise rotation at every vertex.  Each dart knows
whether its edge points into its vertex (``head``).  The same engine also
carries 4-valent crossings so that diagrams can be simplified while they are
only partially smoothed; a :class:`Web` is the crossing-free case.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

from .scalar_rings import RingElement, qint

__all__ = [
    "PlanarMap",
    "Web",
    "Reducible",
    "validate",
    "find_reducible",
    "evaluate",
    "canonical_code",
    "components",
    "circle",
    "theta",
    "square_closure",
    "empty_web",
    "disjoint_union",
    "web_from_json",
    "web_to_json",
    "load_web",
    "WEB_SCHEMA",
]

WEB_SCHEMA = "sl3spider/web@1"
TRIVALENT = ("source", "sink")
_KIND_CODE = {"source": 0, "sink": 1, "crossing": 2}

Q2 = qint(2)
Q3 = qint(3)


class PlanarMap:
    """Mutable rotation system with source, sink and crossing vertices."""

    __slots__ = ("rot", "kind", "vert", "opp", "head", "over", "free_loops", "_nv", "_nd")

    def __init__(self):
        self.rot: dict[int, list[int]] = {}
        self.kind: dict[int, str] = {}
        self.vert: dict[int, int] = {}
        self.opp: dict[int, int] = {}
        self.head: dict[int, bool] = {}
        self.over: dict[int, bool] = {}
        self.free_loops = 0
        self._nv = 0
        self._nd = 0

    def copy(self) -> "PlanarMap":
        m = self.__class__.__new__(self.__class__)
        m.rot = {v: list(r) for v, r in self.rot.items()}
        m.kind = dict(self.kind)
        m.vert = dict(self.vert)
        m.opp = dict(self.opp)
        m.head = dict(self.head)
        m.over = dict(self.over)
        m.free_loops = self.free_loops
        m._nv = self._nv
        m._nd = self._nd
        return m

    # --- construction ---

    def add_vertex(self, kind: str) -> int:
        v = self._nv
        self._nv += 1
        self.rot[v] = []
        self.kind[v] = kind
        return v

    def add_dart(self, v: int, head: bool, over: bool = False) -> int:
        d = self._nd
        self._nd += 1
        self.rot[v].append(d)
        self.vert[d] = v
        self.head[d] = head
        self.over[d] = over
        return d

    def link(self, a: int, b: int) -> None:
        self.opp[a] = b
        self.opp[b] = a

    def remove_vertex(self, v: int) -> None:
        for d in self.rot.pop(v):
            for table in (self.vert, self.opp, self.head, self.over):
                table.pop(d, None)
        del self.kind[v]

    # --- queries ---

    @property
    def darts(self) -> list[int]:
        return sorted(self.vert)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.rot)

    def sigma(self, d: int) -> int:
        r = self.rot[self.vert[d]]
        return r[(r.index(d) + 1) % len(r)]

    def sigma_inv(self, d: int) -> int:
        r = self.rot[self.vert[d]]
        return r[(r.index(d) - 1) % len(r)]

    def face_of(self, d: int) -> list[int]:
        out = [d]
        x = self.sigma(self.opp[d])
        while x != d:
            out.append(x)
            x = self.sigma(self.opp[x])
        return out

    def faces(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for d in self.darts:
            if d not in seen:
                f = self.face_of(d)
                seen.update(f)
                out.append(f)
        return out

    def crossings(self) -> list[int]:
        return [v for v in self.vertices if self.kind[v] == "crossing"]

    def num_edges(self) -> int:
        return len(self.vert) // 2

    def is_empty(self) -> bool:
        return not self.rot and self.free_loops == 0

    # --- surgery ---

    def splice(self, removed: Iterable[int], matching: dict[int, int]) -> None:
        """Delete vertices and reconnect through them.

        ``matching`` pairs darts of the removed vertices (ports): a strand that
        enters the region through one port leaves through its partner.  Darts
        of removed vertices that are not ports must form edges internal to the
        region and simply disappear.  Closed strands left inside the region
        become free loops.
        """
        removed = list(removed)
        region = {d for v in removed for d in self.rot[v]}
        visited: set[int] = set()
        for p in sorted(matching):
            if p in visited:
                continue
            a = self.opp[p]
            if a in region:
                continue
            x = p
            while True:
                y = matching[x]
                visited.add(x)
                visited.add(y)
                z = self.opp[y]
                if z not in region:
                    break
                if z not in matching:
                    raise AssertionError("port leads to a non-port dart of the region")
                x = z
            if self.head[a] == self.head[z]:
                raise AssertionError("orientation clash while splicing")
            self.link(a, z)
        for p in sorted(matching):
            if p in visited:
                continue
            x = p
            while x not in visited:
                y = matching[x]
                visited.add(x)
                visited.add(y)
                x = self.opp[y]
            self.free_loops += 1
        for v in removed:
            self.remove_vertex(v)


class Web(PlanarMap):
    """A closed web: every vertex is a trivalent source or sink."""

    __slots__ = ()

    @classmethod
    def from_map(cls, m: PlanarMap) -> "Web":
        w = cls.__new__(cls)
        for name in PlanarMap.__slots__:
            setattr(w, name, getattr(m, name))
        w = w.copy()
        if m.crossings():
            raise ValueError("a web cannot contain crossings")
        return w

    def __eq__(self, other):
        if not isinstance(other, PlanarMap):
            return NotImplemented
        return canonical_code(self) == canonical_code(other)

    def __hash__(self):
        return hash(canonical_code(self))

    def __repr__(self):
        return f"Web(vertices={len(self.rot)}, edges={self.num_edges()}, free_loops={self.free_loops})"


# --- construction helpers -----------------------------------------------------

def _build(kinds: list[str], edges: list[tuple[int, int]], rotation: dict[int, list[int]],
           free_loops: int = 0) -> Web:
    """Vertices by index, edges (source, sink) by index, rotation as ccw edge ids."""
    w = Web()
    for k in kinds:
        w.add_vertex(k)
    ends: dict[tuple[int, int], int] = {}
    for v in range(len(kinds)):
        for e in rotation[v]:
            src, snk = edges[e]
            if v == snk:
                ends[(e, 1)] = w.add_dart(v, head=True)
            elif v == src:
                ends[(e, 0)] = w.add_dart(v, head=False)
            else:
                raise ValueError(f"edge {e} is not incident to vertex {v}")
    for e in range(len(edges)):
        if (e, 0) not in ends or (e, 1) not in ends:
            raise ValueError(f"edge {e} is missing from the rotation")
        w.link(ends[(e, 0)], ends[(e, 1)])
    w.free_loops = free_loops
    return w


def empty_web() -> Web:
    return Web()


def circle() -> Web:
    w = Web()
    w.free_loops = 1
    return w


def theta() -> Web:
    return _build(["source", "sink"], [(0, 1), (0, 1), (0, 1)], {0: [0, 1, 2], 1: [2, 1, 0]})


def square_closure() -> Web:
    """A square whose two pairs of neighbouring legs are joined by outer arcs."""
    # vertices 0..3 around the square: 0,2 sources and 1,3 sinks
    edges = [(0, 1), (2, 1), (2, 3), (0, 3), (0, 1), (2, 3)]
    rotation = {0: [0, 3, 4], 1: [1, 0, 4], 2: [5, 2, 1], 3: [2, 5, 3]}
    return _build(["source", "sink", "source", "sink"], edges, rotation)


def disjoint_union(*webs: PlanarMap) -> Web:
    out = Web()
    for w in webs:
        vmap = {v: out.add_vertex(w.kind[v]) for v in w.vertices}
        dmap = {}
        for v in w.vertices:
            for d in w.rot[v]:
                dmap[d] = out.add_dart(vmap[v], w.head[d], w.over[d])
        for d, e in w.opp.items():
            out.opp[dmap[d]] = dmap[e]
        out.free_loops += w.free_loops
    return out


# --- validation ---------------------------------------------------------------

def components(m: PlanarMap) -> list[list[int]]:
    """Vertex sets of the connected components (free loops excluded)."""
    seen: set[int] = set()
    out = []
    for v0 in m.vertices:
        if v0 in seen:
            continue
        comp, stack = [], [v0]
        seen.add(v0)
        while stack:
            v = stack.pop()
            comp.append(v)
            for d in m.rot[v]:
                u = m.vert[m.opp[d]]
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        out.append(sorted(comp))
    return out


def validate(m: PlanarMap, allow_crossings: bool = False) -> list[str]:
    """Violations of the web axioms; an empty list means the web is valid."""
    bad = []
    for v in m.vertices:
        k = m.kind[v]
        r = m.rot[v]
        if k in TRIVALENT:
            if len(r) != 3:
                bad.append(f"vertex {v} has degree {len(r)}")
            want = k == "sink"
            if any(m.head[d] != want for d in r):
                bad.append(f"{k} {v} has a wrongly oriented edge")
        elif k == "crossing" and allow_crossings:
            if len(r) != 4:
                bad.append(f"crossing {v} has degree {len(r)}")
            elif not (m.head[r[0]] != m.head[r[2]] and m.head[r[1]] != m.head[r[3]]):
                bad.append(f"crossing {v} has inconsistent strand orientations")
            elif not (m.over[r[0]] == m.over[r[2]] != m.over[r[1]] == m.over[r[3]]):
                bad.append(f"crossing {v} has no well-defined over strand")
        else:
            bad.append(f"vertex {v} has unsupported kind {k!r}")
    for d, e in m.opp.items():
        if m.opp.get(e) != d or e == d:
            bad.append(f"edge gluing is not an involution at dart {d}")
            break
        if m.head[d] == m.head[e]:
            bad.append(f"edge at darts {d},{e} is not oriented consistently")
        ku, kv = m.kind[m.vert[d]], m.kind[m.vert[e]]
        if ku in TRIVALENT and ku == kv:
            bad.append(f"edge between two {ku} vertices")
    if set(m.opp) != set(m.vert):
        bad.append("some dart is not glued")
        return bad
    for comp in components(m):
        cs = set(comp)
        V = len(comp)
        darts = [d for d in m.darts if m.vert[d] in cs]
        E = len(darts) // 2
        F = len({min(m.face_of(d)) for d in darts})
        if V - E + F != 2:
            bad.append(f"component at vertex {comp[0]} is not planar (V-E+F = {V - E + F})")
    if m.free_loops < 0:
        bad.append("negative free loop count")
    return bad


# --- canonical form -----------------------------------------------------------

def _flag(m: PlanarMap, d: int) -> tuple[int, bool, bool]:
    return (_KIND_CODE[m.kind[m.vert[d]]], m.head[d], m.over[d])


def _component_code(m: PlanarMap, darts: list[int]) -> tuple:
    flags = {d: _flag(m, d) for d in darts}
    least = min(flags.values())
    best = None
    for start in darts:
        if flags[start] != least:
            continue
        label = {start: 0}
        order = [start]
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for y in (m.sigma(x), m.opp[x]):
                if y not in label:
                    label[y] = len(order)
                    order.append(y)
        code = tuple((label[m.sigma(x)], label[m.opp[x]], flags[x]) for x in order)
        if best is None or code < best:
            best = code
    return best


def canonical_code(m: PlanarMap) -> tuple:
    """Relabelling-invariant encoding: free loops plus sorted component codes."""
    codes = []
    for comp in components(m):
        cs = set(comp)
        codes.append(_component_code(m, [d for d in m.darts if m.vert[d] in cs]))
    return (m.free_loops, tuple(sorted(codes)))


# --- reductions ---------------------------------------------------------------

@dataclass(frozen=True)
class Reducible:
    kind: str  # "free_loop", "digon" or "square"
    face: tuple[int, ...] = ()


def _trivalent_face(m: PlanarMap, f: list[int]) -> bool:
    vs = [m.vert[d] for d in f]
    return len(set(vs)) == len(vs) and all(m.kind[v] in TRIVALENT for v in vs)


def reducible_faces(m: PlanarMap) -> list[Reducible]:
    """All digon and square faces whose vertices are distinct and trivalent."""
    out = []
    for f in m.faces():
        if len(f) in (2, 4) and _trivalent_face(m, f):
            out.append(Reducible("digon" if len(f) == 2 else "square", tuple(f)))
    return out


def find_reducible(w: PlanarMap) -> Reducible | None:
    """A free loop, square or digon of w (in that order); None only for the empty web."""
    if w.free_loops:
        return Reducible("free_loop")
    red = reducible_faces(w)
    if red:
        squares = [r for r in red if r.kind == "square"]
        return squares[0] if squares else red[0]
    if w.rot and not w.crossings():
        raise AssertionError("non-empty closed web without a circle, digon or square")
    return None


def _third_dart(m: PlanarMap, v: int, used: Iterable[int]) -> int:
    used = set(used)
    (t,) = [d for d in m.rot[v] if d not in used]
    return t


def apply_reduction(m: PlanarMap, r: Reducible) -> list[tuple[RingElement, PlanarMap]]:
    """Rewrite one reducible feature; returns (coefficient, map) terms."""
    if r.kind == "free_loop":
        out = m.copy()
        out.free_loops -= 1
        return [(Q3, out)]
    f = list(r.face)
    k = len(f)
    vs = [m.vert[d] for d in f]
    # at vertex vs[i] the face uses darts f[i] and opp(f[i-1])
    thirds = [_third_dart(m, vs[i], (f[i], m.opp[f[i - 1]])) for i in range(k)]
    if r.kind == "digon":
        out = m.copy()
        out.splice(vs, {thirds[0]: thirds[1], thirds[1]: thirds[0]})
        return [(Q2, out)]
    if r.kind == "square":
        terms = []
        for a, b, c, d in ((0, 1, 2, 3), (1, 2, 3, 0)):
            out = m.copy()
            t = thirds
            out.splice(vs, {t[a]: t[b], t[b]: t[a], t[c]: t[d], t[d]: t[c]})
            terms.append((RingElement.from_int(1), out))
        return terms
    raise ValueError(f"unknown reduction {r.kind!r}")


def simplify(m: PlanarMap) -> list[tuple[RingElement, PlanarMap]]:
    """Apply digon, square and loop relations until only crossing-adjacent faces remain.

    Free loops are folded into the coefficient, so the returned maps have none.
    """
    done: list[tuple[RingElement, PlanarMap]] = []
    stack = [(RingElement.from_int(1), m)]
    while stack:
        c, x = stack.pop()
        if x.free_loops:
            x = x.copy()
            c = c * Q3 ** x.free_loops
            x.free_loops = 0
        red = reducible_faces(x)
        if not red:
            done.append((c, x))
            continue
        digons = [r for r in red if r.kind == "digon"]
        for c2, y in apply_reduction(x, digons[0] if digons else red[0]):
            stack.append((c * c2, y))
    return done


def _component_maps(m: PlanarMap) -> list[PlanarMap]:
    out = []
    for comp in components(m):
        sub = PlanarMap()
        cs = set(comp)
        for v in comp:
            sub.rot[v] = list(m.rot[v])
            sub.kind[v] = m.kind[v]
            for d in m.rot[v]:
                sub.vert[d] = v
                sub.head[d] = m.head[d]
                sub.over[d] = m.over[d]
                sub.opp[d] = m.opp[d]
        sub._nv, sub._nd = m._nv, m._nd
        assert all(sub.vert[e] in cs for e in (m.opp[d] for d in sub.vert))
        out.append(sub)
    return out


_CACHE: dict[tuple, RingElement] = {}


def _first_choice(red: list[Reducible]) -> Reducible:
    for r in red:
        if r.kind == "digon":
            return r
    return red[0]


def _eval(m: PlanarMap, choose: Callable[[list[Reducible]], Reducible], cache: dict) -> RingElement:
    total = Q3 ** m.free_loops
    for comp in _component_maps(m):
        key = _component_code(comp, comp.darts)
        val = cache.get(key)
        if val is None:
            red = reducible_faces(comp)
            if not red:
                raise AssertionError("non-empty closed web without a circle, digon or square")
            val = RingElement()
            for c, nxt in apply_reduction(comp, choose(red)):
                val = val + c * _eval(nxt, choose, cache)
            cache[key] = val
        total = total * val
    return total


def evaluate(w: PlanarMap, strategy: str = "first", seed: int = 0) -> RingElement:
    """The Kuperberg bracket of a closed web.

    ``strategy`` is "first" (digons before squares, memoized globally) or
    "random" (uniform choice among reducible faces with the given seed and a
    private cache), so that the two can cross-check each other.
    """
    if w.crossings():
        raise ValueError("evaluate expects a web without crossings")
    if strategy == "first":
        return _eval(w, _first_choice, _CACHE)
    if strategy == "random":
        rng = random.Random(seed)
        return _eval(w, lambda red: red[rng.randrange(len(red))], {})
    raise ValueError(f"unknown strategy {strategy!r}")


# --- JSON ---------------------------------------------------------------------

def web_to_json(w: PlanarMap) -> dict:
    vids = {v: i for i, v in enumerate(w.vertices)}
    eids: dict[int, int] = {}
    edges = []
    for d in w.darts:
        if d in eids:
            continue
        e = w.opp[d]
        src, snk = (e, d) if w.head[d] else (d, e)
        eids[d] = eids[e] = len(edges)
        edges.append({"id": len(edges), "source": vids[w.vert[src]], "sink": vids[w.vert[snk]]})
    return {
        "schema": WEB_SCHEMA,
        "vertices": [{"id": vids[v], "kind": w.kind[v]} for v in w.vertices],
        "edges": edges,
        "rotation": {str(vids[v]): [eids[d] for d in w.rot[v]] for v in w.vertices},
        "free_loops": w.free_loops,
    }


def web_from_json(obj: dict | str) -> Web:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if obj.get("schema", WEB_SCHEMA) != WEB_SCHEMA:
        raise ValueError(f"unsupported schema {obj.get('schema')!r}")
    ids = [v["id"] for v in obj["vertices"]]
    index = {vid: i for i, vid in enumerate(ids)}
    kinds = [v["kind"] for v in obj["vertices"]]
    eidx = {e["id"]: i for i, e in enumerate(obj["edges"])}
    edges = [(index[e["source"]], index[e["sink"]]) for e in obj["edges"]]
    rotation = {index[int(k) if k.lstrip("-").isdigit() else k]: [eidx[e] for e in r]
                for k, r in obj["rotation"].items()}
    for v in range(len(kinds)):
        rotation.setdefault(v, [])
    return _build(kinds, edges, rotation, int(obj.get("free_loops", 0)))


def load_web(path: str | Path) -> Web:
    return web_from_json(json.loads(Path(path).read_text()))
