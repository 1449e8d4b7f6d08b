"""Regenerate the JSON corpus shipped in src/sl3spider/data.

Webs are a few named closures plus smoothings of seeded random braid
closures.  Diagrams are small braid closures together with the
Reidemeister move pairs used by the invariance checks.
"""

from __future__ import annotations

import argparse
import json
import random
from pathlib import Path

from sl3spider.tangle_diagram import cable_strands, diagram_to_json, from_braid, smooth
from sl3spider.web import circle, disjoint_union, empty_web, square_closure, theta, validate, web_to_json

DATA = Path(__file__).resolve().parents[1] / "src" / "sl3spider" / "data"

# name -> (strands, word, reversed components)
DIAGRAMS = {
    "unknot": (1, [], ()),
    "kink_pos": (2, [1], ()),
    "kink_neg": (2, [-1], ()),
    "double_kink": (3, [1, 2], ()),
    "kinks_opposite": (3, [1, -2], ()),
    "trefoil": (2, [1, 1, 1], ()),
    "trefoil_mirror": (2, [-1, -1, -1], ()),
    "figure_eight": (3, [1, -2, 1, -2], ()),
    "cinquefoil": (2, [1, 1, 1, 1, 1], ()),
    "torus_3_4": (3, [1, 2, 1, 2, 1, 2, 1, 2], ()),
    "whitehead_like": (3, [1, 1, -2, 1, -2], ()),
    "hopf": (2, [1, 1], ()),
    "hopf_antiparallel": (2, [1, 1], (1,)),
    "unlink2": (2, [], ()),
    "unlink2_antiparallel": (2, [], (1,)),
    "unlink3": (3, [], ()),
    "r2_a": (2, [1, -1], ()),
    "r2_b": (2, [-1, 1], ()),
    "r2_a_antiparallel": (2, [1, -1], (1,)),
    "r2_b_antiparallel": (2, [-1, 1], (1,)),
    "r2_c": (3, [1, 1, 2, -2], ()),
    "r2_c_base": (3, [1, 1], ()),
    "r2_d": (3, [2, -1, 1, 2], ()),
    "r2_d_base": (3, [2, 2], ()),
    "r3_a_left": (3, [1, 2, 1], ()),
    "r3_a_right": (3, [2, 1, 2], ()),
    "r3_b_left": (3, [1, 2, -1], ()),
    "r3_b_right": (3, [-2, 1, 2], ()),
    "r3_c_left": (3, [-1, -2, -1], ()),
    "r3_c_right": (3, [-2, -1, -2], ()),
    "r3_d_left": (3, [-1, 2, 1], ()),
    "r3_d_right": (3, [2, 1, -2], ()),
}

# name -> (base diagram, strand orientations per component)
CABLES = {
    "trefoil_cable_pp": ("trefoil", [(1, 1)]),
    "trefoil_cable_pm": ("trefoil", [(1, -1)]),
    "hopf_cable_p_pm": ("hopf", [(1,), (1, -1)]),
}

MOVES = [
    ("R1", "kink_pos", "unknot", 1),
    ("R1", "kink_neg", "unknot", -1),
    ("R2", "r2_a", "unlink2", 0),
    ("R2", "r2_b", "unlink2", 0),
    ("R2", "r2_a_antiparallel", "unlink2_antiparallel", 0),
    ("R2", "r2_b_antiparallel", "unlink2_antiparallel", 0),
    ("R2", "r2_c", "r2_c_base", 0),
    ("R2", "r2_d", "r2_d_base", 0),
    ("R3", "r3_a_left", "r3_a_right", 0),
    ("R3", "r3_b_left", "r3_b_right", 0),
    ("R3", "r3_c_left", "r3_c_right", 0),
    ("R3", "r3_d_left", "r3_d_right", 0),
]


def random_webs(count: int, seed: int, max_vertices: int = 12):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        strands = rng.randint(2, 4)
        length = rng.randint(1, 8)
        word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length)]
        D = from_braid(strands, word)
        bits = [rng.randint(0, 1) for _ in word]
        if 2 * sum(bits) > max_vertices or sum(bits) == 0:
            continue
        w = smooth(D, bits)
        assert not validate(w)
        out.append((f"braid{len(out):02d}", {"strands": strands, "word": word, "smoothing": bits}, w))
    return out


def write(path: Path, obj: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=20240607)
    ap.add_argument("--random-webs", type=int, default=30)
    args = ap.parse_args(argv)

    webs = [("empty", {}, empty_web()), ("circle", {}, circle()), ("theta", {}, theta()),
            ("square_closure", {}, square_closure()),
            ("two_circles", {}, disjoint_union(circle(), circle())),
            ("theta_and_circle", {}, disjoint_union(theta(), circle()))]
    webs += random_webs(args.random_webs, args.seed)
    for old in (DATA / "webs").glob("*.json"):
        old.unlink()
    for name, origin, w in webs:
        obj = web_to_json(w)
        obj["name"] = name
        if origin:
            obj["origin"] = origin
        write(DATA / "webs" / f"{name}.json", obj)

    for old in (DATA / "diagrams").glob("*.json"):
        old.unlink()
    for name, (strands, word, rev) in DIAGRAMS.items():
        D = from_braid(strands, word, name=name, reverse=rev)
        assert not D.validate(), name
        obj = diagram_to_json(D)
        obj["origin"] = {"strands": strands, "word": word, "reverse": list(rev)}
        write(DATA / "diagrams" / f"{name}.json", obj)
    for name, (base, orient) in CABLES.items():
        strands, word, rev = DIAGRAMS[base]
        D = cable_strands(from_braid(strands, word, reverse=rev), orient)
        D.name = name
        assert not D.validate(), name
        obj = diagram_to_json(D)
        obj["origin"] = {"cable_of": base, "orientations": [list(o) for o in orient]}
        write(DATA / "diagrams" / f"{name}.json", obj)
    write(DATA / "moves.json", {"moves": [{"move": mv, "left": a, "right": b, "kink": k}
                                          for mv, a, b, k in MOVES]})
    print(f"wrote {len(webs)} webs, {len(DIAGRAMS) + len(CABLES)} diagrams, {len(MOVES)} move pairs")


if __name__ == "__main__":
    main()
