from __future__ import annotations

import itertools
import json

from hypothesis import given
from hypothesis import strategies as st

from sl3spider import corpus
from sl3spider.partition_graph import AdmissiblePartition, build_graph
from sl3spider.scalar_rings import qint
from sl3spider.tangle_diagram import (block_orientations, cable, cable_strands, counts, crossing_sign, cyclic_darts,
                                      diagram_from_json, diagram_to_json, from_braid, smooth)
from sl3spider.web import circle, disjoint_union, evaluate, validate

P = AdmissiblePartition


@st.composite
def braid_diagrams(draw):
    strands = draw(st.integers(1, 4))
    if strands == 1:
        return from_braid(1, [])
    word = draw(st.lists(st.integers(1, strands - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=6))
    D = from_braid(strands, word)
    rev = draw(st.lists(st.integers(0, D.num_components - 1), unique=True)) if D.num_components else []
    return D.reversed(rev)


def test_counts_examples():
    assert counts(corpus.load_corpus_diagram("trefoil")) == (3, 0)
    assert counts(corpus.load_corpus_diagram("trefoil_mirror")) == (0, 3)
    assert counts(corpus.load_corpus_diagram("figure_eight")) == (2, 2)
    assert counts(from_braid(2, [1])) == (1, 0)
    assert from_braid(2, [1, 1]).num_components == 2


def test_smooth_examples():
    assert smooth(from_braid(1, []), []) == circle()
    kink = from_braid(2, [1])
    assert smooth(kink, [0]) == disjoint_union(circle(), circle())
    assert evaluate(smooth(kink, [0])) == qint(3) ** 2
    assert evaluate(smooth(kink, [1])) == qint(2) * qint(3)


def test_every_smoothing_of_the_corpus_is_a_web():
    for name, D in corpus.diagrams().items():
        xs = D.crossings()
        if len(xs) > 8:
            continue
        assert D.validate() == [], name
        for bits in itertools.product((0, 1), repeat=len(xs)):
            assert validate(smooth(D, bits)) == [], (name, bits)


def test_smoothing_cube_of_a_large_cable_is_valid():
    D = corpus.load_corpus_diagram("trefoil_cable_pp")
    for bits in [(0,) * 12, (1,) * 12, (0, 1) * 6]:
        assert validate(smooth(D, bits)) == []


@given(braid_diagrams())
def test_reversal_keeps_signs(D):
    assert counts(D.reversed()) == counts(D)
    pos, neg = counts(D)
    assert counts(D.mirror()) == (neg, pos)


@given(braid_diagrams(), st.data())
def test_cable_crossing_count(D, data):
    orient = [data.draw(st.lists(st.sampled_from([1, -1]), max_size=2)) for _ in range(D.num_components)]
    C = cable_strands(D, orient)
    assert C.validate() == []
    want = 0
    for c in D.crossings():
        i1, i2, _, _ = cyclic_darts(D.map, c)
        want += len(orient[D.comp[i1]]) * len(orient[D.comp[i2]])
    assert len(C.crossings()) == want
    assert C.num_components == sum(len(o) for o in orient)


def test_cable_examples():
    tre = corpus.load_corpus_diagram("trefoil")
    assert counts(cable(tre, [P.canonical(1, 0)])) == counts(tre)
    unlink = cable(from_braid(1, []), [P.canonical(2, 0)])
    assert unlink.num_components == 2 and not unlink.crossings()
    assert len(cable(tre, [P.canonical(2, 0)]).crossings()) == 12
    assert counts(cable(tre, [P.canonical(1, 1)])) == (6, 6)


def test_block_orientations():
    g = build_graph(2, 2)
    table = {str(p): block_orientations(p) for p in g.vertices}
    assert table["[+][+][-][-]"] == [1, 1, -1, -1]
    assert table["[++][--]"] == [-1, 1]
    assert table["[+][+-][-]"] == [1, -1]


def test_kink_signs():
    for sign in (1, -1):
        D = from_braid(2, [sign])
        (c,) = D.crossings()
        assert crossing_sign(D.map, c) == sign


@given(braid_diagrams())
def test_json_roundtrip(D):
    back = diagram_from_json(json.dumps(diagram_to_json(D)))
    assert back.validate() == []
    assert counts(back) == counts(D)
    assert back.num_components == D.num_components
    assert diagram_to_json(back) == diagram_to_json(D)
