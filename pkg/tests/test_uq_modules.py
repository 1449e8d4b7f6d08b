from __future__ import annotations

import itertools
import random
from collections import Counter

import pytest

from sl3spider.rep_ring import decompose_word, dim
from sl3spider.scalar_rings import RationalFunction
from sl3spider.uq_modules import (GENERATORS, Matrix, ModuleMap, UqModule, check_module, check_morphism, compose,
                                  duality_relations, elementary_morphism, fundamental, identity_map,
                                  pad_with_identities, tensor, tensor_word, trivial, weight)

RF = RationalFunction
MORPHISMS = ("b-+", "b+-", "d-+", "d+-", "h++-", "h--+")


def s(k, c=1):
    return RF.s_power(k, c)


def vec(*idx):
    out = 0
    for i in idx:
        out = out * 3 + i + 1
    return out


def test_fundamental_plus_table():
    Vp = fundamental("+")
    assert Vp["E1"].column(vec(0)) == {vec(1): RF.from_int(1)}
    assert not Vp["E1"].column(vec(1)) and not Vp["E1"].column(vec(-1))


def test_fundamental_minus_table():
    Vm = fundamental("-")
    assert Vm["F2"].column(vec(1)) == {vec(0): RF.from_int(1)}


def test_weight_spaces_one_dimensional():
    for sign in "+-":
        M = fundamental(sign)
        assert len({weight(M, v) for v in range(3)}) == 3


def test_trivial_module():
    T = trivial()
    assert T["K1"] == Matrix.identity(1)
    assert T["E1"].is_zero()
    assert not check_module(T)
    M = fundamental("+")
    TM = tensor(T, M)
    assert all(TM[g] == M[g] for g in GENERATORS)


def test_tensor_plus_minus():
    M = tensor(fundamental("+"), fundamental("-"))
    assert M.dim == 9
    assert sum(1 for v in range(9) if weight(M, v) == (0, 0)) == 3


def test_tensor_associativity():
    A, B, C = fundamental("+"), fundamental("-"), fundamental("+")
    left, right = tensor(tensor(A, B), C), tensor(A, tensor(B, C))
    assert all(left[g] == right[g] for g in GENERATORS)


def test_check_module_detects_broken_relation():
    M = fundamental("+")
    broken = UqModule(M.basis_labels, dict(M.action, E1=Matrix.zero(3, 3)), "+")
    assert "(q-q^-1)(E1F1-F1E1)=K1-K1^-1" in check_module(broken)


def test_tensor_words_up_to_length_four():
    for k in range(5):
        for w in itertools.product("+-", repeat=k):
            assert not check_module(tensor_word("".join(w))), w


def test_morphism_examples():
    d = elementary_morphism("d+-")
    assert d.matrix[(0, vec(0, 0))] == RF.from_int(1)
    b = elementary_morphism("b-+")
    assert b.matrix.column(0) == {vec(-1, 1): s(-2, -1), vec(0, 0): RF.from_int(1), vec(1, -1): s(2, -1)}
    h = elementary_morphism("h++-")
    assert h.matrix.column(vec(1, 0)) == {vec(1): s(1, -1)}
    assert h.matrix.column(vec(-1, 0)) == {vec(-1): s(-1)}


def test_all_elementary_morphisms_intertwine():
    for kind in MORPHISMS:
        assert check_morphism(elementary_morphism(kind)) is None, kind
    assert check_morphism(identity_map(tensor_word("+-"))) is None


def test_random_matrix_is_not_a_morphism():
    rng = random.Random(3)
    M = fundamental("+")
    ent = {(r, c): RF.from_int(rng.randint(1, 9)) for r in range(3) for c in range(3)}
    assert check_morphism(ModuleMap(M, M, Matrix(3, 3, ent))) is not None


def test_duality_relations():
    rel = duality_relations()
    assert len(rel) == 6
    assert all(rel.values()), rel


def test_padding_and_composition():
    f = elementary_morphism("h++-")
    assert pad_with_identities(f).matrix == f.matrix
    g = pad_with_identities(f, left=[fundamental("+")], right=[fundamental("-")])
    assert g.source.word == "+++-" and g.target.word == "+--"
    assert check_morphism(g) is None
    with pytest.raises(ValueError):
        compose(elementary_morphism("d+-"), elementary_morphism("b-+"))
    # a closed circle evaluates to [3]
    assert compose(elementary_morphism("d-+"), elementary_morphism("b-+")).matrix[(0, 0)] \
        == RF.q_power(2) + 1 + RF.q_power(-2)


def test_weights_match_decomposition():
    # words with equal classes carry equal weight multisets, and dimensions add up
    by_class = {}
    for k in range(5):
        for w in map("".join, itertools.product("+-", repeat=k)):
            M = tensor_word(w)
            cls = decompose_word(w)
            assert dim(cls) == M.dim
            char = Counter(weight(M, v) for v in range(M.dim))
            key = str(cls)
            if key in by_class:
                assert by_class[key] == char
            by_class[key] = char
