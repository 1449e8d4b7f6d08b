from __future__ import annotations

import itertools

from hypothesis import given
from hypothesis import strategies as st

from sl3spider.rep_ring import (RepRingElement, V, decompose_word, dim, explicit_formula_rhs, explicit_formula_terms,
                                qdim, tensor_fundamental)
from sl3spider.scalar_rings import RingElement, qint, trinomial

words = st.text(alphabet="+-", max_size=7)


def test_tensor_fundamental_examples():
    assert tensor_fundamental(V(1, 0), "+") == V(2, 0) + V(0, 1)
    assert tensor_fundamental(V(0, 0), "-") == V(0, 1)
    assert tensor_fundamental(V(1, 1), "+") == V(2, 1) + V(0, 2) + V(1, 0)


def test_decompose_word_examples():
    assert decompose_word("+-") == V(1, 1) + V(0, 0)
    assert decompose_word("") == V(0, 0)
    assert decompose_word("+++") == V(3, 0) + 2 * V(1, 1) + V(0, 0)


def test_qdim_examples():
    assert qdim(V(1, 0)) == qint(3)
    assert qdim(V(1, 1)) == qint(3) ** 2 - 1
    assert qdim(V(1, 1)) == RingElement.from_laurent({4: 1, 2: 2, 0: 2, -2: 2, -4: 1})
    assert qdim(V(0, 0)) == RingElement.from_int(1)


def test_dim_examples():
    assert dim(V(1, 1)) == 8
    assert dim(V(2, 0)) == 6
    assert dim(V(0, 0)) == 1


def test_qdim_matches_weyl_formula():
    # independent oracle: [2] qdim V(m,n) = [m+1][n+1][m+n+2]
    for m in range(7):
        for n in range(7):
            assert qint(2) * qdim(V(m, n)) == qint(m + 1) * qint(n + 1) * qint(m + n + 2)
            assert dim(V(m, n)) == (m + 1) * (n + 1) * (m + n + 2) // 2


@given(words)
def test_quantum_dimension_conservation(w):
    assert qdim(decompose_word(w)) == qint(3) ** len(w)


@given(words)
def test_multiplicities_nonnegative(w):
    assert all(c > 0 for c in decompose_word(w).multiplicities.values())


@given(words)
def test_reversed_word_is_dual(w):
    # the dual of a tensor word is the reversed word with opposite signs
    flipped = w.translate(str.maketrans("+-", "-+"))
    assert decompose_word(flipped[::-1]) == decompose_word(w).dual()
    # the classes do not see the order of tensoring
    assert decompose_word(w[::-1]) == decompose_word(w)


def _brute_force_rhs(m, n):
    total = RepRingElement()
    for i, j, k, l, delta in itertools.product(range(4), range(4), range(4), range(4), range(2)):
        c = trinomial(m - delta - i - 2 * j, i, j) * trinomial(n - delta - k - 2 * l, k, l)
        if c:
            word = "+" * (m - 2 * i + k - 3 * j - delta) + "-" * (n + i - 2 * k - 3 * l - delta)
            total = total + (-1) ** (delta + i + k) * c * decompose_word(word)
    return total


def test_explicit_formula_examples():
    assert explicit_formula_rhs(0, 0) == V(0, 0)
    assert explicit_formula_rhs(1, 1) == decompose_word("+-") - V(0, 0)
    assert _brute_force_rhs(3, 2) == V(3, 2)
    assert explicit_formula_rhs(3, 2) == V(3, 2)


def test_explicit_formula_identity():
    for m in range(7):
        for n in range(7):
            assert explicit_formula_rhs(m, n) == V(m, n)


def test_clebsch_gordan_tensor_relations():
    # V(m,n) + V(m-1,0)(x)V(0,n-1) = V(m,0)(x)V(0,n), checked on words
    for m in range(1, 4):
        for n in range(1, 4):
            lhs = V(m, n) + _tensor(V(m - 1, 0), V(0, n - 1))
            assert lhs == _tensor(V(m, 0), V(0, n))
    for m in range(3, 6):
        assert V(m, 0) + _tensor(V(0, 1), V(m - 2, 0)) == _tensor(V(1, 0), V(m - 1, 0)) + V(m - 3, 0)
        assert V(0, m) + _tensor(V(1, 0), V(0, m - 2)) == _tensor(V(0, 1), V(0, m - 1)) + V(0, m - 3)


def _tensor(x, y):
    """Tensor product in the representation ring, expanding y into fundamental words."""
    out = RepRingElement()
    for (m, n), c in y.multiplicities.items():
        out = out + c * _tensor_irrep(x, m, n)
    return out


def _tensor_irrep(x, m, n):
    # V(m,n) = sum of signed words from the explicit formula; tensor letter by letter
    total = RepRingElement()
    for c, plus, minus in explicit_formula_terms(m, n):
        y = x
        for sign in "+" * plus + "-" * minus:
            y = tensor_fundamental(y, sign)
        total = total + c * y
    return total


def test_string_roundtrip():
    x = V(3, 0) + 2 * V(1, 1) - V(0, 0)
    assert str(x) == "V(3,0) + 2*V(1,1) - V(0,0)"
    assert RepRingElement.parse(str(x)) == x
    assert str(RepRingElement()) == "0"
