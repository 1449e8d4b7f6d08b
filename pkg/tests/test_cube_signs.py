from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl3spider.cube_signs import (CubicalSet, SignAssignment, boundary, coboundary, compare_assignments,
                                  consistent_closure, full_cube, graph_to_cube, homology_f2, inductive_closure,
                                  is_consistent, is_strong_inductive, solve_sign_assignment, square_defect,
                                  standard_cube_signs)
from sl3spider.partition_graph import build_graph


@st.composite
def vertex_sets(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    verts = draw(st.lists(st.text("01", min_size=n, max_size=n), min_size=1, max_size=2 ** n))
    return n, verts


def squares_of(S, delta):
    return coboundary(delta.values, S, 1)


def test_boundary_examples():
    assert boundary("01") == frozenset()
    assert boundary("0*") == {"00", "01"}
    assert boundary("**") == {"0*", "1*", "*0", "*1"}
    with pytest.raises(ValueError):
        boundary("**", CubicalSet(2, frozenset({"00"})))


@given(vertex_sets())
def test_boundary_squared_vanishes(nv):
    S = consistent_closure(*nv)
    assert is_consistent(S)
    for f in S.faces:
        parity = {}
        for g in boundary(f, S):
            assert g in S.faces
            for h in boundary(g):
                parity[h] = parity.get(h, 0) ^ 1
        assert not any(parity.values())


def test_strong_inductive_examples():
    assert is_strong_inductive(full_cube(3))
    assert not is_strong_inductive(CubicalSet(2, frozenset({"**"})))
    S, _ = graph_to_cube(build_graph(2, 1))
    assert is_strong_inductive(S)


def test_homology_examples():
    assert homology_f2(full_cube(3)) == [1, 0, 0, 0]
    assert homology_f2(CubicalSet(2, frozenset({"00", "11"}))) == [2]
    with pytest.raises(ValueError):
        homology_f2(CubicalSet(1, frozenset({"0", "1"})))  # the edge between them is missing


@given(vertex_sets())
def test_strong_inductive_sets_are_acyclic(nv):
    S = inductive_closure(*nv)
    assert is_strong_inductive(S)
    h = homology_f2(S)
    assert h == [1] + [0] * (len(h) - 1)


def test_solve_examples():
    B2 = full_cube(2)
    d = solve_sign_assignment(B2, 1)
    assert sum(d[e] for e in B2.edges) % 2 == 1
    d0 = solve_sign_assignment(B2, 0)
    assert all(d0[e] == 0 for e in B2.edges)
    B3 = full_cube(3)
    d = solve_sign_assignment(B3, 1)
    assert all(v == 1 for v in squares_of(B3, d).values())


def test_solver_rejects_bad_input():
    B3 = full_cube(3)
    gamma = {s: 0 for s in B3.squares}
    gamma["**0"] = 1
    assert square_defect(B3, gamma) == ["***"]
    with pytest.raises(ValueError):
        solve_sign_assignment(B3, gamma)
    with pytest.raises(ValueError):
        solve_sign_assignment(CubicalSet(2, frozenset({"00", "11"})), 1)


@given(vertex_sets(), st.randoms(use_true_random=False))
def test_solver_and_comparison_by_substitution(nv, rng):
    S = inductive_closure(*nv)
    gamma = coboundary({e: rng.randint(0, 1) for e in S.edges}, S, 1)
    d1 = solve_sign_assignment(S, gamma)
    assert squares_of(S, d1) == gamma
    shift = coboundary({v: rng.randint(0, 1) for v in S.vertices}, S, 0)
    d2 = SignAssignment({e: (d1[e] + shift[e]) % 2 for e in S.edges})
    kappa = compare_assignments(S, d1, d2)
    dk = coboundary(kappa, S, 0)
    assert all(dk[e] == (d1[e] + d2[e]) % 2 for e in S.edges)


def test_solver_is_deterministic_and_lex_least():
    S = full_cube(2)
    d = solve_sign_assignment(S, 1)
    # the last edge in sorted order is the only one flipped
    assert [d[e] for e in S.edges] == [0, 0, 0, 1]
    order = list(reversed(S.edges))
    d = solve_sign_assignment(S, 1, order=order)
    assert [d[e] for e in order] == [0, 0, 0, 1]


def test_compare_examples():
    S = full_cube(2)
    d1 = solve_sign_assignment(S, 1)
    kappa = compare_assignments(S, d1, d1)
    assert all(v == 0 for v in coboundary(kappa, S, 0).values())
    # flipping the two edges at vertex 00 is the coboundary of its indicator
    d2 = SignAssignment(dict(d1.values))
    for e in ("0*", "*0"):
        d2.values[e] ^= 1
    kappa = compare_assignments(S, d1, d2)
    assert coboundary(kappa, S, 0) == coboundary({"00": 1}, S, 0)


def test_standard_cube_signs_examples():
    assert all(v == 0 for v in standard_cube_signs(1).values.values())
    d = standard_cube_signs(2)
    assert {e for e, v in d.values.items() if v} == {"1*"}
    for n in range(1, 6):
        cob = squares_of(full_cube(n), standard_cube_signs(n))
        assert all(v == 1 for v in cob.values())
    cob = squares_of(full_cube(3), standard_cube_signs(3, order=[2, 0, 1]))
    assert all(v == 1 for v in cob.values())


def test_graph_to_cube_examples():
    S, vmap = graph_to_cube(build_graph(2, 0))
    assert S == full_cube(1)
    S, vmap = graph_to_cube(build_graph(2, 1))
    assert "11" not in S.faces
    assert vmap[0] == "00"
    for total in range(1, 8):
        for m in range(total + 1):
            S, _ = graph_to_cube(build_graph(m, total - m))
            assert is_strong_inductive(S)
