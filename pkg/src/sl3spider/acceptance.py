"""The nine acceptance criteria as runnable checks.

Every criterion returns a :class:`CriterionResult` listing the individual
cases that failed.  Equalities are exact ring identities; runtime budgets
are part of each criterion.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import corpus
from .cube_signs import (CubicalSet, SignAssignment, boundary, coboundary, compare_assignments,
                         consistent_closure, face_dim, homology_f2, inductive_closure, is_consistent,
                         is_strong_inductive, solve_sign_assignment, standard_cube_signs)
from .foam_algebra import (ONE, X, FrobElement, closed_surface_eval, comult, counit, digon_identity_scalar,
                           dot_power, handle_element, mult, sphere_eval, tensor_mult, theta_eval,
                           tube_identity_scalar)
from .invariant import (bracket, colored_euler_characteristic, colored_invariant, euler_characteristic,
                        framing_factor, theorem_phase)
from .rep_ring import V, explicit_formula_rhs, qdim
from .resolution import (build_precomplex, check_highest_weight, check_maps, check_sign_independence,
                         cohomology_ranks_at, to_complex, verify_commuting_squares, verify_d_squared)
from .scalar_rings import RingElement, qint
from .tangle_diagram import from_braid
from .uq_modules import check_module, check_morphism, duality_relations, elementary_morphism, fundamental, tensor_word
from .web import circle, evaluate, theta

__all__ = ["CriterionResult", "CRITERIA", "run_criterion", "run_all", "THEOREM_CASES"]


@dataclass
class CriterionResult:
    number: int
    title: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    budget: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures and self.seconds < self.budget

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = ""
        if self.failures:
            extra = f"; failed: {', '.join(self.failures[:4])}"
            if len(self.failures) > 4:
                extra += f" (+{len(self.failures) - 4} more)"
        if self.seconds >= self.budget:
            extra += f"; over budget {self.budget:g}s"
        return (f"criterion {self.number} [{status}] {self.title}: "
                f"{self.checked} checks, {self.seconds:.2f}s{extra}")


class _Recorder:
    def __init__(self, result: CriterionResult):
        self.result = result

    def check(self, ok: bool, label: str) -> None:
        self.result.checked += 1
        if not ok:
            self.result.failures.append(label)


# --- 1: web calculus ---------------------------------------------------------------

def _criterion_1(r: _Recorder) -> None:
    webs = corpus.webs()
    r.check(len(webs) >= 30, f"corpus has {len(webs)} webs")
    for name, w in webs.items():
        r.check(len(w.vertices) <= 12, f"{name} size")
        val = evaluate(w)
        r.check(val.is_laurent() and val.is_palindromic() and val.has_nonnegative_coefficients(), name)
        r.check(evaluate(w, strategy="random", seed=7) == val, f"{name} strategies")
    r.check(evaluate(circle()) == qint(3), "circle")
    r.check(evaluate(theta()) == qint(2) * qint(3), "theta")


# --- 2: Reidemeister moves ---------------------------------------------------------

def _criterion_2(r: _Recorder) -> None:
    moves = corpus.move_pairs()
    kinds = [m["move"] for m in moves]
    r.check(kinds.count("R2") >= 5 and kinds.count("R3") >= 3, "move pair counts")
    u = {1: framing_factor(1), -1: framing_factor(-1)}
    for sign in (1, -1):
        r.check(u[sign].is_monomial(), f"u{sign:+d} is a monomial")
    r.check(u[1] * u[-1] == RingElement.from_int(1), "u+ u- = 1")
    r.check(bracket(corpus.load_corpus_diagram("kinks_opposite")) == qint(3), "opposite kinks")
    for mv in moves:
        a = bracket(corpus.load_corpus_diagram(mv["left"]))
        b = bracket(corpus.load_corpus_diagram(mv["right"]))
        want = b if mv["move"] != "R1" else u[mv["kink"]] * b
        r.check(a == want, f"{mv['move']} {mv['left']}~{mv['right']}")


# --- 3: hypercube versus skein -------------------------------------------------------

def _criterion_3(r: _Recorder) -> None:
    for name, D in corpus.diagrams().items():
        if len(D.crossings()) > 12:
            continue
        r.check(euler_characteristic(D) == bracket(D), name)


# --- 4: colored unknot and the explicit formula ------------------------------------

def _criterion_4(r: _Recorder) -> None:
    unknot = from_braid(1, [])
    for m in range(6):
        for n in range(6 - m):
            r.check(colored_invariant(unknot, [(m, n)]) == qdim(V(m, n)), f"unknot ({m},{n})")
    for m in range(7):
        for n in range(7):
            r.check(explicit_formula_rhs(m, n) == V(m, n), f"formula ({m},{n})")


# --- 5: the colored Euler characteristic identity ----------------------------------

THEOREM_CASES = [
    ("unknot", (1, 1)), ("unknot", (2, 0)), ("unknot", (2, 1)),
    ("kink_pos", (1, 1)), ("kink_pos", (2, 0)),
    ("trefoil", (2, 0)), ("trefoil", (1, 1)),
]


def theorem_case(name: str, color: tuple[int, int]) -> tuple[RingElement, RingElement, RingElement]:
    """(chi, phase, invariant) for one diagram and one color."""
    D = corpus.load_corpus_diagram(name)
    chi = colored_euler_characteristic(D, [color], cap=12)
    return chi, theorem_phase(D, [color]), colored_invariant(D, [color])


def _criterion_5(r: _Recorder) -> None:
    for name, color in THEOREM_CASES:
        chi, phase, inv = theorem_case(name, color)
        r.check(chi == phase * inv, f"{name} {color}")


# --- 6: resolution complexes ---------------------------------------------------------

def _criterion_6(r: _Recorder) -> None:
    s0 = Fraction(7, 5)
    for total in range(1, 6):
        for m in range(total + 1):
            n = total - m
            tag = f"({m},{n})"
            pc = build_precomplex(m, n)
            r.check(not check_maps(pc), f"{tag} maps")
            r.check(verify_commuting_squares(pc) is None, f"{tag} squares")
            c = to_complex(pc, check=False)
            r.check(verify_d_squared(c), f"{tag} d^2")
            rep = cohomology_ranks_at(c, s0)
            want = [(m + 1) * (n + 1) * (m + n + 2) // 2] + [0] * (c.length - 1)
            r.check(rep.certified and rep.cohomology == want, f"{tag} cohomology")
            r.check(all(check_highest_weight(c).values()), f"{tag} highest weight")
            r.check(bool(check_sign_independence(pc)["isomorphic"]), f"{tag} kappa")


# --- 7: cubical sets -----------------------------------------------------------------

def _random_vertices(rng: random.Random, n: int) -> list[str]:
    k = rng.randint(1, 2 ** n)
    return ["".join(rng.choice("01") for _ in range(n)) for _ in range(k)]


def _delta_squares(S: CubicalSet, delta: SignAssignment) -> dict[str, int]:
    return coboundary(delta.values, S, 1)


def _criterion_7(r: _Recorder) -> None:
    rng = random.Random(0)
    for t in range(100):
        n = rng.randint(1, 6)
        S = consistent_closure(n, _random_vertices(rng, n))
        ok = is_consistent(S)
        for f in S.faces:
            parity: dict[str, int] = {}
            for g in boundary(f, S):
                ok = ok and g in S.faces
                for h in boundary(g):
                    parity[h] = parity.get(h, 0) ^ 1
            ok = ok and not any(parity.values())
        r.check(ok, f"d^2 on consistent set {t}")
    for t in range(50):
        n = rng.randint(1, 6)
        S = inductive_closure(n, _random_vertices(rng, n))
        r.check(is_strong_inductive(S), f"strong-inductive {t}")
        hom = homology_f2(S)
        r.check(hom == [1] + [0] * (len(hom) - 1), f"homology {t}")
        # gamma = 1 and a random cocycle (the coboundary of a random edge function)
        gammas = [{s: 1 for s in S.squares},
                  coboundary({e: rng.randint(0, 1) for e in S.edges}, S, 1)]
        for k, gamma in enumerate(gammas):
            d1 = solve_sign_assignment(S, gamma)
            r.check(_delta_squares(S, d1) == gamma, f"solve {t}/{k}")
            pot = {v: rng.randint(0, 1) for v in S.vertices}
            shift = coboundary(pot, S, 0)
            d2 = SignAssignment({e: (d1[e] + shift[e]) % 2 for e in S.edges})
            r.check(_delta_squares(S, d2) == gamma, f"shifted {t}/{k}")
            kappa = compare_assignments(S, d1, d2)
            dk = coboundary(kappa, S, 0)
            r.check(all(dk[e] == (d1[e] + d2[e]) % 2 for e in S.edges), f"kappa {t}/{k}")
    for n in range(1, 6):
        full = inductive_closure(n, ["1" * n])
        cob = _delta_squares(full, standard_cube_signs(n))
        r.check(all(v == 1 for v in cob.values()) and len(cob) == len(full.squares), f"standard signs n={n}")
        r.check(all(face_dim(s) == 2 for s in cob), f"squares n={n}")


# --- 8: Uq(sl3) layer ----------------------------------------------------------------

def _criterion_8(r: _Recorder) -> None:
    for sign in "+-":
        r.check(not check_module(fundamental(sign)), f"V{sign}")
    for kind in ("b-+", "b+-", "d-+", "d+-", "h++-", "h--+"):
        r.check(check_morphism(elementary_morphism(kind)) is None, kind)
    for name, ok in duality_relations().items():
        r.check(ok, name)
    for k in range(5):
        for w in itertools.product("+-", repeat=k):
            r.check(not check_module(tensor_word("".join(w))), "".join(w) or "empty")


# --- 9: foam algebra ---------------------------------------------------------------

def _criterion_9(r: _Recorder) -> None:
    r.check([sphere_eval(k) for k in range(5)] == [0, 0, 1, 0, 0], "sphere table")
    theta_table = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1,
                   (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}
    for k, l, m in itertools.product(range(4), repeat=3):
        r.check(theta_eval(k, l, m) == theta_table.get((k, l, m), 0), f"theta {k}{l}{m}")
    r.check(closed_surface_eval(1, 0) == 3, "torus")
    r.check(tube_identity_scalar() == 3, "tube scalar")
    r.check(digon_identity_scalar() == 2, "digon scalar")
    basis = [ONE, X, mult(X, X)]
    for a in basis:
        cut = comult(a)
        left = sum((dot_power(j).scale(c * counit(dot_power(i))) for (i, j), c in cut.items()), FrobElement())
        right = sum((dot_power(i).scale(c * counit(dot_power(j))) for (i, j), c in cut.items()), FrobElement())
        r.check(left == a and right == a, f"counit axiom {a.coeffs}")
        for b in basis:
            for c in basis:
                r.check(mult(mult(a, b), c) == mult(a, mult(b, c)), "associativity")
        r.check(tensor_mult(cut) == mult(handle_element(), a), f"handle {a.coeffs}")
    for g in range(4):
        for d in range(4):
            h = ONE
            for _ in range(g):
                h = mult(h, handle_element())
            for _ in range(d):
                h = mult(h, X)
            r.check(closed_surface_eval(g, d) == counit(h), f"surface ({g},{d})")


CRITERIA: list[tuple[int, str, float, Callable[[_Recorder], None]]] = [
    (1, "web calculus", 1.0, _criterion_1),
    (2, "Reidemeister invariance and framing", 10.0, _criterion_2),
    (3, "hypercube Euler characteristic equals bracket", 120.0, _criterion_3),
    (4, "colored unknot and explicit formula", 60.0, _criterion_4),
    (5, "colored Euler characteristic identity", 600.0, _criterion_5),
    (6, "resolution exactness", 300.0, _criterion_6),
    (7, "cubical sets and sign assignments", 30.0, _criterion_7),
    (8, "Uq(sl3) modules and morphisms", 30.0, _criterion_8),
    (9, "foam algebra", 1.0, _criterion_9),
]


def run_criterion(number: int) -> CriterionResult:
    for k, title, budget, fn in CRITERIA:
        if k == number:
            res = CriterionResult(k, title, budget=budget)
            start = time.perf_counter()
            fn(_Recorder(res))
            res.seconds = time.perf_counter() - start
            return res
    raise KeyError(number)


def run_all(echo: Callable[[str], None] | None = None) -> list[CriterionResult]:
    out = []
    for k, *_ in CRITERIA:
        res = run_criterion(k)
        if echo is not None:
            echo(res.line())
        out.append(res)
    return out
