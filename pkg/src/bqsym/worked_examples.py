"""Golden values for the hand-worked examples of type A/B QSym and peak functions."""

from __future__ import annotations

from typing import Callable

from . import compositions as comp
from . import permutations as perm
from .qsym import TensorElement, fundamental, monomial, to_monomial

M, F = monomial, fundamental


def _t(*terms) -> TensorElement:
    """``_t((c, left, right), ...)`` with index tuples for each factor."""
    return TensorElement({(("M", l), ("M", r)): c for c, l, r in terms})


F21_TYPE_A = M((0, 2, 1)) + M((0, 1, 1, 1))
F21_TYPE_B = M((2, 1)) + M((0, 2, 1)) + M((1, 1, 1)) + M((0, 1, 1, 1))

DELTA_A_M21 = _t((1, (0, 2, 1), ()), (1, (0, 2), (0, 1)), (1, (), (0, 2, 1)))

CHOW_M12 = _t((1, (1, 2), ()), (1, (1,), (0, 2)), (1, (), (0, 1, 2)))

DELTA_B_M121 = _t(
    (1, (1, 2, 1), ()),
    (1, (0, 2, 1), (1,)),
    (1, (1, 2), (0, 1)),
    (1, (0, 2), (1, 1)),
    (1, (1,), (0, 2, 1)),
    (1, (), (1, 2, 1)),
)

DELTA_B_M211 = _t(
    (1, (2, 1, 1), ()),
    (2, (1, 1, 1), (1,)),
    (1, (0, 1, 1), (2,)),
    (1, (2, 1), (0, 1)),
    (2, (1, 1), (1, 1)),
    (1, (0, 1), (2, 1)),
    (1, (2,), (0, 1, 1)),
    (2, (1,), (1, 1, 1)),
    (1, (), (2, 1, 1)),
)

# (permutation, statistic name, expected)
PERMUTATION_STATISTICS = [
    ((3, 4, 5, 2, 6, 1), "descent_composition", (3, 2, 1)),
    ((3, 4, 5, 2, 6, 1), "descent_set", {3, 5}),
    ((3, 2, 7, 5, 4, 1, 8, 6), "peak_set", {3, 7}),
    ((3, 2, 7, 5, 4, 1, 8, 6), "peak_composition", (3, 4, 1)),
    ((1, 3, -2, 4), "descent_composition", (2, 2)),
    ((1, 3, -2, 4), "descent_set_b", {2}),
    ((-3, -2, 4, 1), "descent_composition", (0, 3, 1)),
    ((-3, -2, 4, 1), "descent_set_b", {0, 3}),
    ((-3, 2, -4, 5, 1), "peak_set_b", {0, 2, 4}),
    ((-3, 2, -4, 5, 1), "peak_composition_b", (0, 2, 2, 1)),
    ((3, -2, -1, 5, 4), "peak_set_b", {1, 4}),
    ((3, -2, -1, 5, 4), "peak_composition_b", (1, 3, 1)),
]

_STATS: dict[str, Callable] = {
    "descent_composition": perm.descent_composition,
    "descent_set": lambda p: set(perm.descent_set_a(p)),
    "descent_set_b": lambda p: set(perm.descent_set_b(p)),
    "peak_set": lambda p: set(perm.peak_set(p)),
    "peak_set_b": lambda p: set(perm.peak_set_b(p)),
    "peak_composition": perm.peak_composition,
    "peak_composition_b": perm.peak_composition_b,
}


def cases(kernel) -> list[tuple[str, Callable[[], bool]]]:
    """Named zero-argument predicates, one per worked example."""
    out = [
        ("F21 type A in M", lambda: to_monomial(F((0, 2, 1))) == F21_TYPE_A),
        ("F21 type B in M", lambda: to_monomial(F((2, 1))) == F21_TYPE_B),
        ("Delta(M21) type A", lambda: kernel.coproduct_a(M((0, 2, 1))) == DELTA_A_M21),
        ("Delta'(M12)", lambda: kernel.coproduct_chow(M((1, 2))) == CHOW_M12),
        ("Delta(M121)", lambda: kernel.coproduct_b(M((1, 2, 1))) == DELTA_B_M121),
        ("Delta(M211)", lambda: kernel.coproduct_b(M((2, 1, 1))) == DELTA_B_M211),
        ("star(2,3,1,2)", lambda: comp.star((2, 3, 1, 2)) == (2, 1, 2, 1, 1, 1)),
        ("hat(3,1,1,3,2,1,1,1)", lambda: comp.hat((3, 1, 1, 3, 2, 1, 1, 1)) == (3, 5, 2, 3)),
        ("hat_b(1,1,3,2,1,1,3,1)", lambda: comp.hat_b((1, 1, 3, 2, 1, 1, 3, 1)) == (1, 4, 2, 5, 1)),
        ("Theta_B(M1) = M1", lambda: kernel.theta_b(M((1,))) == M((1,))),
    ]
    for p, stat, want in PERMUTATION_STATISTICS:
        out.append((f"{stat}{p}", lambda p=p, stat=stat, want=want: _STATS[stat](p) == want))
    return out


def check_worked_examples(kernel, sweep) -> None:
    for name, predicate in cases(kernel):
        sweep.expect(predicate(), lambda name=name: name)
