import math

import pytest

from bqsym import compositions as comp
from bqsym import permutations as perm
from bqsym.worked_examples import PERMUTATION_STATISTICS, cases
from bqsym.verify import DEFAULT_KERNEL


STATS = {
    "descent_composition": perm.descent_composition,
    "descent_set": lambda p: set(perm.descent_set_a(p)),
    "descent_set_b": lambda p: set(perm.descent_set_b(p)),
    "peak_set": lambda p: set(perm.peak_set(p)),
    "peak_set_b": lambda p: set(perm.peak_set_b(p)),
    "peak_composition": perm.peak_composition,
    "peak_composition_b": perm.peak_composition_b,
}


@pytest.mark.parametrize("p,stat,want", PERMUTATION_STATISTICS)
def test_worked_statistics(p, stat, want):
    assert STATS[stat](p) == want


def test_parse_and_validate():
    assert perm.parse_permutation("(-3,2,-4,5,1)") == (-3, 2, -4, 5, 1)
    assert perm.parse_permutation("3 1 2") == (3, 1, 2)
    with pytest.raises(ValueError):
        perm.signed_permutation((1, -1))
    # words on any ground set are allowed; shuffles need them
    assert perm.ground_set(perm.signed_permutation((1, -3))) == {1, 3}


def test_group_sizes():
    assert sum(1 for _ in perm.permutations_of(4)) == 24
    assert sum(1 for _ in perm.signed_permutations_of(3)) == 2 ** 3 * 6


def test_shuffles():
    sh = perm.shuffles((1, 2), (3,))
    assert sorted(sh) == [(1, 2, 3), (1, 3, 2), (3, 1, 2)]
    assert len(perm.shuffles((1, -2), (4, -3, 5))) == math.comb(5, 2)
    with pytest.raises(ValueError):
        perm.shuffles((1, 2), (-2,))


@pytest.mark.parametrize("n", range(0, 5))
def test_representatives_have_the_right_descents(n):
    for a in comp.pseudo_compositions_of(n):
        assert perm.descent_composition(perm.representative(a)) == a


@pytest.mark.parametrize("n", range(1, 5))
def test_descent_classes_partition(n):
    total = sum(len(perm.descent_class(a)) for a in comp.pseudo_compositions_of(n))
    assert total == 2 ** n * math.factorial(n)


@pytest.mark.parametrize("n", range(0, 6))
def test_hat_commutes_with_statistics(n):
    for p in perm.signed_permutations_of(n):
        assert comp.hat_b(perm.descent_composition(p)) == perm.peak_composition_b(p)


def test_worked_examples_all_pass():
    failures = [name for name, pred in cases(DEFAULT_KERNEL) if not pred()]
    assert failures == []
