import pytest
from hypothesis import given, strategies as st

from bqsym import compositions as comp
from bqsym.compositions import CompositionError, DescentSet


def test_normalization():
    assert comp.as_pseudo([0]) == ()
    assert comp.as_pseudo([0, 2, 1]) == (0, 2, 1)
    with pytest.raises(CompositionError):
        comp.as_pseudo([1, 0])
    with pytest.raises(CompositionError):
        comp.as_pseudo([-1, 2])
    with pytest.raises(CompositionError):
        comp.as_composition([0, 1])


def test_split_join():
    assert comp.split_first((0, 2, 1)) == (0, (2, 1))
    assert comp.split_first(()) == (0, ())
    assert comp.join_first(0, ()) == ()
    assert comp.join_first(2, (1,)) == (2, 1)
    assert comp.embed((2, 1)) == (0, 2, 1)


def test_descent_sets():
    assert comp.descent_set((2, 1)).elements == frozenset({2})
    assert comp.descent_set((0, 2, 1)).elements == frozenset({0, 2})
    assert comp.from_descent_set(DescentSet(4, frozenset({0, 3}))) == (0, 3, 1)
    assert comp.from_descent_set({2}, 4) == (2, 2)


@pytest.mark.parametrize("n", range(0, 7))
def test_descent_set_bijection(n):
    seen = set()
    for a in comp.pseudo_compositions_of(n):
        s = comp.descent_set(a)
        assert comp.from_descent_set(s) == a
        seen.add(s.elements)
    assert len(seen) == len(comp.pseudo_compositions_of(n))


def test_refinement_order():
    assert comp.leq((3,), (1, 2))
    assert comp.leq((3,), (0, 3))
    assert not comp.leq((1, 2), (2, 1))
    assert sorted(comp.refinements((2,))) == [(0, 1, 1), (0, 2), (1, 1), (2,)]
    assert comp.refinements((2,), type_a=True) == [(1, 1), (2,)]
    assert sorted(comp.coarsenings((1, 1))) == [(1, 1), (2,)]


def test_star_hat():
    assert comp.star((2, 3, 1, 2)) == (2, 1, 2, 1, 1, 1)
    assert comp.hat((3, 1, 1, 3, 2, 1, 1, 1)) == (3, 5, 2, 3)
    assert comp.hat_b((1, 1, 3, 2, 1, 1, 3, 1)) == (1, 4, 2, 5, 1)
    assert comp.reverse((1, 2, 3)) == (3, 2, 1)
    assert comp.concatenate((1, 2), (3,)) == (1, 2, 3)


def test_peak_predicates():
    assert comp.is_peak_composition((3, 2))
    assert not comp.is_peak_composition((2, 1, 2))
    assert comp.is_peak_composition((1,))
    assert comp.is_peak_pseudo_composition((1, 2))
    assert comp.is_peak_pseudo_composition((0, 2))


@pytest.mark.parametrize("n", range(0, 11))
def test_counts(n):
    assert len(comp.compositions_of(n)) == (2 ** (n - 1) if n else 1)
    assert len(comp.pseudo_compositions_of(n)) == 2 ** n
    assert len(comp.peak_pseudo_compositions_of(n)) == comp.fibonacci(n + 1)
    if n:
        assert len(comp.peak_compositions_of(n)) == comp.fibonacci(n - 1)


def test_fibonacci():
    assert [comp.fibonacci(i) for i in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]


pseudo = st.integers(0, 7).flatmap(lambda n: st.sampled_from(comp.pseudo_compositions_of(n)))


@given(pseudo)
def test_hat_lands_in_peaks(a):
    assert comp.is_peak_pseudo_composition(comp.hat_b(a))
    assert sum(comp.hat_b(a)) == sum(a)
    assert comp.hat_b(comp.hat_b(a)) == comp.hat_b(a)


@given(pseudo)
def test_refinements_are_above(a):
    for b in comp.refinements(a):
        assert comp.leq(a, b)
    for b in comp.coarsenings(a):
        assert comp.leq(b, a)
