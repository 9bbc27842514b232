import pytest
from hypothesis import given, settings

from bqsym import compositions as comp
from bqsym import peak, qsym
from bqsym.qsym import NotTypeAError, fundamental as F, monomial as M

from strategies import elements, type_a_indices


def test_small_k_functions():
    assert peak.k_function(()) == qsym.one()
    assert peak.k_function((1,)) == M((1,)) + 2 * M((0, 1))
    assert peak.k_function((1,), "A") == 2 * M((0, 1))
    assert peak.k_function((0, 1)) == 2 * M((0, 1))


def test_k_type_a_embedding_only_at_peaks():
    assert peak.k_function((0, 3)) == peak.k_function((3,), "A")
    # (1,1) is not a peak composition; the two formulas part ways there
    assert peak.k_function((0, 1, 1)) != peak.k_function((1, 1), "A")


@pytest.mark.parametrize("n", range(0, 6))
def test_set_form(n):
    for a in comp.peak_pseudo_compositions_of(n):
        assert peak.k_function_set_form(comp.descent_set(a), flavor="B") == peak.k_function(a)
    for a in comp.peak_compositions_of(n):
        assert peak.k_function_set_form(comp.descent_set(a), flavor="A") == peak.k_function(a, "A")


def test_invalid_peak_sets():
    assert peak.is_valid_peak_set({2}, 4, "A")
    assert not peak.is_valid_peak_set({1}, 4, "A")
    assert not peak.is_valid_peak_set({2, 3}, 4, "B")
    with pytest.raises(ValueError):
        peak.k_function_set_form({2, 3}, 4)


@pytest.mark.parametrize("n", range(0, 6))
def test_k_in_f_positive(n):
    for flavor in ("A", "B"):
        for a in peak.peak_indices(n, flavor):
            assert all(c > 0 for _, c in peak.k_in_f(a, flavor).items())


def test_ranks():
    assert [peak.k_basis_rank(n, "A") for n in range(8)] == [1, 1, 1, 2, 3, 5, 8, 13]
    assert [peak.k_basis_rank(n, "B") for n in range(8)] == [1, 2, 3, 5, 8, 13, 21, 34]
    assert [peak.theta_image_rank(n, "B") for n in range(6)] == [1, 2, 3, 5, 8, 13]


def test_integer_rank():
    assert peak.integer_rank([]) == 0
    assert peak.integer_rank([[1, 2], [2, 4]]) == 1
    assert peak.integer_rank([[0, 1, 0], [1, 0, 0], [1, 1, 0]]) == 2


def test_theta_worked():
    assert peak.theta_b(M((1,))) == M((1,))
    assert peak.theta_b(F((2, 1)), basis="K") == qsym.peak_element((2, 1))
    assert peak.theta(F((0, 1, 1))) == peak.k_function((2,), "A")
    with pytest.raises(NotTypeAError):
        peak.theta(M((1,)))


@pytest.mark.parametrize("n", range(0, 5))
def test_theta_b_projects_onto_k(n):
    for a in comp.pseudo_compositions_of(n):
        assert peak.theta_b(F(a)) == peak.k_function(comp.hat_b(a))


def test_k_shuffle_small():
    for n in range(4):
        for k in range(n + 1):
            for a in comp.peak_pseudo_compositions_of(k):
                for b in comp.peak_pseudo_compositions_of(n - k):
                    assert peak.k_multiply_check(a, b, "B")


@settings(max_examples=40)
@given(elements(max_degree=3), elements(max_degree=2))
def test_theta_b_ring_hom(x, y):
    assert peak.theta_b(x * y) == peak.theta_b(x) * peak.theta_b(y)


@settings(max_examples=40)
@given(elements(max_degree=3))
def test_theta_b_coalgebra_hom(x):
    lhs = qsym.apply_factor(qsym.apply_factor(qsym.coproduct_b(x), 0, peak.theta_b), 1, peak.theta_b)
    assert lhs == qsym.coproduct_b(peak.theta_b(x))


@settings(max_examples=40)
@given(elements(indices=type_a_indices(4)))
def test_theta_restriction(x):
    assert peak.theta_b(x) == peak.theta(x)
