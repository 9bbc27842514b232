import pytest
from hypothesis import given, settings

from bqsym import compositions as comp
from bqsym import oracle, qsym
from bqsym.oracle import OracleConsistencyError, OracleError, TruncatedPolynomial
from bqsym.qsym import monomial as M

from strategies import elements


def test_polynomial_arithmetic():
    v = oracle.alphabet(1)
    x0 = TruncatedPolynomial(v, {(1, 0): 1})
    x1 = TruncatedPolynomial(v, {(0, 1): 1})
    assert str((x0 + x1) ** 2) == "x0^2 + 2*x0*x1 + x1^2"
    assert (x0 - x0).is_zero()
    assert 3 * x0 == x0 + x0 + x0
    with pytest.raises(OracleError):
        x0 + TruncatedPolynomial(oracle.alphabet(2))
    with pytest.raises(OracleError):
        TruncatedPolynomial(v, {(1,): 1})


def test_expand_m():
    # M_{0,1} = x1 + x2 with two positive variables
    assert str(oracle.expand_m((0, 1), 2)) == "x1 + x2"
    assert str(oracle.expand_m((2,), 1)) == "x0^2"
    with pytest.raises(OracleError):
        oracle.expand_m((0, 1, 1), 1)


def test_expand_f_matches_conversion():
    for n in range(5):
        for a in comp.pseudo_compositions_of(n):
            assert oracle.expand_f(a, n) == oracle.expand_element(qsym.fundamental(a), n)


def test_truncation_separates_indices():
    n = 4
    seen = []
    for a in comp.pseudo_compositions_of(n):
        p = oracle.expand_m(a, n)
        assert all(not (p.terms.keys() & q.terms.keys()) for q in seen)
        seen.append(p)


@settings(max_examples=50)
@given(elements(max_degree=3), elements(max_degree=3))
def test_product_matches_polynomials(x, y):
    N = qsym.max_degree(x) + qsym.max_degree(y)
    assert oracle.expand_element(x * y, N) == oracle.expand_element(x, N) * oracle.expand_element(y, N)


@pytest.mark.parametrize("mode", ["b", "chow"])
@pytest.mark.parametrize("n", range(0, 5))
def test_coproduct_oracles(mode, n):
    op = qsym.COPRODUCTS[mode]
    for a in comp.pseudo_compositions_of(n):
        assert oracle.coproduct_oracle(M(a), n, mode) == op(M(a))


@pytest.mark.parametrize("n", range(0, 5))
def test_coproduct_oracle_type_a(n):
    for alpha in comp.compositions_of(n):
        a = comp.embed(alpha)
        assert oracle.coproduct_oracle(M(a), n, "a") == qsym.coproduct_a(M(a))


def test_chow_worked_example_from_polynomials():
    assert oracle.coproduct_oracle(M((1, 2)), mode="chow") == qsym.coproduct_chow(M((1, 2)))


def test_mode_a_rejects_type_b():
    with pytest.raises(OracleError):
        oracle.coproduct_oracle(M((1,)), 1, "a")


def test_read_off_rejects_non_quasisymmetric_input():
    # x2 on its own is not quasisymmetric in x1, x2
    v = oracle.doubled_alphabet(2)
    stray = TruncatedPolynomial(v, {(0, 0, 1, 0, 0, 0): 1})
    with pytest.raises(OracleConsistencyError):
        oracle.read_off_tensor(stray, 2)
