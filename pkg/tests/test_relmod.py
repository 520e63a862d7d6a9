import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dnlattice.group import IDENTITY, GroupElement, elements
from dnlattice.linalg import hnf_column_span, kernel_basis
from dnlattice.relmod import (
    FreeWord,
    GroupRingVector,
    evaluate,
    fox_derivative,
    fox_matrix,
    nu_matrix,
    relation_module,
    rewrite_conjugate,
    rewriting_matches_transcription,
    s,
    schreier_generators,
)

words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12).map(lambda xs: FreeWord(tuple(xs)))


def unit(g, n):
    return GroupRingVector.of(g, n)


def test_free_words_reduce_and_print():
    w = FreeWord((1, 2, -2, 1))
    assert w == s(1, 2)
    assert str(s(1) * s(2, -1)) == "s1 s2^-1"
    assert FreeWord.parse(str(w)) == w
    assert (w * w.inverse()) == FreeWord()


def test_fox_derivative_examples():
    n = 5
    assert fox_derivative(s(1), 1, n) == unit(IDENTITY, n)
    norm = sum((unit(GroupElement(i, 0), n) for i in range(1, n)), unit(IDENTITY, n))
    assert fox_derivative(s(1, n), 1, n) == norm
    assert fox_derivative(s(2, 2), 2, 3) == unit(IDENTITY, 3) + unit(GroupElement(0, 1), 3)


@settings(max_examples=300)
@given(st.integers(2, 7), words, words, st.sampled_from([1, 2]))
def test_fox_product_rule(n, u, v, gen):
    lhs = fox_derivative(u * v, gen, n)
    rhs = fox_derivative(u, gen, n) + unit(evaluate(u, n), n) * fox_derivative(v, gen, n)
    assert lhs == rhs


@settings(max_examples=300)
@given(st.integers(2, 7), words)
def test_fundamental_formula(n, w):
    one = unit(IDENTITY, n)
    total = (fox_derivative(w, 1, n) * (unit(GroupElement(1 % n, 0), n) - one)
             + fox_derivative(w, 2, n) * (unit(GroupElement(0, 1), n) - one))
    assert total == unit(evaluate(w, n), n) - one


@pytest.mark.parametrize("n", range(2, 9))
def test_relation_generators_lie_in_kernel(n):
    assert all(evaluate(w, n) == IDENTITY for w in schreier_generators(n).words())


def test_conjugation_formulas():
    n = 5
    basis_a, basis_b0, basis_c0 = 0, 1, n + 1
    e = lambda i: [1 if k == i else 0 for k in range(2 * n + 1)]
    assert rewrite_conjugate(n, basis_a, 1) == e(basis_a)
    assert rewrite_conjugate(n, n, 1) == e(basis_b0)  # b_{n-1} -> a b_0 a^-1
    assert rewrite_conjugate(n, basis_c0, 2) == e(basis_c0)


@pytest.mark.parametrize("n", range(2, 13))
def test_rewriting_reproduces_written_action(n):
    assert rewriting_matches_transcription(n)


@pytest.mark.parametrize("n", range(2, 11))
def test_fox_image_is_kernel_of_nu(n):
    f, v = fox_matrix(n), nu_matrix(n)
    assert (v @ f).is_zero()
    assert hnf_column_span(f) == hnf_column_span(kernel_basis(v))


def test_group_ring_arithmetic():
    n = 4
    t = unit(GroupElement(0, 1), n)
    assert (t * t) == unit(IDENTITY, n)
    assert (t - t).augmentation() == 0
    assert GroupRingVector.from_coeffs({GroupElement(1, 0): 3}, n).coeffs == {GroupElement(1, 0): 3}
    assert len(elements(n)) == len(GroupRingVector.zero(n).values)
    assert relation_module(n).basis[:2] == ("a", "b0")
