import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dnlattice import witnesses as W
from dnlattice.lattices import m_minus, m_plus, mtilde_plus, triv, triv_minus
from dnlattice.linalg import IntMatrix, det
from dnlattice.relmod import relation_module

# printed matrices, frozen verbatim
T_PLUS_3 = [[1, 1, 1, 1, 1], [1, 1, 1, 2, 1], [1, 1, 0, 1, 1], [0, 1, 1, 1, 1], [1, 0, 1, 1, 1]]
T_MINUS_3 = [
    [0, 0, 1, 1, 0, 0, 1],
    [1, 0, 0, 1, 1, 0, 0],
    [0, 1, 0, 1, 0, 1, 0],
    [0, 0, -1, 0, 0, 1, 0],
    [-1, 0, 0, 0, 0, 0, 1],
    [0, -1, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 1, 1, 1],
]
Q_3 = [
    [1, 0, 0, 0, 1, 0, 1, 1],
    [0, 1, 0, 0, 1, 1, 0, 1],
    [0, 0, 1, 0, 0, 1, 1, 1],
    [0, 1, 0, 1, 0, -1, -1, -1],
    [0, 0, 1, 1, -1, 0, -1, -1],
    [1, 0, 0, 1, -1, -1, 0, -1],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 2, -1, -1, -1, -2],
]
Q_5 = [
    [1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1],
    [1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1],
    [0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1],
    [0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 1],
    [0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1],
    [0, 1, 1, 0, 0, 2, 0, -1, -1, -1, 0, -2],
    [0, 0, 1, 1, 0, 2, 0, 0, -1, -1, -1, -2],
    [0, 0, 0, 1, 1, 2, -1, 0, 0, -1, -1, -2],
    [1, 0, 0, 0, 1, 2, -1, -1, 0, 0, -1, -2],
    [1, 1, 0, 0, 0, 2, -1, -1, -1, 0, 0, -2],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 4, -1, -1, -1, -1, -1, -4],
]
P_3 = [[1, 0, 1, 0], [0, 1, 0, 1], [-1, -1, 0, -1], [1, 0, 1, 1]]
P_5 = [
    [1, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 1],
    [-1, -1, -1, -1, 0, -1, 0, 0],
    [1, 0, 0, 0, 0, 0, -1, 0],
    [0, 1, 0, 0, 0, 0, 0, -1],
    [0, 0, 1, 0, 1, 1, 1, 1],
]
C_5 = [
    [0, 0, 0, 1, -1],
    [0, 0, 1, -1, 0],
    [0, 1, -1, 0, 0],
    [1, -1, 0, 0, 0],
    [-1, 0, 0, 0, 1],
]


def printed_order(n):
    q = W.mtilde_sum_permutation(n).map.mat
    return q.submatrix(range(q.rows), W.rotated_column_order(n))


def test_printed_matrices():
    assert W.stably_permutation_plus(3).map.mat.to_rows() == T_PLUS_3
    assert W.stably_permutation_minus(3).map.mat.to_rows() == T_MINUS_3
    assert printed_order(3).to_rows() == Q_3
    assert printed_order(5).to_rows() == Q_5
    assert W.group_ring_kernel_matrix(3).to_rows() == P_3
    assert W.group_ring_kernel_matrix(5).to_rows() == P_5
    _, tau = W.expected_reordered_action(5)
    assert tau.submatrix(range(5, 10), range(5)).to_rows() == C_5


@pytest.mark.parametrize("n", range(3, 26, 2))
def test_isomorphism_witnesses(n):
    for build, expected in ((W.stably_permutation_plus, 1), (W.mtilde_sum_permutation, -1),
                            (W.relation_module_decomposition, -1)):
        w = build(n)
        assert W.verify_iso(w)
        assert w.det == expected
    assert W.verify_iso(W.stably_permutation_minus(n))
    assert W.verify_iso(W.relation_module_stably_permutation(n))


def test_verify_rejects_non_maps():
    bad = W.LatticeMap(m_plus(3), m_minus(3), IntMatrix.identity(3))
    assert not W.verify_equivariant(bad)
    doubled = W.LatticeMap(triv(3), triv(3), IntMatrix.from_rows([[2]]))
    assert W.verify_equivariant(doubled) and not W.verify_iso(doubled)
    ident = W.LatticeMap(relation_module(3), relation_module(3), IntMatrix.identity(7))
    assert W.verify_iso(ident)
    with pytest.raises(ValueError):
        W.LatticeMap(triv(3), m_plus(3), IntMatrix.identity(1))


def test_conjugated_relation_action():
    for n in (3, 5, 7):
        assert W.reordered_relation_action(n) == W.expected_reordered_action(n)


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_nonsplit_sequences(n):
    seqs = [*W.norm_quotient_sequences(n), *W.mtilde_sequences(n), W.group_ring_sequence(n)]
    for s in seqs:
        assert W.verify_ses(s)
        assert not W.has_section(s)
    split = W.relation_module_sequence(n)
    assert W.verify_ses(split)
    x = W.find_section(split)
    assert x is not None
    assert split.surj.mat @ x == IntMatrix.identity(split.right.rank)
    assert W.verify_equivariant(W.LatticeMap(split.right, split.middle, x))


@pytest.mark.parametrize("n", range(2, 11))
def test_fox_sequence(n):
    assert W.verify_ses(W.fox_sequence(n))


@pytest.mark.parametrize("n", range(3, 16, 2))
def test_augmentation_ideal_splitting(n):
    iso, s1, s2 = W.augmentation_ideal_splitting(n)
    assert W.verify_iso(iso)
    assert W.verify_ses(s1) and W.verify_ses(s2)
    assert W.verify_ses(W.free_pair_sequence(n))


def test_ses_failure_messages():
    s = W.split_sequence(triv(3), triv_minus(3))
    assert W.ses_failure(s) is None and W.has_section(s)
    broken = W.ShortExactSequence(
        W.LatticeMap(triv(3), s.middle, IntMatrix.from_rows([[2], [0]])), s.surj)
    assert W.ses_failure(broken) == "image of the injection is not the kernel of the surjection"


def _sequence_pool():
    pool = [W.split_sequence(triv(3), triv_minus(3)), W.split_sequence(m_plus(3), mtilde_plus(3))]
    pool += list(W.norm_quotient_sequences(3)) + list(W.mtilde_sequences(3))
    return pool


@settings(max_examples=25)
@given(st.sampled_from(range(6)), st.sampled_from(range(6)))
def test_section_existence_is_additive(i, j):
    pool = _sequence_pool()
    s, t = pool[i], pool[j]
    assert W.has_section(W.sum_of_sequences(s, t)) == (W.has_section(s) and W.has_section(t))


@pytest.mark.parametrize("n", [2, 3])
def test_schanuel_consistency(n):
    rep = W.schanuel_consistency(n)
    assert rep.consistent and rep.left_rank == rep.right_rank


def test_composition():
    w = W.relation_module_decomposition(5).map
    ident = W.LatticeMap(w.dst, w.dst, IntMatrix.identity(w.dst.rank))
    assert w.then(ident) == w
    assert det(W.relation_module_stably_permutation(5).map.mat) in (1, -1)
