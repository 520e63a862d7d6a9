import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors

from dnlattice.linalg import (
    AbelianInvariants,
    DimensionError,
    IntMatrix,
    block_diag,
    circulant,
    circulant_identities,
    cokernel_invariants,
    det,
    hnf_column_span,
    hstack,
    inverse_unimodular,
    is_unimodular,
    kernel_basis,
    kron,
    permutation_matrix,
    rank,
    snf,
    solve_integer,
    vstack,
)
from strategies import int_matrices, square_matrices

RANDOM_CASES = 1000


def to_sympy(a: IntMatrix) -> sympy.Matrix:
    return sympy.Matrix(a.rows, a.cols, list(a.entries))


# construction --------------------------------------------------------------

def test_from_rows_rejects_ragged_and_non_integers():
    with pytest.raises(DimensionError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(TypeError):
        IntMatrix.from_rows([[1.5]])
    with pytest.raises(TypeError):
        IntMatrix.from_rows([[True]])


def test_arithmetic_and_stacking():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.identity(2)
    assert (a @ b) == a
    assert (a + b).to_rows() == [[2, 2], [3, 5]]
    assert (a - a).is_zero()
    assert a.T.to_rows() == [[1, 3], [2, 4]]
    assert (a ** 2) == a @ a
    assert hstack(a, b).shape == (2, 4)
    assert vstack(a, b).shape == (4, 2)
    assert block_diag(a, IntMatrix.from_rows([[5]])).to_rows() == [[1, 2, 0], [3, 4, 0], [0, 0, 5]]
    assert kron(b, a) == block_diag(a, a)


def test_permutation_matrix_sends_basis_vectors_to_images():
    p = permutation_matrix([2, 0, 1])
    assert p.col(0) == (0, 0, 1)
    assert p.col(1) == (1, 0, 0)
    with pytest.raises(ValueError):
        permutation_matrix([0, 0])


def test_abelian_invariants_text_round_trip():
    g = AbelianInvariants((2, 4), 1)
    assert str(g) == "Z + Z/2 + Z/4"
    assert AbelianInvariants.parse(str(g)) == g
    assert str(AbelianInvariants()) == "0"
    with pytest.raises(ValueError):
        AbelianInvariants((4, 2))


# determinant ---------------------------------------------------------------

@settings(max_examples=RANDOM_CASES)
@given(square_matrices(max_size=6, bound=20))
def test_det_matches_sympy(a):
    assert det(a) == to_sympy(a).det(method="bareiss")


def test_det_large_entries_exact():
    big = 10 ** 30
    a = IntMatrix.from_rows([[big, 1], [1, big]])
    assert det(a) == big * big - 1


def test_circulant_layout_and_identities():
    assert circulant([1, 2, 3]).to_rows() == [[1, 3, 2], [2, 1, 3], [3, 2, 1]]
    for n in range(3, 20, 2):
        assert circulant_identities(n) == (True, True)


# Smith form ----------------------------------------------------------------

@settings(max_examples=RANDOM_CASES)
@given(int_matrices(min_rows=1, min_cols=1))
def test_snf_is_a_valid_decomposition(a):
    res = snf(a)
    assert res.u @ a @ res.v == res.d
    assert is_unimodular(res.u) and is_unimodular(res.v)
    diag = res.diagonal
    for i in range(a.rows):
        for j in range(a.cols):
            if i != j:
                assert res.d[i, j] == 0
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    assert diag[:len(nonzero)] == nonzero
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0


@settings(max_examples=RANDOM_CASES)
@given(int_matrices(min_rows=1, min_cols=1))
def test_snf_invariants_match_sympy(a):
    ours = [x for x in snf(a).diagonal if x]
    theirs = [abs(int(x)) for x in invariant_factors(to_sympy(a), domain=sympy.ZZ) if x]
    assert ours == theirs


# Hermite form, kernels, solving ---------------------------------------------

@settings(max_examples=RANDOM_CASES)
@given(int_matrices(min_rows=1, min_cols=1))
def test_hnf_span_is_canonical(a):
    h = hnf_column_span(a)
    assert h.cols == rank(a) == to_sympy(a).rank()
    # same span: each generates the other
    assert solve_integer(h, a) is not None
    assert h.cols == 0 or solve_integer(a, h) is not None
    # invariance under a unimodular column change
    shuffled = a @ snf(a).v if a.cols else a
    assert hnf_column_span(shuffled) == h


@settings(max_examples=300)
@given(int_matrices(min_rows=1, min_cols=1))
def test_kernel_basis_is_saturated(a):
    k = kernel_basis(a)
    assert k.rows == a.cols
    assert (a @ k).is_zero()
    assert k.cols == a.cols - rank(a)
    if k.cols:
        # a basis of a saturated lattice has trivial cokernel torsion
        assert cokernel_invariants(k).factors == ()


@settings(max_examples=300)
@given(int_matrices(min_rows=1, min_cols=1), st.data())
def test_solve_integer_recovers_consistent_systems(a, data):
    x = data.draw(int_matrices(min_rows=a.cols, max_rows=a.cols, min_cols=1, max_cols=3))
    b = a @ x
    y = solve_integer(a, b)
    assert y is not None and a @ y == b


def test_solve_integer_detects_divisibility_obstruction():
    assert solve_integer(IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[1]])) is None
    assert solve_integer(IntMatrix.from_rows([[1], [1]]), IntMatrix.from_rows([[1], [2]])) is None


def test_cokernel_invariants():
    assert str(cokernel_invariants(IntMatrix.diagonal([2, 4, 0]))) == "Z + Z/2 + Z/4"
    assert cokernel_invariants(IntMatrix.zeros(3, 0)) == AbelianInvariants((), 3)


def test_inverse_unimodular():
    a = IntMatrix.from_rows([[2, 1], [1, 1]])
    assert a @ inverse_unimodular(a) == IntMatrix.identity(2)
    with pytest.raises(ValueError):
        inverse_unimodular(IntMatrix.from_rows([[2, 0], [0, 1]]))
