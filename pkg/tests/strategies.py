from hypothesis import strategies as st

from dnlattice.linalg import IntMatrix


@st.composite
def int_matrices(draw, max_rows=6, max_cols=6, bound=9, min_rows=0, min_cols=0):
    rows = draw(st.integers(min_rows, max_rows))
    cols = draw(st.integers(min_cols, max_cols))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=rows * cols, max_size=rows * cols))
    return IntMatrix(rows, cols, tuple(entries))


@st.composite
def square_matrices(draw, max_size=6, bound=9):
    n = draw(st.integers(1, max_size))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=n * n, max_size=n * n))
    return IntMatrix(n, n, tuple(entries))
