"""Exact integer matrices and the normal forms built on them.

All arithmetic is on Python ints; nothing here ever rounds. The elimination
loops live in :mod:`dnlattice._kernels`, which may run a compiled int64
version and silently fall back to the exact path on overflow.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels


class DimensionError(ValueError):
    """Raised when matrix shapes are incompatible with an operation."""


def _as_int(x) -> int:
    if isinstance(x, numbers.Integral) and not isinstance(x, bool):
        return int(x)
    raise TypeError(f"non-integer entry {x!r}")


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major matrix of arbitrary-precision integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        for x in self.entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"non-integer entry {x!r}")

    @classmethod
    def _trusted(cls, rows: int, cols: int, entries: tuple[int, ...]) -> IntMatrix:
        """Skip entry validation for tuples already known to hold ints."""
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", entries)
        return m

    # construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls._trusted(len(rows), cols, tuple(x if type(x) is int else _as_int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> IntMatrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([list(c) for c in columns], rows).T if columns else cls.zeros(rows, 0)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls._trusted(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls._trusted(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Sequence[int]) -> IntMatrix:
        return cls._trusted(len(values), 1, tuple(v if type(v) is int else _as_int(v) for v in values))

    # access -----------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> IntMatrix:
        if not self.rows or not self.cols:
            return IntMatrix.zeros(self.cols, self.rows)
        return IntMatrix(self.cols, self.rows, tuple(x for col in zip(*self.to_rows()) for x in col))

    def is_zero(self) -> bool:
        return not any(self.entries)

    # arithmetic -------------------------------------------------------
    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        if not self.rows or not other.cols:
            return IntMatrix.zeros(self.rows, other.cols)
        out = _kernels.matmul(self.to_rows(), other.to_rows(), self.cols)
        return IntMatrix.from_rows(out, other.cols)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in addition")
        return IntMatrix._trusted(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in subtraction")
        return IntMatrix._trusted(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix._trusted(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    def __pow__(self, e: int) -> IntMatrix:
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        if e < 0:
            raise ValueError("negative exponent")
        result = IntMatrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> IntMatrix:
        rows, cols = list(rows), list(cols)
        return IntMatrix.from_rows([[self[i, j] for j in cols] for i in rows], len(cols))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()!r})"

    def __str__(self) -> str:
        rows = self.to_rows()
        if not rows:
            return f"[{self.rows}x{self.cols} empty]"
        w = max((len(str(x)) for r in rows for x in r), default=1)
        return "\n".join("[" + " ".join(str(x).rjust(w) for x in r) + "]" for r in rows)


def hstack(*ms: IntMatrix) -> IntMatrix:
    rows = {m.rows for m in ms}
    if len(rows) != 1:
        raise DimensionError("hstack needs equal row counts")
    (r,) = rows
    parts = [m.to_rows() for m in ms]
    return IntMatrix.from_rows([sum((p[i] for p in parts), []) for i in range(r)],
                               sum(m.cols for m in ms))


def vstack(*ms: IntMatrix) -> IntMatrix:
    cols = {m.cols for m in ms}
    if len(cols) != 1:
        raise DimensionError("vstack needs equal column counts")
    (c,) = cols
    return IntMatrix._trusted(sum(m.rows for m in ms), c, tuple(x for m in ms for x in m.entries))


def block_diag(*ms: IntMatrix) -> IntMatrix:
    total_c = sum(m.cols for m in ms)
    out = []
    offset = 0
    for m in ms:
        for r in m.to_rows():
            out.append([0] * offset + r + [0] * (total_c - offset - m.cols))
        offset += m.cols
    return IntMatrix.from_rows(out, total_c)


def kron(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            out.append([a[i, j] * b[k, l] for j in range(a.cols) for l in range(b.cols)])
    return IntMatrix.from_rows(out, a.cols * b.cols)


def permutation_matrix(images: Sequence[int]) -> IntMatrix:
    """Matrix sending basis vector ``j`` to basis vector ``images[j]``."""
    n = len(images)
    if sorted(images) != list(range(n)):
        raise ValueError(f"{list(images)} is not a permutation of 0..{n - 1}")
    e = [0] * (n * n)
    for j, i in enumerate(images):
        e[i * n + j] = 1
    return IntMatrix._trusted(n, n, tuple(e))


# normal forms -----------------------------------------------------------

@dataclass(frozen=True)
class SnfResult:
    """``u @ a @ v == d`` with ``u``, ``v`` unimodular and ``d`` in Smith form."""

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.d[i, i] for i in range(min(self.d.rows, self.d.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z/f1 + Z/f2 + ...`` with ``f1 | f2 | ...`` and every ``fi >= 2``."""

    factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise ValueError(f"invariant factors {self.factors} do not form a divisor chain")
        if any(f < 2 for f in self.factors):
            raise ValueError("invariant factors must be at least 2")

    @property
    def is_trivial(self) -> bool:
        return not self.factors and self.free_rank == 0

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for f in self.factors:
            out *= f
        return out

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{f}" for f in self.factors]
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> AbelianInvariants:
        text = text.strip()
        if text == "0":
            return cls()
        free = 0
        factors = []
        for part in text.split("+"):
            part = part.strip()
            if part == "Z":
                free += 1
            elif part.startswith("Z/"):
                factors.append(int(part[2:]))
            else:
                raise ValueError(f"cannot parse group {text!r}")
        return cls(tuple(factors), free)


def det(a: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not a.is_square:
        raise DimensionError(f"determinant of a {a.rows}x{a.cols} matrix")
    return _kernels.bareiss_det(a.to_rows())


def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form with unimodular transforms.

    >>> snf(IntMatrix.diagonal([2, 3])).diagonal
    [1, 6]
    """
    if a.rows == 0 or a.cols == 0:
        return SnfResult(a, IntMatrix.identity(a.rows), IntMatrix.identity(a.cols))
    d, u, v = _kernels.smith(a.to_rows(), a.cols)
    return SnfResult(IntMatrix.from_rows(d, a.cols), IntMatrix.from_rows(u, a.rows),
                     IntMatrix.from_rows(v, a.cols))


def _row_hnf(a: IntMatrix, transform: bool = False):
    if a.rows == 0:
        return [], ([] if transform else None), []
    return _kernels.hnf_rows(a.to_rows(), a.cols, transform)


def hnf_column_span(a: IntMatrix) -> IntMatrix:
    """Canonical basis (as columns) of the integer column span of ``a``.

    This is the transpose of the row Hermite form of ``a.T`` with zero rows
    dropped, so two matrices span the same sublattice exactly when their
    outputs are equal.
    """
    h, _, pivots = _row_hnf(a.T)
    if not pivots:
        return IntMatrix.zeros(a.rows, 0)
    return IntMatrix.from_rows(h[:len(pivots)], a.rows).T


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Columns forming a Z-basis of ``{x : a @ x == 0}``."""
    if a.cols == 0:
        return IntMatrix.zeros(0, 0)
    if a.rows == 0:
        return IntMatrix.identity(a.cols)
    _, u, pivots = _row_hnf(a.T, transform=True)
    r = len(pivots)
    if r == a.cols:
        return IntMatrix.zeros(a.cols, 0)
    return IntMatrix.from_rows(u[r:], a.cols).T


def rank(a: IntMatrix) -> int:
    return len(_row_hnf(a)[2])


def solve_integer(a: IntMatrix, b: IntMatrix) -> IntMatrix | None:
    """Some integer ``x`` with ``a @ x == b``, or ``None`` if there is none.

    ``b`` may carry several columns; they are solved together from one Smith
    decomposition of ``a``.
    """
    if b.rows != a.rows:
        raise DimensionError(f"rhs has {b.rows} rows, matrix has {a.rows}")
    res = snf(a)
    c = res.u @ b
    diag = res.diagonal
    r = res.rank
    y = []
    for i in range(a.cols):
        if i < r:
            row = []
            for x in c.row(i):
                q, rem = divmod(x, diag[i])
                if rem:
                    return None
                row.append(q)
            y.append(row)
        else:
            y.append([0] * b.cols)
    for i in range(r, a.rows):
        if any(c.row(i)):
            return None
    return res.v @ IntMatrix.from_rows(y, b.cols)


def cokernel_invariants(a: IntMatrix) -> AbelianInvariants:
    """Invariants of ``Z^rows / (column span of a)``."""
    if a.cols == 0 or a.rows == 0:
        return AbelianInvariants((), a.rows)
    diag = snf(a).diagonal
    nonzero = [x for x in diag if x]
    return AbelianInvariants(tuple(x for x in nonzero if x > 1), a.rows - len(nonzero))


def is_unimodular(a: IntMatrix) -> bool:
    return a.is_square and abs(det(a)) == 1


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    x = solve_integer(a, IntMatrix.identity(a.rows)) if a.is_square else None
    if x is None or not is_unimodular(a):
        raise ValueError("matrix is not invertible over the integers")
    return x


# circulants -------------------------------------------------------------

def circulant(c: Sequence[int]) -> IntMatrix:
    """``Circ(c0, ..., c_{n-1})``: first column ``c``, each next column shifted down one."""
    n = len(c)
    if n < 1:
        raise ValueError("circulant needs at least one entry")
    return IntMatrix.from_rows([[c[(i - j) % n] for j in range(n)] for i in range(n)], n)


def _odd_half(n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 3, got {n}")
    return (n - 1) // 2


def circulant_identity_vectors(n: int) -> tuple[list[int], list[int]]:
    """The two first columns whose circulant determinants have closed forms."""
    h = _odd_half(n)
    first = [1] * h + [0] * (h + 1)
    second = [-1] * h + [0] + [1] * (h - 1) + [0]
    return first, second


def circulant_identities(n: int) -> tuple[bool, bool]:
    """Check the two circulant determinant identities at odd ``n``.

    The first circulant must have determinant ``(n-1)/2`` and the second
    ``-1``. Both are evaluated by fraction-free elimination.
    """
    first, second = circulant_identity_vectors(n)
    return det(circulant(first)) == (n - 1) // 2, det(circulant(second)) == -1
