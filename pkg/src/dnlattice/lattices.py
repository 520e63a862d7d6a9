"""D_n-lattices as pairs of integer matrices for sigma and tau.

Matrices act on column vectors and ``act(l, g h) == act(l, g) @ act(l, h)``.
Every constructor pins its basis order; witnesses elsewhere are written
against these orders, so they must not change.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .group import (
    IDENTITY,
    GroupElement,
    Subgroup,
    element_mul,
    elements,
    subgroups,
)
from .linalg import IntMatrix, block_diag, kron, permutation_matrix


class LatticeError(ValueError):
    """Invalid lattice data or an unsupported parameter for a lattice family."""


@dataclass(frozen=True)
class DnLattice:
    n: int
    sigma: IntMatrix
    tau: IntMatrix
    label: str = ""
    basis: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 2:
            raise LatticeError("n must be at least 2")
        r = self.sigma.rows
        if self.sigma.shape != (r, r) or self.tau.shape != (r, r):
            raise LatticeError("sigma and tau must be square of the same size")
        if not self.basis:
            object.__setattr__(self, "basis", tuple(f"e{i}" for i in range(r)))
        elif len(self.basis) != r:
            raise LatticeError("basis label count differs from rank")

    @property
    def rank(self) -> int:
        return self.sigma.rows

    def relabel(self, label: str) -> DnLattice:
        return DnLattice(self.n, self.sigma, self.tau, label, self.basis)


def is_valid(l: DnLattice) -> bool:
    """sigma^n = 1, tau^2 = 1 and tau sigma tau = sigma^-1, as exact matrix identities."""
    one = IntMatrix.identity(l.rank)
    return (l.sigma ** l.n == one and l.tau @ l.tau == one
            and l.tau @ l.sigma @ l.tau @ l.sigma == one)


def act(l: DnLattice, g: GroupElement) -> IntMatrix:
    m = l.sigma ** g.rot
    return m @ l.tau if g.flip else m


def action_table(l: DnLattice) -> dict[GroupElement, IntMatrix]:
    """Matrices of all 2n elements, built by one multiplication each."""
    return dict(_action_table(l))


@lru_cache(maxsize=64)
def _action_table(l: DnLattice) -> tuple[tuple[GroupElement, IntMatrix], ...]:
    table = {IDENTITY: IntMatrix.identity(l.rank)}
    cur = table[IDENTITY]
    for i in range(1, l.n):
        cur = l.sigma @ cur
        table[GroupElement(i, 0)] = cur
    for i in range(l.n):
        table[GroupElement(i, 1)] = table[GroupElement(i, 0)] @ l.tau
    return tuple(table.items())


def restrict(l: DnLattice, s: Subgroup) -> list[tuple[GroupElement, IntMatrix]]:
    if s.n != l.n:
        raise LatticeError(f"{s.label} is a subgroup of D_{s.n}, not D_{l.n}")
    table = action_table(l)
    return [(g, table[g]) for g in s.elements()]


def is_faithful(l: DnLattice) -> bool:
    one = IntMatrix.identity(l.rank)
    return all(m != one for g, m in action_table(l).items() if g != IDENTITY)


# functors ---------------------------------------------------------------

def dual(l: DnLattice) -> DnLattice:
    """Contragredient lattice: each matrix goes to its inverse transpose."""
    return DnLattice(l.n, (l.sigma ** (l.n - 1)).T, l.tau.T, f"dual:{l.label}",
                     tuple(f"{b}*" for b in l.basis))


def dsum(*ls: DnLattice) -> DnLattice:
    if len({l.n for l in ls}) != 1:
        raise LatticeError("direct sum of lattices over different groups")
    return DnLattice(ls[0].n, block_diag(*(l.sigma for l in ls)), block_diag(*(l.tau for l in ls)),
                     " + ".join(l.label for l in ls), tuple(b for l in ls for b in l.basis))


def power(l: DnLattice, k: int) -> DnLattice:
    out = dsum(*([l] * k))
    return out.relabel(f"{l.label}^{k}")


def tensor(a: DnLattice, b: DnLattice) -> DnLattice:
    if a.n != b.n:
        raise LatticeError("tensor product of lattices over different groups")
    return DnLattice(a.n, kron(a.sigma, b.sigma), kron(a.tau, b.tau), f"{a.label} (x) {b.label}",
                     tuple(f"{x}(x){y}" for x in a.basis for y in b.basis))


# constructors -----------------------------------------------------------

def _require_odd(n: int, name: str) -> None:
    if n < 3 or n % 2 == 0:
        raise LatticeError(f"{name} is defined for odd n >= 3, got n={n}")


def _require_n(n: int) -> None:
    if n < 2:
        raise LatticeError(f"n must be at least 2, got {n}")


def cyclic_shift(n: int) -> IntMatrix:
    """Basis vector i goes to i+1 (mod n)."""
    return permutation_matrix([(i + 1) % n for i in range(n)])


def _mplus_tau(n: int) -> IntMatrix:
    # basis position p stands for sigma^(p+1) u and tau sends sigma^k u to sigma^-k u
    return permutation_matrix([(n - 2 - p) % n for p in range(n)])


def _nplus_sigma(n: int) -> IntMatrix:
    rows = [[0] * (n - 1) for _ in range(n - 1)]
    for p in range(n - 2):
        rows[p + 1][p] = 1
    for i in range(n - 1):
        rows[i][n - 2] = -1
    return IntMatrix.from_rows(rows, n - 1)


def _nplus_tau(n: int) -> IntMatrix:
    return permutation_matrix([n - 2 - p for p in range(n - 1)])


def _mtilde(n: int) -> tuple[IntMatrix, IntMatrix]:
    sigma = block_diag(cyclic_shift(n), IntMatrix.identity(1))
    rows = _mplus_tau(n).to_rows()
    rows = [r + [1] for r in rows] + [[0] * n + [-1]]
    return sigma, IntMatrix.from_rows(rows, n + 1)


def _powers(n: int, sym: str, start: int = 1, stop: int | None = None) -> tuple[str, ...]:
    stop = n + 1 if stop is None else stop
    return tuple(f"s^{i % n}{sym}" for i in range(start, stop))


@lru_cache(maxsize=None)
def m_plus(n: int) -> DnLattice:
    """Induced from the trivial <tau>-lattice; basis sigma^i u for i = 1..n."""
    _require_odd(n, "M+")
    return DnLattice(n, cyclic_shift(n), _mplus_tau(n), "M+", _powers(n, "u"))


@lru_cache(maxsize=None)
def m_minus(n: int) -> DnLattice:
    _require_odd(n, "M-")
    return DnLattice(n, cyclic_shift(n), -_mplus_tau(n), "M-", _powers(n, "u'"))


@lru_cache(maxsize=None)
def n_plus(n: int) -> DnLattice:
    """M+ modulo the norm of sigma; basis sigma^i u for i = 1..n-1."""
    _require_odd(n, "N+")
    return DnLattice(n, _nplus_sigma(n), _nplus_tau(n), "N+", _powers(n, "u", 1, n))


@lru_cache(maxsize=None)
def n_minus(n: int) -> DnLattice:
    _require_odd(n, "N-")
    return DnLattice(n, _nplus_sigma(n), -_nplus_tau(n), "N-", _powers(n, "u'", 1, n))


@lru_cache(maxsize=None)
def mtilde_plus(n: int) -> DnLattice:
    """Rank n+1 extension of Z by M+; basis w_0..w_{n-1}, w with tau w = -w + sum w_i."""
    _require_odd(n, "M~+")
    sigma, tau = _mtilde(n)
    return DnLattice(n, sigma, tau, "M~+", tuple(f"w{i}" for i in range(n)) + ("w",))


@lru_cache(maxsize=None)
def mtilde_minus(n: int) -> DnLattice:
    _require_odd(n, "M~-")
    sigma, tau = _mtilde(n)
    return DnLattice(n, sigma, -tau, "M~-", tuple(f"w{i}'" for i in range(n)) + ("w'",))


@lru_cache(maxsize=None)
def triv(n: int) -> DnLattice:
    _require_n(n)
    one = IntMatrix.identity(1)
    return DnLattice(n, one, one, "Z", ("1",))


@lru_cache(maxsize=None)
def triv_minus(n: int) -> DnLattice:
    """Rank one; sigma fixes, tau negates."""
    _require_n(n)
    return DnLattice(n, IntMatrix.identity(1), IntMatrix.from_rows([[-1]]), "Z-", ("1'",))


def _left_regular(n: int, g: GroupElement) -> IntMatrix:
    return permutation_matrix([element_mul(g, h, n).index(n) for h in elements(n)])


@lru_cache(maxsize=None)
def regular(n: int) -> DnLattice:
    """Z[D_n] with basis sigma^0..sigma^{n-1}, tau, sigma tau, ..., sigma^{n-1} tau."""
    _require_n(n)
    return DnLattice(n, _left_regular(n, GroupElement(1, 0)), _left_regular(n, GroupElement(0, 1)),
                     "Z[G]", tuple(g.label() for g in elements(n)))


@lru_cache(maxsize=None)
def perm_mod_sigma(n: int) -> DnLattice:
    """Z[G/<sigma>] on the cosets <sigma>, tau<sigma>."""
    _require_n(n)
    return DnLattice(n, IntMatrix.identity(2), permutation_matrix([1, 0]), "Z[G/<s>]",
                     ("<s>", "t<s>"))


@lru_cache(maxsize=None)
def perm_mod_tau(n: int) -> DnLattice:
    """Z[G/<tau>] on the cosets sigma^i <tau>, i = 0..n-1."""
    _require_n(n)
    return DnLattice(n, cyclic_shift(n), permutation_matrix([(-i) % n for i in range(n)]),
                     "Z[G/<t>]", tuple(f"s^{i}<t>" for i in range(n)))


def augmentation_embedding(n: int) -> IntMatrix:
    """Columns g - 1 (g != 1, group order) inside Z[G]."""
    size = 2 * n
    cols = []
    for k in range(1, size):
        c = [0] * size
        c[k] = 1
        c[0] = -1
        cols.append(c)
    return IntMatrix.from_columns(cols, size)


@lru_cache(maxsize=None)
def aug_ideal(n: int) -> DnLattice:
    """Augmentation ideal I_G on the basis g - 1, g != 1.

    Coordinates of a vector in I_G are its Z[G] coordinates with the identity
    slot dropped, which also realizes h(g-1) = (hg-1) - (h-1).
    """
    _require_n(n)
    zg = regular(n)
    emb = augmentation_embedding(n)
    drop = list(range(1, 2 * n))
    sigma = (zg.sigma @ emb).submatrix(drop, range(2 * n - 1))
    tau = (zg.tau @ emb).submatrix(drop, range(2 * n - 1))
    return DnLattice(n, sigma, tau, "I_G", tuple(f"{g.label()}-1" for g in elements(n)[1:]))


def aug_tensor_square(n: int) -> DnLattice:
    return tensor(aug_ideal(n), aug_ideal(n)).relabel("I_G(x)I_G")


# permutation structure --------------------------------------------------

def _as_permutation(m: IntMatrix) -> list[int] | None:
    """Image indices if ``m`` is a 0/1 permutation matrix, else None."""
    images = []
    for j in range(m.cols):
        col = m.col(j)
        ones = [i for i, x in enumerate(col) if x == 1]
        if len(ones) != 1 or any(x not in (0, 1) for x in col):
            return None
        images.append(ones[0])
    if sorted(images) != list(range(m.rows)):
        return None
    return images


def literal_permutation_decomposition(l: DnLattice) -> list[Subgroup] | None:
    """Stabilizers of the orbits when the given basis is already permuted by G.

    Only the given basis is inspected; returns None when sigma or tau is not a
    0/1 permutation matrix. Each orbit is represented by its lowest basis
    index and reported through that vector's stabilizer, so the lattice is
    the direct sum of the Z[G/H] over the returned H.
    """
    s = _as_permutation(l.sigma)
    t = _as_permutation(l.tau)
    if s is None or t is None:
        return None

    def image(g: GroupElement, i: int) -> int:
        if g.flip:
            i = t[i]
        for _ in range(g.rot):
            i = s[i]
        return i

    seen: set[int] = set()
    by_elements = {frozenset(h.elements()): h for h in subgroups(l.n)}
    out = []
    for start in range(l.rank):
        if start in seen:
            continue
        seen.update(image(g, start) for g in elements(l.n))
        stab = frozenset(g for g in elements(l.n) if image(g, start) == start)
        out.append(by_elements[stab])
    return out
