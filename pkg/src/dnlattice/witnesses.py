"""Equivariant maps, short exact sequences, and explicit lattice isomorphisms.

Builders here write matrices straight from element formulas. They do not
check their own output; ``verify_equivariant``, ``verify_iso`` and
``verify_ses`` do that from scratch.

Vectors in M+ / M- / M~+- are written with the indexing x_i = sigma^i u,
which sits at basis position (i - 1) mod n of the lattice constructors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import profile
from .group import GroupElement
from .lattices import (
    DnLattice,
    aug_ideal,
    dsum,
    m_minus,
    m_plus,
    mtilde_minus,
    mtilde_plus,
    n_minus,
    n_plus,
    perm_mod_sigma,
    perm_mod_tau,
    power,
    regular,
    tensor,
    triv,
    triv_minus,
)
from .linalg import (
    IntMatrix,
    block_diag,
    cokernel_invariants,
    det,
    hnf_column_span,
    hstack,
    inverse_unimodular,
    kernel_basis,
    kron,
    permutation_matrix,
    solve_integer,
    vstack,
)
from .relmod import GroupRingVector, fox_matrix, free_pair, nu_matrix, relation_module


@dataclass(frozen=True)
class LatticeMap:
    src: DnLattice
    dst: DnLattice
    mat: IntMatrix

    def __post_init__(self):
        if self.mat.shape != (self.dst.rank, self.src.rank):
            raise ValueError(f"map matrix {self.mat.shape} does not fit "
                             f"{self.src.label} -> {self.dst.label}")

    def then(self, other: LatticeMap) -> LatticeMap:
        """``other`` after ``self``."""
        return LatticeMap(self.src, other.dst, other.mat @ self.mat)


@dataclass(frozen=True)
class IsoWitness:
    map: LatticeMap
    provenance: str = ""

    @property
    def det(self) -> int:
        return det(self.map.mat)


@dataclass(frozen=True)
class ShortExactSequence:
    inj: LatticeMap
    surj: LatticeMap

    @property
    def left(self) -> DnLattice:
        return self.inj.src

    @property
    def middle(self) -> DnLattice:
        return self.inj.dst

    @property
    def right(self) -> DnLattice:
        return self.surj.dst


def verify_equivariant(m: LatticeMap) -> bool:
    a = m.mat
    return (a @ m.src.sigma == m.dst.sigma @ a) and (a @ m.src.tau == m.dst.tau @ a)


def verify_iso(w: IsoWitness | LatticeMap) -> bool:
    m = w.map if isinstance(w, IsoWitness) else w
    return m.mat.is_square and verify_equivariant(m) and abs(det(m.mat)) == 1


def _same_lattice(a: DnLattice, b: DnLattice) -> bool:
    return a.n == b.n and a.sigma == b.sigma and a.tau == b.tau


def ses_failure(s: ShortExactSequence) -> str | None:
    """First violated exactness condition, or None when the sequence is exact."""
    if not _same_lattice(s.inj.dst, s.surj.src):
        return "middle terms differ"
    if not verify_equivariant(s.inj):
        return "injection is not equivariant"
    if not verify_equivariant(s.surj):
        return "surjection is not equivariant"
    if s.left.rank + s.right.rank != s.middle.rank:
        return "ranks do not add up"
    if kernel_basis(s.inj.mat).cols:
        return "injection has a kernel"
    if not cokernel_invariants(s.surj.mat).is_trivial:
        return "surjection has a cokernel"
    if hnf_column_span(s.inj.mat) != hnf_column_span(kernel_basis(s.surj.mat)):
        return "image of the injection is not the kernel of the surjection"
    return None


def verify_ses(s: ShortExactSequence) -> bool:
    return ses_failure(s) is None


def section_system(s: ShortExactSequence) -> tuple[IntMatrix, IntMatrix]:
    """Linear system for an equivariant right inverse X of the surjection.

    Unknowns are the entries of X (rank M x rank Q) in row-major order, using
    vec(A X B) = (A kron B^T) vec(X).
    """
    m, q = s.middle.rank, s.right.rank
    eye_m, eye_q = IntMatrix.identity(m), IntMatrix.identity(q)
    blocks = [kron(s.surj.mat, eye_q)]
    for rho_m, rho_q in ((s.middle.sigma, s.right.sigma), (s.middle.tau, s.right.tau)):
        blocks.append(kron(eye_m, rho_q.T) - kron(rho_m, eye_q))
    rhs = IntMatrix.column(list(eye_q.entries) + [0] * (2 * m * q))
    return vstack(*blocks), rhs


def find_section(s: ShortExactSequence) -> IntMatrix | None:
    system, rhs = section_system(s)
    x = solve_integer(system, rhs)
    if x is None:
        return None
    return IntMatrix(s.middle.rank, s.right.rank, x.entries)


def has_section(s: ShortExactSequence) -> bool:
    return find_section(s) is not None


def split_sequence(a: DnLattice, q: DnLattice) -> ShortExactSequence:
    """0 -> A -> A + Q -> Q -> 0 with the block inclusion and projection."""
    mid = dsum(a, q)
    inj = vstack(IntMatrix.identity(a.rank), IntMatrix.zeros(q.rank, a.rank))
    surj = hstack(IntMatrix.zeros(q.rank, a.rank), IntMatrix.identity(q.rank))
    return ShortExactSequence(LatticeMap(a, mid, inj), LatticeMap(mid, q, surj))


def sum_of_sequences(s: ShortExactSequence, t: ShortExactSequence) -> ShortExactSequence:
    return ShortExactSequence(
        LatticeMap(dsum(s.left, t.left), dsum(s.middle, t.middle), block_diag(s.inj.mat, t.inj.mat)),
        LatticeMap(dsum(s.middle, t.middle), dsum(s.right, t.right), block_diag(s.surj.mat, t.surj.mat)),
    )


def sequence_from_complement(a: DnLattice, mid: DnLattice, q: DnLattice, inj: IntMatrix,
                             complement: IntMatrix) -> ShortExactSequence:
    """Sequence whose surjection reads off the complement coordinates.

    ``[inj | complement]`` must be a basis of ``mid``; the quotient basis is
    the image of the complement columns, in order.
    """
    change = hstack(inj, complement)
    inv = inverse_unimodular(change)
    surj = inv.submatrix(range(a.rank, mid.rank), range(mid.rank))
    return ShortExactSequence(LatticeMap(a, mid, inj), LatticeMap(mid, q, surj))


# helpers ----------------------------------------------------------------

def _require_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"this construction needs odd n >= 3, got n={n}")


def _x(n: int, coeffs: dict[int, int], extra: int = 0) -> list[int]:
    """Vector in M+-type coordinates from coefficients of x_i = sigma^i u."""
    v = [0] * (n + extra)
    for i, c in coeffs.items():
        v[(i - 1) % n] += c
    return v


def _shift(v: list[int], k: int, n: int, offset: int = 0) -> list[int]:
    """sigma^k on a block of n cyclically permuted coordinates starting at ``offset``."""
    out = list(v)
    for i in range(n):
        out[offset + (i + k) % n] = v[offset + i]
    return out


def _ring(n: int, terms: dict[GroupElement, int]) -> GroupRingVector:
    return GroupRingVector.from_coeffs(terms, n)


def _rot(i: int, n: int) -> GroupElement:
    return GroupElement(i % n, 0)


def _refl(i: int, n: int) -> GroupElement:
    return GroupElement(i % n, 1)


def _left(g: GroupElement, v: GroupRingVector) -> GroupRingVector:
    return GroupRingVector.of(g, v.n) * v


def _right(v: GroupRingVector, g: GroupElement) -> GroupRingVector:
    return v * GroupRingVector.of(g, v.n)


# stably permutation identities -------------------------------------------

def stably_permutation_plus(n: int) -> IsoWitness:
    """M~+ + Z  ->  Z[G/<sigma>] + Z[G/<tau>].

    Target basis u0, u1, v0..v_{n-1}. With t = u0 + u1 + sum v_i,
    x = t - v0 and y = (n-1)/2 u0 + (n+1)/2 u1 + (n-1)/2 sum v_i, the
    columns are sigma x, ..., sigma^{n-1} x, x, y, t.
    """
    _require_odd(n)
    h = (n - 1) // 2
    t = [1, 1] + [1] * n
    x = list(t)
    x[2] -= 1
    y = [h, h + 1] + [h] * n
    cols = [_shift(x, i + 1, n, 2) for i in range(n)] + [y, t]
    src = dsum(mtilde_plus(n), triv(n))
    dst = dsum(perm_mod_sigma(n), perm_mod_tau(n))
    return IsoWitness(LatticeMap(src, dst, IntMatrix.from_columns(cols, n + 2)))


def stably_permutation_minus(n: int) -> IsoWitness:
    """M~- + Z[G/<tau>]  ->  Z[G] + Z.

    Target basis u_i = sigma^i, v_j = sigma^j tau, t. Columns: sigma^{i+1} x
    for w_i, y for w, then sigma^i z for the coset sigma^i <tau>, where
    x = u0 - v0, y = sum u_i + t and
    z = sum_{1<=i<=(n-1)/2} u_i + sum_{(n+1)/2<=j<=n-1} v_j + t.
    """
    _require_odd(n)
    h = (n - 1) // 2
    size = 2 * n + 1
    x = [0] * size
    x[0], x[n] = 1, -1
    y = [1] * n + [0] * n + [1]
    z = [0] * size
    for i in range(1, h + 1):
        z[i] = 1
    for j in range(h + 1, n):
        z[n + j] = 1
    z[2 * n] = 1

    def rot(v, k):
        return _shift(_shift(v, k, n, 0), k, n, n)

    cols = [rot(x, i + 1) for i in range(n)] + [y] + [rot(z, i) for i in range(n)]
    src = dsum(mtilde_minus(n), perm_mod_tau(n))
    dst = dsum(regular(n), triv(n))
    return IsoWitness(LatticeMap(src, dst, IntMatrix.from_columns(cols, size)))


def mtilde_sum_permutation(n: int) -> IsoWitness:
    """M~+ + M~-  ->  Z[G] + Z[G/<sigma>] on the basis u_i, v_j, t0, t1."""
    _require_odd(n)
    h = (n - 1) // 2
    size = 2 * n + 2
    t0, t1 = 2 * n, 2 * n + 1
    x0 = [0] * size
    for i in range(h + 1, n):
        x0[i] = 1
    for j in range(1, h + 1):
        x0[n + j] = 1
    x0[t0] = x0[t1] = 1
    y0 = [0] * n + [h] * n + [1, n - 1]
    z0 = [0] * size
    z0[0] = 1
    for i in range(h + 1, n):
        z0[i] = 1
    for j in range(0, h + 1):
        z0[n + j] = -1
    z0[t0], z0[t1] = 1, -1
    y1 = [1] * n + [-h] * n + [1, -(n - 1)]

    def rot(v, k):
        return _shift(_shift(v, k, n, 0), k, n, n)

    cols = ([rot(x0, i + 1) for i in range(n)] + [y0]
            + [rot(z0, i + 1) for i in range(n)] + [y1])
    src = dsum(mtilde_plus(n), mtilde_minus(n))
    dst = dsum(regular(n), perm_mod_sigma(n))
    return IsoWitness(LatticeMap(src, dst, IntMatrix.from_columns(cols, size)))


def rotated_column_order(n: int) -> list[int]:
    """Column order sigma^{(n-1)/2} x0, ..., sigma^{n-1} x0, x0, ..., y0, then the z0 block."""
    h = (n - 1) // 2
    # column i of the witness holds sigma^{i+1}
    block = [(k - 1) % n for k in list(range(h, n)) + list(range(0, h))]
    return block + [n] + [n + 1 + c for c in block] + [2 * n + 1]


# the relation module ------------------------------------------------------

def relation_basis_reorder(n: int) -> IntMatrix:
    """Coordinates on b_1..b_{n-1}, b_0, c_1..c_{n-1}, c_0, a from those on a, b_*, c_*."""
    images = [2 * n]
    images += [(i - 1) % n for i in range(n)]
    images += [n + (i - 1) % n for i in range(n)]
    return permutation_matrix(images)


def cyclic_shift_power(n: int, k: int) -> IntMatrix:
    return m_plus(n).sigma ** (k % n)


def relation_conjugators(n: int) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """The three base changes taking the reordered relation module to M+ + M~+."""
    _require_odd(n)
    h = (n - 1) // 2
    one = IntMatrix.identity(n)
    zero = IntMatrix.zeros(n, n)
    ah = cyclic_shift_power(n, h)
    p1 = block_diag(vstack(hstack(one, zero), hstack(one - ah, one)), IntMatrix.identity(1))
    p2 = block_diag(ah, one, IntMatrix.identity(1))
    p3 = block_diag(vstack(hstack(zero, one), hstack(one, zero)), IntMatrix.identity(1))
    return p1, p2, p3


def reordered_relation_action(n: int) -> tuple[IntMatrix, IntMatrix]:
    r = relation_module(n)
    pi = relation_basis_reorder(n)
    pinv = pi.T
    return pi @ r.sigma @ pinv, pi @ r.tau @ pinv


def expected_reordered_action(n: int) -> tuple[IntMatrix, IntMatrix]:
    """diag(A, A, 1) and [[AB, 0, 1], [C, B, 0], [0, 0, -1]] with C = B - AB."""
    a, b = m_plus(n).sigma, m_plus(n).tau
    ab = a @ b
    c = b - ab
    ones = IntMatrix.column([1] * n)
    zcol = IntMatrix.zeros(n, 1)
    sigma = block_diag(a, a, IntMatrix.identity(1))
    tau = vstack(hstack(ab, IntMatrix.zeros(n, n), ones),
                 hstack(c, b, zcol),
                 hstack(IntMatrix.zeros(1, 2 * n), IntMatrix.from_rows([[-1]])))
    return sigma, tau


def relation_module_decomposition(n: int) -> IsoWitness:
    """R^ab -> M+ + M~+ as P3 P2 P1 after reordering the basis."""
    p1, p2, p3 = relation_conjugators(n)
    mat = p3 @ p2 @ p1 @ relation_basis_reorder(n)
    dst = dsum(m_plus(n), mtilde_plus(n))
    return IsoWitness(LatticeMap(relation_module(n), dst, mat))


def mplus_to_coset_lattice(n: int) -> IsoWitness:
    """M+ -> Z[G/<tau>], sigma^k u -> sigma^k <tau>."""
    _require_odd(n)
    mat = permutation_matrix([(j + 1) % n for j in range(n)])
    return IsoWitness(LatticeMap(m_plus(n), perm_mod_tau(n), mat))


def relation_module_stably_permutation(n: int) -> IsoWitness:
    """R^ab + Z -> Z[G/<tau>] + (Z[G/<sigma>] + Z[G/<tau>]), through M+ + M~+ + Z."""
    first = relation_module_decomposition(n).map
    lift = LatticeMap(dsum(first.src, triv(n)), dsum(first.dst, triv(n)),
                      block_diag(first.mat, IntMatrix.identity(1)))
    second = stably_permutation_plus(n).map
    perm = mplus_to_coset_lattice(n).map
    tail = LatticeMap(dsum(m_plus(n), mtilde_plus(n), triv(n)), dsum(perm.dst, second.dst),
                      block_diag(perm.mat, second.mat))
    return IsoWitness(lift.then(tail))


# sequences ------------------------------------------------------------------

def _u_vectors(n: int, extra: int = 0) -> list[list[int]]:
    """u_i = sigma^i(x_{(n-1)/2} - x_{(n+1)/2}) for i = 1..n-1."""
    h = (n - 1) // 2
    return [_x(n, {h + i: 1, h + 1 + i: -1}, extra) for i in range(1, n)]


def norm_quotient_sequences(n: int) -> tuple[ShortExactSequence, ShortExactSequence]:
    """0 -> N- -> M+ -> Z -> 0 and 0 -> N+ -> M- -> Z- -> 0, with complement t = x_{(n-1)/2}."""
    _require_odd(n)
    h = (n - 1) // 2
    inj = IntMatrix.from_columns(_u_vectors(n), n)
    comp = IntMatrix.column(_x(n, {h: 1}))
    plus = sequence_from_complement(n_minus(n), m_plus(n), triv(n), inj, comp)
    minus = sequence_from_complement(n_plus(n), m_minus(n), triv_minus(n), inj, comp)
    return plus, minus


def mtilde_sequences(n: int) -> tuple[ShortExactSequence, ShortExactSequence]:
    """0 -> N- -> M~+ -> Z[G/<sigma>] -> 0 and 0 -> N+ -> M~- -> Z[G/<sigma>] -> 0."""
    _require_odd(n)
    h = (n - 1) // 2
    inj = IntMatrix.from_columns(_u_vectors(n, 1), n + 1)
    t = _x(n, {h: 1}, 1)
    w = [0] * n + [1]

    def comb(a, b):
        return [a * ti + b * wi for ti, wi in zip(t, w)]

    plus_comp = IntMatrix.from_columns([comb(-h, 1), comb(h + 1, -1)], n + 1)
    minus_comp = IntMatrix.from_columns([comb(h, -1), comb(h + 1, -1)], n + 1)
    plus = sequence_from_complement(n_minus(n), mtilde_plus(n), perm_mod_sigma(n), inj, plus_comp)
    minus = sequence_from_complement(n_plus(n), mtilde_minus(n), perm_mod_sigma(n), inj, minus_comp)
    return plus, minus


def _group_ring_kernel_vectors(n: int) -> tuple[list[GroupRingVector], list[GroupRingVector],
                                                 list[GroupRingVector], list[GroupRingVector]]:
    """u_i, v_i, x_i, y_i for i = 0..n-1 inside Z[G]."""
    h = (n - 1) // 2
    u0 = _ring(n, {_rot(h, n): 1, _rot(h + 1, n): -1})
    v0 = _ring(n, {_refl(h + 1, n): 1, _refl(h, n): -1})
    u = [_left(_rot(i, n), u0) for i in range(n)]
    v = [_left(_rot(i, n), v0) for i in range(n)]
    x = [u[i] + v[i] for i in range(n)]
    y = [u[(i - 1) % n] - v[(i + 1) % n] for i in range(n)]
    return u, v, x, y


def group_ring_sequence(n: int) -> ShortExactSequence:
    """0 -> N+ + N- -> Z[G] -> Z[G/<sigma>] -> 0 with sigma^i -> t0, sigma^i tau -> t1."""
    _require_odd(n)
    _, _, x, y = _group_ring_kernel_vectors(n)
    inj = IntMatrix.from_columns([x[i].values for i in range(1, n)]
                                 + [y[i].values for i in range(1, n)], 2 * n)
    surj = IntMatrix.from_rows([[1] * n + [0] * n, [0] * n + [1] * n], 2 * n)
    src = dsum(n_plus(n), n_minus(n))
    return ShortExactSequence(LatticeMap(src, regular(n), inj),
                              LatticeMap(regular(n), perm_mod_sigma(n), surj))


def group_ring_kernel_matrix(n: int) -> IntMatrix:
    """Rows: coordinates of x_1..x_{n-1}, y_1..y_{n-1} on u_1..u_{n-1}, v_1..v_{n-1}."""
    _require_odd(n)
    u, v, x, y = _group_ring_kernel_vectors(n)
    basis = IntMatrix.from_columns([u[i].values for i in range(1, n)]
                                   + [v[i].values for i in range(1, n)], 2 * n)
    targets = IntMatrix.from_columns([x[i].values for i in range(1, n)]
                                     + [y[i].values for i in range(1, n)], 2 * n)
    coords = solve_integer(basis, targets)
    if coords is None:
        raise ArithmeticError("x_i, y_i do not lie in the span of u_i, v_i")
    return coords.T


def _ig_coords(v: GroupRingVector) -> list[int]:
    if v.augmentation():
        raise ValueError("element is not in the augmentation ideal")
    return list(v.values[1:])


def augmentation_ideal_splitting(n: int) -> tuple[IsoWitness, ShortExactSequence, ShortExactSequence]:
    """I_G = M- + N-, with 0 -> M+ -> Z[G] -> M- -> 0 and 0 -> M~+ -> Z[G] -> N- -> 0.

    M- enters through sigma^k (1 - tau). N- enters through sigma^i y with
    y = sigma^{(n-1)/2} - 1 - sigma^{(n+1)/2} tau + tau, an element of I_G
    with tau y = -y and (sum sigma^i) y = 0 that lifts the generator
    sigma^{(n-1)/2} H - sigma^{(n+1)/2} H of the coset augmentation ideal.
    """
    _require_odd(n)
    h = (n - 1) // 2
    one_minus_tau = _ring(n, {_rot(0, n): 1, _refl(0, n): -1})
    one_plus_tau = _ring(n, {_rot(0, n): 1, _refl(0, n): 1})
    y = _ring(n, {_rot(h, n): 1, _rot(0, n): -1, _refl(h + 1, n): -1, _refl(0, n): 1})
    m_cols = [_ig_coords(_left(_rot(j + 1, n), one_minus_tau)) for j in range(n)]
    n_cols = [_ig_coords(_left(_rot(i, n), y)) for i in range(1, n)]
    iso = IsoWitness(LatticeMap(dsum(m_minus(n), n_minus(n)), aug_ideal(n),
                                IntMatrix.from_columns(m_cols + n_cols, 2 * n - 1)))

    zg = regular(n)
    plus_cols = [_left(_rot(j + 1, n), one_plus_tau).values for j in range(n)]
    unit = lambda g: GroupRingVector.of(g, n).values  # noqa: E731
    inj1 = IntMatrix.from_columns(plus_cols, 2 * n)
    comp1 = IntMatrix.from_columns([unit(_rot(j + 1, n)) for j in range(n)], 2 * n)
    seq1 = sequence_from_complement(m_plus(n), zg, m_minus(n), inj1, comp1)

    norm_tau = tuple([0] * n + [1] * n)
    inj2 = IntMatrix.from_columns(plus_cols + [norm_tau], 2 * n)
    comp2 = IntMatrix.from_columns([unit(_rot(i, n)) for i in range(1, n)], 2 * n)
    seq2 = sequence_from_complement(mtilde_plus(n), zg, n_minus(n), inj2, comp2)
    return iso, seq1, seq2


def free_pair_sequence(n: int) -> ShortExactSequence:
    """0 -> M+ + M~+ -> Z[G]^2 -> I_G -> 0, the sum of the two sequences followed by the splitting."""
    iso, seq1, seq2 = augmentation_ideal_splitting(n)
    both = sum_of_sequences(seq1, seq2)
    surj = LatticeMap(free_pair(n), aug_ideal(n), iso.map.mat @ both.surj.mat)
    inj = LatticeMap(both.left, free_pair(n), both.inj.mat)
    return ShortExactSequence(inj, surj)


def fox_sequence(n: int) -> ShortExactSequence:
    """0 -> R^ab -> Z[G]^2 -> I_G -> 0 through Fox derivatives and nu."""
    pair = free_pair(n)
    return ShortExactSequence(LatticeMap(relation_module(n), pair, fox_matrix(n)),
                              LatticeMap(pair, aug_ideal(n), nu_matrix(n)))


def relation_module_sequence(n: int) -> ShortExactSequence:
    """0 -> M+ -> R^ab -> M~+ -> 0 read off the first Fox coordinate.

    M+ is the part of R^ab with vanishing first coordinate, spanned by the
    c_i. A relation r goes to p(r) sigma^{(n+1)/2}, written on the basis
    sigma^{i+1}(1 + tau), sum sigma^i tau of the copy of M~+ in Z[G].
    """
    _require_odd(n)
    size = 2 * n + 1
    inj = IntMatrix.from_columns([[1 if k == 1 + n + (j + 1) % n else 0 for k in range(size)]
                                  for j in range(n)], size)
    fox = fox_matrix(n)
    shift = _rot((n + 1) // 2, n)
    firsts = []
    for col in range(size):
        p = GroupRingVector(n, tuple(fox[i, col] for i in range(2 * n)))
        firsts.append(_right(p, shift).values)
    one_plus_tau = _ring(n, {_rot(0, n): 1, _refl(0, n): 1})
    basis = [_left(_rot(i + 1, n), one_plus_tau).values for i in range(n)]
    basis.append(tuple([0] * n + [1] * n))
    coords = solve_integer(IntMatrix.from_columns(basis, 2 * n), IntMatrix.from_columns(firsts, 2 * n))
    if coords is None:
        raise ArithmeticError("first Fox coordinates leave the M~+ sublattice")
    r = relation_module(n)
    return ShortExactSequence(LatticeMap(m_plus(n), r, inj), LatticeMap(r, mtilde_plus(n), coords))


# Schanuel consistency -------------------------------------------------------

@dataclass(frozen=True)
class SchanuelReport:
    """Rank and cohomology comparison of R^ab + Z[G]^(2n-1) with I_G(x)I_G + Z[G]^2.

    This is a consistency check only; no isomorphism is constructed.
    """

    n: int
    left_rank: int
    right_rank: int
    profiles_equal: bool
    first_difference: str | None = None

    @property
    def consistent(self) -> bool:
        return self.left_rank == self.right_rank and self.profiles_equal


def schanuel_lattices(n: int) -> tuple[DnLattice, DnLattice]:
    left = dsum(relation_module(n), power(regular(n), 2 * n - 1))
    ig = aug_ideal(n)
    right = dsum(tensor(ig, ig), power(regular(n), 2))
    return left, right


def schanuel_consistency(n: int) -> SchanuelReport:
    left, right = schanuel_lattices(n)
    pl, pr = profile(left), profile(right)
    diff = None
    for label in pl.entries:
        if pl.entries[label] != pr.entries[label]:
            diff = f"{label}: {pl.entries[label].as_dict()} vs {pr.entries[label].as_dict()}"
            break
    return SchanuelReport(n, left.rank, right.rank, diff is None, diff)


__all__ = [
    "IsoWitness",
    "LatticeMap",
    "SchanuelReport",
    "ShortExactSequence",
    "augmentation_ideal_splitting",
    "find_section",
    "fox_sequence",
    "free_pair_sequence",
    "group_ring_kernel_matrix",
    "group_ring_sequence",
    "has_section",
    "mplus_to_coset_lattice",
    "mtilde_sequences",
    "mtilde_sum_permutation",
    "norm_quotient_sequences",
    "relation_module_decomposition",
    "relation_module_sequence",
    "relation_module_stably_permutation",
    "rotated_column_order",
    "schanuel_consistency",
    "ses_failure",
    "split_sequence",
    "stably_permutation_minus",
    "stably_permutation_plus",
    "sum_of_sequences",
    "verify_equivariant",
    "verify_iso",
    "verify_ses",
]
