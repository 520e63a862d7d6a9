"""Tate cohomology in degrees -1 and 0 and first cohomology of D_n-lattices.

Every torsion quotient goes the same way: take a basis K of the ambient
sublattice, write the generators of the smaller sublattice in K-coordinates
with ``solve_integer``, and read the invariants off the Smith form.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .group import GroupElement, IDENTITY, Subgroup, element_mul, full_group, subgroups
from .lattices import DnLattice, action_table
from .linalg import (
    AbelianInvariants,
    IntMatrix,
    _row_hnf,
    cokernel_invariants,
    hstack,
    kernel_basis,
    solve_integer,
    vstack,
)


_INT64_SAFE = 1 << 62


class CohomologyError(ArithmeticError):
    """A quotient that must be finite or well defined was not."""


def _matrices(l: DnLattice, s: Subgroup) -> dict[GroupElement, IntMatrix]:
    if s.n != l.n:
        raise ValueError(f"{s.label} is a subgroup of D_{s.n}, not D_{l.n}")
    table = action_table(l)
    return {g: table[g] for g in s.elements()}


def norm_matrix(l: DnLattice, s: Subgroup) -> IntMatrix:
    mats = list(_matrices(l, s).values())
    out = mats[0]
    for m in mats[1:]:
        out = out + m
    return out


def _quotient(sub_basis: IntMatrix, gens: IntMatrix, what: str) -> AbelianInvariants:
    """(span of sub_basis) / (span of gens), assuming gens lie inside."""
    if sub_basis.cols == 0:
        return AbelianInvariants((), 0)
    if gens.cols == 0:
        inv = AbelianInvariants((), sub_basis.cols)
    else:
        coords = solve_integer(sub_basis, gens)
        if coords is None:
            raise CohomologyError(f"{what}: generators escape the ambient sublattice")
        inv = cokernel_invariants(coords)
    if inv.free_rank:
        raise CohomologyError(f"{what}: quotient has free rank {inv.free_rank}")
    return inv


def tate_minus1(l: DnLattice, s: Subgroup) -> AbelianInvariants:
    """ker(norm) / I_S M."""
    mats = _matrices(l, s)
    one = IntMatrix.identity(l.rank)
    k = kernel_basis(norm_matrix(l, s))
    aug = [m - one for g, m in mats.items() if g != IDENTITY]
    gens = hstack(*aug) if aug else IntMatrix.zeros(l.rank, 0)
    return _quotient(k, gens, f"H^-1({s.label}, {l.label})")


def tate_zero_hat(l: DnLattice, s: Subgroup) -> AbelianInvariants:
    """M^S / norm(M)."""
    mats = _matrices(l, s)
    one = IntMatrix.identity(l.rank)
    gens = [mats[g] - one for g in s.generators()]
    fixed = kernel_basis(vstack(*gens)) if gens else one
    return _quotient(fixed, norm_matrix(l, s), f"H^0({s.label}, {l.label})")


def _word_coefficients(mats: dict[GroupElement, IntMatrix], gens: list[GroupElement], n: int,
                       rank: int) -> dict[GroupElement, IntMatrix]:
    """For each g, the rank x (len(gens)*rank) matrix C_g with f(g) = C_g [f(gens)].

    Built by breadth-first search from the cocycle rule f(g h) = f(g) + g f(h).
    """
    width = rank * len(gens)
    coeff = {IDENTITY: IntMatrix.zeros(rank, width)}
    queue = deque([IDENTITY])
    while queue:
        g = queue.popleft()
        for k, h in enumerate(gens):
            gh = element_mul(g, h, n)
            if gh in coeff:
                continue
            unit = [IntMatrix.zeros(rank, rank)] * len(gens)
            unit[k] = mats[g]
            coeff[gh] = coeff[g] + hstack(*unit)
            queue.append(gh)
    return coeff


def _reduced(rows: IntMatrix) -> IntMatrix:
    h, _, pivots = _row_hnf(rows)
    return IntMatrix.from_rows(h[:len(pivots)], rows.cols) if pivots else IntMatrix.zeros(0, rows.cols)


def _pair_equations_exact(mats, coeff, n):
    for g in mats:
        for h in mats:
            eq = coeff[element_mul(g, h, n)] - coeff[g] - mats[g] @ coeff[h]
            if not eq.is_zero():
                yield eq.to_rows()


def _pair_equations_int64(mats, coeff, n):
    """Same rows as the exact generator, batched per g; None if int64 could overflow."""
    order = list(mats)
    index = {g: i for i, g in enumerate(order)}
    c = np.array([coeff[g].to_rows() for g in order], dtype=object)
    r = np.array([mats[g].to_rows() for g in order], dtype=object)
    cmax = int(np.abs(c).max()) if c.size else 0
    rmax = int(np.abs(r).max()) if r.size else 0
    if rmax * cmax * max(1, r.shape[1]) + 2 * cmax >= _INT64_SAFE:
        return None
    c = c.astype(np.int64)
    r = r.astype(np.int64)
    rows = []
    for g in order:
        i = index[g]
        prod = [index[element_mul(g, h, n)] for h in order]
        eq = c[prod] - c[i] - np.einsum("ij,hjk->hik", r[i], c)
        rows.append(eq.reshape(-1, c.shape[2]))
    allrows = np.concatenate(rows)
    allrows = allrows[np.any(allrows != 0, axis=1)]
    if not len(allrows):
        return []
    return np.unique(allrows, axis=0).tolist()


def cocycle_basis(l: DnLattice, s: Subgroup) -> tuple[IntMatrix, list[GroupElement]]:
    """Basis of Z^1(S, M) as columns of stacked generator values f(gens).

    A cocycle is determined by its values on the generators; the condition
    f(g h) = f(g) + g f(h) is then imposed for every pair (g, h) in S. The
    pair equations are folded into a running Hermite form so the system
    never grows much beyond the number of unknowns.
    """
    mats = _matrices(l, s)
    gens = s.generators()
    r = l.rank
    width = r * len(gens)
    if not width:
        return IntMatrix.zeros(0, 0), gens
    coeff = _word_coefficients(mats, gens, l.n, r)
    eqs = _pair_equations_int64(mats, coeff, l.n)
    if eqs is None:
        eqs = [row for block in _pair_equations_exact(mats, coeff, l.n) for row in block]
    system: list[list[int]] = []
    chunk = max(width, 16)
    for start in range(0, len(eqs), chunk):
        block = IntMatrix.from_rows(system + eqs[start:start + chunk], width)
        system = _reduced(block).to_rows()
    if not system:
        return IntMatrix.identity(width), gens
    return kernel_basis(IntMatrix.from_rows(system, width)), gens


def h1(l: DnLattice, s: Subgroup) -> AbelianInvariants:
    """Z^1 / B^1 with B^1 the cocycles g -> (g - 1) m."""
    z1, gens = cocycle_basis(l, s)
    if not gens:
        return AbelianInvariants((), 0)
    mats = _matrices(l, s)
    one = IntMatrix.identity(l.rank)
    b1 = vstack(*(mats[g] - one for g in gens))
    return _quotient(z1, b1, f"H^1({s.label}, {l.label})")


@dataclass(frozen=True)
class VanishingCheck:
    """Outcome of a flabby or coflabby test; false checks name a witness subgroup."""

    holds: bool
    subgroup: str | None = None
    group: AbelianInvariants | None = None

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return "vanishes on every subgroup"
        return f"{self.group} at {self.subgroup}"


def _first_nonvanishing(l: DnLattice, fn) -> VanishingCheck:
    for sub in subgroups(l.n):
        g = fn(l, sub)
        if not g.is_trivial:
            return VanishingCheck(False, sub.label, g)
    return VanishingCheck(True)


def is_flabby(l: DnLattice) -> VanishingCheck:
    return _first_nonvanishing(l, tate_minus1)


def is_coflabby(l: DnLattice) -> VanishingCheck:
    return _first_nonvanishing(l, h1)


@dataclass(frozen=True)
class CohomologyEntry:
    h_minus1: AbelianInvariants
    h0_hat: AbelianInvariants
    h1: AbelianInvariants

    def as_dict(self) -> dict[str, str]:
        return {"h_minus1": str(self.h_minus1), "h0_hat": str(self.h0_hat), "h1": str(self.h1)}


def cohomology_entry(l: DnLattice, s: Subgroup) -> CohomologyEntry:
    return CohomologyEntry(tate_minus1(l, s), tate_zero_hat(l, s), h1(l, s))


def _entry_job(args):
    l, s = args
    return cohomology_entry(l, s)


def worker_count() -> int:
    raw = os.environ.get("DNLATTICE_WORKERS", "")
    if raw:
        return max(1, int(raw))
    return 1


@dataclass(frozen=True)
class CohomologyProfile:
    n: int
    entries: dict[str, CohomologyEntry]

    def as_dict(self) -> dict[str, dict[str, str]]:
        return {label: e.as_dict() for label, e in self.entries.items()}


def profile(l: DnLattice, workers: int | None = None) -> CohomologyProfile:
    """All three groups on every subgroup, keyed by subgroup label in subgroup order."""
    subs = subgroups(l.n)
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(subs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(subs))) as pool:
            results = list(pool.map(_entry_job, [(l, s) for s in subs]))
    else:
        results = [cohomology_entry(l, s) for s in subs]
    return CohomologyProfile(l.n, {s.label: e for s, e in zip(subs, results)})


def anisotropic_part(l: DnLattice) -> tuple[IntMatrix, int]:
    """Kernel of the full-group norm, and the rank of the quotient by it."""
    k = kernel_basis(norm_matrix(l, full_group(l.n)))
    return k, l.rank - k.cols
