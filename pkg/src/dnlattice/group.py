"""The dihedral group D_n = <sigma, tau | sigma^n = tau^2 = 1, tau sigma tau^-1 = sigma^-1>."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True, order=True)
class GroupElement:
    """``sigma^rot tau^flip`` in canonical form (``0 <= rot < n``).

    Elements carry no ``n``; the caller reduces exponents with :func:`element`.
    """

    rot: int
    flip: int = 0

    def index(self, n: int) -> int:
        """Position in the fixed group order sigma^0..sigma^{n-1}, tau, sigma tau, ..."""
        return self.rot + self.flip * n

    def label(self) -> str:
        if self.rot == 0 and self.flip == 0:
            return "1"
        s = "" if self.rot == 0 else ("s" if self.rot == 1 else f"s^{self.rot}")
        t = "t" if self.flip else ""
        return s + t


def element(rot: int, flip: int, n: int) -> GroupElement:
    return GroupElement(rot % n, flip % 2)


IDENTITY = GroupElement(0, 0)


def element_mul(a: GroupElement, b: GroupElement, n: int) -> GroupElement:
    """``(sigma^i tau^s)(sigma^j tau^t) = sigma^(i + (-1)^s j) tau^(s+t)``."""
    sign = -1 if a.flip else 1
    return GroupElement((a.rot + sign * b.rot) % n, (a.flip + b.flip) % 2)


def element_inv(a: GroupElement, n: int) -> GroupElement:
    if a.flip:
        return a
    return GroupElement((-a.rot) % n, 0)


def elements(n: int) -> list[GroupElement]:
    """All 2n elements in the fixed group order."""
    return [GroupElement(i, 0) for i in range(n)] + [GroupElement(i, 1) for i in range(n)]


@dataclass(frozen=True)
class Subgroup:
    """``<sigma^d>`` (rotation) or ``<sigma^d, sigma^offset tau>`` (dihedral), with ``d | n``."""

    n: int
    d: int
    dihedral: bool
    offset: int = 0

    def __post_init__(self):
        if self.n < 1 or self.d < 1 or self.n % self.d:
            raise ValueError(f"{self.d} does not divide {self.n}")
        if self.dihedral:
            if not 0 <= self.offset < self.d:
                raise ValueError(f"offset {self.offset} outside [0, {self.d})")
        elif self.offset:
            raise ValueError("rotation subgroups carry no offset")

    @property
    def label(self) -> str:
        return f"dih:{self.d}:{self.offset}" if self.dihedral else f"rot:{self.d}"

    @property
    def order(self) -> int:
        return (2 if self.dihedral else 1) * (self.n // self.d)

    def elements(self) -> list[GroupElement]:
        rots = [GroupElement(k, 0) for k in range(0, self.n, self.d)]
        if not self.dihedral:
            return rots
        return rots + [GroupElement((k + self.offset) % self.n, 1) for k in range(0, self.n, self.d)]

    def generators(self) -> list[GroupElement]:
        gens = [GroupElement(self.d % self.n, 0)] if self.d != self.n else []
        if self.dihedral:
            gens.append(GroupElement(self.offset, 1))
        return gens

    def __contains__(self, g: GroupElement) -> bool:
        if g.flip:
            return self.dihedral and (g.rot - self.offset) % self.d == 0
        return g.rot % self.d == 0

    def __str__(self) -> str:
        return self.label


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _subgroups(n: int) -> tuple[Subgroup, ...]:
    subs = [Subgroup(n, d, False) for d in _divisors(n)]
    subs += [Subgroup(n, d, True, i) for d in _divisors(n) for i in range(d)]
    subs.sort(key=lambda s: (s.order, s.dihedral, s.offset))
    return tuple(subs)


def subgroups(n: int) -> list[Subgroup]:
    """Every subgroup of D_n exactly once, sorted by (order, kind, offset)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return list(_subgroups(n))


def parse_subgroup(spec: str, n: int) -> Subgroup:
    """Parse ``rot:d`` or ``dih:d:i`` into a subgroup of D_n."""
    parts = spec.split(":")
    try:
        if parts[0] == "rot" and len(parts) == 2:
            return Subgroup(n, int(parts[1]), False)
        if parts[0] == "dih" and len(parts) == 3:
            return Subgroup(n, int(parts[1]), True, int(parts[2]))
    except ValueError as exc:
        raise ValueError(f"{spec!r} is not a subgroup of D_{n}: {exc}") from None
    raise ValueError(f"cannot parse subgroup spec {spec!r}")


def full_group(n: int) -> Subgroup:
    return Subgroup(n, 1, True, 0)


def klein_subgroup(n: int) -> Subgroup:
    """``<sigma^(n/2), tau>``, a copy of C2 x C2 when n is even."""
    if n % 2:
        raise ValueError("the Klein four subgroup needs even n")
    return Subgroup(n, n // 2, True, 0)
