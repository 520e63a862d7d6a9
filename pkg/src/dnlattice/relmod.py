"""The relation module R^ab of D_n = <s1, s2 | ...>, built two ways.

``relation_module`` writes down the sigma/tau action on the basis
a, b_0..b_{n-1}, c_0..c_{n-1} directly. ``rewritten_action`` rebuilds the
same matrices by Reidemeister-Schreier rewriting of conjugated relators, and
``fox_embedding`` realizes R^ab inside Z[G]^2 through abelianized Fox
derivatives.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .group import GroupElement, IDENTITY, element_inv, element_mul, elements
from .lattices import DnLattice, aug_ideal, dsum, regular
from .linalg import IntMatrix


# free words -------------------------------------------------------------

@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word; letters are k or -k for generator s_k (k = 1, 2)."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        out: list[int] = []
        for x in self.letters:
            if x == 0:
                raise ValueError("letter 0 is not a generator")
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        object.__setattr__(self, "letters", tuple(out))

    @classmethod
    def power(cls, gen: int, e: int) -> FreeWord:
        return cls((gen if e > 0 else -gen,) * abs(e))

    @classmethod
    def parse(cls, text: str) -> FreeWord:
        """Inverse of ``str``: tokens like ``s1``, ``s2^-1``, ``s1^3``; empty or ``1`` is the identity."""
        letters: list[int] = []
        for tok in text.split():
            if tok == "1":
                continue
            base, _, exp = tok.partition("^")
            if base not in ("s1", "s2"):
                raise ValueError(f"bad token {tok!r}")
            letters.extend(cls.power(int(base[1]), int(exp) if exp else 1).letters)
        return cls(tuple(letters))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple(-x for x in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


def s(k: int, e: int = 1) -> FreeWord:
    return FreeWord.power(k, e)


# group ring -------------------------------------------------------------

@dataclass(frozen=True)
class GroupRingVector:
    """Element of Z[D_n] stored densely in the fixed group order."""

    n: int
    values: tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> GroupRingVector:
        return cls(n, (0,) * (2 * n))

    @classmethod
    def of(cls, g: GroupElement, n: int, coeff: int = 1) -> GroupRingVector:
        v = [0] * (2 * n)
        v[g.index(n)] = coeff
        return cls(n, tuple(v))

    @classmethod
    def from_coeffs(cls, coeffs: dict[GroupElement, int], n: int) -> GroupRingVector:
        v = [0] * (2 * n)
        for g, c in coeffs.items():
            v[g.index(n)] += c
        return cls(n, tuple(v))

    @property
    def coeffs(self) -> dict[GroupElement, int]:
        return {g: c for g, c in zip(elements(self.n), self.values) if c}

    def __add__(self, other: GroupRingVector) -> GroupRingVector:
        return GroupRingVector(self.n, tuple(x + y for x, y in zip(self.values, other.values)))

    def __neg__(self) -> GroupRingVector:
        return GroupRingVector(self.n, tuple(-x for x in self.values))

    def __sub__(self, other: GroupRingVector) -> GroupRingVector:
        return self + (-other)

    def __mul__(self, other: GroupRingVector) -> GroupRingVector:
        out = [0] * (2 * self.n)
        for g, x in self.coeffs.items():
            for h, y in other.coeffs.items():
                out[element_mul(g, h, self.n).index(self.n)] += x * y
        return GroupRingVector(self.n, tuple(out))

    def augmentation(self) -> int:
        return sum(self.values)

    def __str__(self) -> str:
        terms = [f"{c}*{g.label()}" for g, c in self.coeffs.items()]
        return " + ".join(terms) if terms else "0"


def evaluate(w: FreeWord, n: int) -> GroupElement:
    """Image of ``w`` in D_n under s1 -> sigma, s2 -> tau."""
    gens = {1: GroupElement(1 % n, 0), 2: GroupElement(0, 1)}
    g = IDENTITY
    for x in w.letters:
        h = gens[abs(x)]
        g = element_mul(g, h if x > 0 else element_inv(h, n), n)
    return g


def fox_derivative(w: FreeWord, gen: int, n: int) -> GroupRingVector:
    """epsilon(dw/ds_gen) in Z[D_n], by the product rule letter by letter."""
    gens = {1: GroupElement(1 % n, 0), 2: GroupElement(0, 1)}
    acc = [0] * (2 * n)
    prefix = IDENTITY
    for x in w.letters:
        h = gens[abs(x)]
        if x > 0:
            if x == gen:
                acc[prefix.index(n)] += 1
            prefix = element_mul(prefix, h, n)
        else:
            prefix = element_mul(prefix, element_inv(h, n), n)
            if -x == gen:
                acc[prefix.index(n)] -= 1
    return GroupRingVector(n, tuple(acc))


# Reidemeister-Schreier rewriting ----------------------------------------

class SchreierRewriter:
    """Rewriting over a Schreier transversal of a finite quotient of F(s1, s2).

    ``mul`` and ``images`` describe the finite group; ``rep`` maps each group
    element to its transversal word. Free generators of the relation subgroup
    are the nontrivial words ``rep(g) s_k rep(g s_k)^-1``, keyed by ``(g, k)``.
    """

    def __init__(self, mul: Callable[[Hashable, Hashable], Hashable],
                 inv: Callable[[Hashable], Hashable], identity: Hashable,
                 images: dict[int, Hashable], rep: Callable[[Hashable], FreeWord]):
        self.mul = mul
        self.inv = inv
        self.identity = identity
        self.images = images
        self.rep = rep

    def schreier_word(self, g: Hashable, k: int) -> FreeWord:
        gk = self.mul(g, self.images[k])
        return self.rep(g) * s(k) * self.rep(gk).inverse()

    def rewrite(self, w: FreeWord) -> Counter:
        """Abelianized rewrite of ``w``: exponent of each nontrivial (g, k)."""
        out: Counter = Counter()
        g = self.identity
        for x in w.letters:
            k = abs(x)
            if x > 0:
                key, sign = g, 1
                g = self.mul(g, self.images[k])
            else:
                g = self.mul(g, self.inv(self.images[k]))
                key, sign = g, -1
            if len(self.schreier_word(key, k)):
                out[(key, k)] += sign
        if g != self.identity:
            raise ValueError(f"{w} does not lie in the relation subgroup")
        return Counter({key: e for key, e in out.items() if e})


@dataclass(frozen=True)
class RelGenerators:
    a: FreeWord
    b: tuple[FreeWord, ...]
    c: tuple[FreeWord, ...]

    def words(self) -> list[FreeWord]:
        return [self.a, *self.b, *self.c]


def _rep(g: GroupElement) -> FreeWord:
    return s(1, g.rot) * s(2, g.flip)


def dihedral_rewriter(n: int) -> SchreierRewriter:
    """Rewriter over the transversal s1^i s2^j (0 <= i < n, 0 <= j <= 1)."""
    return SchreierRewriter(lambda g, h: element_mul(g, h, n), lambda g: element_inv(g, n),
                            IDENTITY, {1: GroupElement(1 % n, 0), 2: GroupElement(0, 1)}, _rep)


@lru_cache(maxsize=None)
def schreier_generators(n: int) -> RelGenerators:
    """a = s1^n, b_i = s1^i s2 s1 s2^-1 s1^-(i-1), c_i = s1^i s2^2 s1^-i.

    b_0 = s2 s1 s2^-1 s1 replaces the raw Schreier generator
    s2 s1 s2^-1 s1^-(n-1), which equals b_0 a^-1.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    a = s(1, n)
    b = tuple(s(1, i) * s(2) * s(1) * s(2, -1) * s(1, -(i - 1)) for i in range(n))
    c = tuple(s(1, i) * s(2, 2) * s(1, -i) for i in range(n))
    return RelGenerators(a, b, c)


def _raw_to_basis(n: int) -> dict[tuple[GroupElement, int], dict[int, int]]:
    """Coordinates of each nontrivial raw Schreier generator in the a, b, c basis."""
    table = {(GroupElement(n - 1, 0), 1): {0: 1}}
    table[(GroupElement(0, 1), 1)] = {1: 1, 0: -1}
    for i in range(1, n):
        table[(GroupElement(i, 1), 1)] = {1 + i: 1}
    for i in range(n):
        table[(GroupElement(i, 1), 2)] = {1 + n + i: 1}
    return table


def abelianized_coordinates(w: FreeWord, n: int) -> list[int]:
    """Image of a relator ``w`` in R^ab on the basis a, b_0.., c_0.."""
    rw = dihedral_rewriter(n)
    table = _raw_to_basis(n)
    vec = [0] * (2 * n + 1)
    for key, e in rw.rewrite(w).items():
        for idx, coeff in table[key].items():
            vec[idx] += e * coeff
    return vec


def rewrite_conjugate(n: int, gen_index: int, conjugator: int) -> list[int]:
    """Coordinates of x g x^-1 for relation generator number ``gen_index`` and x = s_conjugator."""
    words = schreier_generators(n).words()
    if not 0 <= gen_index < len(words):
        raise IndexError(f"generator index {gen_index} outside 0..{len(words) - 1}")
    if conjugator not in (1, 2):
        raise ValueError("conjugator must be 1 or 2")
    x = s(conjugator)
    return abelianized_coordinates(x * words[gen_index] * x.inverse(), n)


def rewritten_action(n: int) -> tuple[IntMatrix, IntMatrix]:
    """sigma and tau on R^ab, column by column from rewriting."""
    size = 2 * n + 1
    sig = IntMatrix.from_columns([rewrite_conjugate(n, j, 1) for j in range(size)], size)
    tau = IntMatrix.from_columns([rewrite_conjugate(n, j, 2) for j in range(size)], size)
    return sig, tau


def relation_basis(n: int) -> tuple[str, ...]:
    return ("a",) + tuple(f"b{i}" for i in range(n)) + tuple(f"c{i}" for i in range(n))


@lru_cache(maxsize=None)
def relation_module(n: int) -> DnLattice:
    """R^ab with the action written out on a, b_0..b_{n-1}, c_0..c_{n-1}."""
    if n < 2:
        raise ValueError("n must be at least 2")
    size = 2 * n + 1
    a, b, c = 0, (lambda i: 1 + i % n), (lambda i: 1 + n + i % n)
    sig = [[0] * size for _ in range(size)]
    tau = [[0] * size for _ in range(size)]
    sig[a][a] = 1
    for i in range(n):
        sig[b(i + 1)][b(i)] = 1
        sig[c(i + 1)][c(i)] = 1

    def put(col: int, terms: Sequence[tuple[int, int]]) -> None:
        for row, coeff in terms:
            tau[row][col] += coeff

    put(a, [(a, -1)] + [(b(i), 1) for i in range(n)])
    put(b(0), [(b(1), 1), (c(0), 1), (c(1), -1)])
    put(b(1), [(b(0), 1), (c(n - 1), 1), (c(0), -1)])
    for i in range(2, n):
        put(b(i), [(b(n - i + 1), 1), (c(n - i), 1), (c(n - i + 1), -1)])
    for i in range(n):
        put(c(i), [(c(-i), 1)])
    return DnLattice(n, IntMatrix.from_rows(sig, size), IntMatrix.from_rows(tau, size), "Rab",
                     relation_basis(n))


def rewriting_matches_transcription(n: int) -> bool:
    l = relation_module(n)
    return rewritten_action(n) == (l.sigma, l.tau)


# Z[G]^2 -> I_G ----------------------------------------------------------

def fox_matrix(n: int) -> IntMatrix:
    """4n x (2n+1): column r is (eps dr/ds1, eps dr/ds2) for each relation generator."""
    cols = []
    for w in schreier_generators(n).words():
        cols.append(fox_derivative(w, 1, n).values + fox_derivative(w, 2, n).values)
    return IntMatrix.from_columns(cols, 4 * n)


def nu_matrix(n: int) -> IntMatrix:
    """(2n-1) x 4n: (p, q) -> p(1 - sigma) + q(1 - tau) in I_G coordinates."""
    sigma, tau = GroupElement(1 % n, 0), GroupElement(0, 1)
    cols = []
    for right in (sigma, tau):
        for g in elements(n):
            v = [0] * (2 * n)
            v[g.index(n)] += 1
            v[element_mul(g, right, n).index(n)] -= 1
            cols.append(v[1:])
    return IntMatrix.from_columns(cols, 2 * n - 1)


def free_pair(n: int) -> DnLattice:
    return dsum(regular(n), regular(n)).relabel("Z[G]^2")


def fox_embedding(n: int):
    from .witnesses import LatticeMap

    return LatticeMap(relation_module(n), free_pair(n), fox_matrix(n))


def nu_map(n: int):
    from .witnesses import LatticeMap

    return LatticeMap(free_pair(n), aug_ideal(n), nu_matrix(n))

