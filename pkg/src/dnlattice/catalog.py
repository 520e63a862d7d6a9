"""Lattices by name, as accepted on the command line."""

from __future__ import annotations

from typing import Callable

from . import lattices as L
from .lattices import DnLattice
from .relmod import relation_module

CONSTRUCTORS: dict[str, Callable[[int], DnLattice]] = {
    "triv": L.triv,
    "triv_minus": L.triv_minus,
    "regular": L.regular,
    "perm_mod_sigma": L.perm_mod_sigma,
    "perm_mod_tau": L.perm_mod_tau,
    "aug_ideal": L.aug_ideal,
    "m_plus": L.m_plus,
    "m_minus": L.m_minus,
    "n_plus": L.n_plus,
    "n_minus": L.n_minus,
    "mtilde_plus": L.mtilde_plus,
    "mtilde_minus": L.mtilde_minus,
    "Rab": relation_module,
    "IG": L.aug_ideal,
    "IG2": L.aug_tensor_square,
}


def lattice_names() -> list[str]:
    return list(CONSTRUCTORS) + ["dual:<name>"]


def lattice_by_name(name: str, n: int) -> DnLattice:
    """Build a named lattice; ``dual:<name>`` may be nested."""
    if name.startswith("dual:"):
        return L.dual(lattice_by_name(name[len("dual:"):], n))
    try:
        ctor = CONSTRUCTORS[name]
    except KeyError:
        raise KeyError(f"unknown lattice {name!r}; choose from {', '.join(lattice_names())}") from None
    return ctor(n)
