import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dnlattice.catalog import CONSTRUCTORS, lattice_by_name
from dnlattice.group import IDENTITY, GroupElement, Subgroup, parse_subgroup
from dnlattice.lattices import (
    DnLattice,
    LatticeError,
    act,
    aug_ideal,
    dsum,
    dual,
    is_faithful,
    is_valid,
    literal_permutation_decomposition,
    m_minus,
    m_plus,
    mtilde_plus,
    n_plus,
    perm_mod_sigma,
    perm_mod_tau,
    power,
    regular,
    restrict,
    tensor,
    triv,
    triv_minus,
)
from dnlattice.linalg import IntMatrix
from dnlattice.relmod import relation_module

ODD_ONLY = {"m_plus", "m_minus", "n_plus", "n_minus", "mtilde_plus", "mtilde_minus"}
A3 = IntMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
B3 = IntMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])


def constructible(n):
    names = [k for k in CONSTRUCTORS if n % 2 or k not in ODD_ONLY]
    if n > 4:
        names.remove("IG2")
    return names


@settings(max_examples=60)
@given(st.integers(2, 13))
def test_every_constructor_satisfies_dihedral_relations(n):
    for name in constructible(n):
        lat = lattice_by_name(name, n)
        assert is_valid(lat), name
        assert is_valid(dual(lat)), name


@pytest.mark.parametrize("name", sorted(ODD_ONLY))
def test_odd_only_constructors_reject_even_n(name):
    with pytest.raises(LatticeError):
        CONSTRUCTORS[name](4)


def test_ranks():
    n = 5
    assert m_plus(n).rank == n and n_plus(n).rank == n - 1
    assert mtilde_plus(n).rank == n + 1
    assert regular(n).rank == 2 * n and aug_ideal(n).rank == 2 * n - 1
    assert relation_module(n).rank == 2 * n + 1
    assert lattice_by_name("IG2", 3).rank == 25


def test_mplus_matrices_match_printed_display():
    l = m_plus(3)
    assert act(l, GroupElement(1, 0)) == A3
    assert l.tau == B3
    assert act(l, IDENTITY) == IntMatrix.identity(3)
    assert m_minus(3).tau == -B3


def test_reflection_action_is_product_and_involution():
    l = relation_module(6)
    g = GroupElement(1, 1)
    m = act(l, g)
    assert m == l.sigma @ l.tau
    assert m @ m == IntMatrix.identity(l.rank)


def test_restrict():
    assert restrict(m_plus(3), Subgroup(3, 3, False)) == [(IDENTITY, IntMatrix.identity(3))]
    assert [m for _, m in restrict(m_plus(3), parse_subgroup("dih:3:0", 3))] == [IntMatrix.identity(3), B3]
    mats = [m for _, m in restrict(regular(4), parse_subgroup("dih:2:0", 4))]
    assert len(mats) == 4
    assert all(sorted(m.entries).count(1) == 8 for m in mats)


def test_faithfulness():
    assert not is_faithful(triv(5))
    for n in range(2, 9):
        assert is_faithful(regular(n))
        assert is_faithful(relation_module(n))


def test_functors():
    a, b = m_plus(3), triv_minus(3)
    s = dsum(a, b)
    assert s.rank == 4 and is_valid(s)
    assert power(a, 3).rank == 9
    t = tensor(a, b)
    assert t.rank == 3 and t.tau == -a.tau
    assert dual(dual(a)) == DnLattice(3, a.sigma, a.tau, "dual:dual:M+")
    with pytest.raises(LatticeError):
        dsum(m_plus(3), m_plus(5))


def test_literal_permutation_decomposition():
    n = 6
    assert [h.order for h in literal_permutation_decomposition(regular(n))] == [1]
    stab = literal_permutation_decomposition(m_plus(5))
    assert len(stab) == 1 and stab[0].order == 2 and stab[0].dihedral
    assert [h.label for h in literal_permutation_decomposition(perm_mod_sigma(n))] == ["rot:1"]
    assert len(literal_permutation_decomposition(dsum(perm_mod_tau(n), triv(n)))) == 2
    assert literal_permutation_decomposition(n_plus(5)) is None


def test_lattice_by_name():
    assert lattice_by_name("dual:dual:Rab", 3).sigma == relation_module(3).sigma
    with pytest.raises(KeyError):
        lattice_by_name("nope", 3)
