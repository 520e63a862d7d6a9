import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dnlattice.group import (
    IDENTITY,
    GroupElement,
    Subgroup,
    element,
    element_inv,
    element_mul,
    elements,
    full_group,
    klein_subgroup,
    parse_subgroup,
    subgroups,
)


def brute_force_subgroups(n):
    """Every subset closed under multiplication, by exhaustion (small n only)."""
    els = elements(n)
    found = set()
    for k in range(1, len(els) + 1):
        for subset in itertools.combinations(els, k):
            s = set(subset)
            if IDENTITY in s and all(element_mul(a, b, n) in s for a in s for b in s):
                found.add(frozenset(s))
    return found


def test_defining_relations():
    n = 7
    s, t = GroupElement(1, 0), GroupElement(0, 1)
    assert element_mul(t, s, n) == GroupElement(n - 1, 1)
    assert element_mul(GroupElement(3, 0), GroupElement(5, 0), n) == GroupElement(1, 0)
    st_ = element_mul(s, t, n)
    assert element_mul(st_, st_, n) == IDENTITY


@given(st.integers(2, 12), st.data())
def test_group_axioms(n, data):
    pick = st.sampled_from(elements(n))
    a, b, c = data.draw(pick), data.draw(pick), data.draw(pick)
    assert element_mul(element_mul(a, b, n), c, n) == element_mul(a, element_mul(b, c, n), n)
    assert element_mul(a, element_inv(a, n), n) == IDENTITY
    assert element_mul(IDENTITY, a, n) == a


@pytest.mark.parametrize("n,count", [(2, 5), (3, 6), (6, 16)])
def test_subgroup_counts(n, count):
    assert len(subgroups(n)) == count


@pytest.mark.parametrize("n", [2, 3, 4])
def test_subgroups_match_brute_force(n):
    ours = {frozenset(s.elements()) for s in subgroups(n)}
    assert ours == brute_force_subgroups(n)


@given(st.integers(2, 20))
def test_subgroups_are_closed_and_listed_once(n):
    subs = subgroups(n)
    assert len({frozenset(s.elements()) for s in subs}) == len(subs)
    for s in subs:
        els = set(s.elements())
        assert len(els) == s.order
        assert all(element_mul(a, b, n) in els for a in els for b in els)
        assert all(g in s for g in els)


def test_labels_parse_back():
    for s in subgroups(12):
        assert parse_subgroup(s.label, 12) == s
    with pytest.raises(ValueError):
        parse_subgroup("rot:5", 12)
    with pytest.raises(ValueError):
        parse_subgroup("dih:3:3", 12)
    with pytest.raises(ValueError):
        parse_subgroup("cyc:3", 12)


def test_named_subgroups():
    assert full_group(5).order == 10
    k = klein_subgroup(8)
    assert k.label == "dih:4:0"
    assert set(k.elements()) == {IDENTITY, GroupElement(4, 0), GroupElement(0, 1), GroupElement(4, 1)}
    with pytest.raises(ValueError):
        klein_subgroup(5)
    assert element(-1, 3, 5) == GroupElement(4, 1)
    assert Subgroup(6, 6, False).elements() == [IDENTITY]
