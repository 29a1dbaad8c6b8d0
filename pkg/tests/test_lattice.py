from itertools import product

import pytest

from dessins.errors import CapExceeded
from dessins.groups import PermGroup
from dessins.lattice import SubgroupLattice, count_core_free_classes, subgroup_lattice
from dessins.perm import parse


def brute_subgroups(G: PermGroup) -> set[frozenset]:
    """Oracle for 2-generated groups: closures of all pairs of elements."""
    elems = G.elements()
    out = set()
    for a, b in product(elems, repeat=2):
        out.add(frozenset(G.closure_of([a, b]).elements()))
    return out


@pytest.mark.parametrize("G, subgroups, classes", [
    (PermGroup.cyclic(6), 4, 4),
    (PermGroup.symmetric(3), 6, 4),
    (PermGroup.symmetric(4), 30, 11),
    (PermGroup.alternating(5), 59, 9),
])
def test_subgroup_counts(G, subgroups, classes):
    L = SubgroupLattice(G)
    assert len(L) == subgroups
    assert len(L.classes) == classes


@pytest.mark.parametrize("G", [PermGroup.symmetric(4), PermGroup.alternating(5)])
def test_against_pair_closures(G):
    # every subgroup of S4 and A5 is 2-generated
    L = SubgroupLattice(G)
    found = {frozenset(L.elements_of(m)) for m in L.subgroups}
    assert found == brute_subgroups(G)


def test_a5_class_orders_and_core_free():
    L = SubgroupLattice(PermGroup.alternating(5))
    assert [c.order for c in L.classes] == [1, 2, 3, 4, 5, 6, 10, 12, 60]
    assert count_core_free_classes(PermGroup.alternating(5)) == 8


def test_psl32_lattice():
    G = PermGroup([parse("(1,5,2)(3,4,6)", 7), parse("(0,4)(1,6)", 7)])
    L = subgroup_lattice(G)
    assert len(L) == 179 and len(L.classes) == 15
    assert count_core_free_classes(G, 7) == 2
    assert count_core_free_classes(G, 8) == 1


def test_containing_counts_include_self_and_top():
    L = SubgroupLattice(PermGroup.symmetric(4))
    for c in L.classes:
        counts = L.containing_counts(c)
        assert counts[c.id] == 1
        assert counts[L.classes[-1].id] == 1


def test_maximal_inclusions_of_s3():
    L = SubgroupLattice(PermGroup.symmetric(3))
    # trivial < three C2 and one C3; each of those < S3
    assert len(L.maximal_inclusions) == 8


def test_normal_classes():
    L = SubgroupLattice(PermGroup.symmetric(4))
    assert sorted(c.order for c in L.classes if c.is_normal) == [1, 4, 12, 24]


def test_cap():
    with pytest.raises(CapExceeded):
        SubgroupLattice(PermGroup.symmetric(7))
