import math

import pytest
from sympy.combinatorics import Permutation as SPerm
from sympy.combinatorics import PermutationGroup as SGroup

from dessins.errors import NotSubgroupError
from dessins.groups import BlockSystem, PermGroup, group_from_json, group_to_json
from dessins.perm import compose, conjugate, order, parse


def sympy_order(G: PermGroup) -> int:
    return SGroup([SPerm(list(g)) for g in G.generators]).order()


def psl32() -> PermGroup:
    return PermGroup([parse("(1,5,2)(3,4,6)", 7), parse("(0,4)(1,6)", 7)])


@pytest.mark.parametrize("G", [
    PermGroup.symmetric(6),
    PermGroup.alternating(7),
    PermGroup.cyclic(12),
    PermGroup([parse("(0,1,2,3,4,5,6,7)", 8), parse("(1,7)(2,6)(3,5)", 8)]),
    PermGroup([parse("(0,2,4)(1,3,5)(6,8,10)(7,9,11)", 14),
               parse("(0,1)(2,3)(4,6)(5,7)(8,12)(9,13)", 14)]),
])
def test_order_matches_sympy(G):
    assert G.order() == sympy_order(G)


def test_a15_order_without_enumeration():
    G = PermGroup.alternating(15)
    assert G.order() == math.factorial(15) // 2


def test_membership():
    G = psl32()
    assert parse("(0,1,2,3,4,5,6)", 7) in G  # translation of the Fano plane
    assert parse("(0,1)", 7) not in G
    for g in G.strong_generators:
        assert g in G


def test_elements_enumeration_is_the_group():
    G = psl32()
    elems = G.elements()
    assert len(elems) == 168 == len(set(elems))
    assert elems[0] == G.identity()
    assert all(compose(a, b) in G for a, b in zip(elems[:20], elems[20:40]))


def test_psl32_classes():
    G = psl32()
    sizes = {C.label: C.size for C in G.conjugacy_classes()}
    assert sizes == {"1A": 1, "2A": 21, "3A": 56, "4A": 42, "7A": 24, "7B": 24}
    assert sum(sizes.values()) == 168


def test_class_sizes_divide_order_and_sum():
    G = PermGroup.symmetric(5)
    cls = G.conjugacy_classes()
    assert len(cls) == 7
    assert sum(C.size for C in cls) == 120
    for C in cls:
        assert G.centralizer_order(C) * C.size == 120


def test_power_map():
    G = psl32()
    sevenA = G.class_by_label("7A")
    assert G.power_map(sevenA, 1) is sevenA
    assert G.power_map(sevenA, -1).label == "7B"
    assert G.power_map(sevenA, 2).label == "7A"


def test_subgroup_and_normality():
    S4 = PermGroup.symmetric(4)
    V = S4.subgroup([parse("(0,1)(2,3)", 4), parse("(0,2)(1,3)", 4)])
    assert V.order() == 4 and V.is_normal_in(S4)
    with pytest.raises(NotSubgroupError):
        PermGroup.alternating(4).subgroup([parse("(0,1)", 4)])


def test_centralizer_and_normalizer():
    S4 = PermGroup.symmetric(4)
    c = S4.centralizer_of(parse("(0,1,2,3)", 4))
    assert c.order() == 4
    H = S4.closure_of([parse("(0,1,2)", 4)])
    assert S4.normalizer_of(H).order() == 6


def test_centralizer_in_sym():
    assert psl32().centralizer_in_sym().order() == 1
    C5 = PermGroup.cyclic(5)
    assert C5.centralizer_in_sym().order() == 5


def test_blocks_of_cyclic_group():
    G = PermGroup.cyclic(4)
    B = G.finest_block_system(0, 2)
    assert sorted(map(sorted, B.blocks)) == [[0, 2], [1, 3]]
    assert not G.is_primitive()
    assert psl32().is_primitive()


def test_block_kernel_and_action():
    G = PermGroup([parse("(0,2,4)(1,3,5)(6,8,10)(7,9,11)", 14),
                   parse("(0,1)(2,3)(4,6)(5,7)(8,12)(9,13)", 14)])
    B = BlockSystem.from_blocks([(2 * i, 2 * i + 1) for i in range(7)])
    assert B.is_invariant(G.generators)
    image, _ = G.block_action(B)
    assert image.order() == 168
    K = G.block_kernel(B)
    assert K.order() == 8 and K.exponent() == 2 and K.is_abelian()


def test_coset_action_and_core():
    G = psl32()
    H = G.point_stabilizer(0)
    image, _ = G.coset_action(H)
    assert image.degree == 7 and image.order() == 168
    assert G.core(H).order() == 1


def test_sylow_subgroups():
    G = psl32()
    assert G.sylow_subgroup(2).order() == 8
    assert G.sylow_subgroup(7).order() == 7
    assert G.sylow_subgroup(3).order() == 3


def test_dihedral_and_cyclic_subgroups():
    G = PermGroup.symmetric(5)
    D = G.dihedral_subgroup(10)
    assert D.order() == 10 and not D.is_abelian()
    assert G.cyclic_subgroup(6).order() == 6


def test_automorphism_count():
    assert psl32().automorphism_count() == 336
    assert PermGroup.alternating(5).automorphism_count() == 120
    assert PermGroup.cyclic(7).automorphism_count() == 6


def test_exponent():
    assert psl32().exponent() == 84


def test_json_round_trip():
    G = psl32()
    H = group_from_json(group_to_json(G))
    assert H.order() == 168 and H.degree == 7


def test_conjugation_preserves_order():
    G = psl32()
    g, h = G.generators
    assert order(conjugate(g, h)) == order(g)
