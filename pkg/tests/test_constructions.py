import pytest

from dessins.constructions import (
    a15_cover_genus,
    agl32,
    constructed_quotient_genus,
    fano_plane,
    fano_tree_triples,
    genus17_triples,
    hurwitz_case,
    hurwitz_cover_genus,
    hurwitz_params,
    line_through,
    matrix_order_check,
    max_element_order,
    moebius_action,
    monotonicity_failure_demo,
    nonsplit_witness,
    preserves_lines,
    psl2_27_triple,
    psl2_group,
    psl2_hurwitz_triple,
    psl2_natural_triple,
    psl2_order7_fusion,
    quotient_genus_psl2,
)
from dessins.dessin import cover_genus, isomorphic
from dessins.perm import INFINITY, fixed_points, parse


def test_fano_plane():
    lines = fano_plane()
    assert len(lines) == 7
    assert line_through(0, 1) == {0, 1, 3}
    pairs = [(a, b) for a in range(7) for b in range(a + 1, 7)]
    assert all(sum(1 for L in lines if a in L and b in L) == 1 for a, b in pairs)
    assert preserves_lines(parse("(0,1,2,3,4,5,6)", 7))
    y = parse("(0,4)(1,6)", 7)
    assert preserves_lines(y) and {2, 3, 5} <= fixed_points(y)


def test_fano_trees():
    left, right = fano_tree_triples()
    for D in (left, right):
        assert D.degree == 7 and D.genus == 0 and D.monodromy.order() == 168
    assert str(left.passport) == "(3^2 1^1, 2^2 1^3, 7^1)"
    assert right.z == parse("(0,4,1,5,2,6,3)", 7)
    assert isomorphic(right, left.mirror()) is not None
    assert isomorphic(right, left) is None
    assert all(preserves_lines(g) for g in left.triple)


@pytest.mark.parametrize("q, order", [(7, 168), (8, 504), (13, 1092), (27, 9828)])
def test_psl2_orders(q, order):
    assert psl2_group(q).order() == order


def test_psl2_7_natural_triple():
    D = psl2_natural_triple(7)
    assert str(D.passport) == "(3^2 1^2, 2^4, 7^1 1^1)"
    assert D.z[7] == 7  # ∞ is point 7 and is fixed by t -> t+1
    assert D.genus == 0 and D.monodromy.order() == 168
    assert matrix_order_check(7)
    assert moebius_action(7, (1, 1, 0, 1)) == D.z


def test_psl2_27_triple():
    D = psl2_27_triple()
    assert str(D.passport) == "(3^9 1^1, 2^14, 7^4)"
    assert D.genus == 1
    assert D.monodromy.order() == 9828
    assert cover_genus(D) == 118
    assert fixed_points(D.x) == {2}  # label 3


def test_psl2_27_order7_classes_fused():
    assert psl2_order7_fusion(27) == 3


def test_genus17_maps():
    maps = genus17_triples()
    assert [D.monodromy.order() for D in maps] == [1344, 1344, 168]
    assert [cover_genus(D) for D in maps] == [17, 17, 3]


def test_agl32():
    A = agl32()
    assert A.order() == 1344
    assert max_element_order(A) == 7


def test_nonsplit_witness():
    w = nonsplit_witness()
    assert w.ok and w.kernel_order == 8 and w.yz3_order == 8


def test_hurwitz_params_and_cases():
    h = hurwitz_params(13)
    assert (h.alpha, h.beta, h.gamma) == (1, 1, -1)
    assert hurwitz_case(7) == 1 and hurwitz_case(13) == 2 and hurwitz_case(8) == 3
    assert hurwitz_case(27) == 3 and hurwitz_case(11) is None and hurwitz_case(125) == 3
    with pytest.raises(ValueError):
        hurwitz_params(21)


@pytest.mark.parametrize("q, g", [(13, 0), (29, 0), (43, 0), (41, 1), (71, 1), (97, 1), (83, 2),
                                  (7, 0), (8, 0), (27, 1)])
def test_quotient_genus_formula(q, g):
    assert quotient_genus_psl2(q) == g


@pytest.mark.parametrize("q", [13, 29, 41, 43, 83, 8, 27])
def test_quotient_genus_matches_construction(q):
    assert constructed_quotient_genus(q) == quotient_genus_psl2(q)


def test_quotient_genus_rejects_non_hurwitz():
    with pytest.raises(ValueError):
        quotient_genus_psl2(11)


def test_cover_genera():
    assert hurwitz_cover_genus(13) == 14
    assert hurwitz_cover_genus(8) == 7
    assert hurwitz_cover_genus(7) == 3
    assert a15_cover_genus() == 7783776001
    assert cover_genus(psl2_hurwitz_triple(8)) == 7


@pytest.mark.parametrize("q, expect", [(13, (84, 2, 91, 0)), (8, (63, 0, 72, 1)), (27, (364, 1, 378, 2))])
def test_monotonicity(q, expect):
    r = monotonicity_failure_demo(q)
    assert (r.n, r.g, r.n2, r.g2) == expect
    assert r.fails


def test_infinity_is_last_point():
    D = psl2_hurwitz_triple(13)
    assert D.degree == 14
    assert INFINITY == "∞"
