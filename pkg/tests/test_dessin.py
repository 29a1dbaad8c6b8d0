from fractions import Fraction

import pytest

from dessins.dessin import (
    Dessin,
    Passport,
    block_quotient,
    count_faithful_quotients,
    coset_dessin,
    cover_genus,
    genus_327,
    isomorphic,
    regular_cover,
    regular_cover_with_subgroup,
    trivial_dessin,
)
from dessins.errors import CapExceeded, NotTransitiveError
from dessins.groups import BlockSystem, PermGroup
from dessins.perm import compose, parse


def left_tree() -> Dessin:
    return Dessin(parse("(1,5,2)(3,4,6)", 7), parse("(0,4)(1,6)", 7))


def test_z_is_computed_and_checked():
    D = left_tree()
    assert D.z == parse("(0,3,6,2,5,1,4)", 7)
    with pytest.raises(ValueError):
        Dessin(D.x, D.y, parse("(0,1,2,3,4,5,6)", 7))


def test_non_transitive_rejected():
    with pytest.raises(NotTransitiveError):
        Dessin(parse("(0,1)", 4), parse("(2,3)", 4))


def test_left_tree_invariants():
    D = left_tree()
    assert str(D.passport) == "(3^2 1^1, 2^2 1^3, 7^1)"
    assert D.type == (3, 2, 7)
    assert D.genus == 0
    assert D.monodromy.order() == 168
    assert D.automorphisms.order() == 1
    assert not D.is_regular()
    assert D.is_primitive()
    assert cover_genus(D) == 3


def test_mirror_is_the_other_tree():
    D = left_tree()
    right = Dessin(compose(D.x, D.x), compose(D.x, D.z))
    assert isomorphic(right, D.mirror()) is not None
    assert isomorphic(D, D.mirror()) is None
    assert D.mirror().mirror() == D


def test_isomorphic_witness_relabels():
    D = left_tree()
    g = parse("(0,3)(2,6,5)", 7)
    E = D.relabel(g)
    w = isomorphic(D, E)
    assert w is not None and D.relabel(w) == E


def test_trivial_dessin():
    D = trivial_dessin()
    assert D.genus == 0 and D.is_regular() and D.degree == 1


def test_regular_cover_round_trip():
    D = left_tree()
    R, H = regular_cover_with_subgroup(D)
    assert R.degree == 168 and R.is_regular() and R.genus == 3
    Q = coset_dessin(R, H)
    assert isomorphic(Q, D) is not None


def test_regular_cover_cap():
    with pytest.raises(CapExceeded):
        regular_cover(left_tree(), cap=100)


def test_coset_dessin_by_point_stabilizer():
    D = left_tree()
    Q = coset_dessin(D, D.monodromy.point_stabilizer(0))
    assert isomorphic(Q, D) is not None


def test_block_quotient():
    x = parse("(0,2,4)(1,3,5)(6,8,10)(7,9,11)", 14)
    y = parse("(0,1)(2,3)(4,6)(5,7)(8,12)(9,13)", 14)
    D = Dessin(x, y)
    B = BlockSystem.from_blocks([(2 * i, 2 * i + 1) for i in range(7)])
    Q = block_quotient(D, B)
    assert Q.degree == 7 and Q.monodromy.order() == 168


def test_genus_327_formula():
    assert genus_327(7, 1, 3, 0) == 0
    assert genus_327(168, 0, 0, 0) == 3
    assert genus_327(28, 1, 0, 0) == 1
    assert isinstance(genus_327(8, 2, 0, 1), Fraction)


def test_faithful_quotient_counts():
    G = left_tree().monodromy
    assert count_faithful_quotients(G, 7) == 2
    assert count_faithful_quotients(G, 8) == 1
    assert count_faithful_quotients(G, 168) == 1
    assert count_faithful_quotients(G, 5) == 0


def test_text_json_round_trip():
    D = left_tree()
    assert Dessin.from_text(D.to_text()) == D
    assert Dessin.from_json(D.to_json()) == D


def test_passport_parse():
    pp = Passport.parse("(3^2 1^1; 2^2 1^3; 7^1)")
    assert pp == left_tree().passport


def test_dot_output():
    dot = left_tree().to_dot(suppress_white=True)
    assert dot.startswith("graph") and dot.count("b0") >= 1
