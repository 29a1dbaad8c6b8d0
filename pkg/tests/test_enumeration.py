from fractions import Fraction

import pytest

from dessins.chartab import sym_triple_count
from dessins.dessin import Dessin, Passport, isomorphic
from dessins.enumeration import (
    BudgetExceeded,
    EnumQuery,
    canonical_form,
    count_one_seven_face,
    enumerate_dessins,
    search_passport,
)
from dessins.perm import CycleType, parse


def test_passports_of_query():
    q = EnumQuery(8, 3, 2, 7)
    assert [str(p) for p in q.passports()] == ["(3^2 1^2, 2^4, 7^1 1^1)"]


def test_degree_7_trees():
    r = enumerate_dessins(EnumQuery(7, 3, 2, 7))
    assert len(r.dessins) == 2
    assert sorted(rep.monodromy_order for rep in r.reports) == [168, 168]
    a, b = r.dessins
    assert isomorphic(a.mirror(), b) is not None


def test_one_seven_face_census():
    res = count_one_seven_face()
    assert {n: len(r.dessins) for n, r in res.items()} == {7: 2, 8: 1, 9: 1, 10: 0, 11: 0, 12: 0, 13: 0}
    assert res[9].reports[0].monodromy_order == 504


def test_canonical_form_is_relabelling_invariant():
    D = Dessin(parse("(1,5,2)(3,4,6)", 7), parse("(0,4)(1,6)", 7))
    E = D.relabel(parse("(0,6,3)(1,2)", 7))
    assert canonical_form(D.x, D.y) == canonical_form(E.x, E.y)
    assert canonical_form(D.x, D.y) != canonical_form(*D.mirror().triple[:2])


def test_solution_count_matches_characters():
    pp = Passport(CycleType.parse("3^2 1^2"), CycleType.parse("2^4"), CycleType.parse("7 1"))
    r = search_passport(pp)
    assert r.solutions == sym_triple_count(pp.x, pp.y, pp.z) / pp.x.class_size()


def test_example_passport_decomposition():
    pp = Passport(CycleType.parse("6 3 2 1"), CycleType.parse("2^6"), CycleType.parse("6 3 2 1"))
    r = search_passport(pp, transitive=False, with_reports=False)
    assert len(r.dessins) == 18
    assert r.connected_weight() == 18
    assert sorted(d.weight for d in r.disconnected) == [Fraction(1, 2), Fraction(1)]
    assert r.connected_weight() + r.disconnected_weight() == Fraction(39, 2)


def test_weights_are_inverse_automorphism_orders():
    pp = Passport(CycleType.parse("2^2"), CycleType.parse("2^2"), CycleType.parse("2^2"))
    r = search_passport(pp)
    for D, w in zip(r.dessins, r.weights):
        assert w == Fraction(1, D.automorphisms.order())


def test_parallel_matches_serial():
    pp = Passport(CycleType.parse("3^4 1^2"), CycleType.parse("2^6 1^2"), CycleType.parse("7^2"))
    a = search_passport(pp, with_reports=False)
    b = search_passport(pp, workers=2, with_reports=False)
    assert [canonical_form(D.x, D.y) for D in a.dessins] == [canonical_form(D.x, D.y) for D in b.dessins]
    assert a.solutions == b.solutions


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_dessins(EnumQuery(14, 3, 2, CycleType.parse("7^2"), budget=50))


def test_census_json():
    r = enumerate_dessins(EnumQuery(8, 3, 2, 7))
    data = r.to_json()
    assert len(data["dessins"]) == 1
