from itertools import product

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from dessins.chartab import brute_force_triple_count, dixon_table, frobenius_count
from dessins.constructions import (
    agl32,
    fano_tree_triples,
    genus17_triples,
    psl2_27_triple,
    psl2_group,
    psl2_hurwitz_triple,
    psl2_natural_triple,
)
from dessins.dessin import Dessin, coset_dessin, isomorphic, regular_cover_with_subgroup
from dessins.enumeration import canonical_form, count_one_seven_face
from dessins.groups import PermGroup, _orbits
from dessins.lattice import SubgroupLattice
from dessins.moebius import mobius_values
from dessins.perm import compose, inverse, num_cycles, parse

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def _psl32():
    return PermGroup([parse("(1,5,2)(3,4,6)", 7), parse("(0,4)(1,6)", 7)])


SMALL_GROUPS = {
    "C6": lambda: PermGroup.cyclic(6),
    "S4": lambda: PermGroup.symmetric(4),
    "A5": lambda: PermGroup.alternating(5),
    "S5": lambda: PermGroup.symmetric(5),
    "PSL3(2)": _psl32,
    "D8": lambda: PermGroup([parse("(0,1,2,3)", 4), parse("(1,3)", 4)]),
}
LARGER_GROUPS = {
    "PSL2(8)": lambda: psl2_group(8),
    "PSL2(13)": lambda: psl2_group(13),
    "AGL3(2)": agl32,
    "A7": lambda: PermGroup.alternating(7),
    "genus-17 group": lambda: genus17_triples()[0].monodromy,
    "PSL2(27)": lambda: psl2_group(27),
}


# -- Frobenius formula against brute force ----------------------------------------


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_frobenius_every_class_triple(name):
    G = SMALL_GROUPS[name]()
    T = dixon_table(G)
    cls = G.conjugacy_classes()
    for X, Y, Z in product(cls, repeat=3):
        assert frobenius_count(G, X, Y, Z, T) == brute_force_triple_count(G, X, Y, Z)


@pytest.mark.parametrize("name", sorted(LARGER_GROUPS))
def test_frobenius_sampled_class_triples(name):
    G = LARGER_GROUPS[name]()
    T = dixon_table(G)
    cls = G.conjugacy_classes()
    cheap = [C for C in cls if C.size <= 800]

    examples = 12 if G.order() > 5000 else 40

    @settings(max_examples=examples, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(st.sampled_from(cheap), st.sampled_from(cheap), st.sampled_from(cls))
    def run(X, Y, Z):
        assert frobenius_count(G, X, Y, Z, T) == brute_force_triple_count(G, X, Y, Z)

    run()


# -- character tables -----------------------------------------------------------


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS) + sorted(LARGER_GROUPS))
def test_orthogonality(name):
    G = (SMALL_GROUPS.get(name) or LARGER_GROUPS[name])()
    T = dixon_table(G)
    T.verify()
    assert sum(d * d for d in T.degrees) == G.order()
    assert len(T.rows) == len(T.classes)


@SETTINGS
@given(st.lists(st.permutations(range(6)), min_size=1, max_size=3))
def test_orthogonality_random_subgroups_of_s6(gens):
    G = PermGroup(gens, 6)
    dixon_table(G).verify()


# -- dessins ----------------------------------------------------------------------


@st.composite
def dessins(draw, max_degree=6):
    n = draw(st.integers(1, max_degree))
    x = draw(st.permutations(range(n)))
    y = draw(st.permutations(range(n)))
    if len(_orbits([x, y], n)) != 1:
        # join the orbits with one extra transposition-like cycle on y
        orbits = _orbits([x, y], n)
        heads = [o[0] for o in orbits]
        link = list(range(n))
        for a, b in zip(heads, heads[1:] + heads[:1]):
            link[a] = b
        y = compose(y, tuple(link))
    return Dessin(x, y)


@SETTINGS
@given(dessins())
def test_round_trip_quotient_of_cover(D):
    R, H = regular_cover_with_subgroup(D)
    assert R.is_regular()
    assert R.degree == D.monodromy.order()
    assert isomorphic(coset_dessin(R, H), D) is not None


@SETTINGS
@given(dessins(max_degree=9))
def test_mirror_is_an_involution(D):
    M = D.mirror()
    assert M.mirror() == D
    assert M.passport == D.passport
    assert M.genus == D.genus
    assert M.monodromy.order() == D.monodromy.order()


@SETTINGS
@given(dessins(max_degree=9))
def test_genus_parity_and_sign(D):
    chi = num_cycles(D.x) + num_cycles(D.y) + num_cycles(D.z) - D.degree
    assert chi % 2 == 0 and chi <= 2
    assert D.genus >= 0


@SETTINGS
@given(dessins(max_degree=8), st.permutations(range(8)))
def test_canonical_form_invariant(D, g):
    g = tuple(g[: D.degree]) if D.degree == 8 else tuple(range(D.degree))
    E = D.relabel(g)
    assert canonical_form(D.x, D.y) == canonical_form(E.x, E.y)


def _constructed():
    out = list(fano_tree_triples()) + genus17_triples()
    out += [psl2_natural_triple(7), psl2_27_triple(), psl2_hurwitz_triple(8), psl2_hurwitz_triple(13)]
    out += [D for r in count_one_seven_face().values() for D in r.dessins]
    return out


def test_genus_on_constructed_dessins():
    for D in _constructed():
        chi = D.euler_characteristic()
        assert chi % 2 == 0 and D.genus >= 0
        assert D.x == inverse(compose(D.y, D.z)) or compose(compose(D.x, D.y), D.z) == tuple(range(D.degree))


# -- Möbius identity --------------------------------------------------------------


@SETTINGS
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=2))
def test_mobius_identity_random_subgroups_of_s5(gens):
    G = PermGroup(gens, 5)
    L = SubgroupLattice(G)
    mu = mobius_values(L)  # raises if the identity fails anywhere
    top = L.classes[-1]
    assert mu[top.id] == 1
    for c in L.classes:
        total = sum(mu[k] * m for k, m in L.containing_counts(c).items())
        assert total == (1 if c.order == G.order() else 0)


@pytest.mark.parametrize("name", ["S4", "A5", "PSL3(2)"])
def test_mobius_identity_named_groups(name):
    L = SubgroupLattice(SMALL_GROUPS[name]())
    mobius_values(L)
