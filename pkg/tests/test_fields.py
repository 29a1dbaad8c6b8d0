import random

import pytest

from dessins.fields import (
    FField,
    det,
    field,
    frobenius_perm,
    is_scalar_identity,
    mat_mul,
    mobius_perm,
    projective_line,
    psl2_generators,
)
from dessins.perm import INFINITY, compose, order


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 13, 27])
def test_field_axioms(q):
    F = field(q)
    rng = random.Random(q)
    for _ in range(200):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.sub(F.add(a, b), b) == a
        if b:
            assert F.mul(F.div(a, b), b) == a
    assert F._mult_order(F.primitive) == q - 1


def test_modulus_choice():
    assert field(8).modulus_polynomial == [1, 1, 0, 1]   # x^3 + x + 1
    assert field(27).modulus_polynomial == [1, 2, 0, 1]  # x^3 + 2x + 1
    assert field(4).modulus_polynomial == [1, 1, 1]


def test_frobenius_order():
    F = field(27)
    phi = frobenius_perm(F)
    assert order(phi) == 3
    assert all(F.frobenius(F.frobenius(F.frobenius(a))) == a for a in range(27))


def test_projective_line():
    F = field(7)
    P = projective_line(F)
    assert len(P) == 8 and P[-1] == INFINITY


def test_mobius_composition_reverses_matrices():
    F = field(7)
    A, B, _ = psl2_generators(F)
    # permutations act left to right, so pA * pB corresponds to B A
    assert compose(mobius_perm(F, A), mobius_perm(F, B)) == mobius_perm(F, mat_mul(F, B, A))


def test_generators_have_determinant_one():
    for q in (7, 8, 27):
        F = field(q)
        assert all(det(F, M) == 1 for M in psl2_generators(F))


def test_scalar_identity():
    F = field(7)
    assert is_scalar_identity(F, (6, 0, 0, 6))
    assert not is_scalar_identity(F, (2, 0, 0, 2))


def test_not_prime_power():
    with pytest.raises(ValueError):
        FField(6)
    with pytest.raises(ValueError):
        field(12)
