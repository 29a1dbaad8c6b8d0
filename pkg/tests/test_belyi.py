import sympy as sp

from dessins.belyi import A, S, FieldPoly, QuadFieldElement, belyi_data, verify_klein_tree_belyi


def test_field_arithmetic():
    assert A * A == -3 * A - 4
    assert S * S == -7
    x = QuadFieldElement(2, 5)
    assert x * x.inverse() == 1
    assert (x / x) == 1
    assert x.norm() == (x * x.conj()).c0


def test_polynomial_arithmetic():
    t = FieldPoly.t()
    assert (t**3).derivative() == 3 * t**2
    assert ((t + 1) * (t - 1)) == t**2 - 1
    assert (t**2 + 7 * A).degree == 2
    assert FieldPoly([0, 0]).degree == -1


def test_verifier_passes():
    rep = verify_klein_tree_belyi()
    assert rep.passed
    assert rep.sign in (1, -1)
    assert rep.norm_K is not None and rep.norm_K > 0


def test_identities_independently_with_sympy():
    # oracle: expand over Q[a] with sympy and reduce modulo a^2 + 3a + 4
    a, t = sp.symbols("a t")
    m = a**2 + 3 * a + 4
    K = -1 / (2**6 * 3**3 * (7 * a + 17))
    f = K * (t**2 + 7 * a) ** 3 * (t - 7)
    P = t**3 + 5 * t**2 + (19 * a + 24) * t + (83 * a + 108)
    diff = sp.together(f - 1 - K * (t**2 - 6 * t + a) ** 2 * P)
    num = sp.Poly(sp.numer(diff), t, a)
    assert sp.Poly(sp.rem(num.as_expr(), m, a), t, a).is_zero
    s = 2 * a + 3
    Q = t**2 + (1 + s) * t + (-31 + 13 * s) / sp.Integer(2)
    R = t + (4 - s)
    assert sp.rem(sp.expand(P - Q * R), m, a) == 0


def test_data_degrees():
    d = belyi_data()
    assert d["f"].degree == 7 and d["f"].derivative().degree == 6
