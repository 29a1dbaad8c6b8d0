import pytest

from dessins.perm import (
    INFINITY,
    CycleType,
    compose,
    conjugate,
    cycle_type,
    cycles,
    fixed_points,
    from_cycle_type,
    identity,
    inverse,
    num_cycles,
    order,
    parse,
    parse_with_labels,
    power,
    render,
)


def test_compose_left_to_right():
    p = parse("(0,1)", 3)
    q = parse("(1,2)", 3)
    # apply p first, then q: 0 -> 1 -> 2
    assert compose(p, q)[0] == 2
    assert render(compose(p, q)) == "(0,2,1)"


def test_inverse_and_power():
    p = parse("(0,1,2,3)(4,5)", 6)
    assert compose(p, inverse(p)) == identity(6)
    assert power(p, 4) == identity(6)
    assert power(p, -1) == inverse(p)
    assert order(p) == 4


def test_conjugate_relabels_cycles():
    p = parse("(0,1,2)", 4)
    g = parse("(0,3)", 4)
    assert render(conjugate(p, g)) == "(1,2,3)"


def test_cycle_type_and_counts():
    p = parse("(1,5,2)(3,4,6)", 7)
    assert str(cycle_type(p)) == "3^2 1^1"
    assert num_cycles(p) == 3
    assert fixed_points(p) == {0}
    assert cycles(p, include_fixed=True)[0] == (0,)


def test_cycle_type_parse_forms():
    assert CycleType.parse("3^2 1^2") == CycleType([3, 3, 1, 1])
    assert CycleType.parse("3,3,1,1") == CycleType.parse("3^2.1^2")
    assert CycleType.parse("7 1") == CycleType([7, 1])
    ct = CycleType.parse("2^6")
    assert ct.degree == 12 and ct.order() == 2


def test_centralizer_and_class_size():
    ct = CycleType.parse("3^2 1^1")
    assert ct.centralizer_order() == 3 * 3 * 2
    assert ct.class_size() == 5040 // 18
    assert CycleType.parse("1^5").class_size() == 1


def test_from_cycle_type():
    p = from_cycle_type([3, 3, 1])
    assert cycle_type(p) == CycleType([3, 3, 1])


def test_parse_one_based_support():
    p = parse("(1,2,4)", range(1, 5))
    assert p == (1, 3, 2, 0)


def test_parse_with_infinity_label():
    p, labels = parse_with_labels("(0,1,∞)(2,6,4)", [0, 1, 2, 3, 4, 5, 6, INFINITY])
    assert labels[-1] == INFINITY
    assert p[7] == 0 and p[1] == 7


def test_render_identity_and_labels():
    assert render(identity(3)) == "()"
    p = parse("(0,1)", 2)
    assert render(p, ["a", "b"]) == "(a,b)"


def test_parse_rejects_repeated_point():
    with pytest.raises(ValueError):
        parse("(0,1,0)", 3)
