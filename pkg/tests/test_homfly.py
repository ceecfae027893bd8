import random

import pytest
from hypothesis import given, settings, strategies as st

from pretzelbraid.homfly import (
    TWO_UNLINK,
    UNKNOT,
    ConnectedSum,
    NotCoveredError,
    PretzelAntiparallel,
    TorusAntiparallel,
    TorusParallel,
    TwoUnlink,
    Unknot,
    evaluate,
    homfly_connected_sum,
    homfly_pretzel,
    homfly_torus_antiparallel,
    homfly_torus_parallel,
    mfw_bound,
    proposition_extremes,
    skein_residual,
    torus_connected_extremes,
    type1_extremes,
    type2_extremes,
)
from pretzelbraid.laurent import ExtremePowers, LaurentPoly, SignClass, ZPoly, extract_extremes, substitute_mirror
from pretzelbraid.pretzel import LinkType, PretzelParams, parse_notation

from conftest import pretzel_params

z, a = LaurentPoly.z(), LaurentPoly.a()
Z = ZPoly.z()


def test_two_unlink_from_skein_relation():
    # D+ and D- are both the unknot, D0 the split two-component unlink
    assert a * UNKNOT - a**-1 * UNKNOT == z * TWO_UNLINK
    assert TWO_UNLINK == (a - a**-1) * z**-1


@pytest.mark.parametrize("k,expected", [
    (1, (z + z**-1) * a**-1 - z**-1 * a**-3),
    (2, z * a**-1 + (z + z**-1) * a**-3 - z**-1 * a**-5),
    (-1, -(z + z**-1) * a + z**-1 * a**3),
    (3, z * a**-1 + z * a**-3 + (z + z**-1) * a**-5 - z**-1 * a**-7),
])
def test_torus_antiparallel(k, expected):
    assert homfly_torus_antiparallel(k) == expected


def test_torus_antiparallel_zero_is_unlink():
    assert homfly_torus_antiparallel(0) == TWO_UNLINK


@pytest.mark.parametrize("k", range(1, 9))
def test_torus_antiparallel_mirror(k):
    assert homfly_torus_antiparallel(-k) == substitute_mirror(homfly_torus_antiparallel(k))


@pytest.mark.parametrize("n,expected", [
    (2, (z + z**-1) * a**-1 - z**-1 * a**-3),
    (3, (z**2 + 2) * a**-2 - a**-4),
    (-3, (z**2 + 2) * a**2 - a**4),
])
def test_torus_parallel(n, expected):
    assert homfly_torus_parallel(n) == expected


def test_torus_parallel_domain():
    for n in (-1, 0, 1):
        with pytest.raises(ValueError):
            homfly_torus_parallel(n)


@pytest.mark.parametrize("n", range(2, 10))
def test_torus_parallel_mirror(n):
    assert homfly_torus_parallel(-n) == substitute_mirror(homfly_torus_parallel(n))


def test_connected_sum():
    assert homfly_connected_sum([UNKNOT]) == 1
    h1, h2 = homfly_torus_antiparallel(1), homfly_torus_antiparallel(-1)
    assert homfly_connected_sum([h1, h2]) == homfly_connected_sum([h2, h1]) == h1 * h2
    x, x1, x2 = extract_extremes(h1 * h2), extract_extremes(h1), extract_extremes(h2)
    assert (x.E, x.e) == (x1.E + x2.E, x1.e + x2.e)
    with pytest.raises(ValueError):
        homfly_connected_sum([])


def test_torus_connected_extremes_examples():
    x = torus_connected_extremes([1], [])
    assert (x.E, x.e) == (-1, -3)
    x = torus_connected_extremes([2, 1], [1])
    assert (x.E, x.e) == (1, -7)
    assert (x.r_plus, x.r_minus) == (1, 0)
    y = torus_connected_extremes([1], [2, 1])
    assert (y.E, y.e) == (-x.e, -x.E)
    with pytest.raises(ValueError):
        torus_connected_extremes([], [])


@given(st.lists(st.integers(1, 4), max_size=3), st.lists(st.integers(1, 4), max_size=3))
def test_torus_connected_extremes_against_product(alphas, betas):
    if not alphas and not betas:
        return
    parts = [homfly_torus_antiparallel(x) for x in alphas] + [homfly_torus_antiparallel(-y) for y in betas]
    claimed = torus_connected_extremes(alphas, betas)
    actual = extract_extremes(homfly_connected_sum(parts))
    assert claimed.violations(actual) == []


def test_link_expressions_evaluate():
    assert evaluate(Unknot()) == 1
    assert evaluate(TwoUnlink()) == TWO_UNLINK
    assert evaluate(TorusAntiparallel(2)) == homfly_torus_antiparallel(2)
    assert evaluate(TorusParallel(3)) == homfly_torus_parallel(3)
    assert evaluate(PretzelAntiparallel((3, 1))) == homfly_torus_antiparallel(2)
    assert evaluate(ConnectedSum((TorusParallel(3), TorusParallel(-3)))) == \
        homfly_torus_parallel(3) * homfly_torus_parallel(-3)
    assert PretzelAntiparallel((1, 3)) == PretzelAntiparallel((3, 1))
    with pytest.raises(TypeError):
        evaluate("unknot")


# ----------------------------------------------------------------- oracle

def test_single_strip_is_unknot():
    for c in (1, 2, 3, -4, 7):
        assert homfly_pretzel([c]) == UNKNOT


def test_empty_strip_list_is_unlink():
    assert homfly_pretzel([]) == TWO_UNLINK


@pytest.mark.parametrize("k", [k for k in range(-8, 9) if k])
def test_two_strip_pretzels_are_antiparallel_torus_links(k):
    s = 1 if k > 0 else -1
    assert homfly_pretzel([2 * k - s, s]) == homfly_torus_antiparallel(k)
    for c in range(1, abs(k)):
        assert homfly_pretzel([2 * s * c, 2 * s * (abs(k) - c)]) == homfly_torus_antiparallel(k)


@pytest.mark.parametrize("n", range(2, 10))
def test_unit_strips_give_parallel_torus_links(n):
    assert homfly_pretzel([1] * n) == homfly_torus_parallel(n)
    assert homfly_pretzel([-1] * n) == homfly_torus_parallel(-n)


def test_cancelling_strips_give_unlink():
    assert homfly_pretzel([3, -3]) == TWO_UNLINK
    assert homfly_pretzel([4, -4]) == TWO_UNLINK


def test_known_knots():
    # P(3,3,-1) is a trefoil; P(5,5,-1) and P(3,3,1) differ by a flype
    assert homfly_pretzel([3, 3, -1]) == homfly_torus_parallel(3)
    assert homfly_pretzel([5, 5, -1]) == homfly_pretzel([3, 3, 1])
    assert homfly_pretzel([7, 5, -1]) == homfly_pretzel([5, 3, 1])


def test_oracle_examples():
    x = extract_extremes(homfly_pretzel([3, 3, 3]))
    assert (x.E, x.ph, x.e, x.pl) == (-2, Z**2, -10, ZPoly({0: -1}))
    x = extract_extremes(homfly_pretzel([5, 5, -3]))
    assert (x.E, x.e) == (-2, -10)


def test_oracle_rejects_mixed_parity_and_zero():
    with pytest.raises(ValueError):
        homfly_pretzel([3, 4])
    with pytest.raises(ValueError):
        homfly_pretzel([3, 0, 3])


@settings(max_examples=60, deadline=None)
@given(pretzel_params(max_side=3, max_value=3), st.randoms())
def test_mutation_invariance(p, rnd):
    strips = list(p.strips())
    expected = homfly_pretzel(strips)
    for _ in range(5):
        rnd.shuffle(strips)
        assert homfly_pretzel(strips) == expected
        text = "P(" + ",".join(map(str, strips)) + ")"
        assert homfly_pretzel(parse_notation(text)) == expected


@settings(max_examples=60, deadline=None)
@given(pretzel_params(max_side=3, max_value=3))
def test_mirror_identity(p):
    strips = p.strips()
    assert homfly_pretzel([-c for c in strips]) == substitute_mirror(homfly_pretzel(strips))


@settings(max_examples=100, deadline=None)
@given(pretzel_params(max_side=3, max_value=3), st.data())
def test_skein_residual_vanishes(p, data):
    strips = p.strips()
    j = data.draw(st.integers(0, len(strips) - 1))
    assert skein_residual(strips, j).is_zero()


def test_skein_residual_detects_inconsistency():
    # residual at a strip of the empty list raises rather than pass silently
    with pytest.raises(IndexError):
        skein_residual((), 0)


# ---------------------------------------------------------- proposition extremes

def test_mfw_bound_examples():
    assert mfw_bound(ExtremePowers(-1, -3)) == 2
    assert mfw_bound(ExtremePowers(5, -5)) == 6
    assert mfw_bound(ExtremePowers(4, 4)) == 1
    with pytest.raises(ArithmeticError):
        mfw_bound(ExtremePowers(0, -1))


@pytest.mark.parametrize("text,E,e", [
    ("P1(5,5,3;0)", -2, -14),
    ("P1(5,5;-3)", -2, -10),
    ("P1(5,3;-5,-1)", 5, -5),
])
def test_type1_extremes_examples(text, E, e):
    x = type1_extremes(parse_notation(text))
    assert (x.E, x.e) == (E, e)


def test_alternating_coefficients():
    x = type1_extremes(parse_notation("P1(5,5,3;0)"))
    assert x.ph == Z**2 and x.pl == ZPoly({0: -1})


@pytest.mark.parametrize("text,E,e", [
    ("P2(4,4;-2)", -2, -8),
    ("P2(4,4,2;-4)", 1, -11),
    ("P2(4,4;-4,-4)", 7, -7),
])
def test_type2_extremes_examples(text, E, e):
    x = type2_extremes(parse_notation(text))
    assert (x.E, x.e) == (E, e)


def test_extremes_not_covered():
    with pytest.raises(NotCoveredError):
        type1_extremes(parse_notation("P1(5;-3)"))
    with pytest.raises(NotCoveredError):
        type2_extremes(parse_notation("P2(4;-2)"))
    with pytest.raises(NotCoveredError):
        type2_extremes(parse_notation("P2(4,4;0)"))
    with pytest.raises(ValueError):
        type1_extremes(parse_notation("P2(4,4;-2)"))


def test_mirrored_families_are_covered():
    for text in ("P1(0;-5,-5,-3)", "P1(3;-5,-5)", "P1(5,1;-3,-3)", "P2(4;-4,-2,-2)"):
        p = parse_notation(text)
        claimed = proposition_extremes(p)
        assert claimed.violations(extract_extremes(homfly_pretzel(p.strips()))) == []


@settings(max_examples=150, deadline=None)
@given(pretzel_params(max_side=3, max_value=4))
def test_proposition_agreement(p):
    try:
        claimed = proposition_extremes(p)
    except NotCoveredError:
        return
    actual = extract_extremes(homfly_pretzel(p.strips()))
    assert claimed.violations(actual) == []


def test_leading_scope_is_used_for_general_type1():
    x = type1_extremes(parse_notation("P1(5,5;-3,-3)"))
    assert x.pl_scope == "leading"
    assert x.ph_class is SignClass.NONNEGATIVE
