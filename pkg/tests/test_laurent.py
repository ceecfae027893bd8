import pytest
import sympy
from hypothesis import given, strategies as st

from pretzelbraid.laurent import (
    ExtremePowers,
    LaurentPoly,
    SignClass,
    UndefinedExtremesError,
    ZPoly,
    extract_extremes,
    fib_poly,
    substitute_mirror,
)

from conftest import laurent_polys

z, a = LaurentPoly.z(), LaurentPoly.a()
Z = ZPoly.z()
HOPF = (z + z**-1) * a**-1 - z**-1 * a**-3


def to_sympy(p: LaurentPoly):
    zs, as_ = sympy.symbols("z a")
    return sum((c * zs**i * as_**j for (i, j), c in p.terms.items()), sympy.Integer(0))


def test_additive_inverse_is_empty():
    p = z * a**-1 + (-(z * a**-1))
    assert p.is_zero() and p.terms == {}


def test_multiplicative_identity():
    assert (z + z**-1) * 1 == z + z**-1
    assert (z + z**-1) * LaurentPoly.const(1) == z + z**-1


def test_monomial_shift():
    neg_hopf = -(z + z**-1) * a + z**-1 * a**3
    assert a**-2 * neg_hopf == -(z + z**-1) * a**-1 + z**-1 * a


def test_zero_coefficients_never_stored():
    assert LaurentPoly({(1, 1): 0, (0, 0): 2}).terms == {(0, 0): 2}
    assert ZPoly({3: 0}).is_zero()


def test_big_coefficients_do_not_overflow():
    p = (z + 1) ** 80
    assert p.terms[(40, 0)] == sympy.binomial(80, 40)


@pytest.mark.parametrize("n,expected", [(2, ZPoly({-1: 1})), (3, ZPoly({0: 1})), (4, Z + Z**-1)])
def test_fib_poly_examples(n, expected):
    assert fib_poly(n) == expected


def test_fib_poly_domain():
    with pytest.raises(ValueError):
        fib_poly(1)


@pytest.mark.parametrize("n", range(2, 21))
def test_fib_poly_degree_and_signs(n):
    f = fib_poly(n)
    assert f.degree() == n - 3
    assert all(c >= 0 for c in f.coefficients())


def test_extract_extremes_hopf():
    x = extract_extremes(HOPF)
    assert (x.E, x.e) == (-1, -3)
    assert x.ph == Z + Z**-1 and x.pl == -(Z**-1)
    assert x.ph0 == Z and x.pl0 == -(Z**-1)
    assert x.ph_class is SignClass.NONNEGATIVE and x.pl_class is SignClass.NONPOSITIVE


def test_extract_extremes_constant():
    x = extract_extremes(LaurentPoly.const(1))
    assert (x.E, x.e, x.ph, x.pl) == (0, 0, ZPoly({0: 1}), ZPoly({0: 1}))


def test_extract_extremes_trefoil_against_sympy():
    # expand f_5 a^-2 - f_3 a^-4 independently
    zs, as_ = sympy.symbols("z a")
    f3, f4 = sympy.Integer(1), zs + 1 / zs
    f5 = sympy.expand(zs * f4 + f3)
    expected = sympy.expand(f5 * as_**-2 - f3 * as_**-4)
    trefoil = LaurentPoly.from_a_coefficients({-2: fib_poly(5), -4: -fib_poly(3)})
    assert sympy.expand(to_sympy(trefoil) - expected) == 0
    x = extract_extremes(trefoil)
    assert (x.E, x.e) == (-2, -4)
    assert x.ph == Z**2 + 2 and x.pl == ZPoly({0: -1})


def test_extract_extremes_zero_raises():
    with pytest.raises(UndefinedExtremesError):
        extract_extremes(LaurentPoly())


def test_substitute_mirror_examples():
    assert substitute_mirror(LaurentPoly.const(1)) == 1
    assert substitute_mirror(HOPF) == -(z + z**-1) * a + z**-1 * a**3
    assert substitute_mirror(a**2) == a**-2


def test_json_round_trip():
    triples = HOPF.to_json()
    assert triples == sorted(triples)
    assert all(isinstance(c, str) for _, _, c in triples)
    assert LaurentPoly.from_json(triples) == HOPF


def test_sign_class_membership():
    assert SignClass.NONNEGATIVE.contains(Z + 2)
    assert not SignClass.NONNEGATIVE.contains(Z - 2)
    assert SignClass.NONPOSITIVE.contains(-Z)
    assert not SignClass.NONNEGATIVE.contains(ZPoly())
    assert SignClass.of(Z - 1) is SignClass.INDETERMINATE
    assert SignClass.signed(3) is SignClass.NONPOSITIVE
    assert SignClass.NONNEGATIVE.times_sign(1) is SignClass.NONPOSITIVE


def test_extreme_powers_validation_and_mirror():
    with pytest.raises(ValueError):
        ExtremePowers(E=-3, e=-1)
    x = extract_extremes(HOPF)
    assert x.mirror() == extract_extremes(substitute_mirror(HOPF))


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(laurent_polys(), laurent_polys())
def test_product_matches_sympy(p, q):
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0


@given(laurent_polys())
def test_mirror_is_involution(p):
    assert substitute_mirror(substitute_mirror(p)) == p


@given(laurent_polys(), laurent_polys())
def test_mirror_is_ring_homomorphism(p, q):
    assert substitute_mirror(p * q) == substitute_mirror(p) * substitute_mirror(q)


@given(laurent_polys(), laurent_polys())
def test_extremes_add_under_products(p, q):
    if p.is_zero() or q.is_zero():
        return
    xp, xq, xpq = extract_extremes(p), extract_extremes(q), extract_extremes(p * q)
    assert xpq.E == xp.E + xq.E and xpq.e == xp.e + xq.e
    assert xpq.ph == xp.ph * xq.ph


@given(laurent_polys())
def test_mirror_extremes_rule(p):
    if p.is_zero():
        return
    assert extract_extremes(p).mirror() == extract_extremes(substitute_mirror(p))
