"""
HOMFLY-PT polynomials of pretzel links.

Conventions: ``a H(D+) - a^-1 H(D-) = z H(D0)`` and ``H(unknot) = 1``.

Three independent routes are provided:

* closed forms for the (2, n) torus links and their connected sums;
* :func:`homfly_pretzel`, an exact skein-tree oracle working strip by strip
  on a pretzel diagram whose strips all carry antiparallel strands;
* :func:`type1_extremes` / :func:`type2_extremes`, closed-form extreme
  ``a``-powers with sign classes for the standard families.

Geometry used by the oracle (strip of ``c`` crossings is the vertical twist
tangle ``1/c``; the diagram is the numerator closure of their sum):

* switching one crossing of a strip of ``c > 0`` crossings leaves ``c - 2``
  after a Reidemeister II move; ``c < 0`` gives ``c + 2``;
* the oriented smoothing of a crossing cuts its strip horizontally; the rest
  of that strip unwinds by Reidemeister I moves, leaving the pretzel on the
  remaining strips;
* a ``+1`` strip and a ``-1`` strip cancel (mutation lets them be adjacent);
* no strips is the two-component unlink, one strip is the unknot;
* a strip with no crossings among others splits the diagram into the
  connected sum of the (2, c) torus links of the other strips.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .laurent import (
    ExtremePowers,
    LaurentPoly,
    SignClass,
    ZPoly,
    fib_poly,
)
from .pretzel import LinkType, PretzelParams, mirror_params, normalize

__all__ = [
    "UNKNOT",
    "TWO_UNLINK",
    "NotCoveredError",
    "Unknot",
    "TwoUnlink",
    "TorusAntiparallel",
    "TorusParallel",
    "PretzelAntiparallel",
    "ConnectedSum",
    "evaluate",
    "homfly_torus_antiparallel",
    "homfly_torus_parallel",
    "homfly_connected_sum",
    "torus_connected_extremes",
    "homfly_pretzel",
    "skein_residual",
    "type1_extremes",
    "type2_extremes",
    "proposition_extremes",
    "mfw_bound",
    "oracle_cache_info",
]


UNKNOT = LaurentPoly.const(1)
# a*H(D+) - a^-1*H(D-) = z*H(D0) with D+ = D- = unknot, D0 = split unlink
TWO_UNLINK = LaurentPoly({(-1, 1): 1, (-1, -1): -1})


class NotCoveredError(ValueError):
    """Parameters outside every closed-form proposition's hypotheses."""


# ---------------------------------------------------------------- closed forms

def homfly_torus_antiparallel(k: int) -> LaurentPoly:
    """``H(T_o(2k, 2))``: (2, 2k) torus link with antiparallel components.

    ``k = 0`` gives the two-component unlink.
    """
    if k == 0:
        return TWO_UNLINK
    n = abs(k)
    terms: dict[tuple[int, int], int] = {}
    sgn = 1 if k > 0 else -1
    # positive: z(a^-1 + ... + a^{-2k+3}) + (z + 1/z) a^{-2k+1} - (1/z) a^{-2k-1}
    for j in range(1, 2 * n - 2, 2):
        terms[(1, -sgn * j)] = sgn
    top = 2 * n - 1
    terms[(1, -sgn * top)] = terms.get((1, -sgn * top), 0) + sgn
    terms[(-1, -sgn * top)] = terms.get((-1, -sgn * top), 0) + sgn
    terms[(-1, -sgn * (top + 2))] = -sgn
    return LaurentPoly(terms)


def homfly_torus_parallel(n: int) -> LaurentPoly:
    """``H(T_p(n, 2))``: (2, n) torus knot/link, parallel orientation."""
    if abs(n) < 2:
        raise ValueError(f"T_p(n, 2) needs |n| >= 2, got {n}")
    m = abs(n)
    hi, lo = fib_poly(m + 2), fib_poly(m)
    if n > 0:
        return (LaurentPoly.from_a_coefficients({1 - m: hi})
                - LaurentPoly.from_a_coefficients({-1 - m: lo}))
    sign = (-1) ** ((m - 1) % 2)
    return (LaurentPoly.from_a_coefficients({m - 1: hi})
            - LaurentPoly.from_a_coefficients({m + 1: lo})) * sign


def homfly_connected_sum(parts: Sequence[LaurentPoly]) -> LaurentPoly:
    """``H(L1 # L2 # ...)`` is the product of the summands' polynomials."""
    if not parts:
        raise ValueError("connected sum of nothing")
    out = parts[0]
    for p in parts[1:]:
        out = out * p
    return out


def torus_connected_extremes(pos_alphas: Sequence[int], neg_betas: Sequence[int]) -> ExtremePowers:
    """Extremes of ``#_j T_o(2 alpha_j, 2) # _i T_o(-2 beta_i, 2)``.

    The returned object also carries ``r_plus``/``r_minus`` as attributes of
    :class:`TorusSumExtremes`.
    """
    if not pos_alphas and not neg_betas:
        raise ValueError("empty connected sum")
    if any(x < 1 for x in list(pos_alphas) + list(neg_betas)):
        raise ValueError("torus summands need alpha, beta >= 1")
    kp, km = len(pos_alphas), len(neg_betas)
    return TorusSumExtremes(
        E=km - kp + 2 * sum(neg_betas),
        # kappa- - kappa+, not kappa+ - kappa-: each T_o(-2 beta, 2) has e = +1
        e=km - kp - 2 * sum(pos_alphas),
        ph_class=SignClass.NONNEGATIVE,
        pl_class=SignClass.signed(kp + km),
        r_plus=-kp + sum(pos_alphas),
        r_minus=-km + sum(neg_betas),
    )


@dataclass(frozen=True)
class TorusSumExtremes(ExtremePowers):
    r_plus: int = 0
    r_minus: int = 0


# ------------------------------------------------------------ link expressions

@dataclass(frozen=True)
class Unknot:
    pass


@dataclass(frozen=True)
class TwoUnlink:
    pass


@dataclass(frozen=True)
class TorusAntiparallel:
    k: int


@dataclass(frozen=True)
class TorusParallel:
    n: int


@dataclass(frozen=True)
class PretzelAntiparallel:
    strips: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "strips", tuple(sorted(self.strips)))


@dataclass(frozen=True)
class ConnectedSum:
    parts: tuple


LinkExpr = Union[Unknot, TwoUnlink, TorusAntiparallel, TorusParallel, PretzelAntiparallel, ConnectedSum]


def evaluate(expr: LinkExpr) -> LaurentPoly:
    if isinstance(expr, Unknot):
        return UNKNOT
    if isinstance(expr, TwoUnlink):
        return TWO_UNLINK
    if isinstance(expr, TorusAntiparallel):
        return homfly_torus_antiparallel(expr.k)
    if isinstance(expr, TorusParallel):
        return homfly_torus_parallel(expr.n)
    if isinstance(expr, PretzelAntiparallel):
        return _oracle(expr.strips)
    if isinstance(expr, ConnectedSum):
        return homfly_connected_sum([evaluate(p) for p in expr.parts])
    raise TypeError(f"not a link expression: {expr!r}")


# ------------------------------------------------------------------- the oracle

def _cancel_unit_pairs(strips: Sequence[int]) -> tuple[int, ...]:
    strips = list(strips)
    while 1 in strips and -1 in strips:
        strips.remove(1)
        strips.remove(-1)
    return tuple(sorted(strips))


def _strip_torus(c: int) -> LinkExpr:
    """The (2, c) torus link a lone strip of ``c`` crossings closes up to
    when the neighbouring strip has no crossings, as a pretzel expression."""
    if abs(c) == 1:
        return Unknot()
    s = 1 if c > 0 else -1
    if c % 2 == 0:
        return PretzelAntiparallel((c - s, s))
    return PretzelAntiparallel((s,) * abs(c))


def _reduce(strips: tuple[int, ...]) -> LinkExpr | None:
    """Base-case expression for ``strips`` or ``None`` if a skein step is needed."""
    if not strips:
        return TwoUnlink()
    if len(strips) == 1:
        return Unknot()
    zeros = strips.count(0)
    if zeros:
        rest = [c for c in strips if c != 0]
        parts = [TwoUnlink()] * (zeros - 1) + [_strip_torus(c) for c in rest]
        return ConnectedSum(tuple(parts)) if parts else Unknot()
    return None


@lru_cache(maxsize=None)
def _oracle(strips: tuple[int, ...]) -> LaurentPoly:
    strips = _cancel_unit_pairs(strips)
    base = _reduce(strips)
    if base is not None:
        return evaluate(base)
    # largest |c| first; ties resolved toward the positive strip
    j = max(range(len(strips)), key=lambda i: (abs(strips[i]), strips[i]))
    return _skein_step(strips, j)


def _skein_step(strips: tuple[int, ...], j: int) -> LaurentPoly:
    c = strips[j]
    rest = strips[:j] + strips[j + 1:]
    smoothed = _oracle(tuple(sorted(rest)))
    if c > 0:
        switched = _oracle(tuple(sorted(rest + (c - 2,))))
        return switched.shift(0, -2) + smoothed.shift(1, -1)
    switched = _oracle(tuple(sorted(rest + (c + 2,))))
    return switched.shift(0, 2) - smoothed.shift(1, 1)


def homfly_pretzel(strips: Iterable[int]) -> LaurentPoly:
    """HOMFLY-PT polynomial of the pretzel diagram with these strips.

    Every strip is taken with antiparallel strands (crossings smoothing
    horizontally), so the strips must be all odd (Type 1) or all even
    (Type 2).  The result depends only on the strip multiset.

    >>> homfly_pretzel([3, 1])
    z*a^-1 + (z + z^-1)*a^-3 - z^-1*a^-5
    """
    strips = tuple(int(c) for c in strips)
    if any(c == 0 for c in strips):
        raise ValueError("strips must have a nonzero crossing count")
    if strips and len({c % 2 for c in strips}) > 1:
        raise ValueError(f"mixed-parity strips {list(strips)} have no antiparallel orientation")
    return _oracle(tuple(sorted(strips)))


def skein_residual(strips: Sequence[int], j: int) -> LaurentPoly:
    """``a H(D+) - a^-1 H(D-) - z H(D0)`` at a crossing of strip ``j``.

    Identically zero whenever the oracle is self-consistent; the crossing
    need not be the one the oracle itself would expand.
    """
    strips = tuple(strips)
    c = strips[j]
    rest = strips[:j] + strips[j + 1:]
    plus, minus = (c, c - 2) if c > 0 else (c + 2, c)
    h_plus = _oracle(tuple(sorted(rest + (plus,))))
    h_minus = _oracle(tuple(sorted(rest + (minus,))))
    h_zero = _oracle(tuple(sorted(rest)))
    return h_plus.shift(0, 1) - h_minus.shift(0, -1) - h_zero.shift(1, 0)


def oracle_cache_info():
    return _oracle.cache_info()


# ------------------------------------------------------ closed-form extremes

def mfw_bound(x: ExtremePowers) -> int:
    """Morton-Franks-Williams lower bound ``(E - e)/2 + 1``."""
    if (x.E - x.e) % 2:
        raise ArithmeticError(f"odd a-span {x.E - x.e}: HOMFLY-PT values must have even span")
    return (x.E - x.e) // 2 + 1


def _alternating_type1(p: PretzelParams) -> ExtremePowers:
    kp = p.kappa_plus
    return ExtremePowers(
        E=1 - kp,
        e=-1 - kp - 2 * p.sum_alpha,
        ph_class=SignClass.NONNEGATIVE,
        pl_class=SignClass.NONPOSITIVE,
        # z^(kp-1) is exact only while at most one strip has a single crossing;
        # with more the top coefficient picks up lower-order terms (T_p(n, 2))
        ph=ZPoly({kp - 1: 1}) if p.tau_prime <= 1 else None,
        pl=-fib_poly(kp),
    )


def _type1_one_negative(p: PretzelParams) -> ExtremePowers:
    kp = p.kappa_plus
    b1 = p.betas[0]
    amin = p.alphas[-1]
    pl_class = SignClass.NONPOSITIVE if b1 == 0 else SignClass.NONNEGATIVE
    if kp == 2:
        E = -2 if amin > b1 else -2 * amin + 2 * b1
        e = -2 * p.sum_alpha if b1 == 0 else -2 - 2 * p.sum_alpha
    else:
        E = -kp if amin > b1 else 2 - kp - 2 * amin + 2 * b1
        e = -kp - 2 * p.sum_alpha
    return ExtremePowers(E=E, e=e, ph_class=SignClass.NONNEGATIVE, pl_class=pl_class)


def _t5_low_leading_sign(p: PretzelParams) -> SignClass:
    kp, km, tau = p.kappa_plus, p.kappa_minus, p.tau
    gamma = km - tau
    if tau == kp - 1:
        return SignClass.signed(gamma + 1)
    if tau >= kp:
        return SignClass.signed(kp + km + 1)
    if km >= kp:
        return SignClass.signed(gamma - 1)
    return SignClass.signed(gamma + 1)


def _type1_general(p: PretzelParams) -> ExtremePowers:
    kp, km = p.kappa_plus, p.kappa_minus
    E = 1 - (kp - km) + 2 * p.sum_beta
    if p.tau == kp - 1:
        e = 1 - (kp - km) - 2 * p.sum_alpha
    else:
        e = -1 - (kp - km) - 2 * p.sum_alpha
    return ExtremePowers(
        E=E, e=e,
        ph_class=SignClass.signed(km),
        pl_class=_t5_low_leading_sign(p),
        pl_scope="leading",
    )


def _type1_direct(p: PretzelParams) -> ExtremePowers:
    kp, km = p.kappa_plus, p.kappa_minus
    if km == 0 and kp >= 2:
        return _alternating_type1(p)
    if km == 1 and kp >= 2:
        return _type1_one_negative(p)
    if kp >= 2 and km >= 2 and p.tau_prime == 0:
        return _type1_general(p)
    raise NotCoveredError(f"{p} is outside the Type 1 closed-form families")


def type1_extremes(params: PretzelParams) -> ExtremePowers:
    """Closed-form ``E``, ``e`` and sign classes for a Type 1 pretzel link.

    Mirrors first when only the mirror image satisfies a family's
    hypotheses.  Raises :class:`NotCoveredError` otherwise (one strip of
    each sign, or a single strip).
    """
    if params.link_type is not LinkType.TYPE1:
        raise ValueError("type1_extremes needs Type 1 parameters")
    p = normalize(params)
    try:
        return _type1_direct(p)
    except NotCoveredError:
        pass
    return _type1_direct(normalize(mirror_params(p))).mirror()


def _type2_direct(p: PretzelParams) -> ExtremePowers:
    kp, km = p.kappa_plus, p.kappa_minus
    if kp >= 2 and km == 1:
        b1, amin = p.betas[0], p.alphas[-1]
        E = -kp if amin > b1 else 2 - kp - 2 * amin + 2 * b1
        return ExtremePowers(
            E=E, e=2 - kp - 2 * p.sum_alpha,
            ph_class=SignClass.NONNEGATIVE,
            pl_class=SignClass.signed(kp),
        )
    if kp >= 2 and km >= 2 and kp >= km:
        return ExtremePowers(
            E=-1 + km - kp + 2 * p.sum_beta,
            e=1 + km - kp - 2 * p.sum_alpha,
            ph_class=SignClass.NONNEGATIVE,
            pl_class=SignClass.signed(kp + km + 1),
        )
    raise NotCoveredError(f"{p} is outside the Type 2 closed-form families")


def type2_extremes(params: PretzelParams) -> ExtremePowers:
    """Closed-form ``E``, ``e`` and sign classes for a Type 2 pretzel link
    with strips of both signs (mirrored so that ``kappa+ >= kappa-``)."""
    if params.link_type is not LinkType.TYPE2:
        raise ValueError("type2_extremes needs Type 2 parameters")
    p = normalize(params)
    if p.kappa_plus >= p.kappa_minus:
        return _type2_direct(p)
    return _type2_direct(normalize(mirror_params(p))).mirror()


def proposition_extremes(params: PretzelParams) -> ExtremePowers:
    if params.link_type is LinkType.TYPE1:
        return type1_extremes(params)
    return type2_extremes(params)
