"""
Exact sparse Laurent polynomials in ``z`` and ``a`` with integer coefficients.

Two value types live here:

* :class:`ZPoly` -- a Laurent polynomial in ``z`` alone; used for the
  coefficients ``p^h`` and ``p^l`` of the extreme ``a``-powers.
* :class:`LaurentPoly` -- a Laurent polynomial in ``z`` and ``a``; carries
  HOMFLY-PT values.

Both are immutable and always stored in canonical form (no zero
coefficients), so ``==`` is structural equality.

>>> z, a = LaurentPoly.z(), LaurentPoly.a()
>>> hopf = (z + z**-1) * a**-1 - z**-1 * a**-3
>>> extract_extremes(hopf).E, extract_extremes(hopf).e
(-1, -3)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

__all__ = [
    "ZPoly",
    "LaurentPoly",
    "SignClass",
    "ExtremePowers",
    "fib_poly",
    "extract_extremes",
    "substitute_mirror",
    "UndefinedExtremesError",
]

Number = int


class UndefinedExtremesError(ValueError):
    """Raised when extreme powers are requested for the zero polynomial."""


def _clean(terms: Mapping) -> dict:
    return {k: int(c) for k, c in terms.items() if c}


def _sup(exp: int, var: str) -> str:
    if exp == 1:
        return var
    return f"{var}^{exp}"


class ZPoly:
    """Laurent polynomial in ``z`` with integer coefficients.

    ``terms`` maps a ``z``-exponent to its (nonzero) coefficient.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0) -> "ZPoly":
        return cls({exp: coeff})

    @classmethod
    def z(cls) -> "ZPoly":
        return cls({1: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Highest ``z``-exponent."""
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return min(self._terms)

    def leading(self) -> "ZPoly":
        """The highest-degree monomial (``p_0`` in the literature)."""
        d = self.degree()
        return ZPoly({d: self._terms[d]})

    def leading_coefficient(self) -> int:
        return self._terms[self.degree()]

    def coefficients(self) -> list[int]:
        return [self._terms[k] for k in sorted(self._terms)]

    def __eq__(self, other):
        if isinstance(other, int):
            other = ZPoly({0: other})
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = ZPoly({0: other})
        if not isinstance(other, ZPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return ZPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ZPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = ZPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ZPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, ZPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return ZPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers")
            (k, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have negative powers")
            return ZPoly({k * n: c ** (-n)})
        out = ZPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "ZPoly":
        """Multiply by ``z**k``."""
        return ZPoly({e + k: c for e, c in self._terms.items()})

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = _sup(e, "z")
            else:
                body = f"{abs(c)}*{_sup(e, 'z')}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


class SignClass(enum.Enum):
    """Coefficient-sign class of a ``z``-polynomial.

    ``NONNEGATIVE`` is the set F of nonzero polynomials with all
    coefficients >= 0, ``NONPOSITIVE`` is -F.  ``INDETERMINATE`` makes no
    claim.
    """

    NONNEGATIVE = "F"
    NONPOSITIVE = "-F"
    INDETERMINATE = "?"

    @classmethod
    def of(cls, p: ZPoly) -> "SignClass":
        coeffs = p.coefficients()
        if coeffs and all(c >= 0 for c in coeffs):
            return cls.NONNEGATIVE
        if coeffs and all(c <= 0 for c in coeffs):
            return cls.NONPOSITIVE
        return cls.INDETERMINATE

    @classmethod
    def signed(cls, k: int) -> "SignClass":
        """The class ``(-1)**k * F``."""
        return cls.NONNEGATIVE if k % 2 == 0 else cls.NONPOSITIVE

    def contains(self, p: ZPoly) -> bool:
        if p.is_zero():
            return False
        if self is SignClass.INDETERMINATE:
            return True
        return SignClass.of(p) is self

    def negate(self) -> "SignClass":
        if self is SignClass.NONNEGATIVE:
            return SignClass.NONPOSITIVE
        if self is SignClass.NONPOSITIVE:
            return SignClass.NONNEGATIVE
        return self

    def times_sign(self, k: int) -> "SignClass":
        """The class of ``(-1)**k * p`` for ``p`` in this class."""
        return self if k % 2 == 0 else self.negate()


class LaurentPoly:
    """Laurent polynomial in ``z`` and ``a`` with integer coefficients.

    ``terms`` maps ``(z_exponent, a_exponent)`` to a nonzero coefficient.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def z(cls) -> "LaurentPoly":
        return cls({(1, 0): 1})

    @classmethod
    def a(cls) -> "LaurentPoly":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, coeff: int, zexp: int = 0, aexp: int = 0) -> "LaurentPoly":
        return cls({(zexp, aexp): coeff})

    @classmethod
    def from_a_coefficients(cls, coeffs: Mapping[int, ZPoly]) -> "LaurentPoly":
        """Build ``sum_j coeffs[j] * a**j``."""
        out = {}
        for j, p in coeffs.items():
            for i, c in p.terms.items():
                out[(i, j)] = c
        return cls(out)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def a_degrees(self) -> list[int]:
        return sorted({j for _, j in self._terms})

    def a_coefficient(self, j: int) -> ZPoly:
        """The ``z``-polynomial multiplying ``a**j``."""
        return ZPoly({i: c for (i, jj), c in self._terms.items() if jj == j})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._terms) == 1:
            (k2, c2), = other._terms.items()
            return self.shift(*k2) * c2 if c2 != 1 else self.shift(*k2)
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers")
            ((i, j), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have negative powers")
            return LaurentPoly({(i * n, j * n): c ** (-n)})
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, zexp: int = 0, aexp: int = 0) -> "LaurentPoly":
        """Multiply by the monomial ``z**zexp * a**aexp``."""
        return LaurentPoly({(i + zexp, j + aexp): c for (i, j), c in self._terms.items()})

    def to_json(self) -> list[list]:
        """Sorted ``[z_exp, a_exp, "coefficient"]`` triples."""
        return [[i, j, str(c)] for (i, j), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, triples: Iterable) -> "LaurentPoly":
        return cls({(int(i), int(j)): int(c) for i, j, c in triples})

    def __repr__(self):
        if not self._terms:
            return "0"
        chunks = []
        for j in sorted(self.a_degrees(), reverse=True):
            p = self.a_coefficient(j)
            a_part = "" if j == 0 else _sup(j, "a")
            if len(p.terms) == 1:
                (e, c), = p.terms.items()
                zpart = ZPoly({e: abs(c)})
                if a_part and abs(c) == 1 and e == 0:
                    body = a_part
                elif a_part:
                    body = f"{zpart!r}*{a_part}"
                else:
                    body = repr(zpart)
                chunks.append(("-" if c < 0 else "+", body))
            else:
                body = f"({p!r})" + (f"*{a_part}" if a_part else "")
                chunks.append(("+", body))
        s = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
        for sign, body in chunks[1:]:
            s += f" {sign} {body}"
        return s


@lru_cache(maxsize=None)
def fib_poly(n: int) -> ZPoly:
    """Fibonacci-like polynomial ``f_n``: ``f_2 = 1/z``, ``f_3 = 1``,
    ``f_{n+2} = z f_{n+1} + f_n``.

    >>> fib_poly(4)
    z + z^-1
    """
    if n < 2:
        raise ValueError(f"fib_poly is defined for n >= 2, got {n}")
    if n == 2:
        return ZPoly({-1: 1})
    if n == 3:
        return ZPoly({0: 1})
    return fib_poly(n - 1).shift(1) + fib_poly(n - 2)


@dataclass(frozen=True)
class ExtremePowers:
    """Highest/lowest ``a``-degrees ``E``, ``e`` of a HOMFLY-PT polynomial.

    ``ph``/``pl`` are the coefficient polynomials of ``a**E``/``a**e`` when
    known.  ``ph_class``/``pl_class`` are sign-class claims; when the
    matching ``*_scope`` is ``"leading"`` the claim covers only the leading
    monomial ``p_0``.
    """

    E: int
    e: int
    ph_class: SignClass = SignClass.INDETERMINATE
    pl_class: SignClass = SignClass.INDETERMINATE
    ph: ZPoly | None = None
    pl: ZPoly | None = None
    ph_scope: str = "poly"
    pl_scope: str = "poly"

    def __post_init__(self):
        if self.E < self.e:
            raise ValueError(f"E={self.E} < e={self.e}")

    @property
    def ph0(self) -> ZPoly | None:
        return None if self.ph is None else self.ph.leading()

    @property
    def pl0(self) -> ZPoly | None:
        return None if self.pl is None else self.pl.leading()

    @property
    def span(self) -> int:
        return self.E - self.e

    def mirror(self) -> "ExtremePowers":
        """Extremes of the mirror image, using ``E(L^r) = -e(L)``,
        ``p^h(L^r) = (-1)^e(L) p^l(L)`` and symmetrically."""
        return ExtremePowers(
            E=-self.e,
            e=-self.E,
            ph_class=self.pl_class.times_sign(self.e),
            pl_class=self.ph_class.times_sign(self.E),
            ph=None if self.pl is None else self.pl * (-1) ** (self.e % 2),
            pl=None if self.ph is None else self.ph * (-1) ** (self.E % 2),
            ph_scope=self.pl_scope,
            pl_scope=self.ph_scope,
        )

    def violations(self, actual: "ExtremePowers") -> list[str]:
        """Claims of ``self`` not satisfied by the computed ``actual``."""
        out = []
        if (self.E, self.e) != (actual.E, actual.e):
            out.append(f"(E, e) claimed {(self.E, self.e)}, computed {(actual.E, actual.e)}")
        for name in ("ph", "pl"):
            cls = getattr(self, f"{name}_class")
            scope = getattr(self, f"{name}_scope")
            claimed = getattr(self, name)
            got = getattr(actual, name)
            if got is None:
                continue
            if claimed is not None and claimed != got:
                out.append(f"{name} claimed {claimed!r}, computed {got!r}")
            target = got.leading() if scope == "leading" else got
            if not cls.contains(target):
                out.append(f"{name} = {got!r} not in class {cls.value} ({scope})")
        return out


def extract_extremes(p: LaurentPoly) -> ExtremePowers:
    """Read off ``E``, ``e``, ``p^h`` and ``p^l`` from a nonzero polynomial.

    Sign classes are computed from the coefficients, never assumed.
    """
    if p.is_zero():
        raise UndefinedExtremesError("the zero polynomial has no extreme a-powers")
    degs = p.a_degrees()
    E, e = degs[-1], degs[0]
    ph, pl = p.a_coefficient(E), p.a_coefficient(e)
    return ExtremePowers(E=E, e=e, ph_class=SignClass.of(ph), pl_class=SignClass.of(pl), ph=ph, pl=pl)


def substitute_mirror(p: LaurentPoly) -> LaurentPoly:
    """Apply ``a -> -1/a``; maps ``H(L)`` to ``H`` of the mirror image."""
    return LaurentPoly({(i, -j): c * (-1) ** (j % 2) for (i, j), c in p.terms.items()})
