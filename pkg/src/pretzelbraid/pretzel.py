"""
Pretzel-link parameters: notation parsing, type classification,
normalization, mirroring and standard-diagram statistics.

A Type 1 link ``P1(2a_1+1, ..., 2a_k+1; -(2b_1+1), ..., -(2b_m+1))`` is stored
by its ``alphas`` ``(a_1, ..., a_k)`` and ``betas`` ``(b_1, ..., b_m)``; a Type 2
link ``P2(2a_1, ...; -2b_1, ...)`` likewise.  A bare strip list ``P(c_1, ...)``
keeps the signed crossing counts.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "LinkType",
    "LinkClass",
    "PretzelParams",
    "DiagramStats",
    "NotationError",
    "ParityError",
    "MixedUnitStripsError",
    "parse_notation",
    "classify",
    "normalize",
    "mirror_params",
    "theorem_orientation",
    "diagram_stats",
    "params_from_strips",
    "validate_strips",
]


class NotationError(ValueError):
    """Syntax error in pretzel notation; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ParityError(NotationError):
    """A strip whose crossing count has the wrong parity for its type."""

    def __init__(self, message: str, entry: int, position: int | None = None):
        self.entry = entry
        super().__init__(message, position)


class MixedUnitStripsError(NotationError):
    """Both a ``+1`` and a ``-1`` strip are present (removable by Reidemeister II)."""


class LinkType(enum.Enum):
    TYPE1 = "P1"
    TYPE2 = "P2"


class LinkClass(enum.Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class PretzelParams:
    link_type: LinkType
    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(int(x) for x in self.alphas))
        object.__setattr__(self, "betas", tuple(int(x) for x in self.betas))
        if not self.alphas and not self.betas:
            raise ValueError("a pretzel link needs at least one strip")
        floor = 0 if self.link_type is LinkType.TYPE1 else 1
        for x in self.alphas + self.betas:
            if x < floor:
                raise ValueError(f"{self.link_type.value} parameters must be >= {floor}, got {x}")
        if self.link_type is LinkType.TYPE1 and self.tau > 0 and self.tau_prime > 0:
            raise MixedUnitStripsError("Type 1 link has both +1 and -1 strips")

    @property
    def kappa_plus(self) -> int:
        return len(self.alphas)

    @property
    def kappa_minus(self) -> int:
        return len(self.betas)

    @property
    def sum_alpha(self) -> int:
        return sum(self.alphas)

    @property
    def sum_beta(self) -> int:
        return sum(self.betas)

    @property
    def tau(self) -> int:
        """Number of zero betas."""
        return self.betas.count(0)

    @property
    def tau_prime(self) -> int:
        """Number of zero alphas."""
        return self.alphas.count(0)

    @property
    def min_alpha(self) -> int | None:
        return min(self.alphas) if self.alphas else None

    @property
    def min_beta(self) -> int | None:
        return min(self.betas) if self.betas else None

    @property
    def num_strips(self) -> int:
        return len(self.alphas) + len(self.betas)

    def strips(self) -> tuple[int, ...]:
        """Signed crossing counts, positive strips first."""
        if self.link_type is LinkType.TYPE1:
            return tuple(2 * a + 1 for a in self.alphas) + tuple(-(2 * b + 1) for b in self.betas)
        return tuple(2 * a for a in self.alphas) + tuple(-2 * b for b in self.betas)

    def key(self) -> tuple:
        """Canonical, order-insensitive key."""
        n = normalize(self)
        return (n.link_type.value, n.alphas, n.betas)

    def notation(self) -> str:
        pos = ",".join(str(c) for c in self.strips() if c > 0) or "0"
        neg = ",".join(str(c) for c in self.strips() if c < 0) or "0"
        return f"{self.link_type.value}({pos};{neg})"

    def to_json(self) -> dict:
        return {"type": self.link_type.value, "alphas": list(self.alphas), "betas": list(self.betas)}

    @classmethod
    def from_json(cls, obj: dict) -> "PretzelParams":
        return cls(LinkType(obj["type"]), tuple(obj["alphas"]), tuple(obj["betas"]))

    def __str__(self):
        return self.notation()


@dataclass(frozen=True)
class DiagramStats:
    crossings: int
    writhe: int
    seifert_circles: int
    mp_moves: int


_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<punct>[(),;])|(?P<name>P[12]?)|(?P<bad>\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise NotationError(f"unexpected character {m.group(kind)!r}", start)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    return out


def _parse_side(tokens, i, closers):
    """Parse ``int (, int)*`` possibly empty; return (entries, next index)."""
    entries: list[tuple[int, int]] = []
    if i < len(tokens) and tokens[i][0] == "punct" and tokens[i][1] in closers:
        return entries, i
    while True:
        if i >= len(tokens):
            raise NotationError("unexpected end of input", None)
        kind, val, pos = tokens[i]
        if kind != "int":
            raise NotationError(f"expected an integer, got {val!r}", pos)
        entries.append((int(val), pos))
        i += 1
        if i >= len(tokens):
            raise NotationError("unexpected end of input", None)
        kind, val, pos = tokens[i]
        if kind == "punct" and val == ",":
            i += 1
            continue
        if kind == "punct" and val in closers:
            return entries, i
        raise NotationError(f"expected ',' or one of {sorted(closers)}, got {val!r}", pos)


def parse_notation(text: str) -> PretzelParams | tuple[int, ...]:
    """Parse ``P1(o1,...;n1,...)``, ``P2(...;...)`` or ``P(c1,...,ck)``.

    Typed notation returns :class:`PretzelParams`; a bare ``P(...)`` returns
    the validated strip tuple.  A lone ``0`` on either side of the semicolon
    denotes an empty side, as in ``P1(5,5,3,1;0)``.

    >>> parse_notation("P1(5,3;-5,-1)")
    PretzelParams(link_type=<LinkType.TYPE1: 'P1'>, alphas=(2, 1), betas=(2, 0))
    """
    tokens = _tokenize(text)
    if not tokens:
        raise NotationError("empty notation", 0)
    kind, name, pos = tokens[0]
    if kind != "name":
        raise NotationError(f"expected 'P', 'P1' or 'P2', got {name!r}", pos)
    if len(tokens) < 2 or tokens[1][1] != "(":
        raise NotationError("expected '('", tokens[1][2] if len(tokens) > 1 else len(text))

    if name == "P":
        entries, i = _parse_side(tokens, 2, {")"})
        if i != len(tokens) - 1:
            raise NotationError("trailing input after ')'", tokens[i + 1][2])
        return validate_strips([c for c, _ in entries], positions=[p for _, p in entries])

    pos_side, i = _parse_side(tokens, 2, {";"})
    neg_side, i = _parse_side(tokens, i + 1, {")"})
    if i != len(tokens) - 1:
        raise NotationError("trailing input after ')'", tokens[i + 1][2])
    if len(pos_side) == 1 and pos_side[0][0] == 0:
        pos_side = []
    if len(neg_side) == 1 and neg_side[0][0] == 0:
        neg_side = []

    link_type = LinkType(name)
    odd = link_type is LinkType.TYPE1
    alphas, betas = [], []
    for c, p in pos_side:
        if c <= 0:
            raise NotationError(f"entries before ';' must be positive, got {c}", p)
        if (c % 2 == 1) != odd:
            raise ParityError(f"{name} requires {'odd' if odd else 'even'} strips, got {c}", c, p)
        alphas.append((c - 1) // 2 if odd else c // 2)
    for c, p in neg_side:
        if c >= 0:
            raise NotationError(f"entries after ';' must be negative, got {c}", p)
        if (c % 2 != 0) != odd:
            raise ParityError(f"{name} requires {'odd' if odd else 'even'} strips, got {c}", c, p)
        betas.append((-c - 1) // 2 if odd else -c // 2)
    if not alphas and not betas:
        raise NotationError("a pretzel link needs at least one strip", pos)
    return PretzelParams(link_type, tuple(alphas), tuple(betas))


def validate_strips(strips: Iterable[int], positions: Sequence[int] | None = None) -> tuple[int, ...]:
    strips = tuple(int(c) for c in strips)
    for k, c in enumerate(strips):
        if c == 0:
            raise NotationError("strips must have a nonzero crossing count",
                                positions[k] if positions else None)
    if 1 in strips and -1 in strips:
        raise MixedUnitStripsError("strip list contains both +1 and -1 strips")
    return strips


def classify(strips: Sequence[int]) -> LinkClass:
    """Type of the standard diagram with these strips (strands antiparallel
    in every strip).

    >>> classify([5, 3, -5, -1]), classify([4, 4, 2, -4]), classify([3, 4, -5])
    (<LinkClass.TYPE1: 'Type1'>, <LinkClass.TYPE2: 'Type2'>, <LinkClass.TYPE3: 'Type3'>)
    """
    if not strips:
        return LinkClass.DEGENERATE
    if all(c % 2 == 0 for c in strips):
        return LinkClass.TYPE2
    if all(c % 2 != 0 for c in strips) and len(strips) >= 2:
        return LinkClass.TYPE1
    return LinkClass.TYPE3


def params_from_strips(strips: Sequence[int]) -> PretzelParams:
    """Typed parameters for a Type 1 or Type 2 strip list."""
    strips = validate_strips(strips)
    cls = classify(strips)
    if cls is LinkClass.TYPE1:
        return PretzelParams(LinkType.TYPE1,
                             tuple((c - 1) // 2 for c in strips if c > 0),
                             tuple((-c - 1) // 2 for c in strips if c < 0))
    if cls is LinkClass.TYPE2:
        return PretzelParams(LinkType.TYPE2,
                             tuple(c // 2 for c in strips if c > 0),
                             tuple(-c // 2 for c in strips if c < 0))
    raise ValueError(f"strips {list(strips)} are {cls.value}, not Type 1 or Type 2")


def normalize(params: PretzelParams) -> PretzelParams:
    """Sort alphas and betas in descending order."""
    return PretzelParams(params.link_type,
                         tuple(sorted(params.alphas, reverse=True)),
                         tuple(sorted(params.betas, reverse=True)))


def mirror_params(params: PretzelParams) -> PretzelParams:
    """Parameters of the mirror image: alphas and betas exchange roles."""
    return PretzelParams(params.link_type, params.betas, params.alphas)


def diagram_stats(params: PretzelParams) -> DiagramStats:
    strips = params.strips()
    pos = sum(c for c in strips if c > 0)
    neg = -sum(c for c in strips if c < 0)
    total = params.sum_alpha + params.sum_beta
    if params.link_type is LinkType.TYPE1:
        circles = 2 + 2 * total
        mp = total
    else:
        circles = 2 + 2 * total - params.num_strips
        mp = total - params.num_strips
    return DiagramStats(crossings=pos + neg, writhe=pos - neg, seifert_circles=circles, mp_moves=mp)


def theorem_orientation(params: PretzelParams) -> PretzelParams:
    """Normalized parameters, mirrored when the braid-index cases are stated
    for the mirror image.

    Type 1 links are mirrored when there are no positive strips, when a
    lone positive strip meets two or more negative ones, or when both sides
    have two or more strips and some positive strip is a single crossing.
    Type 2 links are mirrored so that ``kappa+ >= kappa-``.
    """
    p = normalize(params)
    kp, km = p.kappa_plus, p.kappa_minus
    if p.link_type is LinkType.TYPE1:
        flip = kp == 0 or (kp == 1 and km >= 2) or (kp >= 2 and km >= 2 and p.tau_prime > 0)
    else:
        flip = km > kp
    return normalize(mirror_params(p)) if flip else p
