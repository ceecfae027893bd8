"""
Seifert graphs of standard pretzel diagrams and constructive upper bounds
on the braid index.

A diagram with ``s`` Seifert circles is the closure of an ``s``-string
braid, so every circle removed by a move that keeps the link type lowers
the bound.  Three kinds of move appear:

* MP: a lone crossing between two circles in a chain is pushed through,
  merging two circles of the chain into one;
* S: the special move across a long Seifert circle, also removing one;
* L: the re-routing (long) moves that turn a standard diagram ``D`` into
  the diagram ``D~`` the S/MP moves are performed on.

The MP reduction is carried out on the graph itself.  L and S moves are
encoded per case as count schedules; :func:`construction_upper_bound`
checks their arithmetic before returning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .pretzel import LinkType, PretzelParams, diagram_stats, normalize, theorem_orientation

__all__ = [
    "Edge",
    "SeifertGraph",
    "build_seifert_graph",
    "mp_chain_reduce",
    "MPReduction",
    "Move",
    "ReductionSchedule",
    "UpperBoundMismatch",
    "construction_upper_bound",
    "verify_upper",
    "CASE_IDS",
]

C1, C2 = "C1", "C2"

CASE_IDS = (
    "MT1e1", "MT1e2", "MT1e3", "MT1e4", "MT1e5",
    "MT2e1", "MT2e2", "MT2e3", "MT2e4",
    "TorusFallback",
)


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    sign: int
    multiplicity: int = 1


@dataclass(frozen=True)
class SeifertGraph:
    """Seifert circles as vertices, crossing bundles as edges.

    ``strip_edges`` holds, per strip, the path of edges from the top anchor
    to the bottom one; ``chains`` the intermediate circles still joined by
    lone crossings (candidates for MP moves).
    """

    circles: tuple[str, ...]
    strip_edges: tuple[tuple[Edge, ...], ...]
    chains: tuple[tuple[str, ...], ...]
    top: str = C1
    bottom: str = C2

    @property
    def num_circles(self) -> int:
        return len(self.circles)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return _merge_parallel([e for path in self.strip_edges for e in path])

    @property
    def num_crossings(self) -> int:
        return sum(e.multiplicity for e in self.edges)

    def degree(self, v: str) -> int:
        return sum(e.multiplicity for e in self.edges if v in (e.u, e.v))

    def anchor_edges(self) -> list[Edge]:
        return [e for e in self.edges if {e.u, e.v} == {self.top, self.bottom}]


def _merge_parallel(edges: list[Edge]) -> tuple[Edge, ...]:
    out: dict[tuple[str, str, int], int] = {}
    for e in edges:
        key = (e.u, e.v, e.sign)
        out[key] = out.get(key, 0) + e.multiplicity
    return tuple(Edge(u, v, s, m) for (u, v, s), m in out.items())


def build_seifert_graph(params: PretzelParams) -> SeifertGraph:
    """Seifert graph of the standard diagram.

    >>> build_seifert_graph(PretzelParams(LinkType.TYPE1, (2, 1), (2, 0))).num_circles
    12
    """
    circles = [C1, C2]
    paths = []
    chains = []
    for j, c in enumerate(params.strips()):
        chain = tuple(f"s{j}.{i}" for i in range(abs(c) - 1))
        circles.extend(chain)
        chains.append(chain)
        nodes = (C1,) + chain + (C2,)
        sign = 1 if c > 0 else -1
        paths.append(tuple(Edge(u, v, sign) for u, v in zip(nodes, nodes[1:])))
    return SeifertGraph(tuple(circles), tuple(paths), tuple(chains))


@dataclass(frozen=True)
class MPReduction:
    graph: SeifertGraph
    reduced_circle_count: int
    moves_applied: int


def _reduce_path(path: tuple[Edge, ...], chain: tuple[str, ...]) -> tuple[tuple[Edge, ...], set[str]]:
    """Merge chain circles pairwise along one strip's edge path.

    The crossing between a merged pair is carried into the next bundle.
    """
    absorbed = {chain[i + 1]: chain[i] for i in range(0, len(chain) - 1, 2)}
    out: list[Edge] = []
    carry = 0
    for e in path:
        u, v = absorbed.get(e.u, e.u), absorbed.get(e.v, e.v)
        if u == v:
            carry += e.multiplicity
            continue
        out.append(Edge(u, v, e.sign, e.multiplicity + carry))
        carry = 0
    return tuple(out), set(absorbed)


def mp_chain_reduce(g: SeifertGraph) -> MPReduction:
    """Apply MP moves along every chain of lone crossings.

    Each move merges two consecutive intermediate circles; a chain of
    ``2k`` or ``2k + 1`` circles ends with ``k`` or ``k + 1``.  Crossings are
    kept, so the merged circles meet a neighbour in a doubled bundle and no
    lone-crossing chain is left.
    """
    removed: set[str] = set()
    paths = []
    for path, chain in zip(g.strip_edges, g.chains):
        new_path, gone = _reduce_path(path, chain)
        removed |= gone
        paths.append(new_path)
    circles = tuple(v for v in g.circles if v not in removed)
    reduced = SeifertGraph(circles, tuple(paths), tuple(() for _ in g.chains), g.top, g.bottom)
    return MPReduction(reduced, reduced.num_circles, len(removed))


# ----------------------------------------------------------------- schedules

@dataclass(frozen=True)
class Move:
    kind: str  # "MP", "S", "L" or "MERGE"
    location: str
    circles_removed: int = 1

    def to_json(self) -> dict:
        return {"kind": self.kind, "location": self.location, "circles_removed": self.circles_removed}


@dataclass
class ReductionSchedule:
    case_id: str
    params: PretzelParams
    s_standard: int
    moves: list[Move] = field(default_factory=list)
    note: str = ""

    def count(self, kind: str) -> int:
        return sum(1 for m in self.moves if m.kind == kind)

    def removed(self, *kinds: str) -> int:
        return sum(m.circles_removed for m in self.moves if m.kind in kinds)

    @property
    def s_tilde(self) -> int:
        """Circle count after the L and MERGE moves."""
        return self.s_standard - self.removed("L", "MERGE")

    @property
    def reduction_moves(self) -> int:
        return self.count("S") + self.count("MP")

    @property
    def upper(self) -> int:
        return self.s_tilde - self.reduction_moves

    def inventory(self) -> dict[str, int]:
        return {k: self.count(k) for k in ("L", "MERGE", "S", "MP")}

    def to_json(self) -> dict:
        return {
            "case": self.case_id,
            "input": self.params.notation(),
            "s_standard": self.s_standard,
            "s_tilde": self.s_tilde,
            "inventory": self.inventory(),
            "upper": self.upper,
            "note": self.note,
            "moves": [m.to_json() for m in self.moves],
        }

    def dump(self) -> str:
        return json.dumps(self.to_json(), indent=2)


class UpperBoundMismatch(AssertionError):
    """Constructed upper bound differs from the expected value."""

    def __init__(self, expected: int, achieved: int, schedule: ReductionSchedule):
        self.expected = expected
        self.achieved = achieved
        self.schedule = schedule
        super().__init__(f"{schedule.params}: expected {expected}, achieved {achieved}\n{schedule.dump()}")


def _add(sched: ReductionSchedule, kind: str, count: int, location: str, removed: int = 1):
    if count < 0:
        raise ValueError(f"{sched.case_id}: negative {kind} count {count} at {location}")
    sched.moves.extend(Move(kind, location, removed) for _ in range(count))


def _strip_mp(sched: ReductionSchedule, label: str, count: int):
    _add(sched, "MP", count, label)


def _alpha_label(j: int, alpha: int) -> str:
    return f"alpha_{j + 1}={alpha} strip"


def _beta_label(i: int, beta: int) -> str:
    return f"beta_{i + 1}={beta} strip"


def _s_standard(p: PretzelParams) -> int:
    return diagram_stats(p).seifert_circles


def _plain_mp(sched: ReductionSchedule, p: PretzelParams):
    for j, a in enumerate(p.alphas):
        _strip_mp(sched, _alpha_label(j, a), a if p.link_type is LinkType.TYPE1 else a - 1)
    for i, b in enumerate(p.betas):
        _strip_mp(sched, _beta_label(i, b), b if p.link_type is LinkType.TYPE1 else b - 1)


def _sched_mt1e1(s: ReductionSchedule, p: PretzelParams):
    a1, a2 = p.alphas
    _add(s, "L", 1, f"flype to alternating P1({2 * a1 - 1},1,{2 * a2 - 1};0)", 4)
    _strip_mp(s, _alpha_label(0, a1), a1 - 1)
    _strip_mp(s, _alpha_label(1, a2), a2 - 1)


def _sched_mt1e2(s: ReductionSchedule, p: PretzelParams):
    b1 = p.betas[0]
    alphas = p.alphas
    if b1 == 0:
        # one long move removes the -1 strip and two anchor-side circles
        s.note = "short move"
        _add(s, "L", 1, "short move across the -1 strip", 3)
        last = len(alphas) - 1
        for j, a in enumerate(alphas):
            if j in (0, last):
                _strip_mp(s, _alpha_label(j, a), a - 1)
            else:
                _add(s, "S", 1, _alpha_label(j, a))
                _strip_mp(s, _alpha_label(j, a), a - 1)
        return
    s.note = "beta_1 < min alpha"
    _add(s, "L", 2 * b1 + 1, f"re-route across {_beta_label(0, b1)}")
    _add(s, "MERGE", 1, "top and bottom circles combined")
    for j, a in enumerate(alphas):
        _add(s, "S", a - b1, _alpha_label(j, a))
        _strip_mp(s, _alpha_label(j, a), b1 - 1 if j == 0 else b1)


def _sched_mt1e3(s: ReductionSchedule, p: PretzelParams):
    b1 = p.betas[0]
    m = p.min_alpha
    if m == 0:
        s.note = "a single-crossing positive strip: MP moves only"
        _plain_mp(s, p)
        return
    alphas = p.alphas
    guide = alphas.index(m)
    if b1 == m:
        s.note = "beta_1 = min alpha"
        _add(s, "L", 2 * b1 - 1, f"re-route across {_beta_label(0, b1)}")
        _add(s, "L", 1, f"re-route across {_beta_label(0, b1)}, closing the long circle", 2)
    else:
        s.note = "beta_1 > min alpha"
        _add(s, "L", 2 * m - 1, f"re-route across {_beta_label(0, b1)}")
        _add(s, "L", 1, f"re-route across {_beta_label(0, b1)}, closing the long circle", 2)
    for j, a in enumerate(alphas):
        n_s = m - 1 if j == guide else m
        _add(s, "S", n_s, _alpha_label(j, a))
        _strip_mp(s, _alpha_label(j, a), a - m)
    if b1 > m:
        _strip_mp(s, f"{_beta_label(0, b1)} remainder", b1 - m)


def _sched_mt1e4(s: ReductionSchedule, p: PretzelParams):
    kp, km = p.kappa_plus, p.kappa_minus
    alphas = p.alphas
    if km == p.tau:
        s.note = "extra reduction (all negative strips single crossings)"
        _add(s, "L", kp - 1, "convert positive strips to horizontal twists")
        last = kp - 1
        for j, a in enumerate(alphas):
            _strip_mp(s, _alpha_label(j, a), a if j in (0, last) else a - 1)
        return
    s.note = "extra reduction with longer negative strips"
    _add(s, "L", kp + 1, "convert positive strips to horizontal twists")
    for j, a in enumerate(alphas):
        _strip_mp(s, _alpha_label(j, a), a if j == 0 else a - 1)
    nonzero = [(i, b) for i, b in enumerate(p.betas) if b > 0]
    *inner, (i_last, b_last) = nonzero
    for i, b in inner:
        _add(s, "S", 1, _beta_label(i, b))
        _strip_mp(s, _beta_label(i, b), b - 1)
    _strip_mp(s, f"{_beta_label(i_last, b_last)} (innermost)", b_last - 1)


def _sched_mt2e1(s: ReductionSchedule, p: PretzelParams):
    _plain_mp(s, p)
    _add(s, "MP", 1, "lone crossing between the anchor circles")


def _sched_mt2e23(s: ReductionSchedule, p: PretzelParams):
    b1 = p.betas[0]
    m = p.min_alpha
    alphas = p.alphas
    if b1 < m:
        s.note = "beta_1 < min alpha"
        _add(s, "L", 2 * b1, f"re-route across {_beta_label(0, b1)}")
        _add(s, "MERGE", 1, "top and bottom circles combined")
        for j, a in enumerate(alphas):
            _add(s, "S", b1, _alpha_label(j, a))
            _strip_mp(s, _alpha_label(j, a), a - b1 - 1)
        return
    r = min(b1, m)
    s.note = "beta_1 = min alpha" if b1 == m else "beta_1 > min alpha (roles of beta_1 and min alpha switched)"
    _add(s, "L", 2 * r - 2, f"re-route across {_beta_label(0, b1)}")
    _add(s, "L", 1, f"re-route across {_beta_label(0, b1)}, last move", 2)
    for j, a in enumerate(alphas):
        n_s = min(r, a - 1)
        _add(s, "S", n_s, _alpha_label(j, a))
        _strip_mp(s, _alpha_label(j, a), a - 1 - n_s)
    if b1 > m:
        _strip_mp(s, f"{_beta_label(0, b1)} remainder", b1 - m)


def _sched_mt2e4(s: ReductionSchedule, p: PretzelParams):
    _add(s, "L", 1, "join the outermost positive and negative strips", 2)
    _plain_mp(s, p)


def _sched_fallback(s: ReductionSchedule, p: PretzelParams):
    if p.num_strips == 1:
        s.note = "single strip closes to the unknot"
        _add(s, "L", 1, "Reidemeister I unwinding", s.s_standard - 1)
        return
    a, b = p.alphas[0], p.betas[0]
    k = abs(a - b)
    # cancel min(a, b) (Type 1) crossing pairs by Reidemeister II, leaving
    # the antiparallel (2, 2k) torus diagram P1(2k-1,1;0) or the unlink
    target = 2 * k if k else 2
    s.note = f"antiparallel (2, {2 * k}) torus link" if k else "two-component unlink"
    _add(s, "L", 1, "Reidemeister II cancellation between the two strips", s.s_standard - target)
    _add(s, "MP", max(k - 1, 0), "torus strip")


_SCHEDULERS = {
    "MT1e1": _sched_mt1e1,
    "MT1e2": _sched_mt1e2,
    "MT1e3": _sched_mt1e3,
    "MT1e4": _sched_mt1e4,
    "MT1e5": _plain_mp,
    "MT2e1": _sched_mt2e1,
    "MT2e2": _sched_mt2e23,
    "MT2e3": _sched_mt2e23,
    "MT2e4": _sched_mt2e4,
    "TorusFallback": _sched_fallback,
}


def construction_upper_bound(params: PretzelParams, case_id: str) -> ReductionSchedule:
    """Reduction schedule for ``params`` in the given theorem case.

    The returned schedule's ``upper`` is ``s(D~) - (#S + #MP)``.

    >>> sch = construction_upper_bound(PretzelParams(LinkType.TYPE1, (2, 3, 3), (1,)), "MT1e2")
    >>> sch.s_tilde, sch.reduction_moves, sch.upper
    (16, 7, 9)
    """
    if case_id not in _SCHEDULERS:
        raise ValueError(f"unknown case {case_id!r}")
    p = normalize(params) if case_id == "TorusFallback" else theorem_orientation(params)
    sched = ReductionSchedule(case_id, p, _s_standard(p))
    _SCHEDULERS[case_id](sched, p)
    if sched.s_tilde < 1 or sched.upper < 1:
        raise ValueError(f"{case_id} schedule for {p} leaves {sched.upper} circles")
    return sched


def verify_upper(params: PretzelParams, expected: int | None = None, case_id: str | None = None) -> bool:
    """Check the construction reaches ``expected`` (by default, the
    braid-index formula value).  Raises :class:`UpperBoundMismatch`."""
    if expected is None or case_id is None:
        from .braid_index import dispatch

        d_case, d_value, _ = dispatch(params)
        case_id = case_id or d_case
        expected = d_value if expected is None else expected
    sched = construction_upper_bound(params, case_id)
    if sched.upper != expected:
        raise UpperBoundMismatch(expected, sched.upper, sched)
    return True
