"""Peeling matcher: build a vertex bijection between two graphs round by round.

Each round picks the smallest live vertex ``v`` of the first graph, looks for
a live vertex ``u`` of the second graph whose auxiliary digraph is positionally
equivalent to the one induced by ``v`` (with histories from previous rounds
taken into account), pairs off the vertices that are unique in both digraphs,
and deletes them. The loop ends when every vertex is paired or no partner for
the pivot exists.

The procedure is a heuristic. Its output is only reported as an isomorphism
after :func:`verify_mapping` has checked every edge.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Optional, Union

from .digraph import AuxiliaryDigraph, build, characteristics, unique_vertices
from .graph import Graph, delete_vertices, precheck
from .history import HistoryInterner, positionally_equivalent

__all__ = [
    "Mode",
    "Status",
    "RoundTrace",
    "Verdict",
    "MatchState",
    "Partner",
    "MatcherInvariantError",
    "choose_pivot",
    "find_partner",
    "extract_unique_pairs",
    "candidate_groups",
    "run",
    "verify_mapping",
]


class Mode(str, enum.Enum):
    """What to do when no partner is found for the pivot.

    ``FAITHFUL`` declares the graphs non-isomorphic, as the original
    procedure does. ``CAUTIOUS`` answers unknown instead. ``RETRY`` first
    tries every other live vertex as pivot, then answers unknown.
    """

    FAITHFUL = "faithful"
    CAUTIOUS = "cautious"
    RETRY = "retry"


class Status(str, enum.Enum):
    ISOMORPHIC = "isomorphic"
    NOT_ISOMORPHIC = "not-isomorphic"
    UNKNOWN = "unknown"


class MatcherInvariantError(RuntimeError):
    """Unique vertices of two equivalent digraphs could not be paired."""


@dataclass(frozen=True)
class RoundTrace:
    index: int
    pivot: int
    partner: Optional[int]
    pairs: tuple[tuple[int, int], ...]
    remaining: int
    rejected: tuple[int, ...] = ()
    note: str = ""

    def __str__(self) -> str:
        partner = "FAIL" if self.partner is None else str(self.partner)
        pairs = " ".join(f"{v}:{u}" for v, u in self.pairs) or "-"
        rejected = ",".join(map(str, self.rejected)) or "-"
        line = (
            f"round {self.index} pivot {self.pivot} partner {partner} "
            f"pairs {pairs} remaining {self.remaining} rejected {rejected}"
        )
        return f"{line} ({self.note})" if self.note else line


@dataclass
class Verdict:
    status: Status
    pairs: tuple[tuple[int, int], ...] = ()
    trace: list[RoundTrace] = field(default_factory=list)
    reason: str = ""
    #: set when the peeling loop completed but the mapping failed verification
    verification_failed: bool = False

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def rounds(self) -> int:
        return len(self.trace)

    def format_trace(self) -> str:
        return "\n".join(map(str, self.trace))


@dataclass
class MatchState:
    """Live remainders ``q``/``s`` of the two graphs plus committed histories."""

    q: Graph
    s: Graph
    hq: dict[int, int]
    hs: dict[int, int]
    interner: HistoryInterner
    pairs: list[tuple[int, int]] = field(default_factory=list)

    @classmethod
    def start(cls, g: Graph, h: Graph) -> "MatchState":
        empty = HistoryInterner.EMPTY
        return cls(
            g,
            h,
            dict.fromkeys(g.vertices, empty),
            dict.fromkeys(h.vertices, empty),
            HistoryInterner(),
        )

    @property
    def n(self) -> int:
        return self.q.n

    def commit(self, partner: "Partner", pairs: Iterable[tuple[int, int]]) -> None:
        pairs = list(pairs)
        gone_q = {v for v, _ in pairs}
        gone_s = {u for _, u in pairs}
        self.pairs.extend(pairs)
        self.q = delete_vertices(self.q, gone_q)
        self.s = delete_vertices(self.s, gone_s)
        self.hq = {x: t for x, t in partner.hq.items() if x not in gone_q}
        self.hs = {x: t for x, t in partner.hs.items() if x not in gone_s}


@dataclass
class Partner:
    """An accepted partner with the trial histories that made it match."""

    pivot: int
    vertex: int
    dq: AuxiliaryDigraph
    ds: AuxiliaryDigraph
    hq: dict[int, int]
    hs: dict[int, int]
    rejected: tuple[int, ...] = ()


def choose_pivot(state: MatchState) -> int:
    return state.q.vertices[0]


def _pushed(state: MatchState, d: AuxiliaryDigraph, committed: Mapping[int, int]) -> dict[int, int]:
    push = state.interner.push
    chars = characteristics(d)
    return {x: push(committed[x], chars[x]) for x in d.graph.vertices}


def find_partner(state: MatchState, v: int) -> Optional[Partner]:
    """First live ``u`` (ascending id) whose digraph is equivalent to ``v``'s."""
    dq = build(state.q, v)
    hq = _pushed(state, dq, state.hq)
    rejected = []
    for u in state.s.vertices:
        ds = build(state.s, u)
        # line sizes are history-free; skip pushing floors when they differ
        if ds.line_sizes != dq.line_sizes or len(ds.unreached) != len(dq.unreached):
            rejected.append(u)
            continue
        hs = _pushed(state, ds, state.hs)
        if positionally_equivalent(dq, ds, hq, hs):
            return Partner(v, u, dq, ds, hq, hs, tuple(rejected))
        rejected.append(u)
    return None


def _classes(d: AuxiliaryDigraph, hist: Mapping[int, int]) -> dict[tuple, list[int]]:
    groups: dict[tuple, list[int]] = defaultdict(list)
    for x in d.members():
        groups[(d.levels[x], hist[x])].append(x)
    return groups


def extract_unique_pairs(
    dq: AuxiliaryDigraph,
    ds: AuxiliaryDigraph,
    hq: Mapping[int, int],
    hs: Mapping[int, int],
) -> list[tuple[int, int]]:
    """Pair up the vertices that are unique in both digraphs.

    Returned pairs are sorted by the first graph's id. The roots always form
    one of them.
    """
    uq = unique_vertices(hq, dq.members())
    us = unique_vertices(hs, ds.members())
    by_key = {(ds.levels[u], hs[u]): u for u in us}
    pairs = []
    for v in sorted(uq):
        u = by_key.pop((dq.levels[v], hq[v]), None)
        if u is None:
            raise MatcherInvariantError(f"unique vertex {v} has no counterpart")
        pairs.append((v, u))
    if by_key:
        raise MatcherInvariantError(f"unpaired unique vertices {sorted(by_key.values())}")
    return pairs


def candidate_groups(
    dq: AuxiliaryDigraph,
    ds: AuxiliaryDigraph,
    hq: Mapping[int, int],
    hs: Mapping[int, int],
) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Classes of non-unique vertices that could map onto each other.

    Each class joins the first-graph vertices with one (line, history) to the
    second-graph vertices with the same key, i.e. the connected components of
    the bipartite graph of admissible pairings.
    """
    cq = _classes(dq, hq)
    cs = _classes(ds, hs)
    out = []
    for key, members in cq.items():
        if len(members) > 1:
            out.append((frozenset(members), frozenset(cs.get(key, ()))))
    out.sort(key=lambda grp: min(grp[0]))
    return out


PairsLike = Union[Mapping[int, int], Iterable[tuple[int, int]]]


def verify_mapping(g: Graph, h: Graph, p: PairsLike) -> bool:
    """Is ``p`` a bijection ``V(g) -> V(h)`` carrying edges onto edges?"""
    pairs = list(p.items()) if isinstance(p, Mapping) else list(p)
    fwd = dict(pairs)
    if len(fwd) != len(pairs) or set(fwd) != set(g.vertices):
        return False
    if len(set(fwd.values())) != len(fwd) or set(fwd.values()) != set(h.vertices):
        return False
    if g.m != h.m:
        return False
    return all(h.has_edge(fwd[a], fwd[b]) for a, b in g.edges)


def run(g: Graph, h: Graph, mode: Union[Mode, str] = Mode.FAITHFUL) -> Verdict:
    """Try to build a bijection between ``g`` and ``h`` by peeling.

    Returns a :class:`Verdict`. ``ISOMORPHIC`` is only returned with a mapping
    that passed :func:`verify_mapping`. A failed degree precheck is a proof of
    non-isomorphism in every mode; a failed partner search is only one in
    ``FAITHFUL`` mode.
    """
    mode = Mode(mode)
    if not precheck(g, h):
        return Verdict(Status.NOT_ISOMORPHIC, reason="precheck: n, m or degree vector differ")
    state = MatchState.start(g, h)
    trace: list[RoundTrace] = []
    while state.n:
        index = len(trace) + 1
        v = choose_pivot(state)
        partner = find_partner(state, v)
        note = ""
        if partner is None and mode is Mode.RETRY:
            for alt in state.q.vertices[1:]:
                partner = find_partner(state, alt)
                if partner is not None:
                    note = f"pivot {v} had no partner"
                    break
        if partner is None:
            trace.append(RoundTrace(index, v, None, (), state.n, note=f"no partner, mode {mode.value}"))
            status = Status.NOT_ISOMORPHIC if mode is Mode.FAITHFUL else Status.UNKNOWN
            reason = f"round {index}: no partner for pivot {v} among {state.s.n} candidates"
            if mode is Mode.RETRY:
                reason = f"round {index}: no pivot among {state.q.n} has a partner"
            return Verdict(status, tuple(state.pairs), trace, reason)
        pairs = extract_unique_pairs(partner.dq, partner.ds, partner.hq, partner.hs)
        state.commit(partner, pairs)
        trace.append(
            RoundTrace(index, partner.pivot, partner.vertex, tuple(pairs), state.n, partner.rejected, note)
        )
    if verify_mapping(g, h, state.pairs):
        return Verdict(Status.ISOMORPHIC, tuple(state.pairs), trace, "mapping verified")
    return Verdict(
        Status.UNKNOWN,
        tuple(state.pairs),
        trace,
        "peeling completed but the mapping does not preserve edges",
        verification_failed=True,
    )
