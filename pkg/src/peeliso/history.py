"""Multi-floor characteristic histories and positional equivalence.

Each peeling round stacks a new floor (the characteristic from that round's
digraph, or ``None`` when the vertex was unreached) on top of a vertex's
history. Two vertices compare equal only if every floor agrees.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Hashable, Mapping
from dataclasses import dataclass
from typing import Optional

from .digraph import AuxiliaryDigraph, Characteristic

__all__ = [
    "CharacteristicHistory",
    "push_floor",
    "histories_equal",
    "positionally_equivalent",
    "HistoryInterner",
]

Floor = Optional[Characteristic]


@dataclass(frozen=True)
class CharacteristicHistory:
    """Floors newest first: ``floors[0]`` is the current round."""

    floors: tuple[Floor, ...] = ()

    def __len__(self) -> int:
        return len(self.floors)

    @property
    def newest(self) -> Floor:
        return self.floors[0]


def push_floor(h: CharacteristicHistory, c: Floor) -> CharacteristicHistory:
    return CharacteristicHistory((c,) + h.floors)


def histories_equal(a: CharacteristicHistory, b: CharacteristicHistory) -> bool:
    if len(a.floors) != len(b.floors):
        return False
    # newest floors differ most often, so this short-circuits early
    return all(x == y for x, y in zip(a.floors, b.floors))


def positionally_equivalent(
    dq: AuxiliaryDigraph,
    ds: AuxiliaryDigraph,
    hq: Mapping[int, Hashable],
    hs: Mapping[int, Hashable],
) -> bool:
    """Do ``dq`` and ``ds`` have the same multiset of histories on every line?

    ``hq``/``hs`` must already contain the floor computed from ``dq``/``ds``.
    Unreached vertices form one extra pseudo-line that must match as well.
    """
    if dq.line_sizes != ds.line_sizes or len(dq.unreached) != len(ds.unreached):
        return False
    for line_q, line_s in zip(dq.lines, ds.lines):
        if len(line_q) == 1:
            if hq[line_q[0]] != hs[line_s[0]]:
                return False
        elif Counter(hq[v] for v in line_q) != Counter(hs[u] for u in line_s):
            return False
    return Counter(hq[v] for v in dq.unreached) == Counter(hs[u] for u in ds.unreached)


class HistoryInterner:
    """Hash-conses histories into small ints.

    A token stands for a whole history, so equal tokens mean equal histories
    and comparing two histories costs O(1) regardless of how many floors they
    have. Tokens are only comparable within one interner; share one between
    the two graphs being matched.
    """

    EMPTY = 0

    def __init__(self) -> None:
        self._ids: dict[tuple[int, Floor], int] = {}
        self._parent: list[int] = [-1]
        self._floor: list[Floor] = [None]

    def push(self, token: int, floor: Floor) -> int:
        key = (token, floor)
        tid = self._ids.get(key)
        if tid is None:
            tid = len(self._parent)
            self._ids[key] = tid
            self._parent.append(token)
            self._floor.append(floor)
        return tid

    def history(self, token: int) -> CharacteristicHistory:
        floors = []
        while token != self.EMPTY:
            floors.append(self._floor[token])
            token = self._parent[token]
        return CharacteristicHistory(tuple(floors))

    def __len__(self) -> int:
        return len(self._parent)
