"""Auxiliary digraphs induced by a root vertex, and per-vertex characteristics.

The digraph puts each vertex on the line equal to its BFS distance from the
root. An edge between lines k1 < k2 becomes one arc pointing away from the
root; an edge inside a line becomes two opposite arcs. A vertex is then
described by the sorted line numbers its incoming arcs come from (``inputs``)
and its outgoing arcs go to (``outputs``).

Vertices outside the root's component are UNREACHED: they carry no arcs and
get the null characteristic ``None`` rather than an empty one.
"""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, NamedTuple, Optional

from .graph import Graph, GraphError

__all__ = [
    "UNREACHED",
    "Characteristic",
    "AuxiliaryDigraph",
    "bfs_levels",
    "build",
    "characteristics",
    "unique_vertices",
    "render_digraph",
]

#: Level assigned to vertices in a different component than the root.
UNREACHED = None


class Characteristic(NamedTuple):
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]

    def __str__(self) -> str:
        def fmt(seq):
            return "(" + ",".join(map(str, seq)) + ")" if seq else "∅"

        return f"I={fmt(self.inputs)} O={fmt(self.outputs)}"


def bfs_levels(g: Graph, root: int) -> dict[int, Optional[int]]:
    """BFS distance of every vertex from ``root``; ``UNREACHED`` elsewhere."""
    if root not in g:
        raise GraphError(f"unknown root {root}")
    levels: dict[int, Optional[int]] = dict.fromkeys(g.vertices, UNREACHED)
    levels[root] = 0
    queue = deque([root])
    while queue:
        x = queue.popleft()
        nxt = levels[x] + 1
        for y in g.neighbors(x):
            if levels[y] is UNREACHED:
                levels[y] = nxt
                queue.append(y)
    return levels


@dataclass(eq=False)
class AuxiliaryDigraph:
    """Auxiliary digraph of ``graph`` induced by ``root``.

    ``lines[k]`` holds the vertices at distance k in ascending id order and
    ``unreached`` those in other components.
    """

    graph: Graph
    root: int
    levels: dict[int, Optional[int]]
    lines: tuple[tuple[int, ...], ...]
    unreached: tuple[int, ...]
    _chars: Optional[dict] = field(default=None, repr=False)

    @property
    def line_sizes(self) -> tuple[int, ...]:
        return tuple(len(line) for line in self.lines)

    def members(self) -> Iterable[int]:
        for line in self.lines:
            yield from line
        yield from self.unreached

    @cached_property
    def arcs(self) -> frozenset[tuple[int, int]]:
        lv = self.levels
        out = set()
        for a, b in self.graph.edges:
            ka, kb = lv[a], lv[b]
            if ka is UNREACHED:
                continue
            if ka < kb:
                out.add((a, b))
            elif kb < ka:
                out.add((b, a))
            else:
                out.add((a, b))
                out.add((b, a))
        return frozenset(out)


def build(g: Graph, root: int) -> AuxiliaryDigraph:
    levels = bfs_levels(g, root)
    depth = max((k for k in levels.values() if k is not UNREACHED), default=0)
    lines: list[list[int]] = [[] for _ in range(depth + 1)]
    unreached = []
    for v in g.vertices:
        k = levels[v]
        if k is UNREACHED:
            unreached.append(v)
        else:
            lines[k].append(v)
    return AuxiliaryDigraph(g, root, levels, tuple(map(tuple, lines)), tuple(unreached))


def characteristics(d: AuxiliaryDigraph) -> dict[int, Optional[Characteristic]]:
    """Input/output characteristic of every vertex of ``d``.

    Neighbors of a vertex on line k sit on lines k-1, k or k+1, so both
    vectors are runs of at most two distinct values and are built sorted.
    """
    if d._chars is not None:
        return d._chars
    lv = d.levels
    g = d.graph
    out: dict[int, Optional[Characteristic]] = {}
    for v in g.vertices:
        k = lv[v]
        if k is UNREACHED:
            out[v] = None
            continue
        up = same = down = 0
        for y in g.neighbors(v):
            j = lv[y]
            if j < k:
                up += 1
            elif j == k:
                same += 1
            else:
                down += 1
        out[v] = Characteristic(
            (k - 1,) * up + (k,) * same,
            (k,) * same + (k + 1,) * down,
        )
    d._chars = out
    return out


def unique_vertices(
    histories: Mapping[int, Hashable], members: Iterable[int] | None = None
) -> set[int]:
    """Vertices whose history is shared by no other vertex among ``members``.

    ``histories`` may hold anything hashable that compares equal exactly when
    the full histories do: :class:`~peeliso.history.CharacteristicHistory`
    objects, interned history tokens, or single characteristics.
    """
    pool = list(histories) if members is None else list(members)
    counts = Counter(histories[v] for v in pool)
    return {v for v in pool if counts[histories[v]] == 1}


def render_digraph(d: AuxiliaryDigraph) -> str:
    """Plain-text dump used when diffing fixtures by eye."""
    rows = [f"{k}: {' '.join(map(str, line))}" for k, line in enumerate(d.lines)]
    if d.unreached:
        rows.append(f"-: {' '.join(map(str, d.unreached))}")
    rows.append("arcs: " + " ".join(f"{a}->{b}" for a, b in sorted(d.arcs)))
    return "\n".join(rows)
