"""Undirected simple graphs: parsing, rendering, generation and mutation.

Vertex ids are plain ints. They are 1-based and contiguous when a graph is
parsed or generated, and they keep their meaning after deletions, so a graph
obtained by peeling vertices off may have gaps in its id set.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping

__all__ = [
    "Graph",
    "GraphError",
    "GraphFormatError",
    "parse_edge_list",
    "read_edge_list",
    "parse_mapping",
    "render_edge_list",
    "degree_vector",
    "precheck",
    "delete_vertices",
    "permute",
    "random_permutation",
    "generate_random_graph",
    "random_regular_graph",
    "degree_preserving_shuffle",
]


class GraphError(ValueError):
    """Raised for operations that reference vertices a graph does not have."""


class GraphFormatError(GraphError):
    """Malformed edge-list input. ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Graph:
    """Immutable undirected graph without loops or multiple edges.

    Parameters
    ----------
    vertices : iterable of int
    edges : iterable of pairs of int
        Every endpoint must be in ``vertices``. Loops and repeated edges
        raise :class:`GraphError`.
    """

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        verts = tuple(sorted(set(vertices)))
        nbrs: dict[int, list[int]] = {v: [] for v in verts}
        seen: set[tuple[int, int]] = set()
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if a not in nbrs or b not in nbrs:
                raise GraphError(f"edge {{{a},{b}}} references an unknown vertex")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise GraphError(f"duplicate edge {{{a},{b}}}")
            seen.add(key)
            nbrs[a].append(b)
            nbrs[b].append(a)
        self._vertices = verts
        self._edges = frozenset(seen)
        self._adj = {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vertex ids in ascending order."""
        return self._vertices

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Edges as ``(a, b)`` pairs with ``a < b``."""
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self._edges

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse the ``n m`` header + ``a b`` lines edge-list format.

    Lines starting with ``#`` and blank lines are skipped. Ids are 1-based and
    must lie in ``1..n``. Exactly ``m`` edge lines must follow the header.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last = 0
    for lineno, raw in enumerate(lines, start=1):
        last = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(lineno, f"expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(lineno, "negative vertex or edge count")
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphFormatError(lineno, f"more than the declared {m} edges")
        if not (1 <= a <= n and 1 <= b <= n):
            raise GraphFormatError(lineno, f"vertex id out of range 1..{n}")
        if a == b:
            raise GraphFormatError(lineno, f"loop at vertex {a}")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise GraphFormatError(lineno, f"duplicate edge {{{a},{b}}}")
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise GraphFormatError(last + 1, "missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(last + 1, f"declared {m} edges, found {len(edges)}")
    return Graph(range(1, n + 1), edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def parse_mapping(text: str) -> list[tuple[int, int]]:
    """Parse ``v u`` lines into pairs. ``#`` comments and blank lines are skipped.

    Bijectivity is not checked here; that is the verifier's job.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(lineno, f"expected 'v u', got {line!r}")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphFormatError(lineno, f"expected 'v u', got {line!r}") from None
    return pairs


def render_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list`; needs ids ``1..n`` without gaps."""
    if g.vertices != tuple(range(1, g.n + 1)):
        raise GraphError("rendering needs contiguous ids 1..n; relabel first")
    out = [f"{g.n} {g.m}"]
    out.extend(f"{a} {b}" for a, b in g.sorted_edges())
    return "\n".join(out) + "\n"


def degree_vector(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degree(v) for v in g.vertices))


def precheck(g: Graph, h: Graph) -> bool:
    """Cheap necessary condition for isomorphism: equal n, m and degree vectors."""
    return g.n == h.n and g.m == h.m and degree_vector(g) == degree_vector(h)


def delete_vertices(g: Graph, victims: Iterable[int]) -> Graph:
    victims = set(victims)
    unknown = victims.difference(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    if not victims:
        return g
    keep = [v for v in g.vertices if v not in victims]
    edges = [(a, b) for a, b in g.edges if a not in victims and b not in victims]
    return Graph(keep, edges)


def permute(g: Graph, pi: Mapping[int, int]) -> Graph:
    """Relabel ``g`` through the bijection ``pi`` (old id -> new id)."""
    if set(pi) != set(g.vertices) or len(set(pi.values())) != len(pi):
        raise GraphError("permutation is not a bijection on the vertex set")
    return Graph(pi.values(), ((pi[a], pi[b]) for a, b in g.edges))


def random_permutation(vertices: Iterable[int], rng: random.Random) -> dict[int, int]:
    src = sorted(vertices)
    dst = src[:]
    rng.shuffle(dst)
    return dict(zip(src, dst))


def generate_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) on ids ``1..n``; identical output for identical seeds."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [
        (a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(range(1, n + 1), edges)


def random_regular_graph(n: int, d: int, seed: int, max_tries: int = 1000) -> Graph:
    """Uniform-ish d-regular graph by the pairing model with restarts."""
    if d >= n or (n * d) % 2:
        raise ValueError(f"no {d}-regular simple graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(max_tries):
        stubs = [v for v in range(1, n + 1) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for a, b in zip(stubs[::2], stubs[1::2]):
            key = (a, b) if a < b else (b, a)
            if a == b or key in edges:
                ok = False
                break
            edges.add(key)
        if ok:
            return Graph(range(1, n + 1), edges)
    raise RuntimeError(f"pairing model failed {max_tries} times for n={n}, d={d}")


def degree_preserving_shuffle(g: Graph, swaps: int, rng: random.Random) -> Graph:
    """Apply up to ``swaps`` random double-edge swaps; the degree vector is kept."""
    edges = set(g.edges)
    pool = sorted(edges)
    for _ in range(swaps):
        if len(pool) < 2:
            break
        i, j = rng.sample(range(len(pool)), 2)
        (a, b), (c, d) = pool[i], pool[j]
        if rng.random() < 0.5:
            c, d = d, c
        # rewire a-b, c-d into a-d, c-b
        if len({a, b, c, d}) < 4:
            continue
        e1 = (a, d) if a < d else (d, a)
        e2 = (c, b) if c < b else (b, c)
        if e1 in edges or e2 in edges:
            continue
        edges -= {pool[i], pool[j]}
        edges |= {e1, e2}
        pool[i], pool[j] = e1, e2
    return Graph(g.vertices, edges)
