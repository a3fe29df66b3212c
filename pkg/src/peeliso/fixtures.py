"""Named graphs: the worked examples, a negative control and two hard SRGs.

``rook4x4`` (the 4x4 rook's graph) and ``shrikhande`` are both strongly
regular with parameters (16, 6, 2, 2), so degrees, triangle counts and every
count that only depends on those parameters agree. They are told apart by the
subgraph induced on a vertex's neighborhood: two disjoint triangles in the
rook's graph, a 6-cycle in the Shrikhande graph. See
:func:`neighborhood_component_counts`.
"""

from __future__ import annotations

from importlib import resources

from .graph import Graph, parse_edge_list, parse_mapping, render_edge_list

__all__ = [
    "FIXTURES",
    "MAPPINGS",
    "fixture",
    "fixture_text",
    "paper_mapping",
    "data_text",
    "rook_graph",
    "shrikhande_graph",
    "neighborhood_component_counts",
]

#: fixture name -> data file, for graphs shipped as edge lists
FIXTURES = {
    "fig1": "fig1.el",
    "fig2": "fig2.el",
    "b1-g": "b1-g.el",
    "b1-h": "b1-h.el",
    "appendix-g": "appendix-g.el",
    "appendix-h": "appendix-h.el",
    "c6": "c6.el",
    "2c3": "2c3.el",
    "rook4x4": None,
    "shrikhande": None,
}

MAPPINGS = {"fig": "fig-phi.map", "appendix": "appendix-phi.map"}


def data_text(name: str) -> str:
    return resources.files("peeliso").joinpath("data", name).read_text(encoding="utf-8")


def rook_graph(k: int = 4) -> Graph:
    """k x k rook's graph: cells adjacent when they share a row or a column."""
    cell = lambda i, j: i * k + j + 1  # noqa: E731
    edges = []
    for i in range(k):
        for j in range(k):
            for j2 in range(j + 1, k):
                edges.append((cell(i, j), cell(i, j2)))
            for i2 in range(i + 1, k):
                edges.append((cell(i, j), cell(i2, j)))
    return Graph(range(1, k * k + 1), edges)


def shrikhande_graph() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set ±(1,0), ±(0,1), ±(1,1)."""
    cell = lambda i, j: (i % 4) * 4 + (j % 4) + 1  # noqa: E731
    edges = set()
    for i in range(4):
        for j in range(4):
            for di, dj in ((1, 0), (0, 1), (1, 1)):
                a, b = cell(i, j), cell(i + di, j + dj)
                edges.add((min(a, b), max(a, b)))
    return Graph(range(1, 17), edges)


def fixture(name: str) -> Graph:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")
    if name == "rook4x4":
        return rook_graph(4)
    if name == "shrikhande":
        return shrikhande_graph()
    return parse_edge_list(data_text(FIXTURES[name]))


def fixture_text(name: str) -> str:
    """Edge-list text of a fixture, comments included for the shipped ones."""
    path = FIXTURES.get(name)
    if path is None:
        return render_edge_list(fixture(name))
    return data_text(path)


def paper_mapping(name: str) -> list[tuple[int, int]]:
    return parse_mapping(data_text(MAPPINGS[name]))


def neighborhood_component_counts(g: Graph) -> tuple[int, ...]:
    """Sorted per-vertex number of components of the induced neighborhood.

    An isomorphism invariant that shares nothing with the matcher; it is the
    ground truth used for fixture pairs too large for the exhaustive oracle.
    """
    counts = []
    for v in g.vertices:
        nbrs = set(g.neighbors(v))
        seen: set[int] = set()
        comps = 0
        for start in nbrs:
            if start in seen:
                continue
            comps += 1
            stack = [start]
            seen.add(start)
            while stack:
                x = stack.pop()
                for y in g.neighbors(x):
                    if y in nbrs and y not in seen:
                        seen.add(y)
                        stack.append(y)
        counts.append(comps)
    return tuple(sorted(counts))
