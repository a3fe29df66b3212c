"""Walk through the three worked examples shipped as fixtures.

Run with ``python demos/01_worked_examples.py``.
"""

from peeliso.digraph import build, characteristics, render_digraph
from peeliso.fixtures import fixture, paper_mapping
from peeliso.matcher import run, verify_mapping

# The auxiliary digraph of fig1 induced by vertex 1: BFS lines plus arcs.
g, h = fixture("fig1"), fixture("fig2")
d = build(g, 1)
print(render_digraph(d))
for v, c in characteristics(d).items():
    print(f"  v{v}: {c}")

# Peel the pair. Round 1 pairs only the roots; in round 2 every vertex is
# unique, so the rest of the mapping falls out at once.
verdict = run(g, h)
print(verdict.status.value, verdict.reason)
print(verdict.format_trace())
print("mapping:", verdict.mapping)

# The hand-made mapping also verifies, edge by edge.
print("published mapping verifies:", verify_mapping(g, h, paper_mapping("fig")))

# The octahedron pair pairs two vertices per round.
verdict = run(fixture("appendix-g"), fixture("appendix-h"))
print(verdict.format_trace())
