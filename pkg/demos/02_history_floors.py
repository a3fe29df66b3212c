"""Why the matcher keeps a history of characteristics per vertex.

Two triangles hanging off a common vertex. After the first round removes the
hub, both remainders are two disjoint triangles and a single floor of
characteristics cannot tell which triangle is which.
"""

from peeliso.digraph import build, characteristics
from peeliso.fixtures import fixture
from peeliso.history import positionally_equivalent
from peeliso.matcher import MatchState, extract_unique_pairs, find_partner, run

g, h = fixture("b1-g"), fixture("b1-h")
state = MatchState.start(g, h)
p = find_partner(state, 1)
print("round 1 partner of v1:", p.vertex)
state.commit(p, extract_unique_pairs(p.dq, p.ds, p.hq, p.hs))

# Single floor only: G1(v2) and H1(u1) look interchangeable.
dq, ds = build(state.q, 2), build(state.s, 1)
print("one floor, v2 ~ u1:", positionally_equivalent(dq, ds, characteristics(dq), characteristics(ds)))

# With the floor from round 1 underneath, u1 and u2 are rejected.
p = find_partner(state, 2)
print("with history, partner of v2:", p.vertex, "rejected:", p.rejected)
for v in (2, 4, 5):
    floors = state.interner.history(p.hq[v]).floors
    print(f"  v{v}:", " | ".join(map(str, floors)))

print(run(g, h).format_trace())
