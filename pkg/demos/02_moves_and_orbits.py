"""Reidemeister graph-moves in action.

The four moves generate the equivalence relation that turns labeled graphs
into graph-links.  This script applies each move, watches the bracket stay
put (or pick up its unit factor under the first move), and explores a
bounded orbit to decide equivalences empirically.
"""

import random

from graphlink import (
    LabeledGraph,
    are_equivalent_bounded,
    bfs_orbit,
    jones,
    kauffman_bracket,
    serialize,
)
from graphlink.generate import random_unknot_graph
from graphlink.laurent import mono
from graphlink.moves import MoveKind, MoveSite, apply, enumerate_sites, format_site

g = LabeledGraph.from_edges("-+-", [(0, 1), (1, 2)])
print(f"start: {serialize(g)}")
b = kauffman_bracket(g)
print(f"bracket: {b}")

print()
print("== the bracket under each applicable move ==")
for site in enumerate_sites(g):
    h = apply(g, site)
    after = kauffman_bracket(h)
    if after == b:
        note = "unchanged"
    elif after == b * mono(-1, -3):
        note = "times -a^-3"
    elif after == b * mono(-1, 3):
        note = "times -a^3"
    else:
        note = f"!!! {after}"
    print(f"{format_site(site):24s} -> n={h.n}  bracket {note}")

print()
print("== a random walk from the empty graph stays an unknot ==")
rng = random.Random(2024)
for _ in range(4):
    walk = random_unknot_graph(rng, steps=10, max_vertices=8)
    print(f"  {serialize(walk):48s} Jones = {jones(walk)}")

print()
print("== bounded orbit exploration ==")
pair = apply(g, MoveSite(MoveKind.R2_ADD, neighborhood=frozenset({1})))
print(f"padded: {serialize(pair)}")
print("equivalent to the original?",
      are_equivalent_bounded(g, pair, max_depth=2))
report = bfs_orbit(g, max_vertices=5, max_depth=3)
print(f"orbit within 5 vertices, depth 3: {report.visited} representatives, "
      f"fewest vertices seen: {report.min_vertices}")
print("a shortest route to a smallest representative:")
for line in report.to_json_obj()["witness_path"].splitlines():
    print(f"  {line}")
