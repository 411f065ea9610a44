"""A first tour: labeled graphs, the bracket, writhe, and Jones.

A labeled graph stands in for a link diagram: each vertex is a crossing,
each sign a smoothing convention, and edges record interleaving.  The
bracket is a sum over all 2^n vertex subsets; the number of circles a
subset contributes is read off the GF(2) corank of its induced adjacency
matrix, so no picture of the link is ever needed.
"""

from graphlink import (
    LabeledGraph,
    analyze,
    is_graph_knot,
    jones,
    kauffman_bracket,
    parse,
    serialize,
    writhe,
)

print("== unit values ==")
empty = LabeledGraph.empty()
plus = LabeledGraph.from_edges("+")
minus = LabeledGraph.from_edges("-")
for name, g in (("empty", empty), ("one '+' vertex", plus), ("one '-' vertex", minus)):
    print(f"<{name}> = {kauffman_bracket(g)}")

print()
print("== a two-crossing example ==")
k2 = parse("2;++;1-2")
print(f"graph: {serialize(k2)}")
print(f"bracket: {kauffman_bracket(k2)}")
print(f"graph-knot? {is_graph_knot(k2)}  (corank(A+E) != 0: two components)")

print()
print("== writhe and Jones on graph-knots ==")
for g in (empty, plus, minus):
    w = writhe(g)
    x = jones(g)
    print(f"{serialize(g)!r}: writhe {w:+d}, Jones {x}")
print("every representative of the unknot gives Jones = 1")

print()
print("== the property report ==")
rep = analyze(parse("4;+-+-;1-2,2-3,3-4,1-4"))
for key, value in rep.to_json_obj().items():
    print(f"  {key} = {value}")
