"""
Cycles, exits and Condition (K)
===============================

The Toeplitz graph has one loop with an exit.  The loop has an exit, so
Condition (L) holds, but there is only one closed simple path at v, so
Condition (K) fails.  Adding a second loop repairs that.
"""

from leavitt import catalog, classify
from leavitt import graph as gr

toeplitz = catalog.toeplitz()
print(gr.condition_L(toeplitz), gr.condition_K(toeplitz))
print(gr.closed_simple_paths_at(toeplitz, "v"))
print(gr.line_points(toeplitz))

rose = catalog.rose(2)
print(gr.condition_K(rose), gr.count_closed_simple_paths(rose, "v"))

# exchange ring exactly when (K) holds
print(classify(toeplitz).exchange, classify(rose).exchange)

###############################################################################
# Closed simple paths can be arbitrarily long.  Here the part of the graph
# avoiding v1 has a cycle, so v1 sees infinitely many of them.

g = gr.Graph(
    ["v1", "v2", "v3"],
    [("e1", "v3", "v1"), ("e2", "v2", "v3"), ("e3", "v1", "v2"), ("e4", "v3", "v2")],
)
print(gr.count_closed_simple_paths(g, "v1"))
for p in gr.closed_simple_paths_at(g, "v1", limit=3):
    print(len(p), " ".join(p.edges))
