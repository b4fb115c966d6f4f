"""
Matrix algebras from line graphs
================================

A line graph with n vertices gives the full matrix algebra M_n(K).  We
build a few, count their normal-form bases and look at the matrix picture.
"""

from leavitt import LeavittPathAlgebra, catalog, matrix_rep, vn_regular_witness

# dimension n^2 for the line with n vertices
for n in range(2, 6):
    A = LeavittPathAlgebra(catalog.line_graph(n))
    print(n, A.dimension())

# the basis of M_2(K): two vertices, the edge and its ghost
A = LeavittPathAlgebra(catalog.line_graph(2))
print([str(m) for m in A.basis()])

# CK-2 with a single edge: e1 e1^* is the vertex v1
e, g = A.edge("e1"), A.ghost("e1")
print(e * g)
x = e + g
print(x * x)

# rows and columns are the paths into the sink v2, in the order v2, e1
def show(x):
    for sink, block in matrix_rep(x.graph, x).blocks.items():
        print(sink, [[str(c) for c in row] for row in block])


show(A.vertex("v1"))
show(e)

###############################################################################
# Two sinks give two blocks.  The fork v1 -> v2, v1 -> v3 is M_2 + M_2.

fork = catalog.fork()
B = LeavittPathAlgebra(fork, choice={"v1": "e2"})
print(B.dimension())
print(B.edge("e2") * B.ghost("e2"))   # v1 - e1 e1^*

# every element is von Neumann regular; b is pulled back from the blocks
y = B.parse("v2 + 2 e1^* - e2 e2^*")
b = vn_regular_witness(fork, y)
print(b)
print(y * b * y == y)
