"""
The staircase: self-injective but not strongly pi-regular
=========================================================

The disjoint union of line graphs with 1, 2, 3, ... vertices is row-finite,
column-finite and acyclic with no infinite paths.  Its endomorphism ring is
self-injective and regular, but the matrix blocks grow without bound.
"""

from leavitt import LinearLine, OmegaUnion, classify, implication_audit, strong_pi_witness, truncate

staircase = OmegaUnion(LinearLine(1, 0))
report = classify(staircase)
for name in report.VERDICTS:
    print(f"{name:24} {getattr(report, name)}")
print(report.sink_profile)
print(implication_audit(report))

# the decomposition is an infinite stream of blocks M_1, M_2, M_3, ...
print(report.decomposition.take(5))

# a finite piece of the graph
g = truncate(staircase, 3)
print(g.vertices)
print([(e.id, e.source, e.range) for e in g.edges])

###############################################################################
# Why no uniform exponent works: put a nilpotent Jordan block in each matrix
# block.  The i-th one needs exponent n_i before f^k = f^(k+1) a is solvable.

seq = strong_pi_witness(staircase, 8)
print(seq.sizes)
print(seq.k_profile)
print(seq.strictly_increasing)

# below 8 some block fails f^m = f^(m+1) a; deeper truncations push this up
print([seq.exponent_failure(m) for m in range(1, 9)])
