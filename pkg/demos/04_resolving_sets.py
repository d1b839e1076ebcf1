"""Metric dimension and the resolving polynomial.

A vertex subset resolves the graph when every vertex is uniquely
identified by its distances to the subset.  Twin vertices (equal open or
closed neighborhoods) are indistinguishable unless one of them is in the
subset, which both bounds the metric dimension from below and prunes the
subset enumeration.
"""

from gyrograph import (
    build_gn,
    is_resolving,
    metric_dimension,
    power_graph,
    resolving_polynomial,
    twin_partition,
)

graph = power_graph(build_gn(3))

tp = twin_partition(graph)
print("twin classes:")
for cls, kind in tp.classes:
    print(f"  {sorted(cls)} ({kind})")
print("lower bound from twins:", tp.lower_bound())

print("\n{2,3,5,6,7} resolves:", is_resolving(graph, {2, 3, 5, 6, 7}))
print("{1,2,3} resolves:", is_resolving(graph, {1, 2, 3}))

print("\nmetric dimension of P(G(3)):", metric_dimension(graph))

profile = resolving_polynomial(graph)
print("resolving sequence:", profile.resolving_sequence)
print("resolving polynomial:", profile.polynomial)
print("a smallest resolving set:", profile.witness_basis)

# The closed form (m = 2^(n-1)): psi = 2^n - 3 with sequence
# (m(m-1), m^2+m-1, 2m, 1).
for n in (3, 4):
    p = resolving_polynomial(power_graph(build_gn(n)))
    print(f"\nn={n}: psi={p.metric_dimension} sequence={p.resolving_sequence}")
