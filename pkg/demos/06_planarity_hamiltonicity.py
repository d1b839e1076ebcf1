"""Planarity and Hamiltonicity with checkable certificates.

Planar graphs get a rotation system whose traced faces satisfy Euler's
formula; non-planar graphs get a K5 or K33 subdivision verified by path
contraction.  Hamiltonicity uses the pendant shortcut when it applies
and exact backtracking otherwise.
"""

from gyrograph import (
    Graph,
    build_gn,
    check_embedding,
    is_hamiltonian,
    is_planar,
    power_graph,
    trace_faces,
    verify_kuratowski,
)

g3 = power_graph(build_gn(3))
r3 = is_planar(g3)
print("P(G(3)) planar:", r3.is_planar)
print("embedding self-check:", check_embedding(g3, r3.rotation))
faces = trace_faces(g3, r3.rotation)
print("V - E + F =", g3.n - g3.edge_count + len(faces))
print("rotation at vertex 0:", r3.rotation[0])

g4 = power_graph(build_gn(4))
r4 = is_planar(g4)
print("\nP(G(4)) planar:", r4.is_planar)
print("witness kind:", r4.kuratowski_kind)
print("witness edges:", sorted(r4.kuratowski_edges))
print("contraction check:", verify_kuratowski(g4, r4.kuratowski_edges))

# The Petersen graph has no K5 subdivision (it is 3-regular), so the
# extracted witness must be a K33 subdivision.
petersen = Graph.from_edges(10, [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
])
rp = is_planar(petersen)
print("\nPetersen planar:", rp.is_planar, " witness:", rp.kuratowski_kind)

# Hamiltonicity: pendants kill it immediately; otherwise search.
for n in (3, 4, 5):
    res = is_hamiltonian(power_graph(build_gn(n)))
    print(f"\nP(G({n})) Hamiltonian: {res.is_hamiltonian} ({res.reason})")

c5 = Graph.cycle(5)
res = is_hamiltonian(c5)
print("\nC5 Hamiltonian:", res.is_hamiltonian, " cycle:", res.cycle)
print("Petersen Hamiltonian:", is_hamiltonian(petersen).is_hamiltonian,
      "(exhaustive search)")
