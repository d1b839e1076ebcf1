"""Isomorphism demonstrations on the bundled order-8 tables.

The interesting phenomenon: non-isomorphic gyrogroups can have
isomorphic power graphs.  The k1/n1 pair demonstrates it cleanly.  The
g8/m1 pair was published as a second (gyro-commutative) demonstration,
but exhaustive search shows the printed tables are in fact isomorphic,
so only their power-graph isomorphism survives.
"""

from gyrograph import (
    bundled_gyrogroup,
    find_isomorphism,
    gyro_isomorphic,
    power_graph,
    verify_isomorphism,
)

k1, n1 = bundled_gyrogroup("k1"), bundled_gyrogroup("n1")
g8, m1 = bundled_gyrogroup("g8"), bundled_gyrogroup("m1")
pk1, pn1 = power_graph(k1), power_graph(n1)
pg8, pm1 = power_graph(g8), power_graph(m1)

# The stated map between the k1 and n1 power graphs.
f1 = (0, 1, 7, 6, 2, 3, 5, 4)
print("k1->n1 stated map valid:", verify_isomorphism(pk1, pn1, f1).valid)
print("search also finds one:", find_isomorphism(pk1, pn1).map.map)

# No operation-preserving bijection exists between the tables.
print("k1 ~ n1 as tables:", gyro_isomorphic(k1, n1))

# The stated g8/m1 map validates from the m1 power graph to the g8 power
# graph (the printed figures have the two graphs swapped).
f2 = (0, 3, 7, 5, 4, 6, 1, 2)
print("\nm1->g8 stated map valid:", verify_isomorphism(pm1, pg8, f2).valid)
print("g8->m1 same map valid:", verify_isomorphism(pg8, pm1, f2).valid)

# Surprise: the printed g8 and m1 tables ARE isomorphic as gyrogroups.
w = gyro_isomorphic(g8, m1)
print("\ng8 ~ m1 as tables:", w.map if w else None)
ok = all(w(g8.table[a][b]) == m1.table[w(a)][w(b)]
         for a in range(8) for b in range(8))
print("witness re-verified over all 64 products:", ok)
