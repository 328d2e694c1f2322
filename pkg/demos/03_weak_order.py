"""With distinct primes the exchange graph is the Hasse graph of the weak order."""

import time

from canmma import FactorData, build_exchange_graph, graphs_isomorphic, hasse_weak_order, inversions

for n in range(2, 6):
    t0 = time.perf_counter()
    ok = graphs_isomorphic(build_exchange_graph(FactorData.distinct(n)), hasse_weak_order(n))
    print(f"n={n}: isomorphic={ok} ({time.perf_counter() - t0:.3f}s)")

print("length of 4321:", inversions((4, 3, 2, 1)))

# repeated classes bring loops, which no Hasse graph has
g22 = build_exchange_graph(FactorData.from_multiplicities([2, 2]))
print("a=(2,2) vs S3:", graphs_isomorphic(g22, hasse_weak_order(3)))
