"""Exchange graphs of maximal modification generators.

For f = f1^a1 ... ft^at the MM generators are indexed by words with letter
counts a.  Mutating at position i either swaps two adjacent letters (an
edge) or does nothing (a loop).
"""

from canmma import FactorData, build_exchange_graph, multinomial, to_dot

for a in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]:
    g = build_exchange_graph(FactorData.from_multiplicities(a))
    print(f"a={a}: {len(g.vertices)} generators (formula {multinomial(a)}), "
          f"{len(g.edges)} edges, {len(g.loops)} loops")

fd = FactorData.from_multiplicities([3, 1])
g = build_exchange_graph(fd)
print("\nloops for a=(3,1):")
for v, ls in g.loops_at().items():
    print(f"  {v}: {list(ls)}")

print("\nDOT for a=(2,3), paste into any Graphviz viewer:")
print(to_dot(build_exchange_graph(FactorData.from_multiplicities([2, 3]))))
