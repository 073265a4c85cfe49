"""
Checking the recurrences against brute force
============================================

For small graphs every vertex subset can be enumerated. The recurrences
should reproduce those counts exactly.
"""

from dompow import GraphSpec, brute_domination_poly, build_power_graph, domination_poly

mismatches = 0
for family in ("path", "cycle"):
    for n in range(1, 15):
        for ell in range(1, n + 1):
            spec = GraphSpec(family, n, ell)
            if domination_poly(spec) != brute_domination_poly(build_power_graph(spec)):
                mismatches += 1
print("mismatches for n <= 14:", mismatches)

g = build_power_graph(GraphSpec("cycle", 8, 2))
print("C_8^2 edges:", g.edges())
print("C_8^2 brute force:", brute_domination_poly(g))
