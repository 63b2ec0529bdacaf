"""
Exact minimum k-resolving sets
==============================

Branch-and-bound over the pair/resolver cover matrix, staged by cardinality.
Each infeasible stage is a proof that nothing smaller exists.
"""

from gridres import SolveOptions, make_grid, min_k_resolving, oracle_min_k_resolving

g = make_grid([2, 3, 3])

# starting from the trivial floor makes every lower bound a search result
for K in range(1, 6):
    r = min_k_resolving(g, K, SolveOptions(bounds="trivial"))
    sizes = [s["size"] for s in r.stages if not s["feasible"]]
    print(f"K={K}: min size {r.size}, infeasible stages {sizes}, nodes {r.nodes_explored}")

# cross-check against plain enumeration on a tiny grid
small = make_grid([2, 2, 3])
print("oracle vs solver, K=4:", oracle_min_k_resolving(small, 4).size, min_k_resolving(small, 4).size)

# beyond strength(V) there is nothing to find
r = min_k_resolving(make_grid([2, 2, 2]), 5)
print("2x2x2, K=5:", r.status.value)

# a greedy answer is quick but only an upper bound
r = min_k_resolving(make_grid([4, 4, 4]), 6, SolveOptions(mode="greedy"))
print("4x4x4, K=6 greedy:", r.size, r.status.value)
