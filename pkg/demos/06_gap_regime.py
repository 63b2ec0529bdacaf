"""
Between the thresholds
======================

For alpha_m <= k < alpha_M only an upper bound (the face set) is proven.
The conjectured value is min(4k - 2 alpha_m + 4, |F|). On 3x3x3 the exact
solver can settle both gap values.
"""

from gridres import SolveOptions, alpha_M, alpha_m, conjecture_value, make_grid, min_k_resolving, predict_dim

g = make_grid([3, 3, 3])
print("alpha_m =", alpha_m(g.dims), " alpha_M =", alpha_M(g.dims))
for k in range(alpha_m(g.dims), alpha_M(g.dims)):
    p = predict_dim(g.dims, k)
    r = min_k_resolving(g, k + 1, SolveOptions(bounds="trivial"))
    print(f"k={k}: proven upper bound {p.value}, conjectured {conjecture_value(g.dims, k)}, "
          f"exact {r.size} (floor {r.proof_size_floor} by {r.floor_provenance})")
