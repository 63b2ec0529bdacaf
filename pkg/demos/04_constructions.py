"""
Building k-fault-tolerant sets
==============================

Small disjoint 4-vertex frames on the grid edges stack up into optimal sets.
Each frame adds two to the tolerated number of failures.
"""

from gridres import (alpha_M, alpha_m, even_k_construction, face_construction, frame_family, make_grid,
                     odd_k_construction)

g = make_grid([3, 6, 7])
fam = frame_family(g)
print(len(fam), "frames of 4 vertices; first:", fam[0])
print("alpha_m =", alpha_m(g.dims), " alpha_M =", alpha_M(g.dims))

# k counts tolerated failures; certificates verify strength >= k+1
for k in (1, 2, 3, 4, 9, 10):
    cert = (odd_k_construction if k % 2 else even_k_construction)(g, k)
    print(f"k={k:>2}  size={len(cert.set):>2}  verified strength={cert.verified.strength}")

# past alpha_m the face set still works, up to alpha_M - 1
k = alpha_M(g.dims) - 1
cert = face_construction(g, k)
print(f"face set: size {len(cert.set)}, strength {cert.verified.strength} >= {k + 1}")
