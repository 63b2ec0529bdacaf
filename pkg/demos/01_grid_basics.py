"""
Grids, distances and the face set
=================================

A 3D grid is the product of three paths. Vertices are coordinate triples and
the distance between two of them is the Manhattan distance.
"""

import numpy as np

from gridres import corners, degree, face_set, make_grid

g = make_grid([3, 4, 5])
print(g, "has", g.vertex_count, "vertices")

# all pairwise distances are one cached int32 matrix
D = g.distance_matrix
print("diameter:", D.max(), "  distance (0,0,0)-(2,3,4):", g.distance((0, 0, 0), (2, 3, 4)))

# vertices are indexed with the first coordinate varying fastest
print("index of (1,0,0):", g.vertex_index((1, 0, 0)), " index of (0,1,0):", g.vertex_index((0, 1, 0)))

# a histogram of degrees: 8 corners, then edge, face and interior vertices
degs = np.array([degree(g, u) for u in g.vertices()])
print("degree counts:", dict(zip(*(a.tolist() for a in np.unique(degs, return_counts=True)))))
print("corners:", list(corners(g))[:3], "...")

# the face set is everything that is not interior
F = face_set(g)
print("|F| =", len(F), " interior =", g.vertex_count - len(F))

# unit factors are dropped, with a note
h = make_grid([1, 4, 5])
print(h, "--", h.note)
