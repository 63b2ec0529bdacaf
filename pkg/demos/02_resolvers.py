"""
Who resolves a pair?
====================

A vertex z resolves u and v when d(z, u) != d(z, v). On a grid the resolver
sets have a lot of structure.
"""

import numpy as np

from gridres import (anchor_equivalent, make_grid, resolver_set, resolver_table, shortest_path_box,
                     shortest_path_resolver_count)

g = make_grid([4, 4, 4])

# odd distance: every vertex resolves (the grid is bipartite)
print("d=1 pair resolved by", len(resolver_set(g, (0, 0, 0), (1, 0, 0))), "of", g.vertex_count)

# even distance: only some vertices do
u, v = (0, 0, 0), (1, 1, 0)
R = resolver_set(g, u, v)
print("d=2 pair resolved by", len(R))

# resolving z is decided by its clamp onto the box of shortest u-v paths
box = shortest_path_box(g, u, v)
z = (3, 0, 2)
print("anchor of", z, "is", anchor_equivalent(g, z, u, v), "inside", box.lo, box.hi)

# along any shortest path, all vertices but one (the midpoint) resolve
u, v = (0, 0, 0), (2, 2, 0)
print("path resolvers for d=4:", shortest_path_resolver_count(g, u, v), "of 5")

# the packed table holds every pair at once
t = resolver_table(make_grid([2, 3, 3]))
sizes = t.sizes()
print(t.n_pairs, "pairs; resolver counts range", sizes.min(), "to", sizes.max())
print("histogram:", np.bincount(sizes)[sizes.min():])
