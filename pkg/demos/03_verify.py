"""
Resolving strength and witnesses
================================

The strength of S is the smallest number of members of S that resolve any
pair. A set is k-resolving when its strength is at least k, and it then
stays resolving after any k-1 deletions.
"""

from gridres import VertexSet, corner_basis, make_grid, region_witness, resolving_strength

g = make_grid([3, 4, 5])

# three corners sharing the origin already resolve the grid
S = corner_basis(g).set
print("corner basis", S, "strength", resolving_strength(S).strength)

# two corners never suffice; the report names the worst pair
two = VertexSet.from_vertices(g, [(0, 0, 0), (2, 0, 0)])
rep = resolving_strength(two)
print("two corners: strength", rep.strength, "witness", rep.witness.u, rep.witness.v)

# the whole vertex set has finite strength: the existence threshold
print("strength(V) =", resolving_strength(g.full_set()).strength)

# sets confined to two opposite quadrants of a projection fail for a structural reason
g = make_grid([3, 3, 2])
S = VertexSet.from_vertices(g, [(0, 0, 0), (0, 0, 1), (2, 2, 0), (1, 1, 1)])
w = region_witness(S)
print("region witness: axis", w.axis, "cut", (w.a1, w.a2), w.kind, "pair", w.u, w.v)
