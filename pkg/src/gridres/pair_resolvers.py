"""Which vertices resolve a given pair, and tables of resolver sets.

A vertex z resolves the pair (u, v) when d(z, u) != d(z, v). Besides the
direct predicate this module carries closed-form shortcuts that grid
geometry allows (odd-distance pairs, single-axis pairs, clamping onto the
shortest-path box), each of which the test suite cross-checks against the
plain distance evaluation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DegeneratePairError, ResourceLimitError
from .grid_core import GridDims, VertexSet, shortest_path_box

DEFAULT_TABLE_CAP = 4096


def table_cap() -> int:
    """Vertex-count cap for resolver tables; ``GRIDRES_TABLE_CAP`` overrides it."""
    env = os.environ.get("GRIDRES_TABLE_CAP")
    return int(env) if env else DEFAULT_TABLE_CAP


def _pair(grid: GridDims, u, v):
    u, v = grid.check_vertex(u), grid.check_vertex(v)
    if u == v:
        raise DegeneratePairError(f"pair needs two distinct vertices, got {u} twice")
    return u, v


def resolves(grid: GridDims, z, u, v) -> bool:
    u, v = _pair(grid, u, v)
    return grid.distance(z, u) != grid.distance(z, v)


def resolver_mask(grid: GridDims, u, v) -> np.ndarray:
    u, v = _pair(grid, u, v)
    c = grid.coords
    du = np.abs(c - np.asarray(u)).sum(axis=1)
    dv = np.abs(c - np.asarray(v)).sum(axis=1)
    return du != dv


def resolver_set(grid: GridDims, u, v) -> VertexSet:
    return VertexSet.from_mask(grid, resolver_mask(grid, u, v))


def anchor_equivalent(grid: GridDims, z, u, v) -> tuple:
    """Clamp ``z`` onto the shortest-path box of (u, v).

    Moving an out-of-box coordinate to the nearest box face changes d(z, u)
    and d(z, v) by the same amount, so z and its anchor resolve (u, v)
    alike. A vertex already inside the box is returned unchanged.
    """
    u, v = _pair(grid, u, v)
    z = grid.check_vertex(z)
    box = shortest_path_box(grid, u, v)
    return tuple(min(max(x, a), b) for x, a, b in zip(z, box.lo, box.hi))


def canonical_shortest_path(grid: GridDims, u, v) -> list:
    """Monotone path from u to v taking all axis-1 steps, then axis 2, then axis 3."""
    u, v = grid.check_vertex(u), grid.check_vertex(v)
    path = [u]
    cur = list(u)
    for axis in range(grid.rank):
        step = 1 if v[axis] > cur[axis] else -1
        while cur[axis] != v[axis]:
            cur[axis] += step
            path.append(tuple(cur))
    return path


def shortest_path_resolver_count(grid: GridDims, u, v) -> int:
    """How many vertices of the canonical u-v shortest path resolve (u, v).

    This is d(u, v) + 1 for odd distance and d(u, v) for even distance.
    """
    u, v = _pair(grid, u, v)
    return sum(resolves(grid, z, u, v) for z in canonical_shortest_path(grid, u, v))


def single_axis_nonresolvers(grid: GridDims, u, v) -> VertexSet:
    """Non-resolvers of a pair differing in exactly one coordinate.

    They form the hyperplane halfway between u and v on that axis, which is
    empty when the two coordinates have different parity.
    """
    u, v = _pair(grid, u, v)
    diff = [i for i in range(grid.rank) if u[i] != v[i]]
    if len(diff) != 1:
        raise DegeneratePairError(f"{u} and {v} differ in {len(diff)} coordinates, expected 1")
    (axis,) = diff
    total = u[axis] + v[axis]
    if total % 2:
        return grid.empty_set()
    return VertexSet.from_mask(grid, grid.coords[:, axis] == total // 2)


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, i: int, j: int) -> int:
    """Position of the pair (i, j), i < j, in row-major order over N = n vertices."""
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def all_pairs(n: int) -> np.ndarray:
    """(P, 2) array of index pairs (i < j) in row-major order."""
    i, j = np.triu_indices(n, k=1)
    return np.stack([i, j], axis=1)


@dataclass(frozen=True)
class PairResolverTable:
    """Resolver sets for every unordered vertex pair of a grid.

    Rows follow :func:`all_pairs` order; each row is a bit-packed resolver
    set over vertex indices (``np.packbits`` layout, little bit order).
    """

    grid: GridDims
    packed: np.ndarray

    @property
    def n_pairs(self) -> int:
        return len(self.packed)

    @cached_property
    def pairs(self) -> np.ndarray:
        return all_pairs(self.grid.vertex_count)

    def row(self, i: int, j: int) -> np.ndarray:
        n = self.grid.vertex_count
        bits = np.unpackbits(self.packed[pair_index(n, i, j)], bitorder="little")
        return bits[:n].astype(bool)

    def resolvers(self, u, v) -> VertexSet:
        i, j = self.grid.vertex_index(u), self.grid.vertex_index(v)
        if i == j:
            raise DegeneratePairError(f"pair needs two distinct vertices, got {u} twice")
        return VertexSet.from_mask(self.grid, self.row(i, j))

    def matrix(self, rows=None) -> np.ndarray:
        """Unpacked (P, N) boolean incidence matrix, optionally for selected rows."""
        n = self.grid.vertex_count
        block = self.packed if rows is None else self.packed[rows]
        return np.unpackbits(block, axis=1, count=n, bitorder="little").astype(bool)

    def sizes(self) -> np.ndarray:
        return np.unpackbits(self.packed, axis=1, bitorder="little").sum(axis=1)

    def counts(self, S: VertexSet) -> np.ndarray:
        """|resolvers(p) ∩ S| for every pair p."""
        return self.matrix()[:, S.mask()].sum(axis=1)


def resolver_table(grid: GridDims, cap: int | None = None) -> PairResolverTable:
    cap = table_cap() if cap is None else cap
    n = grid.vertex_count
    if n > cap:
        raise ResourceLimitError(
            f"grid {grid} has {n} vertices, resolver table cap is {cap}; "
            f"raise the cap to at least {n} (GRIDRES_TABLE_CAP)", required=n)
    width = (n + 7) // 8
    packed = np.zeros((pair_count(n), width), dtype=np.uint8)
    if n < 2:
        return PairResolverTable(grid, packed)
    D = grid.distance_matrix
    start = 0
    for i in range(n - 1):
        # row z of D[i+1:] is d(v, .) for v > i; compare with d(i, .)
        block = D[i + 1:] != D[i][None, :]
        packed[start:start + len(block)] = np.packbits(block, axis=1, bitorder="little")
        start += len(block)
    return PairResolverTable(grid, packed)
