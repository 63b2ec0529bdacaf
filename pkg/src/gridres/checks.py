"""Randomized property suites for the pair-resolver lemmas.

Each suite draws random 3D grids (every side in [2, max_side]) and random
vertices from a seeded generator, evaluates the claimed property against a
direct distance computation, and returns a :class:`CheckResult` listing
any violations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid_core import GridDims, VertexSet, make_grid, other_axes
from .pair_resolvers import (anchor_equivalent, resolver_mask, resolves, shortest_path_resolver_count,
                             single_axis_nonresolvers)
from .verifier import pair_resolver_count, region_witness


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {"name": self.name, "cases": self.cases, "violations": len(self.violations),
                "first_violation": repr(self.violations[0]) if self.violations else None}


def _grid(rng, max_side) -> GridDims:
    return make_grid(rng.integers(2, max_side + 1, size=3).tolist())


def _vertex(rng, grid) -> tuple:
    return tuple(int(rng.integers(0, n)) for n in grid.dims)


def _pair(rng, grid):
    u = _vertex(rng, grid)
    while True:
        v = _vertex(rng, grid)
        if v != u:
            return u, v


def check_odd_distance(rng, cases=10_000, max_side=6) -> CheckResult:
    """Odd-distance pairs are resolved by every vertex (grids are bipartite)."""
    out = CheckResult("odd_distance_all_resolve")
    while out.cases < cases:
        grid = _grid(rng, max_side)
        u, v = _pair(rng, grid)
        if grid.distance(u, v) % 2 == 0:
            continue
        out.cases += 1
        if not resolver_mask(grid, u, v).all():
            out.violations.append((grid.dims, u, v))
    return out


def random_shortest_path(rng, u, v) -> list:
    steps = []
    for axis, (a, b) in enumerate(zip(u, v)):
        steps += [(axis, 1 if b > a else -1)] * abs(b - a)
    rng.shuffle(steps)
    path, cur = [tuple(u)], list(u)
    for axis, step in steps:
        cur[axis] += step
        path.append(tuple(cur))
    return path


def check_shortest_path(rng, cases=10_000, max_side=6) -> CheckResult:
    """On any shortest u-v path, all vertices resolve for odd d(u,v), all but the midpoint for even."""
    out = CheckResult("shortest_path_all_but_one")
    for _ in range(cases):
        grid = _grid(rng, max_side)
        u, v = _pair(rng, grid)
        d = grid.distance(u, v)
        path = random_shortest_path(rng, u, v)
        failing = [z for z in path if not resolves(grid, z, u, v)]
        expected = [] if d % 2 else [path[d // 2]]
        canonical = shortest_path_resolver_count(grid, u, v)
        out.cases += 1
        if failing != expected or canonical != len(path) - len(expected):
            out.violations.append((grid.dims, u, v, path, failing))
    return out


def check_anchor(rng, cases=10_000, max_side=6) -> CheckResult:
    """A vertex resolves (u, v) iff its clamp onto the shortest-path box does."""
    out = CheckResult("anchor_equivalence")
    for _ in range(cases):
        grid = _grid(rng, max_side)
        u, v = _pair(rng, grid)
        z = _vertex(rng, grid)
        a = anchor_equivalent(grid, z, u, v)
        lhs = grid.distance(z, u) != grid.distance(z, v)
        rhs = grid.distance(a, u) != grid.distance(a, v)
        out.cases += 1
        if lhs != rhs:
            out.violations.append((grid.dims, z, u, v, a))
    return out


def check_single_axis(rng, cases=10_000, max_side=6) -> CheckResult:
    """For pairs differing in one coordinate, non-resolvers are exactly the midpoint plane."""
    out = CheckResult("single_axis_nonresolvers")
    for _ in range(cases):
        grid = _grid(rng, max_side)
        u = _vertex(rng, grid)
        axis = int(rng.integers(0, 3))
        n = grid.dims[axis]
        other = int(rng.integers(0, n - 1))
        other += other >= u[axis]
        v = u[:axis] + (other,) + u[axis + 1:]
        c = grid.coords
        du = np.abs(c - np.asarray(u)).sum(axis=1)
        dv = np.abs(c - np.asarray(v)).sum(axis=1)
        brute = VertexSet.from_mask(grid, du == dv)
        out.cases += 1
        if brute != single_axis_nonresolvers(grid, u, v):
            out.violations.append((grid.dims, u, v))
    return out


def quadrant_confined_set(rng, grid: GridDims, axis: int, a1: int, a2: int, kind: str) -> VertexSet:
    """Random subset of the vertices whose projection lies in one quadrant union."""
    i, j = other_axes(axis)
    c = grid.coords
    same = (c[:, i - 1] < a1) == (c[:, j - 1] < a2)
    pool = same if kind == "--/++" else ~same
    keep = pool & (rng.random(len(c)) < rng.uniform(0.1, 1.0))
    return VertexSet.from_mask(grid, keep)


def check_region_witness(rng, cases=1_000, max_side=4) -> CheckResult:
    """Sets confined to a quadrant union always get a witness pair they fail to resolve."""
    out = CheckResult("region_witness_soundness")
    for _ in range(cases):
        grid = _grid(rng, max_side)
        axis = int(rng.integers(1, 4))
        i, j = other_axes(axis)
        a1 = int(rng.integers(1, grid.dims[i - 1]))
        a2 = int(rng.integers(1, grid.dims[j - 1]))
        kind = "--/++" if rng.random() < 0.5 else "-+/+-"
        S = quadrant_confined_set(rng, grid, axis, a1, a2, kind)
        w = region_witness(S)
        out.cases += 1
        if w is None or pair_resolver_count(S, w.u, w.v) != 0:
            out.violations.append((grid.dims, axis, a1, a2, kind, str(S), w))
    return out


LEMMA_SUITES = (check_odd_distance, check_shortest_path, check_anchor, check_single_axis)


def run_lemma_suites(seed=0, cases=10_000, max_side=6) -> list:
    rng = np.random.default_rng(seed)
    return [suite(rng, cases, max_side) for suite in LEMMA_SUITES]
