"""Resolving strength of vertex sets, with deterministic witnesses.

The strength of S is min over vertex pairs (u, v) of the number of members of
S resolving the pair; S is k-resolving exactly when its strength is >= k.
Counts here are computed straight from the distance matrix, so this module
never depends on the resolver tables the solver searches over.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .grid_core import GridDims, VertexSet, format_vertex, other_axes, projection

_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True)
class Witness:
    u: tuple
    v: tuple
    count: int

    def to_dict(self):
        return {"u": format_vertex(self.u), "v": format_vertex(self.v), "count": self.count}


@dataclass(frozen=True)
class VerifyReport:
    input_set: VertexSet
    strength: int
    witness: Witness
    elapsed: float

    @property
    def is_resolving(self) -> bool:
        return self.strength >= 1

    def to_dict(self):
        return {
            "grid": str(self.input_set.grid),
            "set": [format_vertex(u) for u in self.input_set],
            "strength": self.strength,
            "witness": self.witness.to_dict(),
            "elapsed_ms": round(self.elapsed * 1e3, 3),
        }


class KCheck(NamedTuple):
    ok: bool
    witness: Witness | None


def _row_chunks(grid: GridDims, s: int):
    n = grid.vertex_count
    step = max(1, _CHUNK_CELLS // max(1, n * max(s, 1)))
    for start in range(0, n - 1, step):
        yield start, min(n - 1, start + step)


def _chunk_counts(DS: np.ndarray, start: int, stop: int) -> np.ndarray:
    """Counts for rows u in [start, stop) against every v; entries with v <= u are masked."""
    block = (DS[start:stop, None, :] != DS[None, :, :]).sum(axis=2)
    n = DS.shape[0]
    rows = np.arange(start, stop)[:, None]
    block[np.arange(n)[None, :] <= rows] = np.iinfo(block.dtype).max
    return block


def _scan(S: VertexSet, threshold: int | None):
    """Find the lexicographically first pair with the minimum count.

    With ``threshold`` set, stop at the first chunk holding a pair whose count
    is below it and report the first such pair instead.
    """
    grid = S.grid
    if grid.vertex_count < 2:
        raise DomainError("strength needs a grid with at least two vertices")
    DS = grid.distance_matrix[:, S.indices()]
    best = None
    for start, stop in _row_chunks(grid, DS.shape[1]):
        block = _chunk_counts(DS, start, stop)
        if threshold is not None:
            bad = np.argwhere(block < threshold)
            if len(bad):
                r, c = bad[0]
                return start + int(r), int(c), int(block[r, c])
            continue
        flat = int(np.argmin(block))
        r, c = divmod(flat, block.shape[1])
        count = int(block[r, c])
        if best is None or count < best[2]:
            best = (start + r, c, count)
    return best


def resolving_strength(S: VertexSet) -> VerifyReport:
    t0 = time.perf_counter()
    i, j, count = _scan(S, None)
    grid = S.grid
    witness = Witness(grid.index_vertex(i), grid.index_vertex(j), count)
    return VerifyReport(S, count, witness, time.perf_counter() - t0)


def is_k_resolving(S: VertexSet, k: int) -> KCheck:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    hit = _scan(S, k)
    if hit is None:
        return KCheck(True, None)
    i, j, count = hit
    return KCheck(False, Witness(S.grid.index_vertex(i), S.grid.index_vertex(j), count))


def pair_resolver_count(S: VertexSet, u, v) -> int:
    grid = S.grid
    return sum(grid.distance(z, u) != grid.distance(z, v) for z in S)


def existence_max_k(grid: GridDims) -> int:
    """Largest k for which the grid has any k-resolving set (the strength of V)."""
    return resolving_strength(grid.full_set()).strength


@dataclass(frozen=True)
class RegionWitness:
    axis: int
    a1: int
    a2: int
    kind: str  # "--/++" or "-+/+-"
    u: tuple
    v: tuple


def _embed(p, axis: int) -> tuple:
    return tuple(p[:axis - 1]) + (0,) + tuple(p[axis - 1:])


def region_witness(S: VertexSet) -> RegionWitness | None:
    """Search every axis and cut for a projection confined to two opposite quadrants.

    Such a confinement proves S is not resolving; the returned pair is one
    that no member of S resolves. Axes are scanned 1, 2, 3 and cuts in
    ascending (a1, a2) order.
    """
    grid = S.grid
    grid.require_rank(3)
    for axis in (1, 2, 3):
        i, j = other_axes(axis)
        ni, nj = grid.dims[i - 1], grid.dims[j - 1]
        pts = np.array(sorted(projection(S, axis)), dtype=np.int64).reshape(-1, 2)
        for a1 in range(1, ni):
            low1 = pts[:, 0] < a1
            for a2 in range(1, nj):
                same = low1 == (pts[:, 1] < a2)
                if same.all():
                    return RegionWitness(axis, a1, a2, "--/++",
                                         _embed((a1 - 1, a2), axis), _embed((a1, a2 - 1), axis))
                if not same.any():
                    return RegionWitness(axis, a1, a2, "-+/+-",
                                         _embed((a1 - 1, a2 - 1), axis), _embed((a1, a2), axis))
    return None
