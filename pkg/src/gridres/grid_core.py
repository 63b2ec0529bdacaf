"""Grid graphs P_{n_1} x ... x P_{n_r} with closed-form distances.

Vertices are plain tuples of non-negative integers. Every vertex has a dense
index in mixed radix with the first coordinate varying fastest, so that for
r = 3 ``index = x1 + n1 * (x2 + n2 * x3)``. Vertex sets are integer-backed
bitsets over those indices.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError, GridMismatchError, InvalidDimsError, UnsupportedRankError

Vertex = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class GridDims:
    """Shape of a grid graph.

    ``dims`` holds the normalized factors (all >= 2). ``original`` keeps the
    factors as supplied, unit entries included, so user-facing vertex triples
    can be mapped onto the normalized grid with :meth:`lift`.
    """

    dims: tuple
    original: tuple = field(default=(), compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.dims)

    @property
    def trivial(self) -> bool:
        return not self.dims

    @property
    def vertex_count(self) -> int:
        return math.prod(self.dims)

    @property
    def note(self):
        if self.original and tuple(self.original) != tuple(self.dims):
            return (f"unit factors dropped: {format_dims(self.original)} -> "
                    f"{format_dims(self.dims) if self.dims else 'single vertex'}")
        return None

    def __str__(self):
        return format_dims(self.dims) if self.dims else "1"

    @cached_property
    def _strides(self):
        strides, acc = [], 1
        for n in self.dims:
            strides.append(acc)
            acc *= n
        return tuple(strides)

    def require_rank(self, r=3):
        if self.rank != r:
            raise UnsupportedRankError(f"operation requires a rank-{r} grid, got {self}")

    def check_vertex(self, u) -> tuple:
        u = tuple(int(x) for x in u)
        if len(u) != self.rank:
            raise GridMismatchError(f"vertex {u} does not belong to grid {self}")
        for x, n in zip(u, self.dims):
            if not 0 <= x < n:
                raise GridMismatchError(f"vertex {u} out of bounds for grid {self}")
        return u

    def lift(self, u) -> tuple:
        """Map a vertex written against ``original`` dims onto the normalized grid."""
        u = tuple(int(x) for x in u)
        if not self.original or len(u) == self.rank:
            return self.check_vertex(u)
        if len(u) != len(self.original):
            raise GridMismatchError(f"vertex {u} does not belong to grid {format_dims(self.original)}")
        kept = []
        for x, n in zip(u, self.original):
            if n == 1:
                if x != 0:
                    raise GridMismatchError(f"vertex {u} out of bounds for grid {format_dims(self.original)}")
            else:
                kept.append(x)
        return self.check_vertex(kept)

    def vertex_index(self, u) -> int:
        u = self.check_vertex(u)
        return sum(x * s for x, s in zip(u, self._strides))

    def index_vertex(self, i: int) -> tuple:
        if not 0 <= i < self.vertex_count:
            raise GridMismatchError(f"index {i} out of range for grid {self}")
        coords = []
        for n in self.dims:
            i, x = divmod(i, n)
            coords.append(x)
        return tuple(coords)

    def vertices(self) -> Iterator[tuple]:
        """All vertices in index order."""
        for rev in itertools.product(*(range(n) for n in reversed(self.dims))):
            yield rev[::-1]

    @cached_property
    def coords(self) -> np.ndarray:
        """(vertex_count, rank) coordinate array in index order."""
        if self.trivial:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.meshgrid(*(np.arange(n) for n in self.dims), indexing="ij")
        # x1-fastest order == Fortran ravel of an ij-indexed mesh
        return np.stack([g.ravel(order="F") for g in grids], axis=1).astype(np.int64)

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        c = self.coords
        out = np.zeros((len(c), len(c)), dtype=np.int32)
        for axis in range(self.rank):
            col = c[:, axis]
            out += np.abs(col[:, None] - col[None, :]).astype(np.int32)
        return out

    def distance(self, u, v) -> int:
        u, v = self.check_vertex(u), self.check_vertex(v)
        return sum(abs(a - b) for a, b in zip(u, v))

    def full_set(self) -> VertexSet:
        return VertexSet(self, (1 << self.vertex_count) - 1)

    def empty_set(self) -> VertexSet:
        return VertexSet(self, 0)


def format_dims(dims: Sequence[int]) -> str:
    return "x".join(str(n) for n in dims)


def make_grid(dims: Iterable[int]) -> GridDims:
    """Build a grid from raw factors, dropping unit factors.

    >>> make_grid([1, 4, 5]).dims
    (4, 5)
    """
    raw = list(dims)
    if not raw:
        raise InvalidDimsError("grid needs at least one dimension")
    for n in raw:
        if isinstance(n, bool) or int(n) != n or n < 1:
            raise InvalidDimsError(f"grid dimensions must be positive integers, got {raw}")
    raw = tuple(int(n) for n in raw)
    return GridDims(tuple(n for n in raw if n > 1), original=raw)


def parse_grid(text: str) -> GridDims:
    """Parse the canonical ``AxBxC`` grid literal."""
    parts = text.strip().split("x")
    try:
        dims = [int(p) for p in parts]
    except ValueError:
        raise InvalidDimsError(f"bad grid literal {text!r}; expected e.g. 3x4x5") from None
    return make_grid(dims)


def distance(grid: GridDims, u, v) -> int:
    return grid.distance(u, v)


def format_vertex(u) -> str:
    return "(" + ",".join(str(int(x)) for x in u) + ")"


@dataclass(frozen=True)
class VertexSet:
    """An immutable set of vertices of one grid, stored as an int bitset."""

    grid: GridDims
    bits: int = 0

    @classmethod
    def from_vertices(cls, grid: GridDims, vertices: Iterable) -> VertexSet:
        bits = 0
        for u in vertices:
            bits |= 1 << grid.vertex_index(u)
        return cls(grid, bits)

    @classmethod
    def from_indices(cls, grid: GridDims, indices: Iterable[int]) -> VertexSet:
        bits = 0
        n = grid.vertex_count
        for i in indices:
            i = int(i)
            if not 0 <= i < n:
                raise GridMismatchError(f"index {i} out of range for grid {grid}")
            bits |= 1 << i
        return cls(grid, bits)

    @classmethod
    def from_mask(cls, grid: GridDims, mask: np.ndarray) -> VertexSet:
        return cls.from_indices(grid, np.flatnonzero(mask))

    def _same_grid(self, other: VertexSet):
        if other.grid != self.grid:
            raise GridMismatchError(f"vertex sets over different grids: {self.grid} vs {other.grid}")

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, u):
        return bool(self.bits >> self.grid.vertex_index(u) & 1)

    def indices(self) -> list:
        out, bits = [], self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def __iter__(self) -> Iterator[tuple]:
        return (self.grid.index_vertex(i) for i in self.indices())

    def vertices(self) -> list:
        return list(self)

    def mask(self) -> np.ndarray:
        m = np.zeros(self.grid.vertex_count, dtype=bool)
        m[self.indices()] = True
        return m

    def intersection_count(self, other: VertexSet) -> int:
        self._same_grid(other)
        return (self.bits & other.bits).bit_count()

    def __and__(self, other: VertexSet) -> VertexSet:
        self._same_grid(other)
        return VertexSet(self.grid, self.bits & other.bits)

    def __or__(self, other: VertexSet) -> VertexSet:
        self._same_grid(other)
        return VertexSet(self.grid, self.bits | other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._same_grid(other)
        return VertexSet(self.grid, self.bits & ~other.bits)

    def __le__(self, other: VertexSet) -> bool:
        self._same_grid(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> VertexSet:
        return self.grid.full_set() - self

    def add(self, u) -> VertexSet:
        return VertexSet(self.grid, self.bits | 1 << self.grid.vertex_index(u))

    def remove(self, u) -> VertexSet:
        return VertexSet(self.grid, self.bits & ~(1 << self.grid.vertex_index(u)))

    def __str__(self):
        return ";".join(format_vertex(u) for u in self)

    def __repr__(self):
        return f"VertexSet({self.grid}, {{{str(self)}}})"


# ---------------------------------------------------------------------------
# 3D structure: faces, corners, projections, regions


def face_set(grid: GridDims) -> VertexSet:
    """Vertices with at least one coordinate equal to 0 or n_i - 1."""
    grid.require_rank(3)
    c = grid.coords
    n = np.asarray(grid.dims)
    on_face = ((c == 0) | (c == n - 1)).any(axis=1)
    return VertexSet.from_mask(grid, on_face)


def face_count(dims: Sequence[int]) -> int:
    n1, n2, n3 = dims
    return 2 * (n1 * n2 + n2 * n3 + n1 * n3) - 4 * (n1 + n2 + n3) + 8


def corners(grid: GridDims) -> VertexSet:
    ends = [(0, n - 1) for n in grid.dims]
    return VertexSet.from_vertices(grid, itertools.product(*ends))


def is_corner(grid: GridDims, u) -> bool:
    u = grid.check_vertex(u)
    return all(x in (0, n - 1) for x, n in zip(u, grid.dims))


def degree(grid: GridDims, u) -> int:
    u = grid.check_vertex(u)
    return sum(2 if 0 < x < n - 1 else 1 for x, n in zip(u, grid.dims))


def _check_axis(axis) -> int:
    if axis not in (1, 2, 3):
        raise DomainError(f"axis must be 1, 2 or 3, got {axis!r}")
    return axis


def other_axes(axis: int) -> tuple:
    """The two axes (1-based, ascending) kept by a projection along ``axis``."""
    _check_axis(axis)
    return tuple(a for a in (1, 2, 3) if a != axis)


def projection(S: VertexSet, axis: int) -> set:
    """Delete coordinate ``axis`` (1-based) from every member of ``S``."""
    S.grid.require_rank(3)
    _check_axis(axis)
    return {u[:axis - 1] + u[axis:] for u in S}


class Quadrant(enum.Enum):
    MM = "--"
    PP = "++"
    MP = "-+"
    PM = "+-"


@dataclass(frozen=True)
class RegionLabel:
    quadrant: Quadrant
    a1: int
    a2: int
    axis: int = 3


def _check_cuts(grid: GridDims, axis: int, a1: int, a2: int):
    grid.require_rank(3)
    i, j = other_axes(axis)
    ni, nj = grid.dims[i - 1], grid.dims[j - 1]
    if not (1 <= a1 <= ni - 1 and 1 <= a2 <= nj - 1):
        raise DomainError(f"cut ({a1},{a2}) outside [1,{ni - 1}]x[1,{nj - 1}]")
    return ni, nj


def region_of(grid: GridDims, p, a1: int, a2: int, axis: int = 3) -> RegionLabel:
    """Quadrant of the 2D point ``p`` (a projection along ``axis``) for cut (a1, a2)."""
    ni, nj = _check_cuts(grid, axis, a1, a2)
    x1, x2 = p
    if not (0 <= x1 < ni and 0 <= x2 < nj):
        raise DomainError(f"point {tuple(p)} outside the {ni}x{nj} projection")
    low1, low2 = x1 < a1, x2 < a2
    quadrant = {
        (True, True): Quadrant.MM,
        (False, False): Quadrant.PP,
        (True, False): Quadrant.MP,
        (False, True): Quadrant.PM,
    }[(low1, low2)]
    return RegionLabel(quadrant, a1, a2, axis)


@dataclass(frozen=True)
class Box:
    """Axis-aligned box of vertices; for two vertices u, v this is S(u, v)."""

    grid: GridDims
    lo: tuple
    hi: tuple

    def __contains__(self, z):
        return all(a <= x <= b for x, a, b in zip(z, self.lo, self.hi))

    def __len__(self):
        return math.prod(b - a + 1 for a, b in zip(self.lo, self.hi))

    def vertices(self) -> list:
        ranges = [range(a, b + 1) for a, b in zip(self.lo, self.hi)]
        return [rev[::-1] for rev in itertools.product(*reversed(ranges))]

    def to_set(self) -> VertexSet:
        return VertexSet.from_vertices(self.grid, self.vertices())


def shortest_path_box(grid: GridDims, u, v) -> Box:
    u, v = grid.check_vertex(u), grid.check_vertex(v)
    lo = tuple(min(a, b) for a, b in zip(u, v))
    hi = tuple(max(a, b) for a, b in zip(u, v))
    return Box(grid, lo, hi)
