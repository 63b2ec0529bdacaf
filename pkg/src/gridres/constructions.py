"""Certified resolving-set constructions for 3D grids.

Every builder returns a :class:`Certificate`. On grids up to
``VERIFY_CAP`` vertices the set is run through the verifier before it is
handed back, and a construction that fails its own claim raises.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import alpha_m, alpha_M
from .errors import DomainError, GridResError
from .grid_core import GridDims, VertexSet, face_set, format_vertex
from .verifier import VerifyReport, resolving_strength

VERIFY_CAP = 200


class ConstructionError(GridResError):
    """A construction did not reach its claimed strength (a bug, never expected)."""


@dataclass(frozen=True)
class Certificate:
    construction_name: str
    set: VertexSet
    claimed_k: int
    verified: VerifyReport | None

    @property
    def verified_flag(self) -> bool:
        return self.verified is not None

    def to_dict(self):
        out = {
            "name": self.construction_name,
            "grid": str(self.set.grid),
            "k_claimed": self.claimed_k,
            "set": [format_vertex(u) for u in self.set],
            "size": len(self.set),
            "verified_flag": self.verified_flag,
        }
        if self.verified is not None:
            out["verified"] = {"strength": self.verified.strength,
                               "witness": self.verified.witness.to_dict()}
        return out


def certify(name: str, S: VertexSet, claimed_k: int, verify: bool | None = None) -> Certificate:
    if verify is None:
        verify = S.grid.vertex_count <= VERIFY_CAP
    report = resolving_strength(S) if verify else None
    if report is not None and report.strength < claimed_k:
        raise ConstructionError(
            f"{name} on {S.grid} reached strength {report.strength}, claimed {claimed_k}")
    return Certificate(name, S, claimed_k, report)


def corner_basis(grid: GridDims, verify: bool | None = None) -> Certificate:
    """Three corners of the x3 = 0 face; a metric basis of any 3D grid."""
    grid.require_rank(3)
    n1, n2, _ = grid.dims
    S = VertexSet.from_vertices(grid, [(0, 0, 0), (n1 - 1, 0, 0), (0, n2 - 1, 0)])
    return certify("corner-basis", S, 1, verify)


def four_point_set(grid: GridDims, h: int, h_prime: int, i: int, j: int,
                   verify: bool | None = None) -> Certificate:
    """Three face corners on layer ``h`` plus any vertex on another layer ``h_prime``."""
    grid.require_rank(3)
    n1, n2, n3 = grid.dims
    if h == h_prime:
        raise DomainError("four-point set needs two distinct layers h != h'")
    if not (0 <= h < n3 and 0 <= h_prime < n3 and 0 <= i < n1 and 0 <= j < n2):
        raise DomainError(f"four-point parameters out of range for grid {grid}")
    S = VertexSet.from_vertices(grid, [(0, 0, h), (n1 - 1, 0, h), (0, n2 - 1, h), (i, j, h_prime)])
    return certify("four-point", S, 1, verify)


def frame_family(grid: GridDims) -> list:
    """The n1 + n2 + n3 - 4 disjoint four-vertex frame sets, in union order.

    Sets along axis 1 for every i come first, then axis 2 for interior j,
    then axis 3 for interior h.
    """
    grid.require_rank(3)
    n1, n2, n3 = grid.dims
    a, b, c = n1 - 1, n2 - 1, n3 - 1
    family = []
    for i in range(n1):
        family.append([(i, 0, 0), (i, b, 0), (i, 0, c), (i, b, c)])
    for j in range(1, n2 - 1):
        family.append([(0, j, 0), (a, j, 0), (0, j, c), (a, j, c)])
    for h in range(1, n3 - 1):
        family.append([(0, 0, h), (a, 0, h), (0, b, h), (a, b, h)])
    return [VertexSet.from_vertices(grid, quad) for quad in family]


def _union_first(grid: GridDims, count: int) -> VertexSet:
    out = grid.empty_set()
    for quad in frame_family(grid)[:count]:
        out = out | quad
    return out


def odd_k_construction(grid: GridDims, k: int, verify: bool | None = None) -> Certificate:
    """(k+1)-resolving set of size 2k+2 for odd k < alpha_m."""
    grid.require_rank(3)
    if k < 1 or k % 2 == 0:
        raise DomainError(f"odd-k construction needs an odd k >= 1, got {k}")
    if k >= alpha_m(grid):
        raise DomainError(f"odd-k construction needs k < alpha_m = {alpha_m(grid)}, got {k}")
    S = _union_first(grid, (k + 1) // 2)
    return certify("odd-k", S, k + 1, verify)


def even_k_construction(grid: GridDims, k: int, verify: bool | None = None) -> Certificate:
    """(k+1)-resolving set of size 2k+3 for even 2 <= k < alpha_m."""
    grid.require_rank(3)
    if k < 2 or k % 2:
        raise DomainError(f"even-k construction needs an even k >= 2, got {k}")
    if k >= alpha_m(grid):
        raise DomainError(f"even-k construction needs k < alpha_m = {alpha_m(grid)}, got {k}")
    S = _union_first(grid, k // 2 + 1).remove((0, 0, 0))
    return certify("even-k", S, k + 1, verify)


def face_construction(grid: GridDims, k: int, verify: bool | None = None) -> Certificate:
    """All face vertices, which form a (k+1)-resolving set for every k < alpha_M."""
    grid.require_rank(3)
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    if k >= alpha_M(grid):
        raise DomainError(f"face construction needs k < alpha_M = {alpha_M(grid)}, got {k}")
    return certify("face", face_set(grid), k + 1, verify)
