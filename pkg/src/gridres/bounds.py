"""Closed-form thresholds and dimension predictions for 3D grids.

Throughout this module ``k`` counts tolerated failures: a prediction for
``k`` concerns (k+1)-resolving sets. The two thresholds are

* ``alpha_m = 2(n1 + n2 + n3) - 8``: below it the (k+1)-metric dimension
  is 2k+2 for odd k and 2k+3 for even k;
* ``alpha_M = min_i n_i (n_j + n_k - 2)``: (k+1)-resolving sets exist iff
  k < alpha_M.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import DegeneratePairError, DomainError, UnsupportedRankError
from .grid_core import GridDims, face_count

METRIC_DIMENSION_3D = 3


def _dims3(dims) -> tuple:
    if isinstance(dims, GridDims):
        dims = dims.dims
    dims = tuple(dims)
    if len(dims) != 3:
        raise UnsupportedRankError(f"expected three dimensions, got {dims}")
    return dims


def alpha_m(dims) -> int:
    n1, n2, n3 = _dims3(dims)
    return 2 * (n1 + n2 + n3) - 8


def alpha_M(dims) -> int:
    n1, n2, n3 = _dims3(dims)
    return min(n1 * (n2 + n3 - 2), n2 * (n1 + n3 - 2), n3 * (n1 + n2 - 2))


def metric_dim_value() -> int:
    return METRIC_DIMENSION_3D


class Status(enum.Enum):
    EXACT = "exact"
    UPPER_BOUND_ONLY = "upper_bound_only"
    NONEXISTENT = "nonexistent"


class Regime(enum.Enum):
    BELOW_ALPHA_M = "below_alpha_m"
    GAP = "gap"
    AT_OR_ABOVE_ALPHA_M = "at_or_above_alpha_M"


@dataclass(frozen=True)
class DimPrediction:
    dims: tuple
    k: int
    status: Status
    value: int | None
    regime: Regime
    provenance: str
    notes: tuple = field(default=())
    conjectured: int | None = None

    def to_dict(self):
        out = {
            "grid": "x".join(map(str, self.dims)),
            "k": self.k,
            "status": self.status.value,
            "regime": self.regime.value,
            "provenance": self.provenance,
        }
        if self.value is not None:
            out["value"] = self.value
        if self.conjectured is not None:
            out["conjectured"] = {"value": self.conjectured, "provenance": "conjecture"}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def predict_dim(dims, k: int) -> DimPrediction:
    """What is known about the size of a minimum (k+1)-resolving set."""
    dims = _dims3(dims)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}; the metric dimension itself is {METRIC_DIMENSION_3D}")
    lo, hi = alpha_m(dims), alpha_M(dims)
    if k >= hi:
        return DimPrediction(dims, k, Status.NONEXISTENT, None, Regime.AT_OR_ABOVE_ALPHA_M, "theorem")
    if k >= lo:
        return DimPrediction(dims, k, Status.UPPER_BOUND_ONLY, face_count(dims), Regime.GAP, "construction",
                             conjectured=conjecture_value(dims, k))
    value = 2 * k + 2 if k % 2 else 2 * k + 3
    notes = ()
    if k == 1:
        notes = ("k = 1 is covered by the odd-k frame construction; "
                 "the closed-form table is otherwise stated for k >= 2",)
    return DimPrediction(dims, k, Status.EXACT, value, Regime.BELOW_ALPHA_M, "theorem", notes)


def conjecture_value(dims, k: int) -> int:
    """Conjectured (k+1)-metric dimension in the gap regime; not a proven value."""
    dims = _dims3(dims)
    lo, hi = alpha_m(dims), alpha_M(dims)
    if not lo <= k < hi:
        raise DomainError(f"conjecture applies only for {lo} <= k < {hi}, got k = {k}")
    return min(4 * k - 2 * lo + 4, face_count(dims))


def k_resolving_lower_bound(grid: GridDims, k: int) -> int:
    """Lower bound on the size of any k-resolving set (k = resolving level, not failures).

    For 3D grids combines |S| >= dim + k - 1, |S| >= 2k and, when k - 1 is
    even, |S| >= 2k + 1. Other ranks only get the trivial |S| >= k.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if grid.rank != 3:
        return k
    bound = max(METRIC_DIMENSION_3D + k - 1, 2 * k)
    if (k - 1) % 2 == 0:
        bound = max(bound, 2 * k + 1)
    return bound


@dataclass(frozen=True)
class FaceBound:
    """Guaranteed number of face vertices resolving a pair.

    ``bound`` is always alpha_M; ``sharper`` is the case-specific value when
    one applies, keyed by the case that produced it.
    """

    bound: int
    case: str
    sharper: int | None = None


def face_resolver_lower_bound(grid: GridDims, u, v) -> FaceBound:
    grid.require_rank(3)
    u, v = grid.check_vertex(u), grid.check_vertex(v)
    if u == v:
        raise DegeneratePairError(f"pair needs two distinct vertices, got {u} twice")
    dims = grid.dims
    base = alpha_M(dims)
    total = face_count(dims)
    if grid.distance(u, v) % 2:
        return FaceBound(base, "odd_distance", total)
    diff = [i for i in range(3) if u[i] != v[i]]
    same = [i for i in range(3) if u[i] == v[i]]
    if len(diff) == 1:
        j, l = (dims[i] for i in same)
        return FaceBound(base, "one_coordinate", total - (2 * j + 2 * l - 4))
    opposite = [i for i in diff if {u[i], v[i]} == {0, dims[i] - 1}]
    if len(diff) == 2:
        (s,) = same
        a, b = (dims[i] for i in diff)
        sharper = dims[s] * (a + b - 2)
        for i in opposite:
            p, q = (dims[t] for t in range(3) if t != i)
            sharper = max(sharper, dims[i] * (p + q - 2))
        return FaceBound(base, "two_coordinates", sharper)
    if opposite:
        sharper = 0
        for i in opposite:
            p, q = (dims[t] for t in range(3) if t != i)
            sharper = max(sharper, dims[i] * (p + q - 2))
        return FaceBound(base, "opposite_layers", sharper)
    return FaceBound(base, "general", None)
