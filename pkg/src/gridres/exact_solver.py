"""Exact minimum k-resolving sets via pair multicover branch-and-bound.

A set S is k-resolving iff every vertex pair has at least k resolvers in S,
so the problem is a multicover: rows are pairs, columns are vertices, and
each row must be covered k times. The search

* drops duplicate rows and rows whose resolver set contains another row's
  (covering the smaller row k times covers the larger one too);
* stages over cardinality, starting from the best known lower bound, so
  the first feasible stage is optimal;
* branches on the deficient row with the least slack and includes one of
  its candidates, excluding the candidates tried before it;
* forces every candidate of a row whose slack is zero, and prunes when the
  best ``slots`` remaining vertices cannot close the total deficit.

``oracle_min_k_resolving`` is a plain subset enumeration kept independent
of all of the above, for cross-checking.
"""

from __future__ import annotations

import enum
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bounds import k_resolving_lower_bound
from .errors import DomainError, GridResError, NonexistentError, ResourceLimitError
from .grid_core import GridDims, VertexSet, format_vertex
from .pair_resolvers import resolver_table
from .verifier import existence_max_k, resolving_strength

log = logging.getLogger(__name__)

ORACLE_VERTEX_LIMIT = 16
_DOMINANCE_ROW_LIMIT = 12000
_CHECK_EVERY = 256


class SolveStatus(enum.Enum):
    OPTIMAL = "optimal"
    NONEXISTENT = "nonexistent"
    BUDGET_EXCEEDED = "budget_exceeded"
    FEASIBLE = "feasible"  # heuristic answer, optimality not claimed


@dataclass
class SolveOptions:
    max_size: int | None = None
    time_budget: float | None = None
    mode: str = "exact"
    start_size_hint: int | None = None
    # "theory": start from the closed-form lower bounds; "trivial": start at k
    bounds: str = "theory"
    threads: int = 1

    def __post_init__(self):
        if self.mode not in ("exact", "oracle", "greedy"):
            raise DomainError(f"unknown mode {self.mode!r}")
        if self.bounds not in ("theory", "trivial"):
            raise DomainError(f"unknown bounds setting {self.bounds!r}")
        if self.time_budget is not None and self.time_budget <= 0:
            raise DomainError("time budget must be positive")
        if self.threads < 1:
            raise DomainError("threads must be >= 1")


@dataclass
class SolveResult:
    grid: GridDims
    k: int
    status: SolveStatus
    set: VertexSet | None = None
    nodes_explored: int = 0
    proof_size_floor: int = 0
    floor_provenance: str = "trivial"
    mode: str = "exact"
    elapsed: float = 0.0
    best_upper: VertexSet | None = None
    stages: list = field(default_factory=list)

    @property
    def size(self):
        return None if self.set is None else len(self.set)

    def to_dict(self):
        out = {
            "grid": str(self.grid),
            "k": self.k,
            "status": self.status.value,
            "floor": self.proof_size_floor,
            "floor_provenance": self.floor_provenance,
            "nodes": self.nodes_explored,
            "elapsed_ms": round(self.elapsed * 1e3, 3),
            "mode": self.mode,
        }
        if self.set is not None:
            out["size"] = len(self.set)
            out["set"] = [format_vertex(u) for u in self.set]
        if self.best_upper is not None:
            out["best_upper"] = len(self.best_upper)
        return out


class _BudgetExceeded(Exception):
    pass


# ---------------------------------------------------------------------------
# problem reduction


def reduce_rows(M: np.ndarray) -> np.ndarray:
    """Drop duplicate and dominated rows of a pair-by-vertex incidence matrix."""
    M = np.unique(M, axis=0)
    if len(M) <= 1 or len(M) > _DOMINANCE_ROW_LIMIT:
        return M
    A = M.astype(np.float32)
    outside = A @ (1.0 - A).T  # [q, p] = |R_q \ R_p|
    np.fill_diagonal(outside, 1.0)
    dominated = (outside == 0).any(axis=0)
    return M[~dominated]


def multicover_matrix(grid: GridDims) -> np.ndarray:
    return reduce_rows(resolver_table(grid).matrix())


# ---------------------------------------------------------------------------
# search


class _Search:
    def __init__(self, M: np.ndarray, k: int, deadline: float | None):
        self.M = M
        self.MT = np.ascontiguousarray(M.T.astype(np.int32))
        self.k = k
        self.n = M.shape[1]
        self.deadline = deadline
        self.nodes = 0

    def root(self):
        status = np.zeros(self.n, dtype=np.int8)
        return self.state(status)

    def state(self, status):
        counts = self.MT[status == 1].sum(axis=0)
        potential = self.MT[status >= 0].sum(axis=0)
        return [status.copy(), counts, potential, int((status == 1).sum())]

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CHECK_EVERY == 0 and time.monotonic() > self.deadline:
            raise _BudgetExceeded

    def _include(self, st, verts):
        st[0][verts] = 1
        st[1] = st[1] + self.MT[verts].sum(axis=0) if np.ndim(verts) else st[1] + self.MT[verts]
        st[3] += np.size(verts)

    def _exclude(self, st, v):
        st[0][v] = -1
        st[2] = st[2] - self.MT[v]

    def propagate(self, st, size) -> bool:
        k = self.k
        while True:
            if (st[2] < k).any() or st[3] > size:
                return False
            tight = (st[2] == k) & (st[1] < k)
            if not tight.any():
                return True
            forced = self.M[tight].any(axis=0) & (st[0] == 0)
            if not forced.any():
                return True
            self._include(st, np.flatnonzero(forced))

    def branches(self, st, size):
        """Children of a propagated, still-deficient node (lazy)."""
        k = self.k
        deficit = np.maximum(k - st[1], 0)
        slots = size - st[3]
        worst = int(deficit.max())
        if worst > slots:
            return
        und = st[0] == 0
        live = deficit > 0
        gain = self.M[live][:, und].sum(axis=0)
        if np.sort(gain)[::-1][:slots].sum() < deficit.sum():
            return
        slack = st[2] - k
        key = np.where(live, slack * (k + 1) - deficit, np.iinfo(np.int64).max)
        p = int(np.argmin(key))
        und_idx = np.flatnonzero(und)
        gain_of = dict(zip(und_idx.tolist(), gain.tolist()))
        cands = np.flatnonzero(self.M[p] & und)
        order = sorted(cands.tolist(), key=lambda v: (-gain_of[v], v))
        base = [st[0].copy(), st[1], st[2], st[3]]
        for v in order:
            child = [base[0].copy(), base[1], base[2], base[3]]
            self._include(child, v)
            yield child
            self._exclude(base, v)
            if base[2][p] < k or (base[2] < k).any():
                return

    def dfs(self, st, size):
        self._tick()
        if not self.propagate(st, size):
            return None
        if (st[1] >= self.k).all():
            return np.flatnonzero(st[0] == 1)
        for child in self.branches(st, size):
            found = self.dfs(child, size)
            if found is not None:
                return found
        return None


def _run_branch(M, k, size, status, deadline):
    search = _Search(M, k, deadline)
    try:
        found = search.dfs(search.state(status), size)
    except _BudgetExceeded:
        return "budget", search.nodes
    return found, search.nodes


def _stage(M, k, size, deadline, threads):
    """Search one cardinality stage; returns (indices or None, nodes)."""
    search = _Search(M, k, deadline)
    if threads <= 1:
        return search.dfs(search.root(), size), search.nodes
    st = search.root()
    search._tick()
    if not search.propagate(st, size):
        return None, search.nodes
    if (st[1] >= k).all():
        return np.flatnonzero(st[0] == 1), search.nodes
    children = [c[0] for c in search.branches(st, size)]
    nodes = search.nodes
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_run_branch, M, k, size, status, deadline) for status in children]
        results = [f.result() for f in futures]
    found = None
    for res, n in results:
        nodes += n
        if isinstance(res, str):
            raise _BudgetExceeded
        if found is None and res is not None:
            found = res
    return found, nodes


def _greedy_indices(M: np.ndarray, k: int) -> list:
    MT = M.T.astype(np.int32)
    counts = np.zeros(M.shape[0], dtype=np.int32)
    chosen = np.zeros(M.shape[1], dtype=bool)
    picked = []
    while counts.min() < k:
        cur = counts.min()
        deficient = (counts < k).astype(np.int32)
        best, best_score = None, None
        for v in np.flatnonzero(~chosen):
            score = (int((counts + MT[v]).min()) - cur, int(MT[v] @ deficient))
            if best_score is None or score > best_score:
                best, best_score = int(v), score
        if best is None:
            raise NonexistentError(f"no {k}-resolving set exists")
        chosen[best] = True
        counts += MT[best]
        picked.append(best)
    return sorted(picked)


def greedy_upper_bound(grid: GridDims, k: int) -> VertexSet:
    """A k-resolving set built greedily; feasible, not necessarily minimum.

    Each step adds the vertex that most raises the minimum pair coverage,
    then the one removing the most deficit, then the lowest index.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    top = existence_max_k(grid)
    if k > top:
        raise NonexistentError(f"grid {grid} has no {k}-resolving set (strength of V is {top})")
    return VertexSet.from_indices(grid, _greedy_indices(multicover_matrix(grid), k))


def min_k_resolving(grid: GridDims, k: int, opts: SolveOptions | None = None) -> SolveResult:
    """Minimum k-resolving set by cardinality-staged branch-and-bound."""
    opts = opts or SolveOptions()
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if opts.mode == "oracle":
        return oracle_min_k_resolving(grid, k)
    t0 = time.perf_counter()
    deadline = None if opts.time_budget is None else time.monotonic() + opts.time_budget
    n = grid.vertex_count
    result = SolveResult(grid, k, SolveStatus.NONEXISTENT, mode=opts.mode)
    if n < 2:
        result.status, result.set = SolveStatus.OPTIMAL, grid.empty_set()
        return result
    top = existence_max_k(grid)
    if top < k:
        result.proof_size_floor, result.floor_provenance = n, "existence"
        result.elapsed = time.perf_counter() - t0
        return result

    M = multicover_matrix(grid)
    upper = VertexSet.from_indices(grid, _greedy_indices(M, k))
    if opts.mode == "greedy":
        result.status, result.set, result.best_upper = SolveStatus.FEASIBLE, upper, upper
        result.elapsed = time.perf_counter() - t0
        return result

    if opts.bounds == "theory":
        lb, provenance = k_resolving_lower_bound(grid, k), "theory"
    else:
        lb, provenance = max(k, 1), "trivial"
    if opts.start_size_hint is not None and opts.start_size_hint > lb:
        lb, provenance = opts.start_size_hint, "hint"
    if len(upper) < lb:
        raise GridResError(f"greedy found size {len(upper)} below the lower bound {lb} on {grid}, k={k}")
    result.proof_size_floor, result.floor_provenance = lb - 1, provenance
    result.best_upper = upper
    cap = n if opts.max_size is None else min(opts.max_size, n)

    try:
        for size in range(lb, cap + 1):
            if size == len(upper):
                result.status, result.set = SolveStatus.OPTIMAL, upper
                break
            ts = time.perf_counter()
            found, nodes = _stage(M, k, size, deadline, opts.threads)
            result.nodes_explored += nodes
            result.stages.append({"size": size, "feasible": found is not None, "nodes": nodes,
                                  "elapsed_ms": round((time.perf_counter() - ts) * 1e3, 3)})
            log.debug("grid %s k=%d size=%d feasible=%s nodes=%d", grid, k, size, found is not None, nodes)
            if found is not None:
                result.status = SolveStatus.OPTIMAL
                result.set = VertexSet.from_indices(grid, found)
                break
            result.proof_size_floor, result.floor_provenance = size, "search"
        else:
            result.status = SolveStatus.BUDGET_EXCEEDED
    except _BudgetExceeded:
        result.status = SolveStatus.BUDGET_EXCEEDED

    if result.status is SolveStatus.OPTIMAL:
        check = resolving_strength(result.set)
        if check.strength < k:
            raise GridResError(f"solver returned a set of strength {check.strength} < {k}")
    result.elapsed = time.perf_counter() - t0
    return result


def oracle_min_k_resolving(grid: GridDims, k: int, override: bool = False) -> SolveResult:
    """Enumerate all subsets by increasing size in lexicographic index order."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    n = grid.vertex_count
    if n > ORACLE_VERTEX_LIMIT and not override:
        raise ResourceLimitError(
            f"oracle enumeration limited to {ORACLE_VERTEX_LIMIT} vertices, grid {grid} has {n}", required=n)
    t0 = time.perf_counter()
    result = SolveResult(grid, k, SolveStatus.NONEXISTENT, mode="oracle", floor_provenance="search")
    D = grid.distance_matrix
    iu, ju = np.triu_indices(n, k=1)
    for size in range(0, n + 1):
        for subset in itertools.combinations(range(n), size):
            result.nodes_explored += 1
            cols = D[:, list(subset)]
            counts = (cols[iu] != cols[ju]).sum(axis=1)
            if len(counts) == 0 or counts.min() >= k:
                result.status = SolveStatus.OPTIMAL
                result.set = VertexSet.from_indices(grid, subset)
                result.proof_size_floor = size - 1
                result.elapsed = time.perf_counter() - t0
                return result
        result.proof_size_floor = size
    result.elapsed = time.perf_counter() - t0
    return result
