"""Brute-force enumeration, candidate comparison, and local-search ascent.

Enumeration is vertex-incremental: a graph on m+1 vertices extends a graph
on m vertices by one adjacency mask, and because freeness is closed under
taking induced subgraphs, any non-free prefix prunes its whole subtree.
Brute force compares the true spectral optimum against the constructed
candidate and reports all maximizers up to isomorphism (canonical form =
minimum adjacency bit string over all vertex permutations, viable at the
default cap of eight vertices).

Ascent moves are the neighborhood-copy rewiring (all edges at u replaced by
edges from u to N(v)) and plain edge additions, ranked by their Rayleigh
delta and validated by a fresh certified eigen-solve plus a freeness
recheck, since copying a neighborhood can create a long linear forest even
though it never grows cliques.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from math import sqrt

from .constructions import extremal_candidate, linear_forest_turan_number, matching_candidate
from .forbidden import ForbiddenFamily, is_free
from .graph import Graph, PartitionSpec, is_connected
from .graph6 import g6_encode
from .spectral import DEFAULT_TOL, SpectralResult, rayleigh_delta, spectral_radius

__all__ = [
    "SearchReport",
    "RHO_TIE_TOL",
    "enumerate_free_graphs",
    "brute_force_extremal",
    "canonical_form",
    "canonical_g6",
    "zykov_step",
    "zykov_climb",
    "balance_step",
    "BalanceResult",
]

RHO_TIE_TOL = 1e-9
DEFAULT_ENUMERATION_CAP = 8


@dataclass(frozen=True)
class SearchReport:
    """Outcome of exhaustive search over all free graphs of one order."""

    n: int
    k: int
    s: int
    include_matching: bool
    count_free: int
    count_free_iso: int | None
    best_rho: float
    argmax: tuple[str, ...]
    candidate_rho: float | None
    verdict: str
    workers: int
    wall_time: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "s": self.s,
            "include_matching": self.include_matching,
            "count_free": self.count_free,
            "count_free_iso": self.count_free_iso,
            "best_rho": self.best_rho,
            "argmax": list(self.argmax),
            "candidate_rho": self.candidate_rho,
            "verdict": self.verdict,
            "workers": self.workers,
            "wall_time": self.wall_time,
        }


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------


def _bit_key(g: Graph) -> int:
    """Upper-triangle bits packed column-major, as one integer."""
    key = 0
    for col in range(1, g.n):
        for row in range(col):
            key = (key << 1) | (1 if g.adjacent(row, col) else 0)
    return key


def canonical_form(g: Graph) -> Graph:
    """Lexicographically minimal relabeling over all vertex permutations."""
    n = g.n
    if n <= 1:
        return g
    rows = g.rows()
    best_key = None
    best_perm = None
    for perm in permutations(range(n)):
        key = 0
        for col in range(1, n):
            pc = perm[col]
            for row in range(col):
                key = (key << 1) | ((rows[pc] >> perm[row]) & 1)
        if best_key is None or key < best_key:
            best_key = key
            best_perm = perm
    # best_perm maps new index -> old vertex; invert for relabel().
    inverse = [0] * n
    for new, old in enumerate(best_perm):
        inverse[old] = new
    new_rows = [0] * n
    for v in range(n):
        row = 0
        mask = rows[v]
        while mask:
            low = mask & -mask
            row |= 1 << inverse[low.bit_length() - 1]
            mask ^= low
        new_rows[inverse[v]] = row
    return Graph._from_rows(n, tuple(new_rows))


def canonical_g6(g: Graph) -> str:
    return g6_encode(canonical_form(g))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _edge_budget(fam: ForbiddenFamily, order: int) -> int | None:
    """Maximum edge count any free graph of this order can have."""
    if fam.include_matching or order <= fam.s:
        return None
    return linear_forest_turan_number(order, fam.s).value


def _extend(rows: list[int], edge_count: int, n: int, fam: ForbiddenFamily, budgets):
    m = len(rows)
    if m == n:
        yield Graph._from_rows(n, tuple(rows))
        return
    budget = budgets[m + 1]
    for mask in range(1 << m):
        added = mask.bit_count()
        if budget is not None and edge_count + added > budget:
            continue
        child = [r | (1 << m) if (mask >> i) & 1 else r for i, r in enumerate(rows)]
        child.append(mask)
        g = Graph._from_rows(m + 1, tuple(child))
        if is_free(g, fam):
            yield from _extend(child, edge_count + added, n, fam, budgets)


def enumerate_free_graphs(
    n: int,
    fam: ForbiddenFamily,
    cap: int = DEFAULT_ENUMERATION_CAP,
    up_to_iso: bool = False,
):
    """Yield every labeled free graph on n vertices (canonical
    representatives only when ``up_to_iso`` is set)."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > cap:
        raise ValueError(f"order {n} exceeds the enumeration cap {cap}")
    budgets = [_edge_budget(fam, m) for m in range(n + 1)]
    for g in _extend([0], 0, n, fam, budgets):
        if up_to_iso and _bit_key(canonical_form(g)) != _bit_key(g):
            continue
        yield g


# ---------------------------------------------------------------------------
# Brute force
# ---------------------------------------------------------------------------


def _rho_upper_bound(g: Graph) -> float:
    """Cheap upper bound: rho <= max degree and rho^2 <= 2m."""
    m = g.edge_count
    if m == 0:
        return 0.0
    max_deg = max(g.degree(v) for v in range(g.n))
    return min(float(max_deg), sqrt(2.0 * m))

def _scan_prefixes(args):
    """Continue enumeration from given prefixes; reduce to branch maxima."""
    n, k, s, include_matching, prefixes, floor, tol = args
    fam = ForbiddenFamily(k, s, include_matching)
    budgets = [_edge_budget(fam, m) for m in range(n + 1)]
    count = 0
    best = float("-inf")
    ties: list[tuple[float, Graph]] = []
    for rows in prefixes:
        edge_count = sum(r.bit_count() for r in rows) // 2
        for g in _extend(list(rows), edge_count, n, fam, budgets):
            count += 1
            if _rho_upper_bound(g) < max(best, floor) - RHO_TIE_TOL:
                continue
            rho = spectral_radius(g, tol).rho
            if rho > best:
                best = rho
            if rho >= best - RHO_TIE_TOL:
                ties.append((rho, g))
                ties = [t for t in ties if t[0] >= best - RHO_TIE_TOL]
    return count, best, ties


def _free_prefixes(n: int, depth: int, fam: ForbiddenFamily):
    """All free graphs on ``depth`` vertices as row tuples."""
    budgets = [_edge_budget(fam, m) for m in range(depth + 1)]
    return [tuple(g.rows()) for g in _extend([0], 0, depth, fam, budgets)]


def brute_force_extremal(
    n: int,
    fam: ForbiddenFamily,
    workers: int = 1,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_ENUMERATION_CAP,
    count_iso: bool = False,
) -> SearchReport:
    """Exhaustively find the spectral maximizers among free graphs.

    The argmax set is complete up to isomorphism (graphs within 1e-9 of the
    best value are co-reported) and the outcome is deterministic across
    worker counts: branches only exchange their maxima and the reduction
    breaks ties by canonical string.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > cap:
        raise ValueError(f"order {n} exceeds the enumeration cap {cap}")
    t0 = time.perf_counter()
    candidate_rho = None
    candidate_graph = None
    try:
        if fam.include_matching:
            candidate_graph = matching_candidate(n, fam.k, fam.s).graph
        else:
            candidate_graph = extremal_candidate(n, fam.k, fam.s).graph
    except ValueError:
        candidate_graph = None
    if candidate_graph is not None:
        candidate_rho = spectral_radius(candidate_graph, tol).rho
    floor = candidate_rho if candidate_rho is not None else float("-inf")

    depth = min(3, n)
    prefixes = _free_prefixes(n, depth, fam)
    jobs = [(n, fam.k, fam.s, fam.include_matching, prefixes, floor, tol)]
    if workers > 1 and len(prefixes) > 1:
        buckets = [prefixes[i::workers] for i in range(workers)]
        buckets = [b for b in buckets if b]
        jobs = [
            (n, fam.k, fam.s, fam.include_matching, b, floor, tol)
            for b in buckets
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_prefixes, jobs))
    else:
        results = [_scan_prefixes(jobs[0])]

    count_free = sum(r[0] for r in results)
    best_rho = max(r[1] for r in results)
    survivors = [
        (rho, g)
        for _, _, ties in results
        for rho, g in ties
        if rho >= best_rho - RHO_TIE_TOL
    ]
    argmax = tuple(sorted({canonical_g6(g) for _, g in survivors}))

    if candidate_rho is None:
        verdict = "no-candidate"
    elif candidate_rho < best_rho - RHO_TIE_TOL:
        verdict = "candidate-suboptimal"
    elif argmax == (canonical_g6(candidate_graph),):
        verdict = "matches"
    else:
        verdict = "candidate-optimal-tied"

    count_free_iso = None
    if count_iso:
        count_free_iso = sum(
            1 for _ in enumerate_free_graphs(n, fam, cap=cap, up_to_iso=True)
        )

    return SearchReport(
        n=n,
        k=fam.k,
        s=fam.s,
        include_matching=fam.include_matching,
        count_free=count_free,
        count_free_iso=count_free_iso,
        best_rho=best_rho,
        argmax=argmax,
        candidate_rho=candidate_rho,
        verdict=verdict,
        workers=max(1, workers),
        wall_time=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# Local-search moves
# ---------------------------------------------------------------------------


def zykov_step(g: Graph, u: int, v: int, x) -> Graph:
    """Replace u's neighborhood by v's: delete all edges at u, then join u
    to N(v).  Requires u, v distinct, non-adjacent, with different
    neighborhoods, and the Perron mass of N(v) at least that of N(u); under
    those conditions on a connected graph the spectral radius strictly
    increases and the clique number never does."""
    if u == v:
        raise ValueError("vertices must be distinct")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex outside range")
    if g.adjacent(u, v):
        raise ValueError("vertices must be non-adjacent")
    if g.row(u) == g.row(v):
        raise ValueError("vertices must have different neighborhoods")
    if len(x) != g.n:
        raise ValueError("vector length must match the vertex count")
    mass_u = sum(x[w] for w in g.neighbors(u))
    mass_v = sum(x[w] for w in g.neighbors(v))
    if mass_v < mass_u:
        raise ValueError(
            "Perron mass of N(v) must be at least that of N(u); swap u and v"
        )
    rows = list(g.rows())
    bit_u = 1 << u
    for w in g.neighbors(u):
        rows[w] &= ~bit_u
    for w in g.neighbors(v):
        rows[w] |= bit_u
    rows[u] = g.row(v)
    return Graph._from_rows(g.n, tuple(rows))


def _climb_moves(g: Graph, res: SpectralResult):
    """Candidate moves ranked by Rayleigh delta, best first."""
    x = res.x
    moves = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not g.adjacent(a, b):
                moves.append((2.0 * x[a] * x[b], "add-edge", a, b))
    for u in range(g.n):
        mass_u = sum(x[w] for w in g.neighbors(u))
        for v in range(g.n):
            if v == u or g.adjacent(u, v) or g.row(u) == g.row(v):
                continue
            mass_v = sum(x[w] for w in g.neighbors(v))
            if mass_v < mass_u:
                continue
            delta = rayleigh_delta(
                g,
                x,
                removed=[(u, w) for w in g.neighbors(u) if not g.adjacent(v, w) and w != v],
                added=[(u, w) for w in g.neighbors(v) if not g.adjacent(u, w)],
            )
            moves.append((delta, "rewire", u, v))
    moves.sort(key=lambda t: (-t[0], t[1], t[2], t[3]))
    return moves


def zykov_climb(
    g: Graph, fam: ForbiddenFamily, tol: float = DEFAULT_TOL
) -> tuple[Graph, list[dict]]:
    """Greedy certified ascent through freeness-preserving moves.

    Repeatedly applies the best move (neighborhood rewiring or edge
    addition) whose result still passes the freeness check and whose new
    spectral bracket certifies a strict increase; returns the final graph
    and the applied-move trace.  A graph with no admissible improving move
    is returned unchanged.
    """
    if not is_free(g, fam):
        raise ValueError("start graph must be free for the family")
    trace: list[dict] = []
    res = spectral_radius(g, tol)
    while True:
        applied = False
        for delta, kind, a, b in _climb_moves(g, res):
            if delta < 0.0:
                continue
            if kind == "add-edge":
                rows = list(g.rows())
                rows[a] |= 1 << b
                rows[b] |= 1 << a
                nxt = Graph._from_rows(g.n, tuple(rows))
            else:
                nxt = zykov_step(g, a, b, res.x)
            if not is_free(nxt, fam):
                continue
            nxt_res = spectral_radius(nxt, tol)
            if nxt_res.lower > res.upper:
                trace.append(
                    {
                        "move": kind,
                        "u": a,
                        "v": b,
                        "rho_before": res.rho,
                        "rho_after": nxt_res.rho,
                    }
                )
                g = nxt
                res = nxt_res
                applied = True
                break
        if not applied:
            return g, trace


@dataclass(frozen=True)
class BalanceResult:
    spec: PartitionSpec
    changed: bool


def balance_step(spec: PartitionSpec) -> BalanceResult:
    """Move one unit from a largest part to a smallest part.

    Applies only when some pair of parts differs by at least two; the
    realized graph's spectral radius then strictly increases.  An already
    balanced spec is returned unchanged with ``changed=False``.
    """
    parts = spec.parts
    if len(parts) < 2:
        return BalanceResult(spec, False)
    hi = max(range(len(parts)), key=lambda i: (parts[i], -i))
    lo = min(range(len(parts)), key=lambda i: (parts[i], i))
    if parts[hi] - parts[lo] < 2:
        return BalanceResult(spec, False)
    new_parts = list(parts)
    new_parts[hi] -= 1
    new_parts[lo] += 1
    return BalanceResult(PartitionSpec(tuple(new_parts), spec.remainder), True)
