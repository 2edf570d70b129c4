"""Spectral radius with certified brackets, quotient solves, rewiring deltas.

The dense path runs power iteration on A + I (the shift keeps bipartite
graphs from oscillating) and brackets the Perron value with Collatz-
Wielandt bounds: for any positive x, min_i (Mx)_i/x_i <= rho(M) <=
max_i (Mx)_i/x_i.  Disconnected input is solved per component and the
maximizing component carries the eigenvector.

The quotient path never touches an n-vertex matrix: part structures give a
small integer quotient matrix whose characteristic polynomial is computed
exactly, and the largest root is isolated by Sturm-sequence bisection in
rational arithmetic, so its bracket is certified regardless of the
remainder size.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from .graph import Graph, PartitionSpec, components

__all__ = [
    "SpectralResult",
    "RadiusBracket",
    "DEFAULT_TOL",
    "MAX_ITERATIONS",
    "spectral_radius",
    "quotient_radius",
    "equitable_radius",
    "rayleigh_delta",
]

DEFAULT_TOL = 1e-10
MAX_ITERATIONS = 10**6


@dataclass(frozen=True)
class SpectralResult:
    """Certified spectral-radius estimate with Perron vector.

    ``lower <= rho <= upper`` with ``upper - lower <= tol`` on convergence;
    ``x`` has unit Euclidean norm and is entrywise positive on a connected
    graph (on a disconnected graph it is supported on one maximizing
    component); ``z`` is the smallest index attaining the maximum entry.
    The residual obeys ``max_v |(Ax - rho x)_v| <= (upper - lower)`` up to
    float roundoff.
    """

    rho: float
    lower: float
    upper: float
    x: tuple[float, ...]
    z: int
    iterations: int
    converged: bool


@dataclass(frozen=True)
class RadiusBracket:
    """Spectral radius estimate with certified bracket, no eigenvector."""

    rho: float
    lower: float
    upper: float


def _component_radius(adj: np.ndarray, tol: float, max_iterations: int):
    """Power iteration with Collatz-Wielandt brackets on one component.

    Returns (lower, upper, x, iterations, converged) for the adjacency
    matrix ``adj`` of a connected graph.
    """
    k = adj.shape[0]
    if k == 1:
        return 0.0, 0.0, np.ones(1), 0, True
    x = np.full(k, 1.0 / sqrt(k))
    # rho(A + I) is at least 1 and at most max degree + 1.
    best_lo = 1.0
    best_hi = float(adj.sum(axis=1).max()) + 1.0
    iterations = 0
    converged = False
    while iterations < max_iterations:
        y = adj @ x + x
        ratios = y / x
        lo = float(ratios.min())
        hi = float(ratios.max())
        if lo > best_lo:
            best_lo = lo
        if hi < best_hi:
            best_hi = hi
        if best_hi < best_lo:  # roundoff crossing; collapse to a point
            best_hi = best_lo
        x = y / np.linalg.norm(y)
        iterations += 1
        if best_hi - best_lo <= tol:
            converged = True
            break
    return best_lo - 1.0, best_hi - 1.0, x, iterations, converged


def _adjacency_matrix(g: Graph, verts: list[int]) -> np.ndarray:
    index = {v: i for i, v in enumerate(verts)}
    adj = np.zeros((len(verts), len(verts)))
    for v in verts:
        row = g.row(v)
        for u in verts:
            if (row >> u) & 1:
                adj[index[v], index[u]] = 1.0
    return adj


def spectral_radius(
    g: Graph, tol: float = DEFAULT_TOL, max_iterations: int = MAX_ITERATIONS
) -> SpectralResult:
    """Spectral radius of ``g`` with a certified bracket of width <= tol."""
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    best = None  # (rho, lower, upper, verts, x, iterations, converged)
    lower_all = 0.0
    upper_all = 0.0
    total_iterations = 0
    all_converged = True
    for verts in components(g):
        adj = _adjacency_matrix(g, verts)
        lo, hi, x, iterations, converged = _component_radius(
            adj, tol, max_iterations
        )
        total_iterations += iterations
        all_converged = all_converged and converged
        rho_c = (lo + hi) / 2.0
        lower_all = max(lower_all, lo)
        upper_all = max(upper_all, hi)
        if best is None or rho_c > best[0]:
            best = (rho_c, lo, hi, verts, x)
    if not all_converged:
        warnings.warn(
            "power iteration hit the iteration cap; returning best bracket",
            RuntimeWarning,
            stacklevel=2,
        )
    _, _, _, verts, x_comp = best
    x_full = np.zeros(g.n)
    x_full[np.array(verts, dtype=int)] = x_comp
    z = int(np.argmax(x_full))
    rho = (lower_all + upper_all) / 2.0
    return SpectralResult(
        rho=rho,
        lower=lower_all,
        upper=upper_all,
        x=tuple(float(v) for v in x_full),
        z=z,
        iterations=total_iterations,
        converged=all_converged,
    )


# ---------------------------------------------------------------------------
# Exact quotient solves
# ---------------------------------------------------------------------------


def _char_poly(matrix: list[list[int]]) -> list[int]:
    """Characteristic polynomial of an integer matrix, highest degree first.

    Faddeev-LeVerrier recursion; all divisions are exact over the integers.
    """
    d = len(matrix)
    coeffs = [1]
    work = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for step in range(1, d + 1):
        work = [
            [sum(matrix[i][t] * work[t][j] for t in range(d)) for j in range(d)]
            for i in range(d)
        ]
        trace = sum(work[i][i] for i in range(d))
        c = -trace // step
        assert c * step == -trace
        for i in range(d):
            work[i][i] += c
        coeffs.append(c)
    return coeffs


def _poly_eval(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _poly_derivative(coeffs):
    d = len(coeffs) - 1
    return [c * (d - i) for i, c in enumerate(coeffs[:-1])]


def _poly_divmod(num, den):
    num = list(num)
    d_num, d_den = len(num) - 1, len(den) - 1
    if d_num < d_den:
        return [], num
    quot = [Fraction(0)] * (d_num - d_den + 1)
    lead = Fraction(den[0])
    for i in range(d_num - d_den + 1):
        q = Fraction(num[i]) / lead
        quot[i] = q
        for j, c in enumerate(den):
            num[i + j] = Fraction(num[i + j]) - q * c
    rem = num[d_num - d_den + 1 :]
    while rem and rem[0] == 0:
        rem.pop(0)
    return quot, rem


def _sturm_chain(coeffs):
    chain = [[Fraction(c) for c in coeffs]]
    deriv = _poly_derivative(coeffs)
    if deriv:
        chain.append([Fraction(c) for c in deriv])
    while len(chain[-1]) > 1:
        _, rem = _poly_divmod(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for poly in chain:
        val = _poly_eval(poly, x)
        if val > 0:
            signs.append(1)
        elif val < 0:
            signs.append(-1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _noninteger(value: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    """Nudge a bisection point off the integers, staying inside (lo, hi).

    The characteristic polynomial is monic with integer coefficients, so
    every rational root is an integer; a non-integer evaluation point can
    therefore never be a root and Sturm counts stay well defined.
    """
    if value.denominator != 1:
        return value
    step = (hi - lo) / 4
    while (value + step).denominator == 1:
        step /= 2
    return value + step


def _largest_root(coeffs: list[int], hi_bound: int, tol: float) -> RadiusBracket:
    """Bracket the largest real root of a monic integer polynomial."""
    chain = _sturm_chain(coeffs)
    lo = Fraction(-1, 2)
    hi = Fraction(hi_bound) + Fraction(1, 2)
    var_hi = _sign_variations(chain, hi)
    if _sign_variations(chain, lo) - var_hi < 1:
        raise ValueError("no real root above the lower bound")
    tol_f = Fraction(tol)
    while hi - lo > tol_f:
        mid = _noninteger((lo + hi) / 2, lo, hi)
        if _sign_variations(chain, mid) - _sign_variations(chain, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return RadiusBracket(
        rho=float((lo + hi) / 2), lower=float(lo), upper=float(hi)
    )


def _integer_matrix_radius(
    matrix: list[list[int]], hi_bound: int, tol: float
) -> RadiusBracket:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    return _largest_root(_char_poly(matrix), hi_bound, tol)


def quotient_radius(spec: PartitionSpec, tol: float = DEFAULT_TOL) -> RadiusBracket:
    """Spectral radius of ``spec.realize()`` via its class quotient matrix.

    The classes of a complete multipartite graph form an equitable
    partition, so the (small) quotient matrix shares the Perron value with
    the full graph; the cost is independent of the remainder size.
    """
    sizes = spec.block_sizes()
    if not sizes:
        raise ValueError("partition has no parts and zero remainder")
    d = len(sizes)
    matrix = [
        [0 if i == j else sizes[j] for j in range(d)] for i in range(d)
    ]
    return _integer_matrix_radius(matrix, sum(sizes), tol)


def _equitable_partition(g: Graph) -> list[list[int]]:
    """Coarsest equitable partition by iterated neighbor-color refinement."""
    colors = [0] * g.n
    while True:
        signatures = []
        for v in range(g.n):
            neigh = tuple(sorted(colors[u] for u in g.neighbors(v)))
            signatures.append((colors[v], neigh))
        mapping: dict[tuple, int] = {}
        new_colors = []
        for sig in signatures:
            if sig not in mapping:
                mapping[sig] = len(mapping)
            new_colors.append(mapping[sig])
        if new_colors == colors:
            break
        colors = new_colors
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


def equitable_radius(g: Graph, tol: float = DEFAULT_TOL) -> RadiusBracket:
    """Spectral radius via the coarsest equitable partition of ``g``.

    Covers join constructions that are not complete multipartite (such as
    a clique joined to one edge plus an independent set).  Intended for
    graphs whose refinement stabilizes on few classes; the quotient solve
    is exact either way.
    """
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    classes = _equitable_partition(g)
    index = {}
    for i, cls in enumerate(classes):
        for v in cls:
            index[v] = i
    d = len(classes)
    matrix = [[0] * d for _ in range(d)]
    for i, cls in enumerate(classes):
        rep = cls[0]
        for u in g.neighbors(rep):
            matrix[i][index[u]] += 1
    # Refinement guarantees equitability; verify on every vertex anyway.
    for i, cls in enumerate(classes):
        for v in cls:
            counts = [0] * d
            for u in g.neighbors(v):
                counts[index[u]] += 1
            assert counts == matrix[i], "partition is not equitable"
    return _integer_matrix_radius(matrix, g.n, tol)


def rayleigh_delta(
    g: Graph,
    x,
    removed,
    added,
) -> float:
    """Rayleigh-quotient change of rewiring G with Perron vector x.

    Returns ``2*sum_added x_u x_v - 2*sum_removed x_u x_v``.  When x is the
    Perron vector of G, a strictly positive value certifies that the
    rewired graph has strictly larger spectral radius.
    """
    if len(x) != g.n:
        raise ValueError("vector length must match the vertex count")

    def _normalize(pairs, name):
        out = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"{name} contains a loop ({u}, {v})")
            if not (0 <= u < g.n and 0 <= v < g.n):
                raise ValueError(f"{name} pair ({u}, {v}) outside vertex range")
            out.add((min(u, v), max(u, v)))
        return out

    rem = _normalize(removed, "removed")
    add = _normalize(added, "added")
    if rem & add:
        raise ValueError("removed and added edge sets overlap")
    for u, v in rem:
        if not g.adjacent(u, v):
            raise ValueError(f"removed pair ({u}, {v}) is not an edge")
    for u, v in add:
        if g.adjacent(u, v):
            raise ValueError(f"added pair ({u}, {v}) is already an edge")
    gain = sum(x[u] * x[v] for u, v in add)
    loss = sum(x[u] * x[v] for u, v in rem)
    return 2.0 * (gain - loss)
