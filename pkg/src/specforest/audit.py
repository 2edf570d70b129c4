"""Structure-set extraction and counting-identity diagnostics.

From the Perron vector of a graph, three nested threshold sets are read
off (strict thresholds alpha and 4*alpha, non-strict 1/(2(h+1)), all
relative to the maximum entry), plus the set of vertices adjacent to all
of the innermost set.  Each associated size/degree inequality is evaluated
and reported with its margin.  These inequalities are proved only for
spectral-extremal graphs of astronomically large order, so here they are
diagnostics: a failing margin on a small graph is expected and
informative, never an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .forbidden import ForbiddenFamily
from .graph import Graph, is_connected
from .spectral import DEFAULT_TOL, spectral_radius

__all__ = [
    "LemmaCheck",
    "StructureReport",
    "structure_sets",
    "pair_edge_count",
    "intersection_lower_bound",
]


@dataclass(frozen=True)
class LemmaCheck:
    """One diagnostic inequality: positive margin means it holds (for the
    exact-size check the margin is the signed deviation)."""

    check: str
    statement: str
    holds: bool
    margin: float


@dataclass(frozen=True)
class StructureReport:
    """Threshold vertex sets of the Perron vector with degree diagnostics.

    The diagnostics are valid statements only under the huge-order
    hypothesis of the underlying theory; on desk-scale graphs they simply
    describe how far the graph is from that regime.
    """

    k: int
    s: int
    h: int
    alpha: float
    rho: float
    z: int
    connected: bool
    ratios: tuple[float, ...]
    r_prime: tuple[int, ...]
    r_double_prime: tuple[int, ...]
    r: tuple[int, ...]
    w: tuple[int, ...]
    degree_margins: tuple[LemmaCheck, ...]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "s": self.s,
            "h": self.h,
            "alpha": self.alpha,
            "rho": self.rho,
            "z": self.z,
            "connected": self.connected,
            "ratios": list(self.ratios),
            "r_prime": list(self.r_prime),
            "r_double_prime": list(self.r_double_prime),
            "r": list(self.r),
            "w": list(self.w),
            "degree_margins": [
                {
                    "check": c.check,
                    "statement": c.statement,
                    "holds": c.holds,
                    "margin": c.margin,
                }
                for c in self.degree_margins
            ],
            "note": (
                "degree and size checks are diagnostics; they are expected "
                "to hold only for spectral-extremal graphs of very large order"
            ),
        }


def structure_sets(
    g: Graph, fam: ForbiddenFamily, tol: float = DEFAULT_TOL
) -> StructureReport:
    """Extract the threshold sets and evaluate the diagnostic inequalities.

    On a disconnected graph the Perron vector is supported on one
    maximizing component and the report is flagged ``connected=False``.
    """
    res = spectral_radius(g, tol)
    n = g.n
    h = fam.h
    alpha = fam.alpha
    x = res.x
    xz = x[res.z]
    ratios = tuple(val / xz for val in x)

    r_prime = tuple(v for v in range(n) if ratios[v] > alpha)
    r_double = tuple(v for v in range(n) if ratios[v] > 4 * alpha)
    r_thresh = 1.0 / (2 * (h + 1))
    r_set = tuple(v for v in range(n) if ratios[v] >= r_thresh)
    r_mask = 0
    for v in r_set:
        r_mask |= 1 << v
    w_set = tuple(v for v in range(n) if g.row(v) & r_mask == r_mask)

    checks = []

    size_bound = 2.0 * math.sqrt(h * n)
    checks.append(
        LemmaCheck(
            check="rprime-size",
            statement="|R'| <= 2*sqrt(h*n)",
            holds=len(r_prime) <= size_bound,
            margin=size_bound - len(r_prime),
        )
    )

    floor_deg = alpha * n / 3.0
    margin = min(
        (g.degree(v) - floor_deg for v in r_double), default=math.inf
    )
    checks.append(
        LemmaCheck(
            check="rdouble-min-degree",
            statement="every vertex of R'' has degree > alpha*n/3",
            holds=margin > 0,
            margin=margin,
        )
    )

    size_bound = 3.0 * (h + 1) / alpha
    checks.append(
        LemmaCheck(
            check="rdouble-size",
            statement="|R''| < 3*(h+1)/alpha",
            holds=len(r_double) < size_bound,
            margin=size_bound - len(r_double),
        )
    )

    slack = 1.0 / (6 * (h + 1))
    margin = min(
        (g.degree(v) - (ratios[v] - slack) * n for v in r_set),
        default=math.inf,
    )
    checks.append(
        LemmaCheck(
            check="ratio-degree",
            statement=(
                "every vertex with ratio m >= 1/(2(h+1)) has degree "
                "> (m - 1/(6(h+1)))*n"
            ),
            holds=margin > 0,
            margin=margin,
        )
    )

    floor_deg = (1.0 - 5.0 / (6 * (h + 1))) * n
    margin = min((g.degree(v) - floor_deg for v in r_set), default=math.inf)
    checks.append(
        LemmaCheck(
            check="r-min-degree",
            statement="every vertex of R has degree > (1 - 5/(6(h+1)))*n",
            holds=margin > 0,
            margin=margin,
        )
    )

    checks.append(
        LemmaCheck(
            check="r-size",
            statement="|R| == h",
            holds=len(r_set) == h,
            margin=float(len(r_set) - h),
        )
    )

    return StructureReport(
        k=fam.k,
        s=fam.s,
        h=h,
        alpha=alpha,
        rho=res.rho,
        z=res.z,
        connected=is_connected(g),
        ratios=ratios,
        r_prime=r_prime,
        r_double_prime=r_double,
        r=r_set,
        w=w_set,
        degree_margins=tuple(checks),
    )


def pair_edge_count(g: Graph, a, b) -> int:
    """Edges counted from A into B; an edge inside the intersection counts
    twice (once from each endpoint)."""
    a_set = set(a)
    b_set = set(b)
    for v in a_set | b_set:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside range")
    b_mask = 0
    for v in b_set:
        b_mask |= 1 << v
    return sum((g.row(v) & b_mask).bit_count() for v in a_set)


def intersection_lower_bound(sets) -> tuple[int, int]:
    """Inclusion-style bound for the common intersection of finite sets.

    Returns ``(bound, actual)`` where bound = sum of sizes minus
    (count - 1) times the union size; actual >= bound always.
    """
    sets = [set(s) for s in sets]
    if not sets:
        raise ValueError("need at least one set")
    total = sum(len(s) for s in sets)
    union = set().union(*sets)
    bound = total - (len(sets) - 1) * len(union)
    common = sets[0]
    for s in sets[1:]:
        common = common & s
    return bound, len(common)
