"""Extremal candidate constructions and the linear-forest Turán number.

The candidate dispatcher covers four parameter regimes split by the parity
of s against thresholds in k, plus the degenerate s = 2 case (one edge and
isolated vertices).  Every candidate documents its vertex layout: hub block
first, then any pendant edge pair, independent block last.

The Turán number for forbidding all s-edge linear forests is the larger of
a clique term C(s, 2) and a hub term C(n, 2) - C(n - h, 2) + c with
h = floor((s - 1) / 2); the parity constant c is 1 exactly when s is even
(the extremal hub graph then carries one extra edge inside the independent
part).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import (
    Graph,
    PartitionSpec,
    complete_graph,
    empty_graph,
    join,
    path_graph,
    turan,
    turan_part_sizes,
    union,
)

__all__ = [
    "CandidateResult",
    "TuranNumberBreakdown",
    "extremal_candidate",
    "matching_candidate",
    "linear_forest_turan_number",
    "edge_upper_bound_check",
]


@dataclass(frozen=True)
class CandidateResult:
    """A candidate graph, its parameter-case tag, and, when the graph is
    complete multipartite, the part structure usable for quotient solves."""

    graph: Graph
    case: str
    partition: PartitionSpec | None


def extremal_candidate(n: int, k: int, s: int) -> CandidateResult:
    """Conjectured spectral-extremal graph for the clique/linear-forest family.

    Cases (exactly one fires for each valid parity):
      s = 2                ->  one edge plus isolated vertices
      s odd,  s <= 2k-1    ->  K_{(s-1)/2} joined to an independent set
      s odd,  s >= 2k+1    ->  balanced (k-1)-partite hub joined likewise
      s even, s <= 2k-2    ->  K_{s/2-1} joined to (one edge + independents)
      s even, s >= 2k      ->  balanced (k-1)-partite hub joined likewise
    """
    if k < 2:
        raise ValueError("clique parameter k must be at least 2")
    if s < 2:
        raise ValueError("edge parameter s must be at least 2")
    if n < s + 2:
        raise ValueError("order must be at least s + 2")
    if s == 2:
        graph = union(path_graph(2), empty_graph(n - 2))
        return CandidateResult(graph, "s=2", None)
    if s % 2 == 1:
        a = (s - 1) // 2
        if s <= 2 * k - 1:
            graph = join(complete_graph(a), empty_graph(n - a))
            spec = PartitionSpec((1,) * a, n - a)
            return CandidateResult(graph, "odd,s<=2k-1", spec)
        if s >= 2 * k + 1:
            graph = join(turan(a, k - 1), empty_graph(n - a))
            spec = PartitionSpec(turan_part_sizes(a, k - 1), n - a)
            return CandidateResult(graph, "odd,s>=2k+1", spec)
    else:
        a = s // 2 - 1
        if s <= 2 * k - 2:
            rest = union(path_graph(2), empty_graph(n - a - 2))
            graph = join(complete_graph(a), rest)
            return CandidateResult(graph, "even,s<=2k-2", None)
        if s >= 2 * k:
            graph = join(turan(a, k - 1), empty_graph(n - a))
            spec = PartitionSpec(turan_part_sizes(a, k - 1), n - a)
            return CandidateResult(graph, "even,s>=2k", spec)
    raise AssertionError("case dispatch must be exhaustive")


def matching_candidate(n: int, k: int, s: int) -> CandidateResult:
    """Extremal graph for the clique/matching family: a balanced
    (k-1)-partite hub on s vertices joined to an independent set."""
    if k < 2:
        raise ValueError("clique parameter k must be at least 2")
    if s < 1:
        raise ValueError("matching parameter s must be at least 1")
    if n < 4 * s * s + 9 * s:
        raise ValueError("order must be at least 4*s^2 + 9*s")
    graph = join(turan(s, k - 1), empty_graph(n - s))
    spec = PartitionSpec(turan_part_sizes(s, k - 1), n - s)
    return CandidateResult(graph, "matching", spec)


@dataclass(frozen=True)
class TuranNumberBreakdown:
    """Maximum edge count among graphs with no s-edge linear forest."""

    clique_term: int
    star_term: int
    parity_constant: int
    value: int
    extremal_shape: str


def linear_forest_turan_number(n: int, s: int) -> TuranNumberBreakdown:
    """Evaluate the closed-form Turán number with its parity constant."""
    if s < 1:
        raise ValueError("edge parameter s must be at least 1")
    if s > n - 1:
        raise ValueError("edge parameter s must be at most n - 1")
    h = (s - 1) // 2
    c = 1 if s % 2 == 0 else 0
    clique_term = comb(s, 2)
    star_term = comb(n, 2) - comb(n - h, 2) + c
    value = max(clique_term, star_term)
    if clique_term > star_term:
        shape = "clique-plus-isolated"
    elif s % 2 == 0:
        shape = "hub-join-plus-edge"
    else:
        shape = "hub-join"
    return TuranNumberBreakdown(
        clique_term=clique_term,
        star_term=star_term,
        parity_constant=c,
        value=value,
        extremal_shape=shape,
    )


def edge_upper_bound_check(n: int, s: int) -> bool:
    """True when the Turán number is at most h*n (large-n regime only).

    Requires n >= s + 2: for even s at n = s + 1 the clique term alone
    exceeds h*n, which is why the bound is stated for larger orders.
    """
    if s < 3:
        raise ValueError("edge parameter s must be at least 3")
    if s > n - 1 or n < s + 2:
        raise ValueError("order must satisfy s + 2 <= n and s <= n - 1")
    h = (s - 1) // 2
    return linear_forest_turan_number(n, s).value <= h * n
