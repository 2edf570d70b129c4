"""Exact detection of forbidden structures: cliques, linear forests, matchings.

All three solvers are exact.  Cliques use branch and bound with a greedy
coloring bound.  Linear forests (max-degree-2 acyclic subgraphs) and
matchings share one edge-wise branch and bound whose upper bound combines
remaining-degree capacity with a greedy vertex-cover capacity count; a twin
reduction first collapses large independent classes of vertices with equal
neighborhoods, since any degree-capped subgraph can touch only
``cap * |N(class)|`` of them.  That keeps the join constructions (a small
hub joined to a huge independent set) exactly solvable.

The problems generalize Hamiltonian path, so everything here is meant for
the small or highly structured graphs this toolkit works with.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, induced_subgraph

__all__ = [
    "ForbiddenFamily",
    "FreenessWitness",
    "FreenessResult",
    "clique_number",
    "contains_clique",
    "max_clique",
    "find_clique",
    "max_linear_forest",
    "linear_forest_witness",
    "find_linear_forest",
    "max_matching",
    "matching_witness",
    "find_matching",
    "is_free",
]


@dataclass(frozen=True)
class ForbiddenFamily:
    """Parameters of the forbidden family: cliques on k+1 vertices plus
    either all linear forests with s edges or, when ``include_matching`` is
    set, the matching with s+1 edges instead.

    ``h`` and ``alpha`` are the derived structure-set parameters; they are
    always recomputed from ``s``.
    """

    k: int
    s: int
    include_matching: bool = False

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("clique parameter k must be at least 2")
        if self.s < 2:
            raise ValueError("edge parameter s must be at least 2")

    @property
    def h(self) -> int:
        return (self.s - 1) // 2

    @property
    def alpha(self) -> float:
        return 1.0 / (36 * (self.h + 1) ** 3)

    @property
    def m_size(self) -> int:
        """Forbidden matching size in the matching regime."""
        return self.s + 1


@dataclass(frozen=True)
class FreenessWitness:
    """Concrete forbidden structure: a clique vertex set, a linear-forest
    edge set, or a matching edge set."""

    kind: str
    vertices: tuple[int, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class FreenessResult:
    free: bool
    witness: FreenessWitness | None = None

    def __bool__(self) -> bool:
        return self.free


# ---------------------------------------------------------------------------
# Maximum clique
# ---------------------------------------------------------------------------


def _color_order(p_mask: int, rows) -> list[tuple[int, int]]:
    """Greedy coloring of the candidate set; returns (vertex, color) pairs
    in ascending color order.  The color is an upper bound on the largest
    clique inside the candidates containing that vertex."""
    order = []
    remaining = p_mask
    color = 0
    while remaining:
        color += 1
        avail = remaining
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append((v, color))
            avail &= ~rows[v]
            avail ^= low
            remaining ^= low
    return order


def _clique_search(g: Graph, stop_at: int | None) -> list[int]:
    rows = g.rows()
    best: list[int] = []
    done = False

    def expand(stack: list[int], p_mask: int):
        nonlocal best, done
        order = _color_order(p_mask, rows)
        for v, bound in reversed(order):
            if done:
                return
            if len(stack) + bound <= len(best):
                return
            stack.append(v)
            new_p = p_mask & rows[v]
            if new_p:
                expand(stack, new_p)
            elif len(stack) > len(best):
                best = stack.copy()
                if stop_at is not None and len(best) >= stop_at:
                    done = True
            stack.pop()
            p_mask &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    return best


def max_clique(g: Graph) -> tuple[int, ...]:
    """Vertex set of one maximum clique (empty for the null graph)."""
    return tuple(sorted(_clique_search(g, None)))


def clique_number(g: Graph) -> int:
    return len(_clique_search(g, None))


def find_clique(g: Graph, q: int) -> tuple[int, ...] | None:
    """A clique on exactly q vertices, or None if the clique number is < q."""
    if q < 1:
        raise ValueError("clique size must be at least 1")
    if q > g.n:
        return None
    best = _clique_search(g, q)
    if len(best) < q:
        return None
    return tuple(sorted(best[:q]))


def contains_clique(g: Graph, q: int) -> bool:
    return find_clique(g, q) is not None


# ---------------------------------------------------------------------------
# Degree-capped acyclic subgraphs (linear forests and matchings)
# ---------------------------------------------------------------------------


def _twin_classes(g: Graph) -> list[list[int]]:
    """Group vertices by identical open neighborhoods.

    Equal rows force non-adjacency (a shared bit at either vertex would be
    a loop), so every class is an independent set of interchangeable twins.
    """
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.row(v), []).append(v)
    return list(groups.values())


def _twin_reduce(g: Graph, cap: int) -> list[int]:
    """Vertices to keep so the maximum degree-``cap`` acyclic subgraph is
    preserved: a class with common neighborhood S can meet at most
    cap*|S| subgraph edges, hence at most cap*|S| of its members."""
    keep = []
    for cls in _twin_classes(g):
        mask = g.row(cls[0])
        if mask == 0:
            continue  # isolated vertices carry no edges
        limit = cap * mask.bit_count()
        keep.extend(cls[: min(len(cls), limit)])
    keep.sort()
    return keep


class _UnionFind:
    """Union-find with undo, no path compression (rollback stays O(1))."""

    __slots__ = ("parent", "size", "trail")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.trail: list[int] = []

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.trail.append(ry)
        return True

    def undo(self) -> None:
        ry = self.trail.pop()
        rx = self.parent[ry]
        self.parent[ry] = ry
        self.size[rx] -= self.size[ry]


def _path_system_core(
    g: Graph, cap: int, target: int | None
) -> tuple[int, list[tuple[int, int]]]:
    """Maximum edge count of a subgraph with max degree <= cap and, for
    cap >= 2, no cycles.  Returns (size, witness edges)."""
    edges = g.edges()
    m = len(edges)
    n = g.n
    if m == 0:
        return 0, []

    # Greedy start: scan edges once, keep what fits.
    degs = [0] * n
    uf = _UnionFind(n)
    chosen: list[tuple[int, int]] = []
    for u, v in edges:
        if degs[u] < cap and degs[v] < cap and (cap == 1 or uf.union(u, v)):
            degs[u] += 1
            degs[v] += 1
            chosen.append((u, v))
    best = len(chosen)
    best_edges = chosen.copy()
    if target is not None and best >= target:
        return best, best_edges

    # Suffix incidence counts: inc[i][v] = candidate edges at v from index i on.
    suffix = [[0] * n]
    for u, v in reversed(edges):
        nxt = suffix[-1].copy()
        nxt[u] += 1
        nxt[v] += 1
        suffix.append(nxt)
    suffix.reverse()

    degs = [0] * n
    uf = _UnionFind(n)
    chosen = []
    done = False

    def bound(i: int) -> int:
        # Capacity bound over all vertices plus a greedy-cover capacity
        # bound: every addable edge consumes capacity at a cover vertex.
        inc = suffix[i]
        residual = {}
        total = 0
        remaining = 0
        for u, v in edges[i:]:
            if degs[u] < cap and degs[v] < cap:
                remaining += 1
                for w in (u, v):
                    if w not in residual:
                        residual[w] = cap - degs[w]
        if not remaining:
            return 0
        for w, r in residual.items():
            total += min(r, inc[w])
        b = min(remaining, total // 2)
        # Greedy cover on the addable suffix edges.
        live = [
            (u, v) for u, v in edges[i:] if degs[u] < cap and degs[v] < cap
        ]
        cover = 0
        while live:
            counts: dict[int, int] = {}
            for u, v in live:
                counts[u] = counts.get(u, 0) + 1
                counts[v] = counts.get(v, 0) + 1
            w = max(counts, key=lambda t: (counts[t], -t))
            cover += min(cap - degs[w], counts[w])
            live = [e for e in live if w not in e]
        return min(b, cover)

    def dfs(i: int, count: int):
        nonlocal best, best_edges, done
        if done or i == m:
            return
        if count + bound(i) <= best:
            return
        u, v = edges[i]
        if (
            degs[u] < cap
            and degs[v] < cap
            and (cap == 1 or uf.union(u, v))
        ):
            degs[u] += 1
            degs[v] += 1
            chosen.append((u, v))
            if count + 1 > best:
                best = count + 1
                best_edges = chosen.copy()
                if target is not None and best >= target:
                    done = True
            if not done:
                dfs(i + 1, count + 1)
            chosen.pop()
            degs[u] -= 1
            degs[v] -= 1
            if cap > 1:
                uf.undo()
        if not done:
            dfs(i + 1, count)

    dfs(0, 0)
    return best, best_edges


def _max_path_system(
    g: Graph, cap: int, target: int | None = None
) -> tuple[int, list[tuple[int, int]]]:
    keep = _twin_reduce(g, cap)
    if len(keep) < g.n:
        reduced = induced_subgraph(g, keep)
        size, edges = _path_system_core(reduced, cap, target)
        mapped = sorted((min(keep[u], keep[v]), max(keep[u], keep[v])) for u, v in edges)
        return size, mapped
    size, edges = _path_system_core(g, cap, target)
    return size, sorted(edges)


def max_linear_forest(g: Graph) -> int:
    """Maximum number of edges over all linear-forest subgraphs."""
    return _max_path_system(g, 2)[0]


def linear_forest_witness(g: Graph) -> list[tuple[int, int]]:
    """Edge set of one maximum linear forest."""
    return _max_path_system(g, 2)[1]


def find_linear_forest(g: Graph, s: int) -> tuple[tuple[int, int], ...] | None:
    """A linear forest with exactly s edges, or None when none exists.

    Linear forests are closed under edge deletion, so a larger witness is
    trimmed to size s.
    """
    if s < 1:
        raise ValueError("edge count must be at least 1")
    size, edges = _max_path_system(g, 2, target=s)
    if size < s:
        return None
    return tuple(edges[:s])


def max_matching(g: Graph) -> int:
    """Maximum matching size."""
    return _max_path_system(g, 1)[0]


def matching_witness(g: Graph) -> list[tuple[int, int]]:
    return _max_path_system(g, 1)[1]


def find_matching(g: Graph, s: int) -> tuple[tuple[int, int], ...] | None:
    """A matching with exactly s edges, or None when none exists."""
    if s < 1:
        raise ValueError("edge count must be at least 1")
    size, edges = _max_path_system(g, 1, target=s)
    if size < s:
        return None
    return tuple(edges[:s])


def is_free(g: Graph, fam: ForbiddenFamily) -> FreenessResult:
    """Check freeness for the family, returning a witness on failure.

    Free means: no clique on k+1 vertices, and no linear forest with s
    edges (equivalently max_linear_forest <= s-1).  In the matching regime
    the second condition is replaced by: no matching with s+1 edges.
    """
    clique = find_clique(g, fam.k + 1)
    if clique is not None:
        return FreenessResult(False, FreenessWitness("clique", vertices=clique))
    if fam.include_matching:
        matching = find_matching(g, fam.m_size)
        if matching is not None:
            return FreenessResult(False, FreenessWitness("matching", edges=matching))
    else:
        forest = find_linear_forest(g, fam.s)
        if forest is not None:
            return FreenessResult(
                False, FreenessWitness("linear-forest", edges=forest)
            )
    return FreenessResult(True, None)
