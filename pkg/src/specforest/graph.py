"""Immutable simple graphs stored as adjacency bit rows.

Vertices are dense 0-based integers.  Each adjacency row is a Python int
whose bit ``u`` records adjacency to vertex ``u``, so neighborhood algebra
is plain integer arithmetic and the representation has no practical cap on
the order (brute-force work stays below ten vertices; join constructions go
to a few thousand).  Graphs are immutable after construction, hashable, and
safe to share between concurrent workers.

Named constructions place the dense "hub" block first and any independent
block last, so vertex indices in reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "PartitionSpec",
    "make_graph",
    "empty_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "complete_bipartite",
    "turan",
    "turan_part_sizes",
    "complete_multipartite",
    "join",
    "union",
    "complement",
    "neighborhood",
    "second_neighborhood",
    "add_edges",
    "remove_edges",
    "induced_subgraph",
    "relabel",
    "components",
    "is_connected",
]


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with bit-row adjacency."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: Sequence[int]):
        rows = tuple(rows)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ValueError("adjacency needs exactly one row per vertex")
        for v, row in enumerate(rows):
            if row < 0 or row >> n:
                raise ValueError(f"row {v} references vertices outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in _bits(row):
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_rows", rows)

    @classmethod
    def _from_rows(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # Fast path for internal callers that already guarantee a valid,
        # symmetric, loop-free row tuple.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "_rows", rows)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph objects are immutable")

    def __reduce__(self):
        return (_restore_graph, (self.n, self._rows))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self):
        return hash((self.n, self._rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    def row(self, v: int) -> int:
        """Adjacency bitmask of vertex ``v``."""
        return self._rows[v]

    def rows(self) -> tuple[int, ...]:
        return self._rows

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for v in range(self.n):
            row = self._rows[v] >> (v + 1)
            for off in _bits(row):
                out.append((v, v + 1 + off))
        return out

    def vertices(self) -> range:
        return range(self.n)


def _restore_graph(n: int, rows: tuple[int, ...]) -> Graph:
    return Graph._from_rows(n, rows)


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; repeated pairs are deduplicated."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._from_rows(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return make_graph(n, ())


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._from_rows(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return make_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("side sizes must be nonnegative")
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    rows = tuple(right if v < a else left for v in range(a + b))
    return Graph._from_rows(a + b, rows)


@dataclass(frozen=True)
class PartitionSpec:
    """Complete-multipartite part sizes plus a joined independent remainder.

    ``realize()`` yields the complete multipartite graph whose classes are
    the parts followed by one independent class of ``remainder`` vertices;
    every class is joined to every other class.
    """

    parts: tuple[int, ...]
    remainder: int = 0

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(b) for b in self.parts))
        object.__setattr__(self, "remainder", int(self.remainder))
        if any(b < 1 for b in self.parts):
            raise ValueError("part sizes must be positive")
        if self.remainder < 0:
            raise ValueError("remainder must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.parts) + self.remainder

    def block_sizes(self) -> tuple[int, ...]:
        """Part sizes with the remainder appended when it is nonempty."""
        if self.remainder:
            return self.parts + (self.remainder,)
        return self.parts

    def realize(self) -> Graph:
        return complete_multipartite(self)


def complete_multipartite(spec: PartitionSpec) -> Graph:
    """Realize a PartitionSpec: parts first, remainder block last."""
    sizes = spec.parts + (spec.remainder,) if spec.remainder else spec.parts
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        outside = full ^ block
        rows.extend([outside] * size)
        start += size
    return Graph._from_rows(n, tuple(rows))


def turan_part_sizes(n: int, k: int) -> tuple[int, ...]:
    """Part sizes of the k-part balanced split of n, larger parts first.

    With k > n the split degenerates to n singleton parts (zero-size parts
    are dropped), so the realized graph is the complete graph on n vertices.
    """
    if k < 1:
        raise ValueError("part count must be at least 1")
    if n < 0:
        raise ValueError("order must be nonnegative")
    k_eff = min(k, n)
    if k_eff == 0:
        return ()
    q, r = divmod(n, k_eff)
    return tuple([q + 1] * r + [q] * (k_eff - r))


def turan(n: int, k: int) -> Graph:
    """Balanced complete multipartite graph on n vertices with k parts."""
    sizes = turan_part_sizes(n, k)
    if not sizes:
        return empty_graph(0)
    return complete_multipartite(PartitionSpec(sizes))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    n = g.n + h.n
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [g.row(v) | h_mask for v in range(g.n)]
    rows += [(h.row(v) << g.n) | g_mask for v in range(h.n)]
    return Graph._from_rows(n, tuple(rows))


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted past g's."""
    rows = [g.row(v) for v in range(g.n)]
    rows += [h.row(v) << g.n for v in range(h.n)]
    return Graph._from_rows(g.n + h.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple((full ^ g.row(v)) & ~(1 << v) for v in range(g.n))
    return Graph._from_rows(g.n, rows)


def neighborhood(g: Graph, v: int) -> set[int]:
    """Open neighborhood N(v)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside range")
    return set(_bits(g.row(v)))


def second_neighborhood(g: Graph, v: int) -> set[int]:
    """Vertices at distance exactly two from ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside range")
    nv = g.row(v)
    reach = 0
    for u in _bits(nv):
        reach |= g.row(u)
    reach &= ~(nv | (1 << v))
    return set(_bits(reach))


def add_edges(g: Graph, pairs: Iterable[tuple[int, int]]) -> Graph:
    """New graph with the given edges added (idempotent, loops rejected)."""
    rows = list(g.rows())
    for u, v in pairs:
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) not allowed")
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"edge ({u}, {v}) outside vertex range")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._from_rows(g.n, tuple(rows))


def remove_edges(g: Graph, pairs: Iterable[tuple[int, int]]) -> Graph:
    """New graph with the given edges removed (missing edges are ignored)."""
    rows = list(g.rows())
    for u, v in pairs:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"edge ({u}, {v}) outside vertex range")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph._from_rows(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph; new labels follow the order of ``vertices``."""
    verts = list(vertices)
    if len(set(verts)) != len(verts):
        raise ValueError("vertex list contains duplicates")
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside range")
        row = 0
        for u in _bits(g.row(v)):
            i = index.get(u)
            if i is not None:
                row |= 1 << i
        rows.append(row)
    return Graph._from_rows(len(verts), tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel so old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of the vertex range")
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in _bits(g.row(v)):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph._from_rows(g.n, tuple(rows))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.row(u)
            frontier = nxt & ~comp
        seen |= comp
        comps.append(list(_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1
