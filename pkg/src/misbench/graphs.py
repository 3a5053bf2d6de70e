"""Bitmask graph core for graphs on at most 64 vertices.

A graph is stored as an order ``n`` plus one adjacency bitmask per vertex.
Vertex sets everywhere in this package are plain Python ints used as
bitmasks, so set algebra is word arithmetic: union ``a | b``, intersection
``a & b``, difference ``a & ~b``, cardinality ``a.bit_count()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GuardError(RuntimeError):
    """Raised when an input violates a documented size or domain guard."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with exactly the given vertex positions set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest_bit(mask: int) -> int:
    """Index of the least significant set bit. ``mask`` must be nonzero."""
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    ``adj[v]`` is the open neighborhood of ``v`` as a bitmask.  The
    constructor validates symmetry, absence of loops, and the order cap.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GuardError(f"graph order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length differs from order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbors outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in iter_bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def closed_adj(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitmask."""
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list.  Duplicate edges are merged."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    if a.n + b.n > MAX_VERTICES:
        raise GuardError("union exceeds the order cap")
    rows = list(a.adj) + [row << a.n for row in b.adj]
    return Graph(a.n + b.n, tuple(rows))


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``mask``.

    Returns the relabeled graph together with the list mapping new vertex
    index to old vertex index (increasing order of the old labels).
    """
    keep = list(iter_bits(mask))
    pos = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for u in iter_bits(g.adj[old] & mask):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(keep), tuple(rows)), keep


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph(g.n, tuple(rows))


def degree_histogram(g: Graph) -> list[int]:
    hist = [0] * g.n if g.n else []
    for v in range(g.n):
        hist[g.degree(v)] += 1
    return hist


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest member."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def is_independent(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if g.adj[v] & mask:
            return False
    return True


def is_maximal_independent(g: Graph, mask: int) -> bool:
    """Independent and dominating: every vertex is in the set or adjacent to it."""
    dom = mask
    for v in iter_bits(mask):
        if g.adj[v] & mask:
            return False
        dom |= g.adj[v]
    return dom == g.full_mask


def is_clique(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if (g.adj[v] & mask) != mask ^ (1 << v):
            return False
    return True


def k4_witness(g: Graph) -> int | None:
    """A 4-clique as a bitmask, or None if the graph is K4-free."""
    for a in range(g.n):
        above_a = g.adj[a] >> (a + 1) << (a + 1)
        for b in iter_bits(above_a):
            common_ab = g.adj[a] & g.adj[b]
            for c in iter_bits(common_ab >> (b + 1) << (b + 1)):
                higher = common_ab & g.adj[c] >> (c + 1) << (c + 1)
                if higher:
                    d = lowest_bit(higher)
                    return mask_of((a, b, c, d))
    return None


def is_k4_free(g: Graph) -> bool:
    return k4_witness(g) is None


def bipartition(g: Graph, mask: int) -> tuple[int, int] | None:
    """Two-color the subgraph induced by ``mask``.

    Returns a pair of side masks partitioning ``mask`` (isolated vertices
    land on the first side of their component), or None when some induced
    component contains an odd cycle.
    """
    color = {}
    side0 = side1 = 0
    todo = mask
    while todo:
        root = lowest_bit(todo)
        color[root] = 0
        queue = [root]
        comp_seen = 1 << root
        while queue:
            v = queue.pop()
            cv = color[v]
            for u in iter_bits(g.adj[v] & mask):
                if u in color:
                    if color[u] == cv:
                        return None
                else:
                    color[u] = 1 - cv
                    comp_seen |= 1 << u
                    queue.append(u)
        todo &= ~comp_seen
    for v, c in color.items():
        if c == 0:
            side0 |= 1 << v
        else:
            side1 |= 1 << v
    return side0, side1


def is_bipartite_induced(g: Graph, mask: int) -> bool:
    return bipartition(g, mask) is not None
