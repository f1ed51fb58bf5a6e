"""Compact simple undirected graphs on dense vertex ids ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, which keeps the
structures hashable and cheap to copy for the graph sizes this package
targets (``n <= 64``).
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex ids."""


class GraphClass(str, enum.Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    OTHER = "other"


class Graph:
    """Immutable simple graph.

    Parameters
    ----------
    n:
        Number of vertices, ``1 <= n <= 64``.
    edges:
        Iterable of vertex pairs. Loops and repeated edges raise
        :class:`GraphError`.
    """

    __slots__ = ("_n", "_adj", "_degrees", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in [1, {MAX_VERTICES}], got {n!r}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"repeated edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._set(n, tuple(adj))

    def _set(self, n: int, adj: tuple[int, ...]) -> None:
        self._n = n
        self._adj = adj
        self._degrees = tuple(mask.bit_count() for mask in adj)
        self._edges: tuple[tuple[int, int], ...] | None = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        """Build from adjacency bitmasks; symmetry and looplessness are checked."""
        n = len(masks)
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
        full = (1 << n) - 1
        for u, mask in enumerate(masks):
            if mask & ~full or mask >> u & 1:
                raise GraphError(f"invalid adjacency mask for vertex {u}")
            rest = mask
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                if not masks[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                rest ^= low
        g = cls.__new__(cls)
        g._set(n, tuple(masks))
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return sum(self._degrees) // 2

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        if self._edges is None:
            out = []
            for u, mask in enumerate(self._adj):
                rest = mask >> (u + 1)
                v = u + 1
                while rest:
                    if rest & 1:
                        out.append((u, v))
                    rest >>= 1
                    v += 1
            self._edges = tuple(out)
        return self._edges

    def _check(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise GraphError(f"vertex {v!r} out of range for n={self._n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        mask = self._adj[v]
        return tuple(u for u in range(self._n) if mask >> u & 1)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._adj[u] >> v & 1)

    def with_edges(
        self,
        remove: Iterable[tuple[int, int]] = (),
        add: Iterable[tuple[int, int]] = (),
    ) -> Graph:
        """Return a new graph with ``remove`` deleted and then ``add`` inserted."""
        adj = list(self._adj)
        for u, v in remove:
            self._check(u)
            self._check(v)
            if not adj[u] >> v & 1:
                raise GraphError(f"cannot remove missing edge ({u}, {v})")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        for u, v in add:
            self._check(u)
            self._check(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"edge ({u}, {v}) already present")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        g = Graph.__new__(Graph)
        g._set(self._n, tuple(adj))
        return g

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self.edges)})"


def degree(g: Graph, v: int) -> int:
    g._check(v)
    return g.degrees[v]


def max_degree(g: Graph) -> int:
    return max(g.degrees)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= g.masks[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append([v for v in range(g.n) if comp >> v & 1])
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def classify(g: Graph) -> GraphClass:
    if not is_connected(g):
        return GraphClass.OTHER
    if g.m == g.n - 1:
        return GraphClass.TREE
    if g.m == g.n:
        return GraphClass.UNICYCLIC
    return GraphClass.OTHER


def cycle_vertices(g: Graph) -> list[int]:
    """Vertices of the 2-core; for a unicyclic graph this is its unique cycle."""
    deg = list(g.degrees)
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for u in g.neighbors(v):
            if alive[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    return [v for v in range(g.n) if alive[v]]


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.n
    return Graph(a.n + b.n, list(a.edges) + [(u + shift, v + shift) for u, v in b.edges])


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star_graph(n: int) -> Graph:
    """The star ``S_n`` on ``n`` vertices with center 0."""
    return Graph(n, ((0, i) for i in range(1, n)))
