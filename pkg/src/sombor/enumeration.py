"""Isomorphism-free generation of free trees and unicyclic graphs.

Rooted trees are interned: each has an integer id, and a rooted tree is the
nonincreasing tuple of its children's ids. Ids are handed out by size and
then by generation order, so comparing ids compares trees in a fixed total
order. From these:

* a free tree is its centroid-rooted form (every root branch has fewer than
  ``n/2`` vertices) or, for bicentroidal trees, an unordered pair of rooted
  trees with ``n/2`` vertices each;
* a unicyclic graph is a cycle length ``c`` with a rooted tree hung at each
  cycle vertex, kept only when the id sequence is the lexicographically
  largest of its ``2c`` rotations and reflections.

Both descriptions are unique per isomorphism class, so no canonical labeling
is needed. Output order: trees by (unicentroidal before bicentroidal, root
child sequence in decreasing id order); unicyclic graphs by increasing
cycle length, then decreasing id sequence.
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

from .graph import Graph, GraphClass

MAX_TREE_N = 16
MAX_UNICYCLIC_N = 14


class _RootedTrees:
    """Interned rooted trees with cached size, root degree and depth-degree data."""

    def __init__(self) -> None:
        self.children: list[tuple[int, ...]] = [()]
        self.size: list[int] = [1]
        self.root_deg: list[int] = [0]
        # max degree over non-root vertices, counting each one's parent edge
        self.inner: list[int] = [0]
        self.by_size: dict[int, range] = {1: range(0, 1)}

    def ensure(self, m: int) -> None:
        top = max(self.by_size)
        for size in range(top + 1, m + 1):
            start = len(self.size)
            for kids in self._multisets(size - 1, len(self.size) - 1):
                self.children.append(kids)
                self.size.append(size)
                self.root_deg.append(len(kids))
                self.inner.append(max(max(self.root_deg[c] + 1, self.inner[c]) for c in kids))
            self.by_size[size] = range(start, len(self.size))

    def _ids_desc(self, max_size: int, max_id: int) -> Iterator[int]:
        """Ids with size <= ``max_size`` and id <= ``max_id``, largest first."""
        for s in range(min(max_size, max(self.by_size)), 0, -1):
            r = self.by_size[s]
            yield from range(min(r.stop, max_id + 1) - 1, r.start - 1, -1)

    def _multisets(self, total: int, max_id: int, part_cap: int | None = None) -> Iterator[tuple[int, ...]]:
        """Nonincreasing id tuples with sizes summing to ``total``; ids <= ``max_id``."""
        if total == 0:
            yield ()
            return
        cap = total if part_cap is None else min(total, part_cap)
        for t in self._ids_desc(cap, max_id):
            for rest in self._multisets(total - self.size[t], t, part_cap):
                yield (t,) + rest

    def of_size(self, m: int) -> range:
        self.ensure(m)
        return self.by_size[m]

    def forests(self, total: int, part_cap: int) -> Iterator[tuple[int, ...]]:
        if total and part_cap < 1:
            return iter(())
        self.ensure(max(1, part_cap))
        return self._multisets(total, len(self.size) - 1, part_cap)

    def layout(self, root: int, t: int, start: int, edges: list[tuple[int, int]]) -> int:
        """Append edges of tree ``t`` rooted at vertex ``root``; return next free id."""
        nxt = start
        stack = [(root, t)]
        while stack:
            v, tid = stack.pop()
            for c in self.children[tid]:
                edges.append((v, nxt))
                stack.append((nxt, c))
                nxt += 1
        return nxt


_ROOTED = _RootedTrees()


def _check_n(n: int, lo: int, hi: int, what: str) -> None:
    if not isinstance(n, int) or not lo <= n <= hi:
        raise ValueError(f"{what} enumeration needs {lo} <= n <= {hi}, got {n!r}")


def _tree_shapes(n: int) -> Iterator[tuple[str, tuple[int, ...], int]]:
    """Yield ``(kind, ids, max_degree)`` with kind ``"uni"`` or ``"bi"``."""
    rt = _ROOTED
    for kids in rt.forests(n - 1, (n - 1) // 2):
        deg = len(kids)
        for c in kids:
            deg = max(deg, rt.root_deg[c] + 1, rt.inner[c])
        yield "uni", kids, deg
    if n % 2 == 0 and n >= 2:
        ids = rt.of_size(n // 2)
        for a in reversed(ids):
            for b in reversed(ids):
                if b > a:
                    continue
                deg = max(rt.root_deg[a] + 1, rt.inner[a], rt.root_deg[b] + 1, rt.inner[b])
                yield "bi", (a, b), deg


def _tree_graph(n: int, kind: str, ids: tuple[int, ...]) -> Graph:
    edges: list[tuple[int, int]] = []
    if kind == "uni":
        nxt = 1
        for c in ids:
            edges.append((0, nxt))
            nxt = _ROOTED.layout(nxt, c, nxt + 1, edges)
    else:
        a, b = ids
        nxt = _ROOTED.layout(0, a, 1, edges)
        edges.append((0, nxt))
        _ROOTED.layout(nxt, b, nxt + 1, edges)
    return Graph(n, edges)


def enumerate_trees(n: int, max_degree: int | None = None) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices, filtered to exact max degree."""
    _check_n(n, 1, MAX_TREE_N, "tree")
    for kind, ids, deg in _tree_shapes(n):
        if max_degree is None or deg == max_degree:
            yield _tree_graph(n, kind, ids)


def _is_bracelet_max(seq: tuple[int, ...]) -> bool:
    c = len(seq)
    rev = seq[::-1]
    for r in range(c):
        if seq[r:] + seq[:r] > seq or rev[r:] + rev[:r] > seq:
            return False
    return True


def _unicyclic_shapes(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    rt = _ROOTED
    rt.ensure(n - 2)

    def fill(prefix: tuple[int, ...], remaining: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield prefix
            return
        for t in rt._ids_desc(remaining - (slots - 1), cap):
            yield from fill(prefix + (t,), remaining - rt.size[t], slots - 1, cap)

    for c in range(3, n + 1):
        for first in rt._ids_desc(n - c + 1, len(rt.size) - 1):
            for seq in fill((first,), n - rt.size[first], c - 1, first):
                if not _is_bracelet_max(seq):
                    continue
                deg = 0
                for t in seq:
                    deg = max(deg, rt.root_deg[t] + 2, rt.inner[t])
                yield seq, deg


def _unicyclic_graph(n: int, seq: tuple[int, ...]) -> Graph:
    c = len(seq)
    edges = [(i, i + 1) for i in range(c - 1)] + [(0, c - 1)]
    nxt = c
    for v, t in enumerate(seq):
        nxt = _ROOTED.layout(v, t, nxt, edges)
    return Graph(n, edges)


def enumerate_unicyclic(n: int, max_degree: int | None = None) -> Iterator[Graph]:
    """One connected graph with ``n`` vertices and ``n`` edges per isomorphism class."""
    _check_n(n, 3, MAX_UNICYCLIC_N, "unicyclic")
    for seq, deg in _unicyclic_shapes(n):
        if max_degree is None or deg == max_degree:
            yield _unicyclic_graph(n, seq)


def enumerate_class(cls: GraphClass | str, n: int, max_degree: int | None = None) -> Iterator[Graph]:
    cls = GraphClass(cls)
    if cls is GraphClass.TREE:
        return enumerate_trees(n, max_degree)
    if cls is GraphClass.UNICYCLIC:
        return enumerate_unicyclic(n, max_degree)
    raise ValueError("only tree and unicyclic classes can be enumerated")


@lru_cache(maxsize=None)
def _degree_histogram(cls: GraphClass, n: int) -> dict[int, int]:
    hist: dict[int, int] = {}
    shapes = _tree_shapes(n) if cls is GraphClass.TREE else _unicyclic_shapes(n)
    for *_, deg in shapes:
        hist[deg] = hist.get(deg, 0) + 1
    return hist


def count(cls: GraphClass | str, n: int, max_degree: int | None = None) -> int:
    """Number of classes the matching enumerator would yield, without building graphs."""
    cls = GraphClass(cls)
    if cls is GraphClass.TREE:
        _check_n(n, 1, MAX_TREE_N, "tree")
    elif cls is GraphClass.UNICYCLIC:
        _check_n(n, 3, MAX_UNICYCLIC_N, "unicyclic")
    else:
        raise ValueError("only tree and unicyclic classes can be counted")
    hist = _degree_histogram(cls, n)
    if max_degree is None:
        return sum(hist.values())
    return hist.get(max_degree, 0)
