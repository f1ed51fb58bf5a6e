"""Slow, independent reference computations used to cross-check the enumerators.

Nothing here reuses the generation machinery in :mod:`sombor.enumeration`.
Isomorphism classes are collected by canonical code, and automorphism
counts come from a separate rooted-tree encoding.
"""

from __future__ import annotations

import heapq
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations
from math import comb, factorial

from .canon import canonical_code
from .graph import Graph, GraphClass, classify, cycle_vertices, is_connected


def _nonincreasing(n: int, total: int, lo: int = 1, hi: int | None = None) -> Iterator[tuple[int, ...]]:
    hi = total if hi is None else hi

    def rec(i: int, rem: int, mx: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            if rem == 0:
                yield ()
            return
        left = n - i - 1
        for d in range(min(mx, rem - lo * left), lo - 1, -1):
            for rest in rec(i + 1, rem - d, d):
                yield (d,) + rest

    yield from rec(0, total, hi)


def _multiset_permutations(counts: list[int]) -> Iterator[tuple[int, ...]]:
    total = sum(counts)
    out = [0] * total

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == total:
            yield tuple(out)
            return
        for v, c in enumerate(counts):
            if c:
                counts[v] -= 1
                out[pos] = v
                yield from rec(pos + 1)
                counts[v] += 1

    yield from rec(0)


def prufer_decode(seq: Iterable[int], n: int) -> Graph:
    seq = list(seq)
    if n == 1:
        return Graph(1)
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def prufer_sequences(n: int, degree_ordered: bool = True) -> Iterator[tuple[int, ...]]:
    """Prüfer sequences of length ``n-2``.

    With ``degree_ordered`` only sequences where label ``v`` occurs at least
    as often as ``v+1`` are produced; every unlabeled tree still appears
    because relabeling by nonincreasing degree is always possible.
    """
    if n <= 2:
        yield ()
        return
    if not degree_ordered:
        yield from _product(n, n - 2)
        return
    for counts in _nonincreasing(n, n - 2, lo=0):
        yield from _multiset_permutations(list(counts))


def _product(n: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for head in range(n):
        for rest in _product(n, length - 1):
            yield (head,) + rest


def prufer_tree_codes(n: int, degree_ordered: bool = True) -> set[bytes]:
    return {canonical_code(prufer_decode(s, n)) for s in prufer_sequences(n, degree_ordered)}


def _lex_permutations(counts: Sequence[int]) -> Iterator[list[int]]:
    """Distinct arrangements of the multiset, in lexicographic order; the list is reused."""
    a = [v for v, c in enumerate(counts) for _ in range(c)]
    m = len(a)
    while True:
        yield a
        i = m - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = m - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = a[:i:-1]


def _rooted_prufer_key(seq: Sequence[int], n: int, table: dict[tuple[int, ...], int]) -> int:
    """Decode ``seq`` and return the AHU code of the tree rooted at vertex ``n-1``.

    Leaves are removed bottom-up, so each removed vertex already has all of
    its children coded when it leaves.
    """
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    kids: list[list[int]] = [[] for _ in range(n)]
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        ks = kids[leaf]
        kids[x].append(table.setdefault(tuple(sorted(ks)), len(table)) if ks else 0)
        deg[x] -= 1
        if x < ptr and deg[x] == 1:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    ks = kids[leaf]
    kids[n - 1].append(table.setdefault(tuple(sorted(ks)), len(table)) if ks else 0)
    return table.setdefault(tuple(sorted(kids[n - 1])), len(table))


def prufer_tree_codes_fast(n: int) -> set[bytes]:
    """Same classes as :func:`prufer_tree_codes`, decoded without building graphs.

    Every degree-ordered sequence is decoded into a code of the tree rooted
    at vertex ``n-1``; one sequence per distinct rooted code is then decoded
    for real and deduplicated by canonical code.
    """
    if n <= 2:
        return prufer_tree_codes(n)
    table: dict[tuple[int, ...], int] = {(): 0}
    reps: dict[int, tuple[int, ...]] = {}
    for counts in _nonincreasing(n, n - 2, lo=0):
        for seq in _lex_permutations(counts):
            key = _rooted_prufer_key(seq, n, table)
            if key not in reps:
                reps[key] = tuple(seq)
    return {canonical_code(prufer_decode(s, n)) for s in reps.values()}


def leaf_growth_tree_codes(n: int) -> set[bytes]:
    """Classes of trees on ``n`` vertices, grown one leaf at a time from ``K_1``."""
    layer = {canonical_code(Graph(1)): Graph(1)}
    for size in range(1, n):
        nxt: dict[bytes, Graph] = {}
        for g in layer.values():
            for v in range(size):
                h = Graph(size + 1, list(g.edges) + [(v, size)])
                nxt.setdefault(canonical_code(h), h)
        layer = nxt
    return set(layer)


def _labeled_graphs_with_degrees(degs: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    n = len(degs)
    res = list(degs)
    adj = [0] * n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(adj)
            return
        cands = [j for j in range(i + 1, n) if res[j] > 0]
        need = res[i]
        if need > len(cands):
            return
        for combo in combinations(cands, need):
            for j in combo:
                res[j] -= 1
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            res[i] = 0
            yield from rec(i + 1)
            res[i] = need
            for j in combo:
                res[j] += 1
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)

    yield from rec(0)


def edge_set_unicyclic_codes(n: int) -> set[bytes]:
    """Classes of connected graphs with ``n`` vertices and ``n`` edges.

    Labeled edge sets are enumerated for every degree sequence that is
    nonincreasing in the vertex label (a sound symmetry reduction).
    """
    codes = set()
    for degs in _nonincreasing(n, 2 * n, lo=1, hi=n - 1):
        for masks in _labeled_graphs_with_degrees(degs):
            g = Graph.from_masks(masks)
            if is_connected(g):
                codes.add(canonical_code(g))
    return codes


def tree_plus_edge_unicyclic_codes(trees: Iterable[Graph]) -> set[bytes]:
    """Every unicyclic graph is a spanning tree plus one edge."""
    codes = set()
    for t in trees:
        for u, v in combinations(range(t.n), 2):
            if not t.has_edge(u, v):
                codes.add(canonical_code(t.with_edges(add=[(u, v)])))
    return codes


# Counting formulas ----------------------------------------------------------


def labeled_tree_count(n: int) -> int:
    """Cayley: the number of Prüfer sequences."""
    return 1 if n <= 2 else n ** (n - 2)


def labeled_unicyclic_count(n: int) -> int:
    """Choose the cycle, then a rooted forest on the cycle vertices (``k n^(n-k-1)`` of them)."""
    total = 0
    for k in range(3, n + 1):
        cycles = comb(n, k) * factorial(k - 1) // 2
        forests = 1 if k == n else k * n ** (n - k - 1)
        total += cycles * forests
    return total


def rooted_tree_counts(limit: int) -> list[int]:
    """``r[m]`` = unlabeled rooted trees on ``m`` vertices (Euler transform recurrence)."""
    r = [0, 1] + [0] * (limit - 1)
    for m in range(1, limit):
        s = 0
        for k in range(1, m + 1):
            s += sum(d * r[d] for d in range(1, k + 1) if k % d == 0) * r[m - k + 1]
        r[m + 1] = s // m
    return r[: limit + 1]


def free_tree_count(n: int) -> int:
    """Otter: ``t(n) = r(n) - (sum_{i+j=n} r(i) r(j) - [n even] r(n/2)) / 2``."""
    if n <= 1:
        return n
    r = rooted_tree_counts(n)
    pairs = sum(r[i] * r[n - i] for i in range(1, n))
    if n % 2 == 0:
        pairs -= r[n // 2]
    return r[n] - pairs // 2


# Automorphism counts --------------------------------------------------------


def _rooted_code(g: Graph, root: int, banned: set[int]) -> tuple[str, int]:
    """AHU code of the branch at ``root`` avoiding ``banned``, with its automorphism count."""
    seen = set(banned)
    seen.add(root)
    order = [(root, -1)]
    i = 0
    while i < len(order):
        v, _ = order[i]
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                order.append((u, v))
        i += 1
    code: dict[int, str] = {}
    aut: dict[int, int] = {}
    kids: dict[int, list[int]] = {v: [] for v, _ in order}
    for v, p in order[1:]:
        kids[p].append(v)
    for v, _ in reversed(order):
        child_codes = sorted(code[c] for c in kids[v])
        code[v] = "(" + "".join(child_codes) + ")"
        a = 1
        for c in kids[v]:
            a *= aut[c]
        for mult in Counter(child_codes).values():
            a *= factorial(mult)
        aut[v] = a
    return code[root], aut[root]


def automorphism_count(g: Graph) -> int:
    """``|Aut(g)|`` for trees and unicyclic graphs."""
    cls = classify(g)
    if cls is GraphClass.TREE:
        if g.n <= 2:
            return g.n if g.n == 2 else 1
        layer = [v for v in range(g.n) if g.degrees[v] == 1]
        removed: set[int] = set()
        remaining = g.n
        deg = list(g.degrees)
        while remaining > 2:
            nxt = []
            for v in layer:
                removed.add(v)
                remaining -= 1
                for u in g.neighbors(v):
                    if u not in removed:
                        deg[u] -= 1
                        if deg[u] == 1:
                            nxt.append(u)
            layer = nxt
        centers = [v for v in range(g.n) if v not in removed]
        if len(centers) == 1:
            return _rooted_code(g, centers[0], set())[1]
        a, b = centers
        ca, xa = _rooted_code(g, a, {b})
        cb, xb = _rooted_code(g, b, {a})
        return xa * xb * (2 if ca == cb else 1)
    if cls is GraphClass.UNICYCLIC:
        cyc = set(cycle_vertices(g))
        start = min(cyc)
        order = [start]
        prev = None
        while len(order) < len(cyc):
            cur = order[-1]
            nxt = next(u for u in g.neighbors(cur) if u in cyc and u != prev and u not in order)
            prev = cur
            order.append(nxt)
        branches = [_rooted_code(g, v, cyc - {v}) for v in order]
        seq = [c for c, _ in branches]
        c = len(seq)
        sym = 0
        for r in range(c):
            rot = seq[r:] + seq[:r]
            if rot == seq:
                sym += 1
            rev = seq[::-1]
            if rev[r:] + rev[:r] == seq:
                sym += 1
        total = sym
        for _, a in branches:
            total *= a
        return total
    raise ValueError("automorphism counts implemented for trees and unicyclic graphs only")


def orbit_sum(graphs: Iterable[Graph]) -> int:
    """``sum n!/|Aut(g)|``: the number of labeled graphs the classes account for."""
    total = 0
    for g in graphs:
        total += factorial(g.n) // automorphism_count(g)
    return total
