"""Exact canonical labeling by individualization-refinement.

The search refines the degree partition to an equitable one, then
branches on the first non-singleton cell. Every discrete leaf yields an
upper-triangle bitstring; the canonical form is the leaf with the smallest
bitstring. Automorphisms discovered at equal leaves prune sibling branches
that lie in the same orbit of the pointwise stabilizer of the current
prefix, which keeps highly symmetric inputs (stars, spiders) polynomial.
"""

from __future__ import annotations

from .graph import Graph
from .graph6 import pack_bits

CanonicalCode = bytes


def _refine(masks: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    cells = [c for c in cells]
    s = 0
    while s < len(cells):
        splitter = 0
        for v in cells[s]:
            splitter |= 1 << v
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault((masks[v] & splitter).bit_count(), []).append(v)
            if len(buckets) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(buckets[k] for k in sorted(buckets))
        if split:
            cells = out
            s = 0
        else:
            s += 1
    return cells


def _leaf_bits(masks: tuple[int, ...], order: list[int]) -> int:
    bits = 0
    for j in range(1, len(order)):
        col = masks[order[j]]
        for i in range(j):
            bits = bits << 1 | (col >> order[i] & 1)
    return bits


def _orbit_root(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return parent[v]


class _Search:
    def __init__(self, g: Graph) -> None:
        self.masks = g.masks
        self.n = g.n
        self.best_bits: int | None = None
        self.best_path: list[int] = []
        self.best_order: list[int] = []
        self.first_bits: int | None = None
        self.first_path: list[int] = []
        self.first_order: list[int] = []
        self.autos: list[tuple[int, ...]] = []

    def _record_auto(self, src: list[int], dst: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(src, dst):
            gamma[a] = b
        self.autos.append(tuple(gamma))

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        k = 0
        for x, y in zip(a, b):
            if x != y:
                break
            k += 1
        return k

    def leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
        """Process a leaf; return a depth to jump back to, if any."""
        order = [c[0] for c in cells]
        bits = _leaf_bits(self.masks, order)
        if self.first_bits is None:
            self.first_bits, self.first_order, self.first_path = bits, order, path
            self.best_bits, self.best_order, self.best_path = bits, order, path
            return None
        if bits == self.first_bits:
            self._record_auto(self.first_order, order)
            return self._common(path, self.first_path)
        if bits == self.best_bits:
            self._record_auto(self.best_order, order)
            return self._common(path, self.best_path)
        if bits < self.best_bits:
            self.best_bits, self.best_order, self.best_path = bits, order, path
        return None

    def run(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return self.leaf(cells, prefix)
        depth = len(prefix)
        parent = list(range(self.n))
        seen_autos = 0
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored:
                for gamma in self.autos[seen_autos:]:
                    if all(gamma[p] == p for p in prefix):
                        for a in range(self.n):
                            ra = _orbit_root(parent, a)
                            rb = _orbit_root(parent, gamma[a])
                            if ra != rb:
                                parent[ra] = rb
                seen_autos = len(self.autos)
                root = _orbit_root(parent, v)
                if any(_orbit_root(parent, u) == root for u in explored):
                    continue
            explored.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            jump = self.run(_refine(self.masks, child), prefix + [v])
            if jump is not None and jump < depth:
                return jump
        return None


def _search(g: Graph) -> _Search:
    by_degree: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees):
        by_degree.setdefault(d, []).append(v)
    search = _Search(g)
    search.run(_refine(g.masks, [by_degree[d] for d in sorted(by_degree)]), [])
    return search


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Return ``perm`` with ``g.relabel(perm)`` equal to the canonical form."""
    perm = [0] * g.n
    for pos, v in enumerate(_search(g).best_order):
        perm[v] = pos
    return tuple(perm)


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_code(g: Graph) -> CanonicalCode:
    """graph6 bytes of the canonical form; equal exactly when graphs are isomorphic."""
    return pack_bits(g.n, _search(g).best_bits)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return False
    return canonical_code(a) == canonical_code(b)
