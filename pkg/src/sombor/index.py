"""Degree-based edge-sum indices, with the Sombor index as the main instance."""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph


@dataclass(frozen=True)
class IndexDescriptor:
    """A symmetric edge weight ``weight(du, dv)`` summed over all edges."""

    name: str
    weight: Callable[[int, int], float]


def edge_weight_sombor(du: int, dv: int) -> float:
    if du < 1 or dv < 1:
        raise ValueError(f"edge endpoint degrees must be positive, got ({du}, {dv})")
    return math.sqrt(du * du + dv * dv)


def edge_weight_first_zagreb(du: int, dv: int) -> float:
    if du < 1 or dv < 1:
        raise ValueError(f"edge endpoint degrees must be positive, got ({du}, {dv})")
    return float(du + dv)


SOMBOR = IndexDescriptor("sombor", edge_weight_sombor)
FIRST_ZAGREB = IndexDescriptor("first_zagreb", edge_weight_first_zagreb)

DESCRIPTORS: dict[str, IndexDescriptor] = {d.name: d for d in (SOMBOR, FIRST_ZAGREB)}


def get_descriptor(name: str) -> IndexDescriptor:
    try:
        return DESCRIPTORS[name]
    except KeyError:
        raise ValueError(f"unknown index {name!r}; choose from {sorted(DESCRIPTORS)}") from None


def edge_contributions(
    g: Graph, d: IndexDescriptor = SOMBOR
) -> list[tuple[tuple[int, int], float]]:
    deg = g.degrees
    return [((u, v), d.weight(deg[u], deg[v])) for u, v in g.edges]


def index_value(g: Graph, d: IndexDescriptor = SOMBOR) -> float:
    """Sum of edge weights, accumulated left to right in lexicographic edge order."""
    deg = g.degrees
    w = d.weight
    total = 0.0
    for u, v in g.edges:
        total += w(deg[u], deg[v])
    return total


def sombor(g: Graph) -> float:
    return index_value(g, SOMBOR)


def degree_pair_multiset(g: Graph) -> Counter[tuple[int, int]]:
    """Multiset of unordered endpoint-degree pairs ``(small, large)``."""
    deg = g.degrees
    return Counter(
        (min(deg[u], deg[v]), max(deg[u], deg[v])) for u, v in g.edges
    )


@lru_cache(maxsize=None)
def split_square(k: int) -> tuple[int, int]:
    """Write ``k = c*c*r`` with ``r`` squarefree; return ``(c, r)``."""
    c, r, p = 1, k, 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            c *= p
        p += 1
    return c, r


def sombor_exact(g: Graph) -> tuple[tuple[int, int], ...]:
    """Exact Sombor value as sorted ``(radicand, coefficient)`` pairs.

    Square roots of distinct squarefree integers are linearly independent
    over the rationals, so two graphs have equal Sombor index exactly when
    these tuples are equal.
    """
    acc: Counter[int] = Counter()
    for (a, b), mult in degree_pair_multiset(g).items():
        c, r = split_square(a * a + b * b)
        acc[r] += c * mult
    return tuple(sorted(acc.items()))


def exact_to_float(terms: tuple[tuple[int, int], ...]) -> float:
    return math.fsum(c * math.sqrt(r) for r, c in terms)
