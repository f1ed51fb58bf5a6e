"""Extremal trees and unicyclic graphs for the minimum Sombor index.

Labeling conventions (relied on by tests and reports):

* spiders: the hub is vertex 0; leg ``i`` occupies consecutive ids after
  the legs before it, ordered outward from the hub.
* unicyclic families: the cycle is ``0, 1, ..., c-1`` in order and every
  hanging path is attached at vertex 0, laid out like spider legs.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

from .graph import Graph, GraphClass, classify, cycle_vertices
from .index import split_square


class Regime(str, enum.Enum):
    I = "i"
    II = "ii"


class Variant(str, enum.Enum):
    AS_PRINTED = "as_printed"
    AS_CONSTRUCTED = "as_constructed"


class Family(str, enum.Enum):
    T_ND = "T_nD"
    T_D = "T_D"
    U_ND = "U_nD"
    U_D = "U_D"
    SPIDER = "spider"


Radicals = tuple[tuple[int, int], ...]


def radicals(weights: dict[tuple[int, int], int] | None = None, plain: dict[int, int] | None = None) -> Radicals:
    """Exact ``sum coeff*sqrt(radicand)`` in squarefree form.

    ``weights`` maps degree pairs ``(a, b)`` to multiplicities of
    ``sqrt(a^2 + b^2)``; ``plain`` maps radicands to coefficients directly.
    """
    acc: Counter[int] = Counter()
    for (a, b), mult in (weights or {}).items():
        c, r = split_square(a * a + b * b)
        acc[r] += c * mult
    for k, mult in (plain or {}).items():
        c, r = split_square(k)
        acc[r] += c * mult
    return tuple(sorted((r, c) for r, c in acc.items() if c))


def radicals_value(terms: Radicals) -> float:
    return math.fsum(c * math.sqrt(r) for r, c in terms)


@dataclass(frozen=True)
class ClosedForm:
    value: float
    regime: Regime
    variant: Variant
    terms: Radicals = field(default=(), compare=False)

    @classmethod
    def from_terms(cls, terms: Radicals, regime: Regime, variant: Variant) -> ClosedForm:
        return cls(radicals_value(terms), regime, variant, terms)


@dataclass(frozen=True)
class ExtremalParams:
    family: Family
    n: int
    delta: int | None = None
    legs: tuple[int, ...] | None = None
    cycle_len: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        if self.legs is not None:
            object.__setattr__(self, "legs", tuple(sorted(self.legs, reverse=True)))


def balanced_legs(total: int, k: int) -> tuple[int, ...]:
    """Split ``total`` into ``k`` near-equal parts, largest first."""
    q, r = divmod(total, k)
    return (q + 1,) * r + (q,) * (k - r)


def _attach_legs(edges: list[tuple[int, int]], start: int, hub: int, legs: Sequence[int]) -> int:
    nxt = start
    for length in legs:
        prev = hub
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt


def construct_spider(legs: Sequence[int]) -> Graph:
    legs = list(legs)
    if not legs:
        raise ValueError("a spider needs at least one leg")
    if any(not isinstance(a, int) or a < 1 for a in legs):
        raise ValueError(f"leg lengths must be positive integers, got {legs}")
    edges: list[tuple[int, int]] = []
    n = _attach_legs(edges, 1, 0, legs)
    return Graph(n, edges)


def _cycle_with_legs(cycle_len: int, legs: Sequence[int]) -> Graph:
    edges = [(i, i + 1) for i in range(cycle_len - 1)] + [(0, cycle_len - 1)]
    n = _attach_legs(edges, cycle_len, 0, legs)
    return Graph(n, edges)


def _check_range(n: int, delta: int, lo: int, hi: int, lo_name: str, hi_name: str) -> None:
    if delta < lo:
        raise ValueError(f"delta={delta} below lower bound {lo_name}={lo} for n={n}")
    if delta > hi:
        raise ValueError(f"delta={delta} above upper bound {hi_name}={hi} for n={n}")


def construct_T_nD(n: int, delta: int) -> Graph:
    """Star with center degree ``delta`` where ``n-delta-1`` leaves get a pendant edge."""
    if n < 4:
        raise ValueError(f"n={n} below lower bound 4")
    _check_range(n, delta, -(-(n - 1) // 2), n - 2, "ceil((n-1)/2)", "n-2")
    return construct_spider([2] * (n - delta - 1) + [1] * (2 * delta - n + 1))


def construct_T_D(n: int, delta: int, legs: Sequence[int] | None = None) -> Graph:
    """Spider with ``delta`` legs, each of length at least 2."""
    _check_range(n, delta, 3, (n - 1) // 2, "3", "floor((n-1)/2)")
    if legs is None:
        legs = balanced_legs(n - 1, delta)
    else:
        legs = tuple(legs)
        if len(legs) != delta:
            raise ValueError(f"expected {delta} legs, got {len(legs)}")
        if min(legs) < 2:
            raise ValueError(f"every leg must have length >= 2, got {legs}")
        if sum(legs) != n - 1:
            raise ValueError(f"leg lengths must sum to n-1={n - 1}, got {sum(legs)}")
    return construct_spider(legs)


def construct_U_nD(n: int, delta: int) -> Graph:
    """Triangle with ``2*delta-n-1`` pendants and ``n-delta-1`` two-edge paths at vertex 0."""
    if n < 5:
        raise ValueError(f"n={n} below lower bound 5")
    _check_range(n, delta, -(-(n + 1) // 2), n - 2, "ceil((n+1)/2)", "n-2")
    return _cycle_with_legs(3, [2] * (n - delta - 1) + [1] * (2 * delta - n - 1))


def construct_U_D(
    n: int,
    delta: int,
    cycle_len: int | None = None,
    legs: Sequence[int] | None = None,
) -> Graph:
    """Cycle with ``delta-2`` paths of length at least 2 hanging from vertex 0."""
    _check_range(n, delta, 3, (n + 1) // 2, "3", "floor((n+1)/2)")
    k = delta - 2
    if legs is None:
        c = 3 if cycle_len is None else cycle_len
        if c < 3:
            raise ValueError(f"cycle length must be >= 3, got {c}")
        if n - c < 2 * k:
            raise ValueError(f"cycle length {c} leaves {n - c} vertices for {k} legs of length >= 2")
        legs = balanced_legs(n - c, k)
    else:
        legs = tuple(legs)
        if len(legs) != k:
            raise ValueError(f"expected delta-2={k} legs, got {len(legs)}")
        if min(legs) < 2:
            raise ValueError(f"every leg must have length >= 2, got {legs}")
        c = n - sum(legs) if cycle_len is None else cycle_len
        if c < 3:
            raise ValueError(f"cycle length must be >= 3, got {c}")
        if c + sum(legs) != n:
            raise ValueError(f"cycle length {c} plus legs {sum(legs)} must equal n={n}")
    return _cycle_with_legs(c, legs)


def build(params: ExtremalParams) -> Graph:
    fam = params.family
    if fam is Family.SPIDER:
        if params.legs is None:
            raise ValueError("spider requires legs")
        return construct_spider(params.legs)
    if params.delta is None:
        raise ValueError(f"{fam.value} requires delta")
    if fam is Family.T_ND:
        return construct_T_nD(params.n, params.delta)
    if fam is Family.T_D:
        return construct_T_D(params.n, params.delta, params.legs)
    if fam is Family.U_ND:
        return construct_U_nD(params.n, params.delta)
    return construct_U_D(params.n, params.delta, params.cycle_len, params.legs)


def tree_regime(n: int, delta: int) -> Regime:
    return Regime.I if delta <= (n - 1) // 2 else Regime.II


def unicyclic_regime(n: int, delta: int) -> Regime:
    return Regime.I if delta <= (n + 1) // 2 else Regime.II


def _delta_range(n: int, delta: int) -> None:
    if not 3 <= delta <= n - 2:
        raise ValueError(f"closed forms need 3 <= delta <= n-2, got n={n}, delta={delta}")


def closed_form_tree(n: int, delta: int) -> ClosedForm:
    _delta_range(n, delta)
    d = delta
    if tree_regime(n, d) is Regime.I:
        terms = radicals({(d, 2): d, (2, 2): n - 2 * d - 1, (2, 1): d})
        return ClosedForm.from_terms(terms, Regime.I, Variant.AS_PRINTED)
    terms = radicals({(d, 2): n - d - 1, (d, 1): 2 * d - n + 1, (2, 1): n - d - 1})
    return ClosedForm.from_terms(terms, Regime.II, Variant.AS_PRINTED)


def closed_form_unicyclic(
    n: int, delta: int, variant: Variant | str = Variant.AS_CONSTRUCTED
) -> ClosedForm:
    """Regime (i) uses ``n-2*delta+4`` copies of sqrt(8) as printed, ``n-2*delta+2`` as constructed."""
    _delta_range(n, delta)
    variant = Variant(variant)
    d = delta
    if unicyclic_regime(n, d) is Regime.I:
        extra = 4 if variant is Variant.AS_PRINTED else 2
        terms = radicals({(d, 2): d, (2, 2): n - 2 * d + extra, (2, 1): d - 2})
        return ClosedForm.from_terms(terms, Regime.I, variant)
    terms = radicals(
        {(d, 2): n - d + 1, (d, 1): 2 * d - n - 1, (2, 1): n - d - 1, (2, 2): 1}
    )
    return ClosedForm.from_terms(terms, Regime.II, variant)


@dataclass(frozen=True)
class ChemicalBound:
    cls: GraphClass
    n: int
    delta: int
    printed: float
    printed_terms: Radicals
    theorem_printed: ClosedForm | None
    theorem_constructed: ClosedForm | None

    @property
    def discrepancy(self) -> float | None:
        """Printed chemical constant minus the closed-form value (as printed)."""
        if self.theorem_printed is None:
            return None
        return self.printed - self.theorem_printed.value


_COROLLARY = {
    (GraphClass.TREE, 3): lambda n: {2: 2 * n - 14, 13: 3, 5: 3},
    (GraphClass.TREE, 4): lambda n: {2: 2 * n - 6},
    (GraphClass.UNICYCLIC, 3): lambda n: {2: 2 * n - 4, 13: 3, 5: 1},
    (GraphClass.UNICYCLIC, 4): lambda n: {2: 2 * n - 8, 5: 10},
}


def closed_form_chemical(n: int, delta: int, cls: GraphClass | str) -> ChemicalBound:
    cls = GraphClass(cls)
    if cls is GraphClass.OTHER:
        raise ValueError("chemical bounds exist for trees and unicyclic graphs only")
    if delta not in (3, 4):
        raise ValueError(f"chemical bounds need delta in {{3, 4}}, got {delta}")
    min_n = 7 if cls is GraphClass.TREE else 5
    if n < min_n:
        raise ValueError(f"n={n} below lower bound {min_n} for {cls.value}")
    terms = radicals(plain=_COROLLARY[cls, delta](n))
    th_p = th_c = None
    if delta <= n - 2:
        if cls is GraphClass.TREE:
            th_p = th_c = closed_form_tree(n, delta)
        else:
            th_p = closed_form_unicyclic(n, delta, Variant.AS_PRINTED)
            th_c = closed_form_unicyclic(n, delta, Variant.AS_CONSTRUCTED)
    return ChemicalBound(cls, n, delta, radicals_value(terms), terms, th_p, th_c)


# Structure recognition -------------------------------------------------------


def _walk_leg(g: Graph, hub: int, first: int) -> int:
    """Length of the path starting ``hub -> first`` through degree-2 vertices."""
    prev, cur, length = hub, first, 1
    while g.degrees[cur] == 2:
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
        length += 1
    return length


def spider_legs(g: Graph) -> tuple[int, ...] | None:
    """Leg lengths (nonincreasing) if ``g`` is a spider with a hub of degree >= 3."""
    if classify(g) is not GraphClass.TREE:
        return None
    big = [v for v, d in enumerate(g.degrees) if d > 2]
    if len(big) != 1:
        return None
    hub = big[0]
    return tuple(sorted((_walk_leg(g, hub, u) for u in g.neighbors(hub)), reverse=True))


def is_spider(g: Graph) -> bool:
    """A tree with at most one vertex of degree more than two."""
    return classify(g) is GraphClass.TREE and sum(d > 2 for d in g.degrees) <= 1


@dataclass(frozen=True)
class UnicyclicShape:
    """A unicyclic graph whose only vertex of degree > 2 is ``hub`` on the cycle."""

    hub: int
    cycle_len: int
    legs: tuple[int, ...]


def unicyclic_shape(g: Graph) -> UnicyclicShape | None:
    if classify(g) is not GraphClass.UNICYCLIC:
        return None
    big = [v for v, d in enumerate(g.degrees) if d > 2]
    if len(big) != 1:
        return None
    hub = big[0]
    cycle = set(cycle_vertices(g))
    if hub not in cycle:
        return None
    legs = tuple(
        sorted((_walk_leg(g, hub, u) for u in g.neighbors(hub) if u not in cycle), reverse=True)
    )
    return UnicyclicShape(hub, len(cycle), legs)


def is_T_D_member(g: Graph, delta: int) -> bool:
    legs = spider_legs(g)
    return legs is not None and len(legs) == delta and min(legs) >= 2


def is_U_D_member(g: Graph, delta: int) -> bool:
    shape = unicyclic_shape(g)
    return (
        shape is not None
        and g.degrees[shape.hub] == delta
        and len(shape.legs) == delta - 2
        and min(shape.legs) >= 2
    )
