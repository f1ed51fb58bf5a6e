"""Pendant-path relocation moves that strictly lower the Sombor index.

A site picks a vertex ``x0`` of degree at least 3 with a pendant path
``x1 .. xh`` hanging from it, and a different pendant path ``w1 .. wk``
hanging from ``w0`` and ending at the leaf ``wk``. Applying the site
deletes ``x0 x1`` and adds ``wk x1``, so the x-path is re-hung from the
end of the w-path. The move is ``A1`` when ``w0 == x0`` and ``A2``
otherwise.

Pendant paths are taken maximal: ``w0`` is the first vertex of degree
other than two met when walking inward from the leaf. Every vertex on a
pendant path other than the leaf has degree exactly two.
"""

from __future__ import annotations

import enum
from collections.abc import Callable
from dataclasses import dataclass

from .graph import Graph
from .index import SOMBOR, IndexDescriptor, index_value


class Kind(str, enum.Enum):
    A1 = "A1"
    A2 = "A2"


class SiteError(ValueError):
    """The site does not describe a valid move on the given graph."""


@dataclass(frozen=True)
class TransformSite:
    kind: Kind
    x0: int
    x1: int
    w0: int
    wk: int
    k: int
    h: int
    x_path: tuple[int, ...]
    w_path: tuple[int, ...]
    preserves_delta: bool

    @property
    def case(self) -> str:
        """Which branch of the relocation case analysis the site falls under.

        ``"i"``: A1 with ``k = h = 1``; ``"ii"``: A2 with ``k = h = 1``;
        ``"iii"``: ``k >= 2, h = 1``; ``"iv"``: ``k, h >= 2``; ``"k1"``:
        ``k = 1, h >= 2``, which the case split does not list separately.
        """
        if self.k == 1 and self.h == 1:
            return "i" if self.kind is Kind.A1 else "ii"
        if self.h == 1:
            return "iii"
        if self.k >= 2:
            return "iv"
        return "k1"


def pendant_paths(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    """All maximal pendant paths as ``(anchor, (p1, ..., leaf))`` sorted by leaf.

    Paths whose walk ends at another leaf (``g`` is itself a path) are skipped.
    """
    deg = g.degrees
    out = []
    for leaf in range(g.n):
        if deg[leaf] != 1:
            continue
        path = [leaf]
        prev, cur = leaf, g.neighbors(leaf)[0]
        while deg[cur] == 2:
            path.append(cur)
            a, b = g.neighbors(cur)
            prev, cur = cur, (b if a == prev else a)
        if deg[cur] < 3:
            continue
        out.append((cur, tuple(reversed(path))))
    return out


def _preserves_delta(g: Graph, x0: int, wk: int) -> bool:
    deg = list(g.degrees)
    before = max(deg)
    deg[x0] -= 1
    deg[wk] += 1
    return max(deg) == before


def find_sites(g: Graph) -> list[TransformSite]:
    """Every valid site, ordered by ``(x0, x1, wk)``."""
    paths = pendant_paths(g)
    sites = []
    for x0, xp in paths:
        for w0, wp in paths:
            if wp == xp:
                continue
            sites.append(
                TransformSite(
                    kind=Kind.A1 if w0 == x0 else Kind.A2,
                    x0=x0,
                    x1=xp[0],
                    w0=w0,
                    wk=wp[-1],
                    k=len(wp),
                    h=len(xp),
                    x_path=xp,
                    w_path=wp,
                    preserves_delta=_preserves_delta(g, x0, wp[-1]),
                )
            )
    sites.sort(key=lambda s: (s.x0, s.x1, s.wk))
    return sites


def validate(g: Graph, site: TransformSite) -> None:
    paths = dict((p[-1], (a, p)) for a, p in pendant_paths(g))
    x_leaf = site.x_path[-1] if site.x_path else None
    if paths.get(x_leaf) != (site.x0, site.x_path) or site.x_path[0] != site.x1:
        raise SiteError(f"x-path {site.x_path} is not a pendant path at {site.x0}")
    if paths.get(site.wk) != (site.w0, site.w_path):
        raise SiteError(f"w-path {site.w_path} is not a pendant path at {site.w0}")
    if site.w_path == site.x_path:
        raise SiteError("x-path and w-path must differ")
    if (site.kind is Kind.A1) != (site.w0 == site.x0):
        raise SiteError(f"kind {site.kind.value} inconsistent with anchors")
    if (site.k, site.h) != (len(site.w_path), len(site.x_path)):
        raise SiteError("path lengths do not match the stored paths")


def apply(g: Graph, site: TransformSite) -> Graph:
    """Return ``g - x0 x1 + wk x1``."""
    validate(g, site)
    return g.with_edges(remove=[(site.x0, site.x1)], add=[(site.wk, site.x1)])


def predicted_delta(g: Graph, site: TransformSite, d: IndexDescriptor = SOMBOR) -> float:
    """``index(apply(g, site)) - index(g)`` from the edges at ``x0`` and ``wk`` only."""
    validate(g, site)
    x0, x1, wk = site.x0, site.x1, site.wk
    deg = g.degrees
    new = {x0: deg[x0] - 1, wk: deg[wk] + 1}

    def nd(v: int) -> int:
        return new.get(v, deg[v])

    before = after = 0.0
    for a in (x0, wk):
        for u in g.neighbors(a):
            if a == wk and u == x0:
                continue  # counted from the x0 side
            before += d.weight(deg[a], deg[u])
            if a == x0 and u == x1:
                continue
            after += d.weight(nd(a), nd(u))
    after += d.weight(nd(wk), nd(x1))
    return after - before


@dataclass(frozen=True)
class DescentStep:
    site: TransformSite
    value_before: float
    value_after: float


def descend(
    g: Graph,
    choose: Callable[[list[TransformSite]], TransformSite | None] | None = None,
    d: IndexDescriptor = SOMBOR,
) -> tuple[Graph, list[DescentStep]]:
    """Apply sites until ``choose`` declines; returns the final graph and trace.

    The default policy takes the first site that keeps the maximum degree.
    """
    if choose is None:
        def choose(sites: list[TransformSite]) -> TransformSite | None:
            return next((s for s in sites if s.preserves_delta), None)

    trace: list[DescentStep] = []
    value = index_value(g, d)
    while True:
        site = choose(find_sites(g))
        if site is None:
            return g, trace
        g = apply(g, site)
        new_value = index_value(g, d)
        trace.append(DescentStep(site, value, new_value))
        value = new_value
