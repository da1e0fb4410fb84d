"""Chromatic number via degree-2 peeling plus exact coloring of the 3-core.

The structured route mirrors the intended use: a bipartite test first, then
peel vertices of residual degree <= 2 (they re-color greedily with 3 colors
in hand), then color each 3-core component exactly and take max(. , 3).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, bits, components, induced, is_bipartite
from .errors import CapacityError

DEFAULT_CAP = 24


@dataclass(frozen=True)
class PeelDecomposition:
    """Maximal degree-<=2 removal sequence and the surviving 3-core."""

    order: tuple[int, ...]
    core_vertices: tuple[int, ...]
    core: Graph
    core_components: list[Graph]


def peel(g: Graph) -> PeelDecomposition:
    """Remove the lowest-id vertex of residual degree <= 2 until none remains.

    The surviving set is the 3-core, which is independent of removal order.
    """
    alive = (1 << g.n) - 1
    deg = [g.degree(v) for v in range(g.n)]
    order: list[int] = []
    while True:
        pick = -1
        for v in bits(alive):
            if deg[v] <= 2:
                pick = v
                break
        if pick < 0:
            break
        order.append(pick)
        alive &= ~(1 << pick)
        for u in bits(g.row(pick) & alive):
            deg[u] -= 1
    core_vertices = tuple(bits(alive))
    core = induced(g, core_vertices)
    comps = [induced(core, comp) for comp in components(core)]
    return PeelDecomposition(tuple(order), core_vertices, core, comps)


def _greedy_clique(g: Graph) -> int:
    best = 1 if g.n else 0
    for v in range(g.n):
        clique = 1 << v
        common = g.row(v)
        while common:
            u = next(bits(common))
            clique |= 1 << u
            common &= g.row(u)
        best = max(best, clique.bit_count())
    return best


def _dsatur_upper(g: Graph) -> int:
    n = g.n
    colors = [0] * n
    satur = [set() for _ in range(n)]
    used = 0
    for _ in range(n):
        v = max(
            (x for x in range(n) if colors[x] == 0),
            key=lambda x: (len(satur[x]), g.degree(x), -x),
        )
        c = 1
        while c in satur[v]:
            c += 1
        colors[v] = c
        used = max(used, c)
        for u in g.neighbors(v):
            satur[u].add(c)
    return used


def _k_colorable(g: Graph, k: int) -> bool:
    """Exact k-colorability: DSATUR-ordered backtracking, new colors last."""
    n = g.n
    colors = [0] * n
    satur = [set() for _ in range(n)]

    def assign(done: int, used: int) -> bool:
        if done == n:
            return True
        v = max(
            (x for x in range(n) if colors[x] == 0),
            key=lambda x: (len(satur[x]), g.degree(x), -x),
        )
        for c in range(1, min(used + 1, k) + 1):
            if c in satur[v]:
                continue
            colors[v] = c
            touched = []
            for u in g.neighbors(v):
                if colors[u] == 0 and c not in satur[u]:
                    satur[u].add(c)
                    touched.append(u)
            if assign(done + 1, max(used, c)):
                return True
            colors[v] = 0
            for u in touched:
                satur[u].remove(c)
        return False

    return assign(0, 0)


def chi_exact(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Exact chromatic number by branch and bound under a size cap."""
    if g.n > cap:
        raise CapacityError(f"chi_exact capped at {cap} vertices, got {g.n}")
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    if is_bipartite(g):
        return 2
    low = max(3, _greedy_clique(g))
    high = _dsatur_upper(g)
    k = low
    while k < high and not _k_colorable(g, k):
        k += 1
    return k


def chi_structured(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Bipartite test, degree-2 peeling, exact coloring of core components.

    Equals chi_exact wherever both are defined; the cap applies to each
    3-core component rather than the whole graph.
    """
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    if is_bipartite(g):
        return 2
    dec = peel(g)
    best = 3
    for comp in dec.core_components:
        if comp.n > cap:
            raise CapacityError(f"3-core component with {comp.n} vertices exceeds cap {cap}")
        best = max(best, chi_exact(comp, cap))
    return best
