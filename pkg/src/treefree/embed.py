"""Induced-subgraph containment, embedding enumeration, and isomorphism.

The main search places pattern vertices in a connected order (max-degree
first) and forward-checks candidate bitmasks: adjacency and non-adjacency
against every placed image, plus a distance filter (an induced image can
only shrink distances, so the image of q lies within pattern-distance of the
image of p).  Candidates are scanned in ascending host id, which makes every
returned witness deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import Graph, bfs_levels
from .errors import CapacityError

PATTERN_CAP = 16
ISO_CAP = 64
ORACLE_PATTERN_CAP = 8
ORACLE_HOST_CAP = 40


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern-vertex i -> host-vertex mapping[i], induced."""

    mapping: tuple[int, ...]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.mapping))

    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)


def _search_order(pattern: Graph) -> list[int]:
    """Connected placement order starting from a maximum-degree vertex."""
    n = pattern.n
    order: list[int] = []
    placed = 0
    while len(order) < n:
        best_key = None
        best_v = -1
        for v in range(n):
            if placed >> v & 1:
                continue
            key = ((pattern.row(v) & placed).bit_count(), pattern.degree(v), -v)
            if best_key is None or key > best_key:
                best_key, best_v = key, v
        order.append(best_v)
        placed |= 1 << best_v
    return order


def _all_pairs_dist(g: Graph) -> list[list[int]]:
    return [bfs_levels(g, v) for v in range(g.n)]


def _balls(host: Graph, radius: int) -> list[list[int]]:
    """balls[h][r] = bitmask of vertices at distance <= r from h."""
    out = []
    for h in range(host.n):
        dist = bfs_levels(host, h)
        acc = [0] * (radius + 1)
        for v, d in enumerate(dist):
            if 0 <= d <= radius:
                for r in range(d, radius + 1):
                    acc[r] |= 1 << v
        out.append(acc)
    return out


def _search(pattern: Graph, host: Graph, limit: int | None) -> list[Embedding]:
    k = pattern.n
    if k > PATTERN_CAP:
        raise CapacityError(f"pattern has {k} > {PATTERN_CAP} vertices")
    if k == 0:
        return [Embedding(())]
    if k > host.n:
        return []
    order = _search_order(pattern)
    pdist = _all_pairs_dist(pattern)
    maxr = max((d for row in pdist for d in row if d > 0), default=0)
    ball = _balls(host, maxr)
    hrow = [host.row(x) for x in range(host.n)]
    full = (1 << host.n) - 1
    base = [0] * k
    for q in range(k):
        dq = pattern.degree(q)
        m = 0
        for x in range(host.n):
            if hrow[x].bit_count() >= dq:
                m |= 1 << x
        base[q] = m
    mapping = [-1] * k
    found: list[Embedding] = []

    def place(idx: int, cand: list[int]) -> bool:
        q = order[idx]
        m = cand[q]
        while m:
            low = m & -m
            m ^= low
            h = low.bit_length() - 1
            if idx + 1 == k:
                mapping[q] = h
                found.append(Embedding(tuple(mapping)))
                mapping[q] = -1
                if limit is not None and len(found) >= limit:
                    return True
                continue
            nxt = cand[:]
            adj = hrow[h]
            nonadj = full & ~adj & ~low
            ok = True
            for r in order[idx + 1:]:
                c = nxt[r] & (adj if pattern.has_edge(q, r) else nonadj)
                d = pdist[q][r]
                if d > 0:
                    c &= ball[h][d]
                if c == 0:
                    ok = False
                    break
                nxt[r] = c
            if ok:
                mapping[q] = h
                if place(idx + 1, nxt):
                    return True
                mapping[q] = -1
        return False

    place(0, base)
    return found


def find_induced(pattern: Graph, host: Graph) -> Embedding | None:
    """First induced embedding of ``pattern`` in ``host``, or None."""
    out = _search(pattern, host, limit=1)
    return out[0] if out else None


def find_all_induced(pattern: Graph, host: Graph, limit: int | None = None) -> list[Embedding]:
    """Every induced embedding (up to ``limit``), in deterministic order."""
    return _search(pattern, host, limit=limit)


def is_free(host: Graph, pattern: Graph) -> bool:
    """True iff ``host`` contains no induced copy of ``pattern``."""
    return find_induced(pattern, host) is None


def verify_embedding(
    pattern: Graph, host: Graph, mapping: Embedding | Mapping[int, int] | Sequence[int]
) -> bool:
    """Check injectivity plus the induced condition, edge for edge."""
    if isinstance(mapping, Embedding):
        img = list(mapping.mapping)
    elif isinstance(mapping, Mapping):
        if sorted(mapping.keys()) != list(range(pattern.n)):
            return False
        img = [mapping[i] for i in range(pattern.n)]
    else:
        img = list(mapping)
    if len(img) != pattern.n or len(set(img)) != len(img):
        return False
    if any(not 0 <= h < host.n for h in img):
        return False
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            if pattern.has_edge(a, b) != host.has_edge(img[a], img[b]):
                return False
    return True


def oracle_find_induced(pattern: Graph, host: Graph) -> Embedding | None:
    """Validation oracle: exhaustive assignment in natural vertex order.

    No degree filter, no reordering, no look-ahead; prefixes are abandoned
    only once they already violate the induced condition.
    """
    k, n = pattern.n, host.n
    if k > ORACLE_PATTERN_CAP:
        raise CapacityError(f"oracle pattern cap is {ORACLE_PATTERN_CAP}")
    if n > ORACLE_HOST_CAP:
        raise CapacityError(f"oracle host cap is {ORACLE_HOST_CAP}")
    if k == 0:
        return Embedding(())
    chosen: list[int] = []

    def extend() -> bool:
        i = len(chosen)
        if i == k:
            return True
        for h in range(n):
            if h in chosen:
                continue
            if all(pattern.has_edge(i, j) == host.has_edge(h, chosen[j]) for j in range(i)):
                chosen.append(h)
                if extend():
                    return True
                chosen.pop()
        return False

    return Embedding(tuple(chosen)) if extend() else None


def _joint_wl_colors(g: Graph, h: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Neighbor-color refinement over both graphs against one shared table.

    Ranks are assigned from the sorted signature set of the union, so equal
    colors mean equal refinement signatures across the two graphs.
    """
    cg = [g.degree(v) for v in range(g.n)]
    ch = [h.degree(v) for v in range(h.n)]
    for _ in range(max(g.n, h.n)):
        sig_g = [(cg[v], tuple(sorted(cg[u] for u in g.neighbors(v)))) for v in range(g.n)]
        sig_h = [(ch[v], tuple(sorted(ch[u] for u in h.neighbors(v)))) for v in range(h.n)]
        rank = {s: i for i, s in enumerate(sorted(set(sig_g + sig_h)))}
        new_g = [rank[s] for s in sig_g]
        new_h = [rank[s] for s in sig_h]
        if new_g == cg and new_h == ch:
            break
        cg, ch = new_g, new_h
    return tuple(cg), tuple(ch)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism decision via color-refined backtracking."""
    if g.n > ISO_CAP or h.n > ISO_CAP:
        raise CapacityError(f"isomorphism cap is {ISO_CAP} vertices")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    n = g.n
    if n == 0:
        return True
    gc, hc = _joint_wl_colors(g, h)
    if sorted(gc) != sorted(hc):
        return False
    # candidates restricted to matching refinement colors
    cand = [0] * n
    for v in range(n):
        for x in range(n):
            if gc[v] == hc[x]:
                cand[v] |= 1 << x
    order = sorted(range(n), key=lambda v: (cand[v].bit_count(), -g.degree(v), v))
    full = (1 << n) - 1
    mapping = [-1] * n

    def place(idx: int, masks: list[int]) -> bool:
        if idx == n:
            return True
        v = order[idx]
        m = masks[v]
        while m:
            low = m & -m
            m ^= low
            x = low.bit_length() - 1
            adj = h.row(x)
            nonadj = full & ~adj & ~low
            nxt = masks[:]
            ok = True
            for w in order[idx + 1:]:
                c = nxt[w] & (adj if g.has_edge(v, w) else nonadj)
                if c == 0:
                    ok = False
                    break
                nxt[w] = c
            if ok:
                mapping[v] = x
                if place(idx + 1, nxt):
                    return True
                mapping[v] = -1
        return False

    return place(0, cand)
