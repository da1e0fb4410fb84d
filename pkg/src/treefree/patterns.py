"""Catalog of the named tree patterns and the three small cubic graphs.

Tree labelings are canonical: the main path is u1..un, the
length-2 branch at u3 is v3, v3', pendants are w_i at u_i.  Vertex 0 is
always u1 and added vertices are appended, so embeddings and witness sets
replay deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Graph, build, contract_edge, is_connected
from .errors import ConstructionError, NotATreeError, UsageError
from . import embed


@dataclass(frozen=True)
class PatternSpec:
    """A named pattern: its graph plus its canonical vertex labeling."""

    pattern_id: str
    graph: Graph
    labels: dict[int, str] = field(default_factory=dict)


def _path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def path(n: int) -> PatternSpec:
    if n < 1:
        raise ConstructionError("path needs n >= 1")
    labels = {i: f"u{i + 1}" for i in range(n)}
    return PatternSpec(f"P{n}", build(n, _path_edges(n)), labels)


def cycle(n: int) -> PatternSpec:
    if n < 3:
        raise ConstructionError("cycle needs n >= 3")
    edges = _path_edges(n) + [(n - 1, 0)]
    return PatternSpec(f"C{n}", build(n, edges), {i: f"u{i + 1}" for i in range(n)})


def t_tree(n: int) -> PatternSpec:
    """Path u1..un plus the branch u3-v3-v3'.  Order n+2."""
    if n < 4:
        raise ConstructionError("T-tree needs n >= 4")
    edges = _path_edges(n) + [(2, n), (n, n + 1)]
    labels = {i: f"u{i + 1}" for i in range(n)}
    labels[n] = "v3"
    labels[n + 1] = "v3'"
    return PatternSpec(f"T{n}", build(n + 2, edges), labels)


def tstar_tree(n: int) -> PatternSpec:
    """T-tree with a second length-2 branch at u_{n-2}.  Order n+4."""
    if n < 6:
        raise ConstructionError("Tstar-tree needs n >= 6")
    base = t_tree(n)
    edges = list(base.graph.edges()) + [(n - 3, n + 2), (n + 2, n + 3)]
    labels = dict(base.labels)
    labels[n + 2] = f"w{n - 2}"
    labels[n + 3] = f"w{n - 2}'"
    return PatternSpec(f"Tstar{n}", build(n + 4, edges), labels)


def s_tree(n: int, flags: tuple[int, ...]) -> PatternSpec:
    """T-tree with pendants w_i at each u_i (4 <= i <= n-1) where the flag is 1."""
    if n < 5:
        raise ConstructionError("S-tree needs n >= 5")
    if len(flags) != n - 4 or any(f not in (0, 1) for f in flags):
        raise ConstructionError(f"S{n} needs {n - 4} flags in {{0,1}}")
    base = t_tree(n)
    edges = list(base.graph.edges())
    labels = dict(base.labels)
    nxt = n + 2
    for i, f in zip(range(4, n), flags):
        if f:
            edges.append((i - 1, nxt))
            labels[nxt] = f"w{i}"
            nxt += 1
    bits = "".join(str(f) for f in flags)
    return PatternSpec(f"S{n}:{bits}", build(nxt, edges), labels)


def t8_1() -> PatternSpec:
    """Path of 8, branch at u3, pendants at u5 and u6 (order 12)."""
    spec = s_tree(8, (0, 1, 1, 0))
    return PatternSpec("T8_1", spec.graph, spec.labels)


def t8_2() -> PatternSpec:
    """Path of 8, branch at u3, pendant at u4 (order 11)."""
    spec = s_tree(8, (1, 0, 0, 0))
    return PatternSpec("T8_2", spec.graph, spec.labels)


def s8_1() -> PatternSpec:
    """Path of 8, length-2 branches at u3 and u6, pendants at u4, u5 (order 14)."""
    edges = _path_edges(8) + [(2, 8), (8, 9), (5, 10), (10, 11), (3, 12), (4, 13)]
    labels = {i: f"u{i + 1}" for i in range(8)}
    labels.update({8: "v3", 9: "v3'", 10: "v6", 11: "v6'", 12: "w4", 13: "w5"})
    return PatternSpec("S8_1", build(14, edges), labels)


def s8_2() -> PatternSpec:
    """Path of 8 with pendants at u4 and u5 (order 10)."""
    edges = _path_edges(8) + [(3, 8), (4, 9)]
    labels = {i: f"u{i + 1}" for i in range(8)}
    labels.update({8: "w4", 9: "w5"})
    return PatternSpec("S8_2", build(10, edges), labels)


def t8star(p1: int, p2: int) -> PatternSpec:
    """Double spider of order 2*p1 + 2*p2 + 6.

    Hubs v and w are joined by the path v-a1-b1-w; a1 carries the pendant
    x1; v carries p1 legs of length 2 plus one extra pendant; w carries p2
    legs of length 2.
    """
    if p1 < 1 or p2 < 1:
        raise ConstructionError("t8star needs p1, p2 >= 1")
    edges = [(0, 1), (1, 2), (2, 3), (1, 4), (0, 5)]
    labels = {0: "v", 1: "a1", 2: "b1", 3: "w", 4: "x1", 5: f"a{p1 + 2}"}
    nxt = 6
    for i in range(2, p1 + 2):
        edges += [(0, nxt), (nxt, nxt + 1)]
        labels[nxt] = f"a{i}"
        labels[nxt + 1] = f"x{i}"
        nxt += 2
    for j in range(1, p2 + 1):
        edges += [(3, nxt), (nxt, nxt + 1)]
        labels[nxt] = f"b{j + 1}"
        labels[nxt + 1] = f"y{j + 1}"
        nxt += 2
    return PatternSpec(f"T8star:{p1},{p2}", build(nxt, edges), labels)


def petersen() -> PatternSpec:
    """Generalized Petersen GP(5,2): outer u_i, inner v_i, spokes u_i v_i."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + i))
        edges.append((5 + i, 5 + (i + 2) % 5))
    labels = {i: f"u{i}" for i in range(5)}
    labels.update({5 + i: f"v{i}" for i in range(5)})
    return PatternSpec("petersen", build(10, edges), labels)


def heawood() -> PatternSpec:
    """Fano incidence graph in its standard circular (LCF [5,-5]^7) labeling.

    Even ids are points, odd ids are lines; (0,1) is a cycle edge, which is
    what contracted_heawood() contracts.
    """
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return PatternSpec("heawood", build(14, edges), {i: str(i) for i in range(14)})


def contracted_heawood() -> PatternSpec:
    g = contract_edge(heawood().graph, (0, 1))
    return PatternSpec("contracted_heawood", g, {i: str(i) for i in range(13)})


_NAMED = {
    "petersen": petersen,
    "heawood": heawood,
    "contracted_heawood": contracted_heawood,
}


def named_graph(name: str) -> PatternSpec:
    try:
        return _NAMED[name.lower()]()
    except KeyError:
        raise UsageError(f"unknown named graph {name!r}") from None


def make(pattern_id: str) -> PatternSpec:
    """Resolve a CLI pattern id: T9, T8_1, S8:0110, Tstar8, T8star:2,1, P10, ..."""
    s = pattern_id.strip().lower()
    fixed = {"t8_1": t8_1, "t8_2": t8_2, "s8_1": s8_1, "s8_2": s8_2}
    if s in fixed:
        return fixed[s]()
    if s in _NAMED:
        return _NAMED[s]()
    try:
        if s.startswith("t8star:"):
            p1, p2 = (int(x) for x in s[7:].split(","))
            return t8star(p1, p2)
        if s.startswith("tstar"):
            return tstar_tree(int(s[5:]))
        if s.startswith("s") and ":" in s:
            head, _, tail = s.partition(":")
            return s_tree(int(head[1:]), tuple(int(c) for c in tail))
        if s.startswith("p"):
            return path(int(s[1:]))
        if s.startswith("c"):
            return cycle(int(s[1:]))
        if s.startswith("t"):
            return t_tree(int(s[1:]))
    except ValueError as exc:
        raise UsageError(f"bad pattern id {pattern_id!r}: {exc}") from exc
    raise UsageError(f"unknown pattern id {pattern_id!r}")


def is_tree(g: Graph) -> bool:
    return g.n > 0 and is_connected(g) and g.edge_count == g.n - 1


def is_caterpillar(t: Graph) -> bool:
    """True iff deleting the vertices of some path leaves no edges.

    Decided by leaf stripping: a tree is a caterpillar exactly when removing
    all its leaves yields a (possibly empty) path.
    """
    if not is_tree(t):
        raise NotATreeError("is_caterpillar needs a tree")
    inner = [v for v in range(t.n) if t.degree(v) >= 2]
    if not inner:
        return True
    keep = set(inner)
    degs = [sum(1 for u in t.neighbors(v) if u in keep) for v in inner]
    return max(degs) <= 2


def is_subtree(t: Graph, host: Graph) -> bool:
    """Subgraph containment for trees in trees.

    Any connected subgraph of a tree is induced, so this reduces to an
    induced embedding and is routed through the engine.
    """
    if not is_tree(t) or not is_tree(host):
        raise NotATreeError("is_subtree needs two trees")
    return embed.find_induced(t, host) is not None
