"""The four infinite girth-5 families plus a generalized-Petersen testbed.

Id helpers (h1_u, h2_w, ...) expose the per-copy coordinates, so the
named lemma checks can replay fixed witness sets by coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Graph, build, is_c3c4_free, is_connected, stats
from .errors import ConstructionError


@dataclass(frozen=True)
class FamilyGraph:
    family: str
    size: int
    graph: Graph
    labels: dict[int, str] = field(default_factory=dict)


def _validate(fg: FamilyGraph, order: int, min_degree: int, regular: int | None = None) -> FamilyGraph:
    g = fg.graph
    if g.n != order:
        raise ConstructionError(f"{fg.family}({fg.size}): order {g.n} != {order}")
    if not is_connected(g):
        raise ConstructionError(f"{fg.family}({fg.size}): disconnected")
    if not is_c3c4_free(g):
        raise ConstructionError(f"{fg.family}({fg.size}): contains a C3 or C4")
    st = stats(g)
    if st.min_degree < min_degree:
        raise ConstructionError(f"{fg.family}({fg.size}): min degree {st.min_degree} < {min_degree}")
    if regular is not None and (st.min_degree != regular or st.max_degree != regular):
        raise ConstructionError(f"{fg.family}({fg.size}): not {regular}-regular")
    return fg


# ---------------------------------------------------------------- h1

def h1_u(i: int, j: int) -> int:
    """Vertex id of cycle vertex u^(i)_j (1-based i, j in 1..6)."""
    return (i - 1) * 6 + (j - 1)


def h1_v(s: int, h: int) -> int:
    """Vertex id of hub v_h (h in 1..3)."""
    return 6 * s + (h - 1)


def h1(s: int) -> FamilyGraph:
    """s disjoint 6-cycles plus v1,v2,v3; u^(i)_j ~ v_h iff j = h (mod 3).

    Order 6s+3.  Minimum degree 3 needs s >= 2 (the hubs have degree 2s).
    """
    if s < 1:
        raise ConstructionError("h1 needs s >= 1")
    edges = []
    labels = {}
    for i in range(1, s + 1):
        for j in range(1, 7):
            labels[h1_u(i, j)] = f"u{i}.{j}"
            edges.append((h1_u(i, j), h1_u(i, j % 6 + 1)))
            edges.append((h1_u(i, j), h1_v(s, (j - 1) % 3 + 1)))
    for h in range(1, 4):
        labels[h1_v(s, h)] = f"v{h}"
    fg = FamilyGraph("h1", s, build(6 * s + 3, edges), labels)
    return _validate(fg, 6 * s + 3, 3 if s >= 2 else 2)


# ---------------------------------------------------------------- h2

def h2_u(i: int, j: int) -> int:
    return (i - 1) * 15 + (j - 1)


def h2_v(i: int, j: int) -> int:
    return (i - 1) * 15 + 5 + (j - 1)


def h2_w(i: int, j: int) -> int:
    return (i - 1) * 15 + 10 + (j - 1)


def h2_z(s: int) -> int:
    return 15 * s


def h2(s: int) -> FamilyGraph:
    """s copies of the double-5-cycle gadget joined through the hub z.

    Each copy has 5-cycles u1..u5 and v1..v5 plus w_j adjacent to u_j, v_j;
    z is adjacent to every w.  Order 15s+1.
    """
    if s < 1:
        raise ConstructionError("h2 needs s >= 1")
    edges = []
    labels = {h2_z(s): "z"}
    for i in range(1, s + 1):
        for j in range(1, 6):
            nj = j % 5 + 1
            edges.append((h2_u(i, j), h2_u(i, nj)))
            edges.append((h2_v(i, j), h2_v(i, nj)))
            edges.append((h2_w(i, j), h2_u(i, j)))
            edges.append((h2_w(i, j), h2_v(i, j)))
            edges.append((h2_w(i, j), h2_z(s)))
            labels[h2_u(i, j)] = f"u{i}.{j}"
            labels[h2_v(i, j)] = f"v{i}.{j}"
            labels[h2_w(i, j)] = f"w{i}.{j}"
    fg = FamilyGraph("h2", s, build(15 * s + 1, edges), labels)
    return _validate(fg, 15 * s + 1, 3)


# ---------------------------------------------------------------- h3

# The 14-vertex ring gadget.  Within one copy
# the offsets are: u1, u2, then v(j,h), then w(j,h').  u1 and u2 have
# degree 2 here and reach degree 3 through the ring edges.
_H3_OFFSET = {
    "u1": 0, "u2": 1,
    "v11": 2, "v12": 3, "v21": 4, "v22": 5,
    "w11": 6, "w12": 7, "w13": 8, "w14": 9,
    "w21": 10, "w22": 11, "w23": 12, "w24": 13,
}

_H3_GADGET_EDGES = [
    ("u1", "v11"), ("u1", "v12"), ("u2", "v21"), ("u2", "v22"),
    ("v11", "w11"), ("v11", "w12"), ("v12", "w13"), ("v12", "w14"),
    ("v21", "w21"), ("v21", "w22"), ("v22", "w23"), ("v22", "w24"),
    ("w11", "w21"), ("w12", "w23"), ("w13", "w22"), ("w14", "w24"),
    ("w11", "w13"), ("w12", "w14"), ("w21", "w23"), ("w22", "w24"),
]


def h3_u(i: int, j: int) -> int:
    return (i - 1) * 14 + _H3_OFFSET[f"u{j}"]


def h3_v(i: int, j: int, h: int) -> int:
    return (i - 1) * 14 + _H3_OFFSET[f"v{j}{h}"]


def h3_w(i: int, j: int, h: int) -> int:
    return (i - 1) * 14 + _H3_OFFSET[f"w{j}{h}"]


def h3(s: int) -> FamilyGraph:
    """Ring of s gadget copies joined by edges u^(i)_2 u^(i+1)_1 (mod s).

    Order 14s, 3-regular.  s >= 4 keeps the ring from closing short cycles.
    """
    if s < 4:
        raise ConstructionError("h3 needs s >= 4")
    edges = []
    labels = {}
    for i in range(1, s + 1):
        base = (i - 1) * 14
        for a, b in _H3_GADGET_EDGES:
            edges.append((base + _H3_OFFSET[a], base + _H3_OFFSET[b]))
        for name, off in _H3_OFFSET.items():
            labels[base + off] = f"{name[0]}{i}." + ".".join(name[1:])
        edges.append((h3_u(i, 2), h3_u(i % s + 1, 1)))
    fg = FamilyGraph("h3", s, build(14 * s, edges), labels)
    return _validate(fg, 14 * s, 3, regular=3)


# ---------------------------------------------------------------- h4

def h4_u(i: int, j: int) -> int:
    return (i - 1) * 9 + (j - 1)


def h4_v(i: int, h: int) -> int:
    return (i - 1) * 9 + 6 + (h - 1)


def h4_z(s: int) -> int:
    return 9 * s


def h4(s: int) -> FamilyGraph:
    """s copies of the 9-vertex h1 block plus a hub z on all v vertices.

    Each block B_i is a 6-cycle with v_1,v_2,v_3 attached by the mod-3 rule;
    B_i together with z induces a Petersen graph.  Order 9s+1.
    """
    if s < 1:
        raise ConstructionError("h4 needs s >= 1")
    edges = []
    labels = {h4_z(s): "z"}
    for i in range(1, s + 1):
        for j in range(1, 7):
            edges.append((h4_u(i, j), h4_u(i, j % 6 + 1)))
            edges.append((h4_u(i, j), h4_v(i, (j - 1) % 3 + 1)))
            labels[h4_u(i, j)] = f"u{i}.{j}"
        for h in range(1, 4):
            edges.append((h4_z(s), h4_v(i, h)))
            labels[h4_v(i, h)] = f"v{i}.{h}"
    fg = FamilyGraph("h4", s, build(9 * s + 1, edges), labels)
    return _validate(fg, 9 * s + 1, 3)


# ---------------------------------------------------------------- gp

def gp(n: int, k: int = 2) -> FamilyGraph:
    """Generalized Petersen graph GP(n,2) for odd n >= 5.

    Outer n-cycle u_i, spokes u_i v_i, inner edges v_i v_{i+2}.  Even n
    is rejected (n=6 would close inner triangles); the construction-time
    validator asserts girth >= 5 and 3-regularity.
    """
    if k != 2:
        raise ConstructionError("only GP(n,2) is supported")
    if n < 5 or n % 2 == 0:
        raise ConstructionError("gp needs odd n >= 5")
    edges = []
    labels = {}
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + 2) % n))
        labels[i] = f"u{i}"
        labels[n + i] = f"v{i}"
    fg = FamilyGraph("gp", n, build(2 * n, edges), labels)
    return _validate(fg, 2 * n, 3, regular=3)


def make_family(family_id: str) -> FamilyGraph:
    """Resolve a CLI family id like "h1:5" or "gp:25"."""
    head, sep, tail = family_id.strip().lower().partition(":")
    table = {"h1": h1, "h2": h2, "h3": h3, "h4": h4, "gp": gp}
    if not sep or head not in table:
        raise ConstructionError(f"unknown family id {family_id!r}")
    try:
        size = int(tail)
    except ValueError:
        raise ConstructionError(f"bad size in family id {family_id!r}") from None
    return table[head](size)
