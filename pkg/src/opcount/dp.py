"""Fast exact counting via dynamic programming.

MOPs are counted over their weak dual tree: every bag is a triangle, and
adjacent bags share exactly two vertices, so messages live on the shared
edge.  A message maps the boundary pair's state to the number of valid
assignments of all vertices strictly inside the child piece; the state of
a boundary vertex is either "selected" or the capped count of selected
neighbors it has accumulated inside the piece (excluding the other
boundary vertex).  An unselected vertex is checked against the threshold
at the unique face where it is forgotten.

Trees are counted with the usual rooted-vertex DP.

Counts are plain Python integers, so there is no overflow to worry about.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .graph import Graph, GraphError
from .mop import Mop, MopError

IN = -1

State = Tuple[int, int]
Message = Dict[State, int]


@dataclass(frozen=True)
class Decomposition:
    """Width-2 tree decomposition of a Mop: bags are the dual-tree faces."""

    bags: Tuple[Tuple[int, int, int], ...]
    parent: Tuple[int, ...]          # parent bag index, -1 at the root
    parent_edge: Tuple[Optional[Tuple[int, int]], ...]
    order: Tuple[int, ...]           # bottom-up processing order


def decomposition_of_mop(m: Mop) -> Decomposition:
    dual = m.weak_dual()
    nb: Dict[int, List[int]] = {i: dual.neighbors(i) for i in range(dual.node_count())}
    parent = [-1] * dual.node_count()
    parent_edge: List[Optional[Tuple[int, int]]] = [None] * dual.node_count()
    order: List[int] = []
    stack = [0]
    seen = {0}
    while stack:
        f = stack.pop()
        order.append(f)
        for g in nb[f]:
            if g not in seen:
                seen.add(g)
                parent[g] = f
                parent_edge[g] = dual.shared_edge(g, f)
                stack.append(g)
    if len(order) != dual.node_count():
        raise MopError("weak dual is not connected")
    return Decomposition(bags=dual.faces, parent=tuple(parent),
                         parent_edge=tuple(parent_edge),
                         order=tuple(reversed(order)))


def _cap(x: int, cap: int) -> int:
    return x if x < cap else cap


def _face_message(face: Tuple[int, int, int],
                  up_edge: Optional[Tuple[int, int]],
                  child_msgs: Dict[Tuple[int, int], Message],
                  mode: str, k: int) -> Message:
    """Message over up_edge (or the root total when up_edge is None)."""
    verts = list(face)
    if up_edge is None:
        passing: List[int] = []
    else:
        passing = list(up_edge)
    forgotten = [x for x in verts if x not in passing]

    out: Message = {}
    # enumerate memberships of the three face vertices
    for bits in range(8):
        member = {verts[i]: bool(bits >> i & 1) for i in range(3)}
        if mode == "is":
            if (member[verts[0]] and member[verts[1]]) or \
               (member[verts[0]] and member[verts[2]]) or \
               (member[verts[1]] and member[verts[2]]):
                continue
        # fold in child messages edge by edge
        acc: Dict[Tuple[int, ...], int] = {(0, 0, 0): 1}  # contributions per vertex
        ok = True
        for edge, msg in child_msgs.items():
            a, b = edge
            ia, ib = verts.index(a), verts.index(b)
            nxt: Dict[Tuple[int, ...], int] = {}
            for (sa, sb), cnt in msg.items():
                if (sa == IN) != member[a] or (sb == IN) != member[b]:
                    continue
                ca = 0 if sa == IN else sa
                cb = 0 if sb == IN else sb
                for contrib, ways in acc.items():
                    key = list(contrib)
                    key[ia] = _cap(key[ia] + ca, k)
                    key[ib] = _cap(key[ib] + cb, k)
                    key = tuple(key)
                    nxt[key] = nxt.get(key, 0) + ways * cnt
            acc = nxt
            if not acc:
                ok = False
                break
        if not ok:
            continue
        for contrib, ways in acc.items():
            # total saturation of each face vertex: inside pieces plus the
            # other two face vertices
            sat = {}
            good = True
            for i, x in enumerate(verts):
                s = contrib[i] + sum(1 for y in verts if y != x and member[y])
                sat[x] = _cap(s, k)
            if mode == "kds":
                for x in forgotten:
                    if not member[x] and sat[x] < k:
                        good = False
                        break
            if not good:
                continue
            if up_edge is None:
                out[(IN, IN)] = out.get((IN, IN), 0) + ways
            else:
                a, b = up_edge
                c = forgotten[0]
                # contribution to a passed upward: inside pieces plus c,
                # but never the other boundary vertex b (the parent adds it)
                sa = IN if member[a] else _cap(contrib[verts.index(a)] + (1 if member[c] else 0), k)
                sb = IN if member[b] else _cap(contrib[verts.index(b)] + (1 if member[c] else 0), k)
                out[(sa, sb)] = out.get((sa, sb), 0) + ways
    return out


def _count_mop(m: Mop, mode: str, k: int) -> int:
    dec = decomposition_of_mop(m)
    dual_children: Dict[int, List[int]] = {i: [] for i in range(len(dec.bags))}
    for i, p in enumerate(dec.parent):
        if p >= 0:
            dual_children[p].append(i)
    msgs: Dict[int, Message] = {}
    for f in dec.order:
        child_msgs = {dec.parent_edge[c]: msgs.pop(c) for c in dual_children[f]}
        msgs[f] = _face_message(dec.bags[f], dec.parent_edge[f], child_msgs, mode, k)
    root = dec.order[-1]
    return sum(msgs[root].values())


def count_is_fast(m: Mop) -> int:
    return _count_mop(m, "is", 0)


def count_kds_fast(m: Mop, k: int) -> int:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return _count_mop(m, "kds", k)


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------

def count_on_tree(t: Graph, mode: str, k: int = 2) -> int:
    """Exact IS or k-DS count of a tree; mode is 'is' or 'kds'."""
    if not t.is_tree():
        raise GraphError("input graph is not a tree")
    if mode not in ("is", "kds"):
        raise ValueError(f"mode must be 'is' or 'kds', got {mode!r}")
    if mode == "kds" and k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if t.n == 1:
        return 2 if mode == "is" else 1

    root = 0
    parent = [-2] * t.n
    parent[root] = -1
    order = [root]
    for v in order:
        for w in t.neighbors(v):
            if parent[w] == -2:
                parent[w] = v
                order.append(w)

    # state: IN, or the capped count of selected children (kds only)
    tables: Dict[int, Dict[int, int]] = {}
    for v in reversed(order):
        tab = {IN: 1, 0: 1}
        for c in t.neighbors(v):
            if parent[c] != v:
                continue
            ct = tables.pop(c)
            nxt: Dict[int, int] = {}
            for sv, ways_v in tab.items():
                for sc, ways_c in ct.items():
                    if mode == "is":
                        if sv == IN and sc == IN:
                            continue
                    else:
                        if sc != IN and sc + (1 if sv == IN else 0) < k:
                            continue
                    ns = sv
                    if sv != IN and sc == IN:
                        ns = _cap(sv + 1, k)
                    nxt[ns] = nxt.get(ns, 0) + ways_v * ways_c
            tab = nxt
        tables[v] = tab
    rt = tables[root]
    if mode == "is":
        return sum(rt.values())
    return rt.get(IN, 0) + sum(w for s, w in rt.items() if s != IN and s >= k)
