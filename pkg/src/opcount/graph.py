"""Simple undirected graph substrate.

Vertices are dense 0-based integers.  Adjacency is stored as one bitmask
per vertex, which keeps the exponential counting oracles fast and makes
values trivially hashable and immutable.  The default vertex ceiling is 64;
raise MAX_VERTICES (or pass max_n) if a build ever needs more.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

MAX_VERTICES = 64

_G6_MAX_SINGLE_BYTE = 62


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1 with bitmask adjacency."""

    n: int
    masks: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if self.n > MAX_VERTICES:
            raise GraphError(f"n={self.n} exceeds vertex ceiling {MAX_VERTICES}")
        if len(self.masks) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.masks):
            if m & ~full:
                raise GraphError(f"vertex {v} has neighbors out of range")
            if m >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, m in enumerate(self.masks):
            w = m
            while w:
                u = (w & -w).bit_length() - 1
                if not self.masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}-{u}")
                w &= w - 1

    @staticmethod
    def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return Graph(n, tuple(masks))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    def neighbors(self, v: int) -> Iterator[int]:
        m = self.masks[v]
        while m:
            yield (m & -m).bit_length() - 1
            m &= m - 1

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> List[int]:
        return [m.bit_count() for m in self.masks]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbors(u) if u < v]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) already present")
        masks = list(self.masks)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return Graph(self.n, tuple(masks))

    def delete_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) not present")
        masks = list(self.masks)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph(self.n, tuple(masks))

    def _check_pair(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError("endpoints coincide")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"vertex pair ({u},{v}) out of range")

    def induced_subgraph(self, keep: Iterable[int]) -> Tuple["Graph", Dict[int, int]]:
        """Induced subgraph plus the old->new label bijection."""
        kept = sorted(set(keep))
        for v in kept:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range")
        relabel = {old: new for new, old in enumerate(kept)}
        masks = [0] * len(kept)
        for old in kept:
            m = self.masks[old]
            for u in kept:
                if m >> u & 1:
                    masks[relabel[old]] |= 1 << relabel[u]
        return Graph(len(kept), tuple(masks)), relabel

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                nxt |= self.masks[v]
                m &= m - 1
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.edge_count() == self.n - 1 and self.is_connected()


@dataclass(frozen=True)
class VertexConstraint:
    """Partial membership constraint: vertices forced into / out of the counted sets."""

    forced_in: FrozenSet[int] = field(default_factory=frozenset)
    forced_out: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        overlap = self.forced_in & self.forced_out
        if overlap:
            raise GraphError(f"vertices {sorted(overlap)} both forced in and out")

    def validate_for(self, g: Graph) -> None:
        for v in self.forced_in | self.forced_out:
            if not 0 <= v < g.n:
                raise GraphError(f"constraint vertex {v} out of range for n={g.n}")

    def in_mask(self) -> int:
        return sum(1 << v for v in self.forced_in)

    def out_mask(self) -> int:
        return sum(1 << v for v in self.forced_out)


def constrain(*, forced_in: Iterable[int] = (), forced_out: Iterable[int] = ()) -> VertexConstraint:
    return VertexConstraint(frozenset(forced_in), frozenset(forced_out))


# ---------------------------------------------------------------------------
# graph6 (header-less): upper triangle bits (0,1),(0,2),(1,2),(0,3),... packed
# 6 per character, offset 63, zero-padded.
# ---------------------------------------------------------------------------

def graph_from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = []
    for ch in s:
        b = ord(ch) - 63
        if not 0 <= b < 64:
            raise Graph6Error(f"byte {ch!r} out of graph6 range")
        data.append(b)
    if data[0] <= _G6_MAX_SINGLE_BYTE:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[0] == 63 and data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise Graph6Error("unsupported graph6 length form")
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds vertex ceiling {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"wrong body length for n={n}")
    bits = []
    for b in body:
        for shift in range(5, -1, -1):
            bits.append(b >> shift & 1)
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    masks = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(masks))


def graph_to_graph6(g: Graph) -> str:
    if g.n > _G6_MAX_SINGLE_BYTE:
        raise Graph6Error(f"n={g.n} above single-byte graph6 range")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        b = 0
        for bit in bits[i:i + 6]:
            b = b << 1 | bit
        out.append(chr(b + 63))
    return "".join(out)
