"""Maximal outerplanar graphs as polygon triangulations.

A Mop is the cycle 0-1-...-(n-1)-0 plus a full set of n-3 pairwise
non-crossing chords.  Inner faces are triangles; the weak dual (one node
per triangle, linked across shared chords) is a subcubic tree.  Splitting
at any edge yields the two maximal pieces meeting exactly in that edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

from .graph import Graph, GraphError

Chord = Tuple[int, int]
Face = Tuple[int, int, int]


class MopError(ValueError):
    pass


def _norm_pair(a: int, b: int) -> Chord:
    return (a, b) if a < b else (b, a)


def _crosses(c1: Chord, c2: Chord) -> bool:
    a, b = c1
    c, d = c2
    return (a < c < b < d) or (c < a < d < b)


@dataclass(frozen=True)
class Mop:
    n: int
    chords: FrozenSet[Chord]

    def __post_init__(self):
        if self.n < 3:
            raise MopError(f"polygon size {self.n} < 3")
        chords = sorted(self.chords)
        if len(chords) != self.n - 3:
            raise MopError(f"expected {self.n - 3} chords, got {len(chords)}")
        for a, b in chords:
            if not (0 <= a < b < self.n):
                raise MopError(f"chord ({a},{b}) out of range")
            if b - a == 1 or (a == 0 and b == self.n - 1):
                raise MopError(f"chord ({a},{b}) coincides with a cycle edge")
        for i in range(len(chords)):
            for j in range(i + 1, len(chords)):
                if chords[i] == chords[j]:
                    raise MopError(f"duplicate chord {chords[i]}")
                if _crosses(chords[i], chords[j]):
                    raise MopError(f"chords {chords[i]} and {chords[j]} cross")

    @staticmethod
    def new(n: int, chords) -> "Mop":
        return Mop(n, frozenset(_norm_pair(a, b) for a, b in chords))

    # -- derived graph -----------------------------------------------------

    @cached_property
    def graph(self) -> Graph:
        edges = [(i, (i + 1) % self.n) for i in range(self.n)]
        if self.n == 3:
            edges = [(0, 1), (1, 2), (0, 2)]
        edges.extend(self.chords)
        return Graph.from_edges(self.n, edges)

    def to_graph(self) -> Graph:
        return self.graph

    def edge_set(self) -> List[Chord]:
        return self.graph.edges()

    def is_outer_edge(self, u: int, v: int) -> bool:
        a, b = _norm_pair(u, v)
        return b - a == 1 or (a == 0 and b == self.n - 1)

    # -- faces and weak dual -----------------------------------------------

    @cached_property
    def faces(self) -> Tuple[Face, ...]:
        """Triangles of the triangulation, in a deterministic arc order."""
        has = self.graph.has_edge
        out: List[Face] = []

        def rec(a: int, b: int) -> None:
            # triangulate the arc a..b (closed by the edge ab)
            if b - a < 2:
                return
            for c in range(a + 1, b):
                if has(a, c) and has(c, b):
                    out.append((a, c, b))
                    rec(a, c)
                    rec(c, b)
                    return
            raise MopError(f"no apex for edge ({a},{b}); triangulation incomplete")

        rec(0, self.n - 1)
        return tuple(out)

    def weak_dual(self) -> "DualTree":
        faces = self.faces
        by_edge: Dict[Chord, List[int]] = {}
        for i, f in enumerate(faces):
            a, b, c = f
            for e in (_norm_pair(a, b), _norm_pair(b, c), _norm_pair(a, c)):
                by_edge.setdefault(e, []).append(i)
        links = []
        for e, fs in sorted(by_edge.items()):
            if len(fs) == 2:
                links.append((fs[0], fs[1]))
            elif len(fs) > 2:
                raise MopError(f"edge {e} on more than two faces")
        return DualTree(faces=faces, links=tuple(sorted(links)))

    # -- splitting ----------------------------------------------------------

    def split_at_edge(self, e: Chord) -> "MopPartition":
        u, v = _norm_pair(*e)
        if not self.graph.has_edge(u, v):
            raise MopError(f"({u},{v}) is not an edge of the Mop")
        if self.is_outer_edge(u, v):
            left = frozenset((u, v))
            right = frozenset(range(self.n))
        else:
            left = frozenset(range(u, v + 1))
            right = frozenset(range(v, self.n)) | frozenset(range(u + 1))
        return MopPartition(mop=self, edge=(u, v), left_vertices=left, right_vertices=right)

    def subgraph_between_faces(self, f: Face, f2: Face) -> Tuple["Mop", Dict[int, int]]:
        """The maximal piece containing face f, excluding the adjacent face f2,
        with their shared edge on its outer boundary.  Returns (Mop, label map)."""
        common = sorted(set(f) & set(f2))
        if len(common) != 2:
            raise MopError(f"faces {f} and {f2} are not adjacent")
        part = self.split_at_edge((common[0], common[1]))
        for side in ("left", "right"):
            verts = part.side_vertices(side)
            if set(f) <= verts and not set(f2) <= verts:
                return part.side_mop(side)
        raise MopError(f"faces {f} and {f2} not separated by their shared edge")

    # -- canonical form under the dihedral group ----------------------------

    def canonical_chords(self) -> Tuple[Chord, ...]:
        n = self.n
        best = None
        for refl in (False, True):
            for shift in range(n):
                img = []
                for a, b in self.chords:
                    if refl:
                        a, b = (-a) % n, (-b) % n
                    img.append(_norm_pair((a + shift) % n, (b + shift) % n))
                cand = tuple(sorted(img))
                if best is None or cand < best:
                    best = cand
        return best if best is not None else ()

    def is_canonical(self) -> bool:
        return tuple(sorted(self.chords)) == self.canonical_chords()

    def canonical(self) -> "Mop":
        return Mop(self.n, frozenset(self.canonical_chords()))

    # -- text format ---------------------------------------------------------

    def to_text(self) -> str:
        body = ",".join(f"{a}-{b}" for a, b in sorted(self.chords))
        return f"{self.n};{body}"

    @staticmethod
    def from_text(text: str) -> "Mop":
        try:
            head, _, body = text.strip().partition(";")
            n = int(head)
            chords = []
            if body:
                for item in body.split(","):
                    a, _, b = item.partition("-")
                    chords.append((int(a), int(b)))
        except ValueError as exc:
            raise MopError(f"malformed Mop text {text!r}") from exc
        return Mop.new(n, chords)


@dataclass(frozen=True)
class DualTree:
    """Weak dual of a Mop: one node per triangle, links across shared chords."""

    faces: Tuple[Face, ...]
    links: Tuple[Tuple[int, int], ...]

    def node_count(self) -> int:
        return len(self.faces)

    def degree(self, i: int) -> int:
        return sum(1 for a, b in self.links if i in (a, b))

    def neighbors(self, i: int) -> List[int]:
        out = []
        for a, b in self.links:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return out

    def is_end_face(self, i: int) -> bool:
        return self.degree(i) <= 1

    def shared_edge(self, i: int, j: int) -> Chord:
        common = sorted(set(self.faces[i]) & set(self.faces[j]))
        if len(common) != 2:
            raise MopError(f"dual nodes {i},{j} share no edge")
        return (common[0], common[1])


@dataclass(frozen=True)
class MopPartition:
    """A (G_L, G_R, uv) split: the two maximal pieces meeting exactly in uv."""

    mop: Mop
    edge: Chord
    left_vertices: FrozenSet[int]
    right_vertices: FrozenSet[int]

    def side_vertices(self, side: str) -> FrozenSet[int]:
        if side == "left":
            return self.left_vertices
        if side == "right":
            return self.right_vertices
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def side_graph(self, side: str) -> Tuple[Graph, Dict[int, int]]:
        return self.mop.graph.induced_subgraph(self.side_vertices(side))

    def side_boundary(self, side: str) -> Tuple[int, int]:
        """The (u, v) boundary pair in the side graph's local labels."""
        _, relabel = self.side_graph(side)
        u, v = self.edge
        return relabel[u], relabel[v]

    def side_mop(self, side: str) -> Tuple[Mop, Dict[int, int]]:
        verts = sorted(self.side_vertices(side))
        if len(verts) < 3:
            raise MopError("side is the bare boundary edge, not a Mop")
        u, v = self.edge
        if len(verts) == self.mop.n:
            return self.mop, {x: x for x in verts}
        # chord side: vertices form the contiguous range u..v
        relabel = {old: new for new, old in enumerate(verts)}
        if side == "right":
            # right side wraps v..n-1,0..u; rotate so the arc is contiguous
            order = list(range(v, self.mop.n)) + list(range(0, u + 1))
            relabel = {old: new for new, old in enumerate(order)}
        m = len(verts)
        chords = []
        inside = set(verts)
        for a, b in self.mop.chords:
            if a in inside and b in inside and _norm_pair(a, b) != self.edge:
                chords.append((relabel[a], relabel[b]))
        # the split edge becomes the closing outer edge (0, m-1)
        return Mop.new(m, chords), relabel
