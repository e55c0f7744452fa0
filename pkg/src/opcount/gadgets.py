"""Catalog of fixed boundary gadgets used in the case analysis.

Each gadget is a small triangulated piece with a distinguished boundary
edge (u, v).  The case analysis glues it to an arbitrary right-hand piece
along that edge and expands i(G) and the 4-dominating count through the
boundary, so every gadget comes with claimed constants:

* ``claimed_is``    - the conditioned independent-set triple
                      (u-,v- / u-,v+ / u+,v-) of the gadget alone, and
* ``claimed_dom``   - the grouped convolution coefficients, i.e. how many
                      valid gadget-side assignments pair with each
                      relaxation level of the right-hand side.

The audit recomputes both from scratch with the brute-force oracle; a
claimed constant that disagrees is reported as a finding (the glued-count
identities themselves are checked independently and must hold exactly).

Gadgets whose drawing in the source write-up is underdetermined are
flagged ``ambiguous``: the geometry encoded here is the most plausible
reading, so mismatches on those entries are expected noise rather than
errors in the write-up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .graph import Graph
from .oracle import DomProfile, ISProfile, dom_profile_of, is_profile_of

FaceNames = Tuple[str, str, str]

# Shared building blocks: a three-triangle "head" fan plus the two faces
# that extend it toward the boundary.
_HEAD: Tuple[FaceNames, ...] = (
    ("a1", "a2", "b1"),
    ("a2", "a3", "b2"),
    ("a2", "b1", "b2"),
)
_F3: FaceNames = ("b1", "b2", "c1")
_F4: FaceNames = ("b2", "c1", "c2")


@dataclass(frozen=True)
class ClaimedDom:
    """Claimed grouped coefficients for the 4-domination convolution.

    ``c11`` multiplies the right side's both-selected count; ``c10`` and
    ``c01`` are (count, relax) terms for the u-in/v-out and u-out/v-in
    states; ``c00`` terms carry a (relax_u, relax_v) pair.  ``None`` for a
    field means the write-up does not state it for this gadget.
    """

    c11: Optional[int] = None
    c10: Optional[Tuple[Tuple[int, int], ...]] = None
    c01: Optional[Tuple[Tuple[int, int], ...]] = None
    c00: Optional[Tuple[Tuple[int, Tuple[int, int]], ...]] = None


@dataclass(frozen=True)
class GadgetSpec:
    name: str
    faces: Tuple[FaceNames, ...]
    boundary: Tuple[str, str]
    claimed_is: Optional[Tuple[int, int, int]] = None  # (i00, i01, i10)
    claimed_dom: Optional[ClaimedDom] = None
    ambiguous: bool = False
    note: str = ""

    def vertex_names(self) -> Tuple[str, ...]:
        seen = []
        for f in self.faces:
            for x in f:
                if x not in seen:
                    seen.append(x)
        return tuple(seen)

    def build(self) -> Tuple[Graph, Dict[str, int]]:
        names = self.vertex_names()
        idx = {x: i for i, x in enumerate(names)}
        edges = set()
        for a, b, c in self.faces:
            for p, q in ((a, b), (b, c), (a, c)):
                edges.add((min(idx[p], idx[q]), max(idx[p], idx[q])))
        return Graph.from_edges(len(names), sorted(edges)), idx

    def boundary_indices(self) -> Tuple[int, int]:
        _, idx = self.build()
        u, v = self.boundary
        return idx[u], idx[v]

    def computed_is(self) -> ISProfile:
        g, idx = self.build()
        u, v = self.boundary
        return is_profile_of(g, idx[u], idx[v])

    def computed_dom(self, k: int = 4) -> DomProfile:
        g, idx = self.build()
        u, v = self.boundary
        return dom_profile_of(g, idx[u], idx[v], k=k, side="left")

    def computed_dom_coeffs(self, k: int = 4) -> ClaimedDom:
        """Grouped coefficients recomputed from the fine profile table."""
        p = self.computed_dom(k)
        return ClaimedDom(
            c11=p.coeff_11(),
            c10=tuple(sorted(((c, r) for r, c in p.coeff_10().items()),
                             key=lambda t: -t[1])),
            c01=tuple(sorted(((c, r) for r, c in p.coeff_01().items()),
                             key=lambda t: -t[1])),
            c00=tuple(sorted(((c, rr) for rr, c in p.coeff_00().items()),
                             key=lambda t: (-t[1][0], -t[1][1]))),
        )


def _dom(c11=None, c10=None, c01=None, c00=None) -> ClaimedDom:
    return ClaimedDom(
        c11=c11,
        c10=tuple(c10) if c10 is not None else None,
        c01=tuple(c01) if c01 is not None else None,
        c00=tuple(c00) if c00 is not None else None,
    )


GADGETS: Tuple[GadgetSpec, ...] = (
    GadgetSpec(
        name="lemma3",
        faces=_HEAD + (_F3, ("b1", "c1", "w"), ("b1", "w", "p"), ("c1", "w", "q")),
        boundary=("b2", "c1"),
        claimed_is=(29, 10, 10),
        claimed_dom=_dom(5, [(2, 4), (1, 3)], [(2, 4), (1, 3)],
                         [(1, (4, 4)), (1, (3, 3))]),
        note="claimed 00 terms look shifted by one relaxation level",
    ),
    GadgetSpec(
        name="lemma4",
        faces=_HEAD + (_F3, ("b1", "c1", "w")),
        boundary=("b2", "c1"),
        claimed_is=(12, 5, 4),
        claimed_dom=_dom(3, [(2, 3), (1, 2)], [(1, 4), (1, 3)], [(1, (3, 2))]),
    ),
    GadgetSpec(
        name="lemma4_reduced",
        faces=(("a2", "b1", "b2"), ("b1", "b2", "c1"), ("b1", "c1", "w")),
        boundary=("b2", "c1"),
        claimed_is=(5, 2, 2),
        claimed_dom=_dom(2, [(1, 3)], [(1, 3)], [(1, (2, 2))]),
    ),
    GadgetSpec(
        name="lemma5_c1s1",
        faces=_HEAD + (_F3, _F4, ("b2", "c2", "w")),
        boundary=("c1", "c2"),
        claimed_is=(16, 7, 10),
        claimed_dom=_dom(4, [(2, 3), (1, 2)], [(3, 3), (1, 2)],
                         [(2, (2, 2)), (1, (1, 1))]),
    ),
    GadgetSpec(
        name="lemma5_c1s1_reduced",
        faces=(("b1", "b2", "c1"), ("b2", "c1", "c2"), ("b2", "c2", "w")),
        boundary=("c1", "c2"),
        claimed_is=(5, 2, 2),
        claimed_dom=_dom(2, [(1, 3)], [(1, 3)], [(1, (2, 2))]),
    ),
    GadgetSpec(
        name="lemma5_c1s2",
        faces=_HEAD + (_F3, _F4, ("b2", "c2", "w"), ("b2", "w", "p"), ("c2", "w", "q")),
        boundary=("c1", "c2"),
        claimed_is=(39, 14, 25),
        claimed_dom=_dom(7, [(3, 4), (1, 3)], [(4, 4), (1, 3)],
                         [(2, (1, 2)), (1, (0, 1))]),
    ),
    GadgetSpec(
        name="lemma5_c1s3",
        faces=_HEAD + (_F3, _F4, ("b2", "c2", "w"), ("c2", "w", "p"),
                       ("c2", "p", "r"), ("w", "p", "s")),
        boundary=("c1", "c2"),
        claimed_is=(59, 14, 35),
        claimed_dom=_dom(11, [(3, 4), (1, 3)], [(6, 3), (2, 2)],
                         [(2, (2, 4)), (2, (1, 3))]),
    ),
    GadgetSpec(
        name="lemma5_c1s4",
        faces=_HEAD + (_F3, _F4, ("b2", "c2", "w"), ("b2", "w", "p"),
                       ("b2", "p", "r"), ("w", "p", "s")),
        boundary=("c1", "c2"),
        claimed_is=(53, 35, 35),
        claimed_dom=_dom(c11=10),
    ),
    GadgetSpec(
        name="lemma5_c2s1",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "w")),
        boundary=("b2", "c2"),
        claimed_is=(19, 7, 4),
        claimed_dom=_dom(5, [(3, 3)], [(1, 4)], [(1, (4, 2))]),
    ),
    GadgetSpec(
        name="lemma5_c2s1_reduced",
        faces=(("b1", "b2", "c1"), ("b2", "c1", "c2"), ("c1", "c2", "w")),
        boundary=("b2", "c2"),
        claimed_is=(5, 2, 2),
        claimed_dom=_dom(2, [(1, 3)], [(1, 3)], [(1, (2, 2))]),
    ),
    GadgetSpec(
        name="lemma5_c2s2",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "w"), ("c1", "w", "p"), ("c2", "w", "q")),
        boundary=("b2", "c2"),
        claimed_is=(45, 14, 10),
        claimed_dom=_dom(8, [(3, 4), (2, 3)], [(3, 4)], [(1, (4, 3))]),
    ),
    GadgetSpec(
        name="lemma5_c2s3",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "w"), ("c2", "w", "p"),
                       ("c2", "p", "r"), ("w", "p", "s")),
        boundary=("b2", "c2"),
        claimed_is=(74, 14, 14),
        claimed_dom=_dom(13, [(3, 4)], [(3, 4)], [(1, (4, 4))]),
    ),
    GadgetSpec(
        name="lemma5_c2s4",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "w"), ("c1", "w", "p"),
                       ("c1", "p", "r"), ("w", "p", "s")),
        boundary=("b2", "c2"),
        claimed_is=(59, 35, 14),
        claimed_dom=_dom(c11=11, c00=[(2, (4, 2)), (1, (3, 1))]),
    ),
    GadgetSpec(
        name="lemma6",
        faces=_HEAD + (_F3,),
        boundary=("b2", "c1"),
        claimed_is=(7, 5, 2),
        claimed_dom=_dom(c11=3, c01=[(1, 4)]),
    ),
    GadgetSpec(
        name="lemma7_c1s1",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "d1"), ("c1", "d1", "d0")),
        boundary=("c2", "d1"),
        claimed_is=(23, 9, 14),
        claimed_dom=_dom(7, [(4, 3), (2, 2)], [(3, 3), (3, 2)],
                         [(3, (2, 2)), (1, (1, 1))]),
        note="last claimed 00 superscript pair looks like a typo for (1,2)",
    ),
    GadgetSpec(
        name="lemma7_c1s1_reduced6",
        faces=(("c1", "c2", "d1"),),
        boundary=("c2", "d1"),
        claimed_is=(2, 1, 1),
        claimed_dom=_dom(1, [(1, 2)], [(1, 2)], [(1, (1, 1))]),
    ),
    GadgetSpec(
        name="lemma7_c1s1_reduced4",
        faces=(("b2", "c1", "c2"), ("c1", "c2", "d1"), ("c1", "d1", "d0")),
        boundary=("c2", "d1"),
        claimed_is=(5, 2, 2),
        claimed_dom=_dom(2, [(1, 3)], [(1, 3)], [(1, (2, 2))]),
    ),
    GadgetSpec(
        name="lemma7_c1s2",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "d1"), ("c1", "d1", "d0"),
                       ("c1", "d0", "p"), ("d1", "d0", "q")),
        boundary=("c2", "d1"),
        claimed_is=(55, 18, 35),
    ),
    GadgetSpec(
        name="lemma7_c2s1",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "d1"), ("c2", "d1", "d2")),
        boundary=("c1", "d1"),
        claimed_is=(25, 9, 10),
        claimed_dom=_dom(7, [(4, 3)], [(2, 4), (1, 3)],
                         [(2, (3, 2)), (1, (2, 2))]),
    ),
    GadgetSpec(
        name="lemma7_c2s1_reduced",
        faces=(("b2", "c1", "c2"), ("c1", "c2", "d1"), ("c2", "d1", "d2")),
        boundary=("c1", "d1"),
        claimed_is=(5, 2, 2),
        claimed_dom=_dom(2, [(1, 3)], [(1, 3)], [(1, (2, 2))]),
    ),
    GadgetSpec(
        name="lemma7_c2s2",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "d1"), ("c2", "d1", "d2"),
                       ("c2", "d2", "p"), ("d1", "d2", "q")),
        boundary=("c1", "d1"),
        claimed_is=(59, 18, 25),
        claimed_dom=_dom(12, [(4, 4), (3, 3)], [(4, 4), (4, 4)],
                         [(2, (3, 3)), (1, (2, 3))]),
        note="claimed 01 list repeats the same term; likely a typo",
    ),
    GadgetSpec(
        name="lemma8_c1",
        faces=_HEAD + (_F3, _F4),
        boundary=("c1", "c2"),
        claimed_is=(9, 7, 5),
        claimed_dom=_dom(c11=4, c01=[(2, 3), (1, 2)]),
    ),
    GadgetSpec(
        name="lemma8_c2",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "d1")),
        boundary=("c2", "d1"),
        claimed_is=(14, 9, 7),
        claimed_dom=_dom(c11=6, c01=[(3, 3), (1, 2)]),
    ),
    GadgetSpec(
        name="lemma8_c3",
        faces=_HEAD + (_F3, _F4),
        boundary=("c1", "c2"),
        claimed_is=(9, 7, 5),
        claimed_dom=_dom(c11=4, c10=[(3, 2)], c01=[(2, 3)]),
    ),
    GadgetSpec(
        name="lemma9_c1s1",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "d1"), ("c2", "d1", "d2"),
                       ("c2", "d2", "c3")),
        boundary=("d1", "d2"),
        claimed_is=(35, 14, 18),
        claimed_dom=_dom(10, [(6, 3), (3, 2)], [(4, 3), (4, 2)], [(4, (2, 2))]),
        note="claimed 01 term (4,2) recomputes as (3,2) in every geometry "
             "matching the conditioned counts; likely a typo",
    ),
    GadgetSpec(
        name="lemma9_c2s1",
        faces=_HEAD + (_F3, _F4, ("c1", "c2", "d1"), ("c2", "d1", "d2"),
                       ("d1", "d2", "d3")),
        boundary=("c2", "d2"),
        claimed_is=(37, 14, 14),
        claimed_dom=_dom(10, [(6, 3)], [(3, 4), (1, 3)],
                         [(3, (3, 2)), (1, (2, 2))]),
    ),
)


def gadget(name: str) -> GadgetSpec:
    for g in GADGETS:
        if g.name == name:
            return g
    raise KeyError(f"unknown gadget {name!r}")


def gadget_names() -> Tuple[str, ...]:
    return tuple(g.name for g in GADGETS)
