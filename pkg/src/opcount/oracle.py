"""Brute-force counting oracle.

Everything here enumerates vertex subsets directly (in chunks, with numpy
doing the per-subset bit work), so it is the ground truth the dynamic
programming engine and the verification harnesses are checked against.
Counts are exact Python integers.

Profiles for a MOP-partition boundary (u, v) are kept as a fine-grained
table keyed by boundary state: each boundary vertex is either selected or
unselected with a capped count of selected side-neighbors (excluding the
other boundary vertex).  All the paper-style accessors (D11, Dk01, Dk10,
Dkl00) and the exact left/right convolution are sums over that table.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .graph import Graph, VertexConstraint
from .mop import MopPartition

DEFAULT_CEILING = 30
_CHUNK_BITS = 18

IN = -1  # boundary-state marker for a selected boundary vertex


class OracleError(ValueError):
    pass


def oracle_ceiling() -> int:
    env = os.environ.get("OPCOUNT_ORACLE_CEILING")
    return int(env) if env else DEFAULT_CEILING


def _check_size(g: Graph) -> None:
    ceiling = oracle_ceiling()
    if g.n > ceiling:
        raise OracleError(f"n={g.n} above oracle ceiling {ceiling}")


def _chunks(n: int) -> Iterator[np.ndarray]:
    total = 1 << n
    step = min(total, 1 << _CHUNK_BITS)
    for start in range(0, total, step):
        yield np.arange(start, min(start + step, total), dtype=np.int64)


if hasattr(np, "bitwise_count"):
    def _popcount(a: np.ndarray) -> np.ndarray:
        return np.bitwise_count(a).astype(np.int64)
else:  # numpy < 2.0
    def _popcount(a: np.ndarray) -> np.ndarray:
        out = np.zeros_like(a)
        x = a.copy()
        while x.any():
            out += x & 1
            x >>= 1
        return out


def _constraint_filter(subsets: np.ndarray, c: Optional[VertexConstraint]) -> np.ndarray:
    ok = np.ones(len(subsets), dtype=bool)
    if c is None:
        return ok
    fi = c.in_mask()
    fo = c.out_mask()
    if fi:
        ok &= (subsets & fi) == fi
    if fo:
        ok &= (subsets & fo) == 0
    return ok


def count_is(g: Graph, constraint: Optional[VertexConstraint] = None) -> int:
    """Number of independent sets of g (the empty set included)."""
    _check_size(g)
    if constraint is not None:
        constraint.validate_for(g)
    total = 0
    for subsets in _chunks(g.n):
        ok = _constraint_filter(subsets, constraint)
        for v in range(g.n):
            sel = (subsets >> v & 1).astype(bool)
            ok &= ~(sel & ((subsets & g.masks[v]) != 0))
        total += int(ok.sum())
    return total


def count_kds(g: Graph, k: int, constraint: Optional[VertexConstraint] = None) -> int:
    """Number of k-dominating sets of g (the full vertex set always counts)."""
    if k < 1:
        raise OracleError(f"k must be >= 1, got {k}")
    _check_size(g)
    if constraint is not None:
        constraint.validate_for(g)
    total = 0
    for subsets in _chunks(g.n):
        ok = _constraint_filter(subsets, constraint)
        for v in range(g.n):
            sel = (subsets >> v & 1).astype(bool)
            cnt = _popcount(subsets & g.masks[v])
            ok &= sel | (cnt >= k)
        total += int(ok.sum())
    return total


def count_kds_all(g: Graph, k_max: int) -> List[int]:
    """[count_kds(g, k) for k in 1..k_max] in one sweep over subsets."""
    if k_max < 1:
        raise OracleError(f"k_max must be >= 1, got {k_max}")
    _check_size(g)
    hist = np.zeros(k_max + 1, dtype=np.int64)
    for subsets in _chunks(g.n):
        minsat = np.full(len(subsets), k_max, dtype=np.int64)
        for v in range(g.n):
            sel = (subsets >> v & 1).astype(bool)
            cnt = np.minimum(_popcount(subsets & g.masks[v]), k_max)
            minsat = np.where(sel, minsat, np.minimum(minsat, cnt))
        hist += np.bincount(minsat, minlength=k_max + 1)
    # count for threshold k = number of subsets with minsat >= k
    suffix = np.cumsum(hist[::-1])[::-1]
    return [int(suffix[k]) for k in range(1, k_max + 1)]


def count_is_conditioned(g: Graph, constraint: VertexConstraint) -> int:
    return count_is(g, constraint)


def count_kds_conditioned(g: Graph, k: int, constraint: VertexConstraint) -> int:
    return count_kds(g, k, constraint)


# ---------------------------------------------------------------------------
# Boundary profiles for MOP-partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ISProfile:
    """Conditioned IS counts of one side w.r.t. its boundary edge (u, v)."""

    i00: int  # u out, v out
    i01: int  # u out, v in
    i10: int  # u in, v out

    def total(self) -> int:
        return self.i00 + self.i01 + self.i10


@dataclass(frozen=True)
class DomProfile:
    """Fine deficit table of one side w.r.t. its boundary edge (u, v).

    Keys are (su, sv) with s = IN for a selected boundary vertex, otherwise
    the number of its selected side-neighbors excluding the other boundary
    vertex, capped at k.  Interior side vertices outside the set must have
    >= k selected neighbors within the side.
    """

    table: Dict[Tuple[int, int], int]
    k: int
    side: str

    def d11(self) -> int:
        return self.table.get((IN, IN), 0)

    def d01(self, relax: int) -> int:
        """u out with >= max(0, k - relax) selected side-neighbors, v in."""
        need = max(0, self.k - relax)
        return sum(c for (su, sv), c in self.table.items()
                   if su != IN and sv == IN and su >= need)

    def d10(self, relax: int) -> int:
        need = max(0, self.k - relax)
        return sum(c for (su, sv), c in self.table.items()
                   if su == IN and sv != IN and sv >= need)

    def d00(self, relax_u: int, relax_v: int) -> int:
        need_u = max(0, self.k - relax_u)
        need_v = max(0, self.k - relax_v)
        return sum(c for (su, sv), c in self.table.items()
                   if su != IN and sv != IN and su >= need_u and sv >= need_v)

    # Grouped left-side coefficients: how many valid side sets pair with each
    # relaxation level of the opposite side.  With uv an edge, a selected
    # boundary vertex contributes 1 to the other's demand, hence the +1.
    def coeff_11(self) -> int:
        return self.d11()

    def coeff_10(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for (su, sv), c in self.table.items():
            if su == IN and sv != IN:
                relax = min(self.k, sv + 1)
                out[relax] = out.get(relax, 0) + c
        return out

    def coeff_01(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for (su, sv), c in self.table.items():
            if su != IN and sv == IN:
                relax = min(self.k, su + 1)
                out[relax] = out.get(relax, 0) + c
        return out

    def coeff_00(self) -> Dict[Tuple[int, int], int]:
        out: Dict[Tuple[int, int], int] = {}
        for (su, sv), c in self.table.items():
            if su != IN and sv != IN:
                key = (min(self.k, su), min(self.k, sv))
                out[key] = out.get(key, 0) + c
        return out


def is_profile_of(g: Graph, u: int, v: int) -> ISProfile:
    from .graph import constrain
    i00 = count_is(g, constrain(forced_out=(u, v)))
    i01 = count_is(g, constrain(forced_in=(v,), forced_out=(u,)))
    i10 = count_is(g, constrain(forced_in=(u,), forced_out=(v,)))
    return ISProfile(i00, i01, i10)


def dom_profile_of(g: Graph, u: int, v: int, k: int = 4, side: str = "right") -> DomProfile:
    _check_size(g)
    if k < 1:
        raise OracleError(f"k must be >= 1, got {k}")
    nb_u = g.masks[u] & ~(1 << v)
    nb_v = g.masks[v] & ~(1 << u)
    width = k + 2  # state values IN(-1)..k mapped to 0..k+1
    counts = np.zeros(width * width, dtype=np.int64)
    for subsets in _chunks(g.n):
        ok = np.ones(len(subsets), dtype=bool)
        for w in range(g.n):
            if w in (u, v):
                continue
            sel = (subsets >> w & 1).astype(bool)
            cnt = _popcount(subsets & g.masks[w])
            ok &= sel | (cnt >= k)
        su = np.where((subsets >> u & 1).astype(bool), IN,
                      np.minimum(_popcount(subsets & nb_u), k))
        sv = np.where((subsets >> v & 1).astype(bool), IN,
                      np.minimum(_popcount(subsets & nb_v), k))
        code = (su + 1) * width + (sv + 1)
        counts += np.bincount(code[ok], minlength=width * width)
    table = {}
    for code, c in enumerate(counts):
        if c:
            table[(code // width - 1, code % width - 1)] = int(c)
    return DomProfile(table=table, k=k, side=side)


def is_profile(p: MopPartition, side: str = "right") -> ISProfile:
    g, _ = p.side_graph(side)
    u, v = p.side_boundary(side)
    return is_profile_of(g, u, v)


def dom_profile(p: MopPartition, side: str = "right", k: int = 4) -> DomProfile:
    g, _ = p.side_graph(side)
    u, v = p.side_boundary(side)
    return dom_profile_of(g, u, v, k=k, side=side)


def kds_from_profiles(left: DomProfile, right: DomProfile) -> int:
    """Exact k-DS count of the glued graph from the two side tables.

    The sides meet exactly in the edge uv; an unselected boundary vertex
    needs k selected neighbors in total, with the other boundary vertex
    contributing 1 when selected.
    """
    if left.k != right.k:
        raise OracleError("profile thresholds differ")
    k = left.k
    total = 0
    for (sul, svl), cl in left.table.items():
        for (sur, svr), cr in right.table.items():
            if (sul == IN) != (sur == IN) or (svl == IN) != (svr == IN):
                continue
            if sul != IN:
                bonus = 1 if svl == IN else 0
                if sul + sur + bonus < k:
                    continue
            if svl != IN:
                bonus = 1 if sul == IN else 0
                if svl + svr + bonus < k:
                    continue
            total += cl * cr
    return total


def is_from_profiles(left: ISProfile, right: ISProfile) -> int:
    """Exact IS count of the glued graph: state-matched product over uv."""
    return (left.i00 * right.i00 + left.i01 * right.i01 + left.i10 * right.i10)
