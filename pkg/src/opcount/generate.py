"""Exhaustive and random generation of graphs for the sweeps.

Covers: all polygon triangulations (MOPs) of a labeled n-gon, canonical
(dihedral-orbit) representatives, free trees up to isomorphism, random
edge-deleted outerplanar subgraphs, and the random graph families used by
the conjecture scan.  All random output is a pure function of the seed.
"""

from __future__ import annotations

import math
import random
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .graph import Graph, GraphError
from .mop import Mop

PRNG_ALGORITHM = "python-mt19937"

MOP_ENUM_MAX_N = 18
TREE_ENUM_MAX_N = 18


class GenerationError(ValueError):
    pass


def rng_for(seed: int, *path: int) -> random.Random:
    """Deterministic (and splittable) RNG: children keyed by an index path."""
    key = f"opcount:{seed}:" + ":".join(str(p) for p in path)
    return random.Random(key)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# MOPs
# ---------------------------------------------------------------------------

def _arc_triangulations(a: int, b: int) -> Iterator[frozenset]:
    """All chord sets triangulating the polygon arc a..b closed by edge ab."""
    if b - a < 2:
        yield frozenset()
        return
    for c in range(a + 1, b):
        extra = set()
        if c - a > 1:
            extra.add((a, c))
        if b - c > 1:
            extra.add((c, b))
        for left in _arc_triangulations(a, c):
            for right in _arc_triangulations(c, b):
                yield left | right | extra


def enumerate_mops(n: int) -> Iterator[Mop]:
    """Every triangulation of the labeled n-gon, exactly once."""
    if not 3 <= n <= MOP_ENUM_MAX_N:
        raise GenerationError(f"n={n} outside supported range 3..{MOP_ENUM_MAX_N}")
    for chords in _arc_triangulations(0, n - 1):
        yield Mop(n, chords)


def enumerate_mops_canonical(n: int) -> Iterator[Mop]:
    """One representative per dihedral orbit (= per isomorphism class)."""
    for m in enumerate_mops(n):
        if m.is_canonical():
            yield m


def random_mop(n: int, rng: random.Random) -> Mop:
    """Uniform random triangulation of the labeled n-gon (Catalan-weighted)."""
    if not 3 <= n <= MOP_ENUM_MAX_N:
        raise GenerationError(f"n={n} outside supported range 3..{MOP_ENUM_MAX_N}")
    chords: List[Tuple[int, int]] = []

    def rec(a: int, b: int) -> None:
        if b - a < 2:
            return
        weights = [catalan(c - a - 1) * catalan(b - c - 1) for c in range(a + 1, b)]
        c = rng.choices(range(a + 1, b), weights=weights)[0]
        if c - a > 1:
            chords.append((a, c))
        if b - c > 1:
            chords.append((c, b))
        rec(a, c)
        rec(c, b)

    rec(0, n - 1)
    return Mop.new(n, chords)


def random_outerplanar_from_mop(m: Mop, delete_prob: float, rng: random.Random) -> Graph:
    """Spanning outerplanar subgraph: each edge independently deleted."""
    if not 0.0 <= delete_prob <= 1.0:
        raise GenerationError(f"delete_prob {delete_prob} outside [0, 1]")
    kept = [e for e in m.graph.edges() if rng.random() >= delete_prob]
    return Graph.from_edges(m.n, kept)


# ---------------------------------------------------------------------------
# Free trees (Beyer-Hedetniemi rooted level sequences + centroid dedup)
# ---------------------------------------------------------------------------

def _rooted_level_sequences(n: int) -> Iterator[List[int]]:
    """Canonical level sequences of all rooted trees on n vertices."""
    if n == 1:
        yield [1]
        return
    levels = list(range(1, n + 1))
    while True:
        yield list(levels)
        p = max((i for i in range(n) if levels[i] > 2), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        block = levels[q:p]
        i = p
        while i < n:
            for x in block:
                if i >= n:
                    break
                levels[i] = x
                i += 1


def _levels_to_graph(levels: Sequence[int]) -> Graph:
    n = len(levels)
    edges = []
    stack = [0]
    for v in range(1, n):
        while levels[stack[-1]] != levels[v] - 1:
            stack.pop()
        edges.append((stack[-1], v))
        stack.append(v)
    return Graph.from_edges(n, edges)


def _centroids(t: Graph) -> List[int]:
    n = t.n
    if n == 1:
        return [0]
    deg = t.degrees()
    leaves = [v for v in range(n) if deg[v] == 1]
    removed = 0
    alive = [True] * n
    while removed + len(leaves) < n:
        removed += len(leaves)
        nxt = []
        for v in leaves:
            alive[v] = False
            for w in t.neighbors(v):
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        leaves = nxt
    return sorted(leaves)


def _ahu(t: Graph, root: int, parent: int = -1) -> str:
    subs = sorted(_ahu(t, c, root) for c in t.neighbors(root) if c != parent)
    return "(" + "".join(subs) + ")"


def free_tree_key(t: Graph) -> str:
    """Canonical isomorphism key of a free tree (AHU at the centroid)."""
    cs = _centroids(t)
    return min(_ahu(t, c) for c in cs)


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of free trees on n vertices."""
    if not 1 <= n <= TREE_ENUM_MAX_N:
        raise GenerationError(f"n={n} outside supported range 1..{TREE_ENUM_MAX_N}")
    seen = set()
    for levels in _rooted_level_sequences(n):
        t = _levels_to_graph(levels)
        key = free_tree_key(t)
        if key not in seen:
            seen.add(key)
            yield t


def rooted_tree_counts(n_max: int) -> List[int]:
    """Unlabeled rooted tree counts r(1..n_max) by the classic recurrence."""
    r = [0] * (n_max + 1)
    r[1] = 1
    for n in range(2, n_max + 1):
        total = 0
        for j in range(1, n):
            s = sum(d * r[d] for d in range(1, j + 1) if j % d == 0)
            total += s * r[n - j]
        r[n] = total // (n - 1)
    return r[1:]


def free_tree_counts(n_max: int) -> List[int]:
    """Unlabeled free tree counts t(1..n_max) via Otter's identity:
    T(x) = R(x) - (R(x)^2 - R(x^2)) / 2."""
    r = [0] + rooted_tree_counts(n_max)
    out = []
    for n in range(1, n_max + 1):
        pairs = sum(r[i] * r[n - i] for i in range(1, n))
        if n % 2 == 0:
            pairs -= r[n // 2]
        out.append(r[n] - pairs // 2)
    return out


# ---------------------------------------------------------------------------
# Random graph families for the conjecture scan
# ---------------------------------------------------------------------------

def random_avg_degree_graph(n: int, k: int, rng: random.Random) -> Graph:
    """Random graph with exactly floor(k*n/2) edges (average degree <= k)."""
    budget = k * n // 2
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if budget > len(all_pairs):
        raise GenerationError(f"edge budget {budget} exceeds {len(all_pairs)} pairs")
    return Graph.from_edges(n, rng.sample(all_pairs, budget))


def random_regular_graph(n: int, k: int, rng: random.Random, max_tries: int = 5000) -> Graph:
    """Random simple k-regular graph via the pairing model with rejection."""
    if k * n % 2 != 0 or k >= n:
        raise GenerationError(f"no simple {k}-regular graph on {n} vertices")
    stubs = [v for v in range(n) for _ in range(k)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, edges)
    raise GenerationError(f"pairing model failed after {max_tries} tries")
