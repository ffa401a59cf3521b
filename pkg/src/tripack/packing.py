"""Vertex-disjoint triangle packing: exact solver, greedy, rotations.

The exact solver is a branch-and-bound over the lowest supported vertex
with a transposition table: residual vertex sets are trimmed to their
triangle-supported core and the exact optimum of each distinct core is
cached.  On top of it sit the lexicographically-least witness
reconstruction, a bounded enumerator of all maximum packings, and the
rotation improvement search used to polish greedy packings.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import (
    Graph,
    Matching,
    Triangle,
    edges_between,
    max_matching,
    triangles,
    vertex_mask,
)

__all__ = [
    "PACKING_CAP",
    "ENUM_CAP",
    "PackingResult",
    "ConnectionStats",
    "check_packing",
    "max_packing_exact",
    "packing_number",
    "is_kp1_k3_free",
    "enumerate_max_packings",
    "greedy_packing",
    "rotation_improve",
    "connects",
    "connection_stats",
]

# The exact solver refuses larger graphs; NP-hard beyond toy scale.
PACKING_CAP = 40
# enumerate_max_packings refuses to build lists longer than this.
ENUM_CAP = 100_000

Packing = tuple[Triangle, ...]


@dataclass(frozen=True)
class PackingResult:
    """Maximum packing size with a witness; exact is False for heuristics."""

    size: int
    triangles: Packing
    exact: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "size": self.size,
                "triangles": [list(t) for t in self.triangles],
                "exact": self.exact,
            },
            sort_keys=True,
        )


@dataclass(frozen=True)
class ConnectionStats:
    """Connector count for an ordered triangle pair within a set."""

    t: Triangle
    tp: Triangle
    count: int
    connectors: Packing


# ===================================================================
# Exact maximum packing
# ===================================================================


def _triangles_in(adj: tuple[int, ...], free: int) -> Iterator[Triangle]:
    """Triangles with all vertices in the free mask, lexicographic order."""
    rest_u = free
    while rest_u:
        u = (rest_u & -rest_u).bit_length() - 1
        rest_u &= rest_u - 1
        rest_v = adj[u] & rest_u
        while rest_v:
            v = (rest_v & -rest_v).bit_length() - 1
            rest_v &= rest_v - 1
            rest_w = adj[u] & adj[v] & free >> (v + 1) << (v + 1)
            while rest_w:
                w = (rest_w & -rest_w).bit_length() - 1
                rest_w &= rest_w - 1
                yield (u, v, w)


class _PackSolver:
    """Memoized exact packing over one graph."""

    def __init__(self, g: Graph):
        if g.n > PACKING_CAP:
            raise ValueError(f"n={g.n} exceeds packing cap {PACKING_CAP}")
        self.adj = g._adj
        self.memo: dict[int, int] = {}

    def _trim(self, free: int) -> int:
        """Drop vertices in no triangle of the free region, to fixpoint."""
        adj = self.adj
        while True:
            removed = 0
            rest = free
            while rest:
                vbit = rest & -rest
                rest &= rest - 1
                v = vbit.bit_length() - 1
                m = adj[v] & free
                nbr = m
                alive = False
                while nbr:
                    u = (nbr & -nbr).bit_length() - 1
                    nbr &= nbr - 1
                    if adj[u] & m:
                        alive = True
                        break
                if not alive:
                    removed |= vbit
            if not removed:
                return free
            free &= ~removed

    def opt(self, free: int) -> int:
        """Maximum packing size within the free mask."""
        free = self._trim(free)
        if free == 0:
            return 0
        cached = self.memo.get(free)
        if cached is not None:
            return cached
        adj = self.adj
        v = (free & -free).bit_length() - 1
        best = self.opt(free & ~(1 << v))
        m = adj[v] & free
        rest_u = m
        while rest_u:
            u = (rest_u & -rest_u).bit_length() - 1
            rest_u &= rest_u - 1
            rest_w = adj[u] & m >> (u + 1) << (u + 1)
            while rest_w:
                w = (rest_w & -rest_w).bit_length() - 1
                rest_w &= rest_w - 1
                got = 1 + self.opt(free & ~(1 << v | 1 << u | 1 << w))
                if got > best:
                    best = got
        self.memo[free] = best
        return best

    def lex_witness(self, free: int, size: int) -> Packing:
        """Lexicographically least packing of the given (optimal) size.

        Greedy by the standard exchange argument: the least triangle t
        with opt(free - t) = size - 1 starts the least witness, and
        every later pick is automatically lex-greater.
        """
        out: list[Triangle] = []
        while size:
            for t in _triangles_in(self.adj, free):
                tmask = vertex_mask(t)
                if self.opt(free & ~tmask) == size - 1:
                    out.append(t)
                    free &= ~tmask
                    size -= 1
                    break
            else:
                raise AssertionError("witness reconstruction lost the optimum")
        return tuple(out)


def max_packing_exact(g: Graph, allowed: int | None = None) -> PackingResult:
    """True maximum packing with the lex-least witness (exact, cap-guarded)."""
    solver = _PackSolver(g)
    free = (1 << g.n) - 1 if allowed is None else allowed
    size = solver.opt(free)
    return PackingResult(size, solver.lex_witness(free, size), exact=True)


def packing_number(g: Graph) -> int:
    solver = _PackSolver(g)
    return solver.opt((1 << g.n) - 1)


def is_kp1_k3_free(g: Graph, k: int) -> bool:
    """True iff the graph has no k+1 vertex-disjoint triangles."""
    if k < 0:
        raise ValueError(f"negative k={k}")
    return packing_number(g) <= k


def enumerate_max_packings(g: Graph, cap: int = ENUM_CAP) -> list[Packing]:
    """Every maximum packing, lex order; ValueError when more than cap."""
    solver = _PackSolver(g)
    full = (1 << g.n) - 1
    size = solver.opt(full)
    out: list[Packing] = []
    prefix: list[Triangle] = []

    def rec(free: int, last: Triangle | None, remaining: int) -> None:
        if remaining == 0:
            if len(out) >= cap:
                raise ValueError(f"more than {cap} maximum packings")
            out.append(tuple(prefix))
            return
        for t in _triangles_in(solver.adj, free):
            if last is not None and t <= last:
                continue
            tmask = vertex_mask(t)
            if solver.opt(free & ~tmask) == remaining - 1:
                prefix.append(t)
                rec(free & ~tmask, t, remaining - 1)
                prefix.pop()

    rec(full, None, size)
    return out


# ===================================================================
# Heuristic packing and rotation improvement
# ===================================================================


def greedy_packing(g: Graph, seed: int) -> Packing:
    """Maximal packing from a seed-shuffled greedy pass, sorted triples."""
    rng = random.Random(seed)
    tris = triangles(g)
    rng.shuffle(tris)
    used = 0
    out = []
    for t in tris:
        tmask = vertex_mask(t)
        if not used & tmask:
            used |= tmask
            out.append(t)
    return tuple(sorted(out))


def check_packing(g: Graph, packing: Packing) -> int:
    """Validate a packing (triangles of g, pairwise disjoint); return its mask."""
    used = 0
    for t in packing:
        u, v, w = t
        if not (u < v < w and g.has_edge(u, v) and g.has_edge(u, w) and g.has_edge(v, w)):
            raise ValueError(f"{t} is not a sorted triangle of the graph")
        tmask = vertex_mask(t)
        if used & tmask:
            raise ValueError(f"triangle {t} overlaps the rest of the packing")
        used |= tmask
    return used


def _check_outside_matching(g: Graph, matching: Matching, packed: int) -> None:
    used = 0
    for u, v in matching:
        if not g.has_edge(u, v):
            raise ValueError(f"matching pair ({u},{v}) is not an edge")
        pmask = 1 << u | 1 << v
        if pmask & packed:
            raise ValueError(f"matching pair ({u},{v}) touches the packing")
        if pmask & used:
            raise ValueError(f"matching pair ({u},{v}) overlaps another pair")
        used |= pmask


def _packings_of_size(
    adj: tuple[int, ...], free: int, r: int, floor: Triangle | None
) -> Iterator[Packing]:
    """All r-packings within free with ascending triples, lex order."""
    if r == 0:
        yield ()
        return
    for t in _triangles_in(adj, free):
        if floor is not None and t <= floor:
            continue
        tmask = vertex_mask(t)
        for rest in _packings_of_size(adj, free & ~tmask, r - 1, t):
            yield (t, *rest)


def rotation_improve(
    g: Graph, packing: Packing, matching: Matching, radius: int = 2
) -> tuple[Packing, Matching] | None:
    """First improvement reachable by swapping out at most radius triangles.

    Scans r = 0..radius and the r-subsets of the packing in index order.
    A size improvement (some freed region repacks into r+1 or more
    triangles) is returned first; failing that, an equal-size
    replacement whose leftover vertices carry a strictly larger maximum
    matching.  Returns the new (packing, matching), both canonically
    sorted, or None at a fixpoint.  The input matching must live in the
    graph minus the packing.
    """
    if radius not in (1, 2):
        raise ValueError(f"radius must be 1 or 2, got {radius}")
    packed = check_packing(g, packing)
    _check_outside_matching(g, matching, packed)
    solver = _PackSolver(g)
    full = (1 << g.n) - 1

    # Phase 1: try to grow the packing.
    for r in range(radius + 1):
        for drop in combinations(range(len(packing)), r):
            kept = [t for idx, t in enumerate(packing) if idx not in drop]
            region = full & ~vertex_mask(v for t in kept for v in t)
            got = solver.opt(region)
            if got >= r + 1:
                new_packing = tuple(sorted(kept + list(solver.lex_witness(region, got))))
                outside = full & ~check_packing(g, new_packing)
                return new_packing, max_matching(g, outside)

    # Phase 2: same size, strictly better outside matching.
    for r in range(radius + 1):
        for drop in combinations(range(len(packing)), r):
            kept = [t for idx, t in enumerate(packing) if idx not in drop]
            region = full & ~vertex_mask(v for t in kept for v in t)
            for repl in _packings_of_size(solver.adj, region, r, None):
                new_packing = tuple(sorted(kept + list(repl)))
                outside = full & ~vertex_mask(v for t in new_packing for v in t)
                better = max_matching(g, outside)
                if len(better) > len(matching):
                    return new_packing, better
    return None


# ===================================================================
# Connections between triangles
# ===================================================================


def connects(g: Graph, via: Triangle, t: Triangle, tp: Triangle) -> bool:
    """Whether via connects t to tp, favouring t.

    True iff via sends at least 8 edges to each of t and tp, or all 9
    to t and at least 7 to tp.  The relation is not symmetric in t and
    tp; the favoured triangle is the second argument.
    """
    check_packing(g, tuple(sorted((via, t, tp))))
    to_t = edges_between(g, via, t)
    to_tp = edges_between(g, via, tp)
    return (to_t >= 8 and to_tp >= 8) or (to_t == 9 and to_tp >= 7)


def connection_stats(
    g: Graph, tset: list[Triangle], t: Triangle, tp: Triangle
) -> ConnectionStats:
    """Exact connector count for the ordered pair (t, tp) within tset."""
    if t not in tset or tp not in tset:
        raise ValueError("t and tp must belong to tset")
    if t == tp:
        raise ValueError("t and tp must be distinct")
    check_packing(g, tuple(sorted(tset)))
    connectors = tuple(
        via for via in tset if via not in (t, tp) and connects(g, via, t, tp)
    )
    return ConnectionStats(t, tp, len(connectors), connectors)
