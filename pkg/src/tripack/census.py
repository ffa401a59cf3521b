"""Exhaustive censuses over every labeled graph on up to 8 vertices.

Two scans live here.

* Triangle-packing census: for each cap k, the exact maximum edge count
  among n-vertex graphs whose largest collection of vertex-disjoint
  triangles has size at most k.  The scan walks all 2^C(n,2) edge
  subsets in Gray-code order, so exactly one edge flips per step, and
  keeps a bitmask over vertex triples marking which currently form
  triangles; a flip touches only the n-2 triples through the flipped
  edge.  On at most 8 vertices no graph packs three disjoint triangles
  (that would need 9 vertices), so per subset only two questions are
  live: is there a triangle, and are there two disjoint ones.  The
  second is tested lazily, only when the running edge count already
  beats the best known cap-1 graph.

* Matching census: for each s, the exact maximum edge count among
  n-vertex graphs with no matching of size s+1, plus the full table of
  matching numbers indexed by edge subset.  Each graph is solved by a
  subset DP over vertex sets (no useful incremental state survives an
  edge flip here, so this scan runs in plain index order).  The table
  is ground truth for the branch-and-bound matcher and the per-size
  maxima feed the classical no-large-matching bound.

Both scans split the subset space into blocks by a fixed high-order
edge-bit prefix; blocks are independent and their tables are folded in
block order, so results never depend on thread count or scheduling.
For n >= 7 (2^21 and 2^28 subsets) the blocks run through numba JIT
kernels; the pure Python path is the reference implementation and the
default for n <= 6.  If numba is missing, the JIT path raises rather
than silently falling back to a scan that could not finish.

Edge-subset indexing is shared by everything here: bit e of an index
corresponds to the e-th pair in lexicographic order over (u, v) with
u < v, see edge_order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Sequence

import numpy as np

from .bounds import erdos_gallai_bound, moon_bound
from .extremal import e_max
from .graph import Graph, build_graph

__all__ = [
    "TRIANGLE_CENSUS_CAP",
    "MATCHING_CENSUS_CAP",
    "CensusRow",
    "MatchingCensus",
    "census_rows",
    "edge_order",
    "graph_index",
    "matching_census",
    "subset_graph",
    "triangle_census",
]

TRIANGLE_CENSUS_CAP = 8

MATCHING_CENSUS_CAP = 7

# Blocks are 2^PREFIX_BITS fixed slices of the subset space (one slice
# when the space is too small to be worth splitting).
_PREFIX_BITS = 6

_Engine = Literal["auto", "python", "jit"]


def edge_order(n: int) -> tuple[tuple[int, int], ...]:
    """The pairs (u, v), u < v, in the bit order used by subset indices."""
    return tuple((u, v) for u in range(n) for v in range(u + 1, n))


def subset_graph(n: int, index: int) -> Graph:
    """The graph whose edge set is the given subset index."""
    edges = edge_order(n)
    if not 0 <= index < 1 << len(edges):
        raise ValueError(f"index {index} out of range for n={n}")
    return build_graph(n, [edges[e] for e in range(len(edges)) if (index >> e) & 1])


def graph_index(g: Graph) -> int:
    """Inverse of subset_graph (the graph's position in the census order)."""
    index = 0
    for e, (u, v) in enumerate(edge_order(g.n)):
        if g.has_edge(u, v):
            index |= 1 << e
    return index


def _split(m: int) -> tuple[int, int]:
    """(low bit count, block count) for an m-edge subset space."""
    prefix = _PREFIX_BITS if m >= 2 * _PREFIX_BITS else 0
    return m - prefix, 1 << prefix


def _check_engine(engine: str, n: int) -> str:
    if engine not in ("auto", "python", "jit"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "auto":
        return "python" if n <= 6 else "jit"
    return engine


@lru_cache(maxsize=None)
def _tri_tables(
    n: int,
) -> tuple[
    tuple[tuple[int, int], ...],
    tuple[tuple[int, int, int], ...],
    tuple[tuple[tuple[int, int], ...], ...],
    tuple[int, ...],
]:
    """(edges, triples, triples through each edge as (t, third vertex),
    and per-triple mask of vertex-disjoint triples)."""
    edges = edge_order(n)
    eidx = {e: i for i, e in enumerate(edges)}
    triples = tuple(itertools.combinations(range(n), 3))
    through: list[list[tuple[int, int]]] = [[] for _ in edges]
    for t, (a, b, c) in enumerate(triples):
        through[eidx[(a, b)]].append((t, c))
        through[eidx[(a, c)]].append((t, b))
        through[eidx[(b, c)]].append((t, a))
    dmask = []
    for a, b, c in triples:
        mask = 0
        for t, (x, y, z) in enumerate(triples):
            if {a, b, c}.isdisjoint((x, y, z)):
                mask |= 1 << t
        dmask.append(mask)
    return edges, triples, tuple(tuple(x) for x in through), tuple(dmask)


def _tri_scan_python(n: int) -> tuple[int, int]:
    """Reference scan: (max edges triangle-free, max edges without two
    disjoint triangles)."""
    edges, triples, through, dmask = _tri_tables(n)
    m = len(edges)
    low, nblocks = _split(m)
    best0 = best1 = -1
    for block in range(nblocks):
        base = block << low
        adj = [0] * n
        ec = 0
        for e in range(m):
            if (base >> e) & 1:
                u, v = edges[e]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                ec += 1
        tri = 0
        for t, (a, b, c) in enumerate(triples):
            if (adj[a] >> b) & (adj[a] >> c) & (adj[b] >> c) & 1:
                tri |= 1 << t
        b0, b1 = _classify_python(tri, ec, best0, best1, dmask)
        best0, best1 = b0, b1
        for i in range(1, 1 << low):
            e = (i & -i).bit_length() - 1
            u, v = edges[e]
            if (adj[u] >> v) & 1:
                ec -= 1
            else:
                ec += 1
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            uv = (adj[u] >> v) & 1
            for t, w in through[e]:
                if uv & (adj[u] >> w) & (adj[v] >> w) & 1:
                    tri |= 1 << t
                else:
                    tri &= ~(1 << t)
            best0, best1 = _classify_python(tri, ec, best0, best1, dmask)
    return best0, best1


def _classify_python(
    tri: int, ec: int, best0: int, best1: int, dmask: Sequence[int]
) -> tuple[int, int]:
    if tri == 0:
        if ec > best0:
            best0 = ec
        if ec > best1:
            best1 = ec
    elif ec > best1:
        tm = tri
        disjoint = False
        while tm:
            t = (tm & -tm).bit_length() - 1
            if tri & dmask[t]:
                disjoint = True
                break
            tm &= tm - 1
        if not disjoint:
            best1 = ec
    return best0, best1


@lru_cache(maxsize=1)
def _kernels():
    """Compile and return (triangle kernel, matching kernel)."""
    try:
        import numba
    except ImportError as exc:  # pragma: no cover - sandbox has numba
        raise RuntimeError(
            "the JIT census path needs numba; install it or pass"
            " engine='python' (feasible for n <= 6 only)"
        ) from exc

    @numba.njit(inline="always")
    def classify(tri, ec, b0, b1, dmask):
        if tri == 0:
            if ec > b0:
                b0 = ec
            if ec > b1:
                b1 = ec
        elif ec > b1:
            tm = tri
            disjoint = False
            while tm != 0:
                t = 0
                ll = tm
                while ll & 1 == 0:
                    t += 1
                    ll >>= 1
                if tri & dmask[t] != 0:
                    disjoint = True
                    break
                tm &= tm - 1
            if not disjoint:
                b1 = ec
        return b0, b1

    @numba.njit(parallel=True)
    def tri_kernel(n, low, eu, ev, ta, tb, tc, toe_t, toe_w, dmask, out0, out1):
        m = eu.shape[0]
        ntrip = ta.shape[0]
        for block in numba.prange(out0.shape[0]):
            base = np.int64(block) << low
            adj = np.zeros(8, np.int64)
            ec = np.int64(0)
            for e in range(m):
                if (base >> e) & 1:
                    adj[eu[e]] |= np.int64(1) << ev[e]
                    adj[ev[e]] |= np.int64(1) << eu[e]
                    ec += 1
            tri = np.int64(0)
            for t in range(ntrip):
                a, b, c = ta[t], tb[t], tc[t]
                if (adj[a] >> b) & (adj[a] >> c) & (adj[b] >> c) & 1:
                    tri |= np.int64(1) << t
            b0 = np.int64(-1)
            b1 = np.int64(-1)
            b0, b1 = classify(tri, ec, b0, b1, dmask)
            for i in range(1, 1 << low):
                e = 0
                ii = i
                while ii & 1 == 0:
                    e += 1
                    ii >>= 1
                u, v = eu[e], ev[e]
                if (adj[u] >> v) & 1:
                    ec -= 1
                else:
                    ec += 1
                adj[u] ^= np.int64(1) << v
                adj[v] ^= np.int64(1) << u
                uv = (adj[u] >> v) & 1
                for j in range(n - 2):
                    t = toe_t[e, j]
                    w = toe_w[e, j]
                    if uv & (adj[u] >> w) & (adj[v] >> w) & 1:
                        tri |= np.int64(1) << t
                    else:
                        tri &= ~(np.int64(1) << t)
                b0, b1 = classify(tri, ec, b0, b1, dmask)
            out0[block] = b0
            out1[block] = b1

    @numba.njit(parallel=True)
    def match_kernel(n, low, eu, ev, table, beste):
        m = eu.shape[0]
        full = (1 << n) - 1
        for block in numba.prange(beste.shape[0]):
            dp = np.zeros(1 << n, np.int8)
            adj = np.zeros(8, np.int64)
            lo = np.int64(block) << low
            for g in range(lo, lo + (np.int64(1) << low)):
                for v in range(n):
                    adj[v] = 0
                ec = 0
                for e in range(m):
                    if (g >> e) & 1:
                        adj[eu[e]] |= np.int64(1) << ev[e]
                        adj[ev[e]] |= np.int64(1) << eu[e]
                        ec += 1
                for s in range(1, full + 1):
                    v = 0
                    while (s >> v) & 1 == 0:
                        v += 1
                    rest = s & (s - 1)
                    best = dp[rest]
                    nbm = adj[v] & rest
                    while nbm != 0:
                        u = 0
                        ll = nbm
                        while ll & 1 == 0:
                            u += 1
                            ll >>= 1
                        cand = 1 + dp[rest & ~(np.int64(1) << u)]
                        if cand > best:
                            best = cand
                        nbm &= nbm - 1
                    dp[s] = best
                size = dp[full]
                table[g] = size
                if ec > beste[block, size]:
                    beste[block, size] = ec

    return tri_kernel, match_kernel


def _run_jit(threads: int, call):
    """Run a compiled kernel under a bounded numba thread count."""
    import numba

    limit = min(threads, numba.config.NUMBA_NUM_THREADS)
    previous = numba.get_num_threads()
    numba.set_num_threads(max(1, limit))
    try:
        return call()
    finally:
        numba.set_num_threads(previous)


def _tri_scan_jit(n: int, threads: int) -> tuple[int, int]:
    edges, triples, through, dmask = _tri_tables(n)
    m = len(edges)
    low, nblocks = _split(m)
    tri_kernel, _ = _kernels()
    eu = np.array([e[0] for e in edges], np.int64)
    ev = np.array([e[1] for e in edges], np.int64)
    ta = np.array([t[0] for t in triples], np.int64)
    tb = np.array([t[1] for t in triples], np.int64)
    tc = np.array([t[2] for t in triples], np.int64)
    toe_t = np.array([[tw[0] for tw in row] for row in through], np.int64)
    toe_w = np.array([[tw[1] for tw in row] for row in through], np.int64)
    dm = np.array(dmask, np.int64)
    out0 = np.full(nblocks, -1, np.int64)
    out1 = np.full(nblocks, -1, np.int64)
    _run_jit(
        threads,
        lambda: tri_kernel(n, low, eu, ev, ta, tb, tc, toe_t, toe_w, dm, out0, out1),
    )
    best0 = best1 = -1
    for block in range(nblocks):
        best0 = max(best0, int(out0[block]))
        best1 = max(best1, int(out1[block]))
    return best0, best1


def triangle_census(
    n: int, *, threads: int = 1, engine: _Engine = "auto"
) -> tuple[int, ...]:
    """Exact max edge count per packing cap k = 0..n//3, by brute force.

    Entry k is the maximum number of edges of an n-vertex graph with no
    k+1 vertex-disjoint triangles.  For k = 2 (possible only when
    n >= 6) every n-vertex graph qualifies, since a third disjoint
    triangle would need 9 vertices; that entry is C(n, 2) without any
    scanning.  The k <= 1 entries come from the Gray-code scan.
    """
    if not 1 <= n <= TRIANGLE_CENSUS_CAP:
        raise ValueError(f"triangle census supports 1 <= n <= {TRIANGLE_CENSUS_CAP}")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    chosen = _check_engine(engine, n)
    if chosen == "python":
        best0, best1 = _tri_scan_python(n)
    else:
        best0, best1 = _tri_scan_jit(n, threads)
    out = [best0]
    kmax = n // 3
    if kmax >= 1:
        out.append(best1)
    if kmax >= 2:
        out.append(n * (n - 1) // 2)
    return tuple(out)


# ===================================================================
# Census rows (brute force against the constructions)
# ===================================================================


@dataclass(frozen=True)
class CensusRow:
    """One (n, k) line: brute-force optimum next to the constructions.

    moon_edges is None when n < 9k/2 + 4, where the closed formula
    carries no guarantee; agrees_with_moon is None in the same case.
    """

    n: int
    k: int
    brute_max_edges: int
    e_max_edges: int
    moon_edges: int | None
    agrees_with_e_max: bool
    agrees_with_moon: bool | None

    def as_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "k": self.k,
            "brute_max_edges": self.brute_max_edges,
            "e_max_edges": self.e_max_edges,
            "moon_edges": self.moon_edges,
            "agrees_with_e_max": self.agrees_with_e_max,
            "agrees_with_moon": self.agrees_with_moon,
        }


def census_rows(
    n: int,
    ks: Iterable[int] | None = None,
    *,
    threads: int = 1,
    engine: _Engine = "auto",
) -> tuple[CensusRow, ...]:
    """Census table for the requested caps (default: all of 0..n//3).

    Raises if the brute optimum ever falls below the best construction;
    the construction is a witness, so that would mean a scan bug.
    """
    brute = triangle_census(n, threads=threads, engine=engine)
    kmax = n // 3
    wanted = sorted(set(ks)) if ks is not None else list(range(kmax + 1))
    rows = []
    for k in wanted:
        if not 0 <= k <= kmax:
            raise ValueError(f"k={k} outside 0..{kmax} for n={n}")
        built, _ = e_max(n, k)
        if brute[k] < built:
            raise RuntimeError(
                f"census bug: brute {brute[k]} < construction {built} at"
                f" (n={n}, k={k})"
            )
        moon = moon_bound(n, k) if 2 * n >= 9 * k + 8 else None
        rows.append(
            CensusRow(
                n=n,
                k=k,
                brute_max_edges=brute[k],
                e_max_edges=built,
                moon_edges=moon,
                agrees_with_e_max=brute[k] == built,
                agrees_with_moon=None if moon is None else brute[k] == moon,
            )
        )
    return tuple(rows)


# ===================================================================
# Matching census
# ===================================================================


@dataclass(frozen=True)
class MatchingCensus:
    """Exhaustive matching-number data for all graphs on n vertices.

    table[g] is the matching number of subset index g (see edge_order);
    max_edges_by_size[s] is the maximum edge count among graphs whose
    matching number is exactly s.
    """

    n: int
    max_edges_by_size: tuple[int, ...]
    table: np.ndarray

    def max_edges_matching_at_most(self, s: int) -> int:
        """Maximum edges among graphs with no matching of size s+1."""
        if not 0 <= s <= self.n // 2:
            raise ValueError(f"s={s} outside 0..{self.n // 2}")
        return max(self.max_edges_by_size[: s + 1])

    def erdos_gallai_rows(self) -> tuple[tuple[int, int, int, bool], ...]:
        """(s, brute max, closed formula, equal) for each s with
        2s+1 <= n, the formula's domain."""
        rows = []
        for s in range((self.n - 1) // 2 + 1):
            brute = self.max_edges_matching_at_most(s)
            formula = erdos_gallai_bound(self.n, s)
            rows.append((s, brute, formula, brute == formula))
        return tuple(rows)


def _match_scan_python(n: int) -> MatchingCensus:
    edges = edge_order(n)
    m = len(edges)
    table = np.zeros(1 << m, np.uint8)
    smax = n // 2
    best = [-1] * (smax + 1)
    full = (1 << n) - 1
    dp = [0] * (1 << n)
    for g in range(1 << m):
        adj = [0] * n
        ec = 0
        for e in range(m):
            if (g >> e) & 1:
                u, v = edges[e]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                ec += 1
        for s in range(1, full + 1):
            v = (s & -s).bit_length() - 1
            rest = s & (s - 1)
            score = dp[rest]
            nbm = adj[v] & rest
            while nbm:
                u = (nbm & -nbm).bit_length() - 1
                cand = 1 + dp[rest & ~(1 << u)]
                if cand > score:
                    score = cand
                nbm &= nbm - 1
            dp[s] = score
        size = dp[full]
        table[g] = size
        if ec > best[size]:
            best[size] = ec
    return MatchingCensus(n=n, max_edges_by_size=tuple(best), table=table)


def _match_scan_jit(n: int, threads: int) -> MatchingCensus:
    edges = edge_order(n)
    m = len(edges)
    low, nblocks = _split(m)
    _, match_kernel = _kernels()
    eu = np.array([e[0] for e in edges], np.int64)
    ev = np.array([e[1] for e in edges], np.int64)
    table = np.zeros(1 << m, np.uint8)
    beste = np.full((nblocks, n // 2 + 1), -1, np.int64)
    _run_jit(threads, lambda: match_kernel(n, low, eu, ev, table, beste))
    best = [-1] * (n // 2 + 1)
    for block in range(nblocks):
        for s in range(n // 2 + 1):
            best[s] = max(best[s], int(beste[block, s]))
    return MatchingCensus(n=n, max_edges_by_size=tuple(best), table=table)


def matching_census(
    n: int, *, threads: int = 1, engine: _Engine = "auto"
) -> MatchingCensus:
    """Matching numbers of all 2^C(n,2) labeled graphs on n vertices."""
    if not 1 <= n <= MATCHING_CENSUS_CAP:
        raise ValueError(f"matching census supports 1 <= n <= {MATCHING_CENSUS_CAP}")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    chosen = _check_engine(engine, n)
    if chosen == "python":
        return _match_scan_python(n)
    return _match_scan_jit(n, threads)
