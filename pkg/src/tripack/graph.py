"""Dense bitset graphs with exact triangle and matching machinery.

The Graph type stores one adjacency bitmask per vertex (Python integers,
so word-parallel set operations come for free).  Everything downstream --
triangle enumeration, the exact matching solver, edge counting between
vertex sets, the packers -- works on these masks.
"""

from __future__ import annotations

import json
from collections.abc import Iterable

__all__ = [
    "GRAPH_CAP",
    "MATCHING_CAP",
    "Graph",
    "build_graph",
    "complete_graph",
    "triangles",
    "max_matching",
    "matching_number",
    "edges_between",
    "edges_within",
    "sees",
    "sees_vertex",
    "vertex_mask",
    "write_graph6",
    "read_graph6",
    "graph_to_json",
    "graph_from_json",
]

# Vertices beyond this are refused at construction time.
GRAPH_CAP = 128
# max_matching is exact branch and bound; refuse sizes where that could stall.
MATCHING_CAP = 64

Triangle = tuple[int, int, int]
Edge = tuple[int, int]
Matching = tuple[Edge, ...]


# ===================================================================
# Graph type
# ===================================================================


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighborhood of ``v`` as a bitmask.  Instances are
    safe to share across threads; all mutators return new graphs.
    """

    __slots__ = ("n", "_adj", "_ecount")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self._adj = adj
        self._ecount = sum(m.bit_count() for m in adj) // 2

    # -- basic queries ------------------------------------------------

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(m.bit_count() for m in self._adj)

    def edge_count(self) -> int:
        return self._ecount

    def edges(self) -> list[Edge]:
        """All edges as sorted pairs, lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1) << (u + 1)
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                out.append((u, v))
        return out

    def neighbors(self, v: int) -> list[int]:
        return _bits(self._adj[v])

    def with_edge(self, u: int, v: int) -> Graph:
        """New graph with edge uv added (u != v, in range)."""
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def without_edge(self, u: int, v: int) -> Graph:
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def vertex_mask(vertices: Iterable[int]) -> int:
    """Bitmask of a vertex collection."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a graph with exactly the given edges (duplicates collapsed).

    Raises ValueError on an out-of-range vertex or a loop edge.
    """
    if n < 0:
        raise ValueError(f"negative vertex count {n}")
    if n > GRAPH_CAP:
        raise ValueError(f"n={n} exceeds graph cap {GRAPH_CAP}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


# ===================================================================
# Triangles and the "sees" relation
# ===================================================================


def triangles(g: Graph) -> list[Triangle]:
    """All triangles of g as sorted triples, lexicographic order.

    For each edge uv (u < v) the common neighborhood above v is read off
    one bitmask intersection, so each triangle is produced exactly once.
    """
    out: list[Triangle] = []
    adj = g._adj
    for u in range(g.n):
        above_u = adj[u] >> (u + 1) << (u + 1)
        rest = above_u
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            common = adj[u] & adj[v] >> (v + 1) << (v + 1)
            while common:
                w = (common & -common).bit_length() - 1
                common &= common - 1
                out.append((u, v, w))
    return out


def _check_triangle(g: Graph, t: Triangle) -> int:
    u, v, w = t
    if not (u < v < w):
        raise ValueError(f"triangle {t} not sorted ascending")
    if not (g.has_edge(u, v) and g.has_edge(u, w) and g.has_edge(v, w)):
        raise ValueError(f"{t} is not a triangle of the graph")
    return 1 << u | 1 << v | 1 << w


def sees(g: Graph, e: Edge, t: Triangle) -> bool:
    """True iff edge uv together with some vertex of t forms a triangle."""
    u, v = e
    tmask = _check_triangle(g, t)
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    if tmask & (1 << u | 1 << v):
        raise ValueError(f"edge ({u},{v}) meets triangle {t}")
    return bool(g._adj[u] & g._adj[v] & tmask)


def sees_vertex(g: Graph, v: int, t: Triangle) -> bool:
    """True iff v plus an edge of t forms a triangle (v adjacent to two of t)."""
    tmask = _check_triangle(g, t)
    if tmask >> v & 1:
        raise ValueError(f"vertex {v} lies in triangle {t}")
    return (g._adj[v] & tmask).bit_count() >= 2


# ===================================================================
# Edge counting between vertex sets
# ===================================================================


def edges_within(g: Graph, a: Iterable[int]) -> int:
    """Number of edges with both ends in a."""
    amask = vertex_mask(a)
    total = 0
    rest = amask
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        total += (g._adj[v] & amask).bit_count()
    return total // 2


def edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """Number of edges with one end in a and the other in b (disjoint sets)."""
    amask = vertex_mask(a)
    bmask = vertex_mask(b)
    if amask & bmask:
        raise ValueError("vertex sets overlap")
    total = 0
    rest = amask
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        total += (g._adj[v] & bmask).bit_count()
    return total


# ===================================================================
# Exact maximum matching
# ===================================================================


def max_matching(g: Graph, allowed: int | None = None) -> Matching:
    """A maximum matching, lexicographically least among maximum ones.

    Branch and bound: repeatedly branch on the lowest free vertex v --
    first matching v to each free neighbor in ascending order, then
    leaving v unmatched.  The leftmost branch doubles as the greedy
    initial bound.  A subtree is cut when current size plus
    floor(free/2) cannot beat the best size found; matchings are visited
    in lexicographic order of their sorted pair sequence, so the first
    matching reaching each new size is the lexicographically least of
    that size, and cutting ties is safe.

    ``allowed`` optionally restricts the matching to a vertex bitmask.
    """
    if g.n > MATCHING_CAP:
        raise ValueError(f"n={g.n} exceeds matching cap {MATCHING_CAP}")
    adj = g._adj
    free0 = (1 << g.n) - 1 if allowed is None else allowed
    best_pairs: list[Edge] = []
    best_size = 0
    current: list[Edge] = []

    def rec(free: int) -> None:
        nonlocal best_size, best_pairs
        if len(current) + (free.bit_count() >> 1) <= best_size:
            return
        # drop free vertices with no free neighbor; they cannot matter
        v = -1
        rest = free
        while rest:
            cand = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj[cand] & free:
                v = cand
                break
        if v < 0:
            return
        nbrs = adj[v] & free
        vbit = 1 << v
        while nbrs:
            ubit = nbrs & -nbrs
            u = ubit.bit_length() - 1
            nbrs &= nbrs - 1
            current.append((v, u))
            if len(current) > best_size:
                best_size = len(current)
                best_pairs = current.copy()
            rec(free & ~vbit & ~ubit)
            current.pop()
        rec(free & ~vbit)

    rec(free0)
    return tuple(best_pairs)


def matching_number(g: Graph, allowed: int | None = None) -> int:
    return len(max_matching(g, allowed))


# ===================================================================
# graph6 encoding (bit-exact standard format)
# ===================================================================


def write_graph6(g: Graph) -> str:
    """Encode as graph6 (supports n up to the graph cap)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> s & 0x3F) + 63) for s in (12, 6, 0))
    bits = []
    for j in range(1, n):
        col = g._adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for p in range(0, len(bits), 6):
        b = 0
        for bit in bits[p : p + 6]:
            b = b << 1 | bit
        body.append(chr(b + 63))
    return head + "".join(body)


def read_graph6(s: str) -> Graph:
    """Decode a graph6 string (single graph, no header line)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ValueError("empty graph6 string")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise ValueError("unsupported or truncated graph6 size field")
        n = 0
        for c in s[1:4]:
            n = n << 6 | (ord(c) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 0 or n > GRAPH_CAP:
        raise ValueError(f"graph6 vertex count {n} out of range")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError("graph6 body length mismatch")
    bits = []
    for c in body:
        b = ord(c) - 63
        if not 0 <= b < 64:
            raise ValueError(f"invalid graph6 character {c!r}")
        bits.extend(b >> s6 & 1 for s6 in (5, 4, 3, 2, 1, 0))
    edges = []
    p = 0
    for j in range(1, n):
        for i in range(j):
            if bits[p]:
                edges.append((i, j))
            p += 1
    return build_graph(n, edges)


# ===================================================================
# JSON adjacency-list encoding
# ===================================================================


def graph_to_json(g: Graph) -> str:
    """Serialize as {"n": ..., "adjacency": [[sorted neighbors], ...]}."""
    payload = {"n": g.n, "adjacency": [g.neighbors(v) for v in range(g.n)]}
    return json.dumps(payload, sort_keys=True)


def graph_from_json(text: str) -> Graph:
    """Read a graph from JSON holding "n" plus "adjacency" or "edges"."""
    payload = json.loads(text)
    if not isinstance(payload, dict) or "n" not in payload:
        raise ValueError('graph JSON must be an object with an "n" field')
    n = payload["n"]
    if "adjacency" in payload:
        adjacency = payload["adjacency"]
        if len(adjacency) != n:
            raise ValueError("adjacency length differs from n")
        edges = [(u, v) for u, nbrs in enumerate(adjacency) for v in nbrs if u < v]
        g = build_graph(n, edges)
        # reject one-sided (asymmetric) input rather than silently fixing it
        for u, nbrs in enumerate(adjacency):
            for v in nbrs:
                if not g.has_edge(u, v):
                    raise ValueError(f"asymmetric adjacency at ({u},{v})")
        return g
    if "edges" in payload:
        return build_graph(n, [tuple(e) for e in payload["edges"]])
    raise ValueError('graph JSON needs "adjacency" or "edges"')
