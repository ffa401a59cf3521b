"""Extremal constructions for graphs without k+1 disjoint triangles.

Four families, addressed by the tokens E1..E4.  Each is assembled from a
clique part X and independent parts Y1..Y4; the families differ in which
part pairs are completely joined.  Vertex labels always run through X
first, then Y1, Y2, and (for E4) Y3, Y4.

    E1: X of size k joined to everything, complete bipartite Y1-Y2.
    E2: clique X of size 2k+1; Y1 joined to X and Y2 (only 4k < n-1).
    E3: clique X of size 2k+1 joined to an independent rest.
    E4: clique X joined to Y1 and Y2, plus the complete bipartite graph
        between Y1+Y4 and Y2+Y3; for 3k >= n-2 it is the complete graph.

All operations use exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, Triangle, build_graph, complete_graph

__all__ = [
    "FAMILIES",
    "TRIANGLE_TYPES",
    "ExtremalSpec",
    "Thresholds",
    "Transition",
    "family_valid",
    "variants_of",
    "packing_shortfalls",
    "part_ranges",
    "build",
    "edge_formula",
    "e_max",
    "thresholds",
    "classify_triangle",
    "type_matrix",
    "figure2_data",
]

FAMILIES = ("E1", "E2", "E3", "E4")
TRIANGLE_TYPES = ("XXX", "XXY1", "XXY2", "XY1Y2")


# ===================================================================
# Family specs and validity
# ===================================================================


@dataclass(frozen=True)
class ExtremalSpec:
    """One family instance.

    variant selects among equal-size builds where the family admits
    several: for E2 it is 0 (|Y1| = ceil(n/2), the default) or 1
    (|Y1| = floor(n/2), distinct only for odd n); for E4 it is the value
    of |Y1| in [0, n-3k-2], defaulting to the balanced split.  E1 and E3
    take no variant.
    """

    family: str
    n: int
    k: int
    variant: int | None = None

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        n, k = self.n, self.k
        if n < 0 or k < 0 or 3 * k > n:
            raise ValueError(f"need 0 <= 3k <= n, got n={n}, k={k}")
        if not family_valid(self.family, n, k):
            raise ValueError(f"{self.family} is not defined at (n={n}, k={k})")
        v = self.variant
        if self.family == "E2":
            if v not in (None, 0, 1):
                raise ValueError(f"E2 variant must be 0 or 1, got {v}")
        elif self.family == "E4":
            if v is not None:
                if 3 * k >= n - 2:
                    raise ValueError("E4 variant unused in the complete-graph regime")
                if not 0 <= v <= n - 3 * k - 2:
                    raise ValueError(f"E4 variant {v} outside [0, {n - 3 * k - 2}]")
        elif v is not None:
            raise ValueError(f"{self.family} takes no variant, got {v}")


def _check_range(n: int, k: int) -> None:
    if n < 0 or k < 0 or 3 * k > n:
        raise ValueError(f"need 0 <= 3k <= n, got n={n}, k={k}")


def family_valid(family: str, n: int, k: int) -> bool:
    """Whether the family is defined at (n, k) (assumes 0 <= 3k <= n).

    E1 always is.  E2 needs 4k < n-1.  E3 needs a vertex left for the
    clique, n >= 2k+1.  E4 needs either the complete-graph regime
    3k >= n-2 or nonnegative part sizes: 6k-n+4 >= 0 and n-3k-2 >= 0.
    """
    _check_range(n, k)
    if family == "E1":
        return True
    if family == "E2":
        return 4 * k < n - 1
    if family == "E3":
        return n >= 2 * k + 1
    if family == "E4":
        if 3 * k >= n - 2:
            return True
        return 6 * k - n + 4 >= 0
    raise ValueError(f"unknown family {family!r}")


def part_ranges(spec: ExtremalSpec) -> dict[str, range]:
    """Vertex ranges of the parts, in label order X, Y1, Y2, Y3, Y4.

    The complete-graph regime of E4 is reported as a single X part.
    """
    spec.validate()
    n, k = spec.n, spec.k
    fam = spec.family
    if fam == "E1":
        x = k
        y1 = (n - k + 1) // 2
        sizes = [("X", x), ("Y1", y1), ("Y2", n - x - y1)]
    elif fam == "E2":
        x = 2 * k + 1
        y1 = (n + 1) // 2 if spec.variant in (None, 0) else n // 2
        sizes = [("X", x), ("Y1", y1), ("Y2", n - x - y1)]
    elif fam == "E3":
        x = 2 * k + 1
        sizes = [("X", x), ("Y1", n - x)]
    else:
        if 3 * k >= n - 2:
            sizes = [("X", n)]
        else:
            q = n - 3 * k - 2
            y1 = (q + 1) // 2 if spec.variant is None else spec.variant
            sizes = [
                ("X", 6 * k - n + 4),
                ("Y1", y1),
                ("Y2", q - y1),
                ("Y3", y1),
                ("Y4", q - y1),
            ]
    out: dict[str, range] = {}
    start = 0
    for label, size in sizes:
        out[label] = range(start, start + size)
        start += size
    if start != n:
        raise AssertionError(f"part sizes sum to {start}, expected {n}")
    return out


# ===================================================================
# Construction
# ===================================================================


def _within(part: range) -> list[tuple[int, int]]:
    return [(u, v) for u in part for v in part if u < v]


def _between(a: range, b: range) -> list[tuple[int, int]]:
    return [(min(u, v), max(u, v)) for u in a for v in b]


def build(spec: ExtremalSpec) -> Graph:
    """Build the family member on vertices 0..n-1 (X first, then Y parts)."""
    spec.validate()
    parts = part_ranges(spec)
    n = spec.n
    fam = spec.family
    edges: list[tuple[int, int]] = []
    if fam in ("E1", "E3"):
        x = parts["X"]
        edges += _within(x)
        for label, part in parts.items():
            if label != "X":
                edges += _between(x, part)
        if fam == "E1":
            edges += _between(parts["Y1"], parts["Y2"])
    elif fam == "E2":
        edges += _within(parts["X"])
        edges += _between(parts["Y1"], parts["X"])
        edges += _between(parts["Y1"], parts["Y2"])
    else:
        if len(parts) == 1:
            return complete_graph(n)
        x = parts["X"]
        edges += _within(x)
        edges += _between(x, parts["Y1"]) + _between(x, parts["Y2"])
        left = list(parts["Y1"]) + list(parts["Y4"])
        right = list(parts["Y2"]) + list(parts["Y3"])
        edges += [(min(u, v), max(u, v)) for u in left for v in right]
    return build_graph(n, edges)


# ===================================================================
# Closed-form edge counts
# ===================================================================


def edge_formula(family: str, n: int, k: int) -> int:
    """Exact edge count of the family at (n, k), any variant.

    Raises ValueError when the family is not defined there.
    """
    if not family_valid(family, n, k):
        raise ValueError(f"{family} is not defined at (n={n}, k={k})")
    if family == "E1":
        r = n - k
        return math.comb(k, 2) + k * r + (r // 2) * ((r + 1) // 2)
    if family == "E2":
        return math.comb(2 * k + 1, 2) + (n // 2) * ((n + 1) // 2)
    if family == "E3":
        return math.comb(2 * k + 1, 2) + (2 * k + 1) * (n - 2 * k - 1)
    if 3 * k >= n - 2:
        return math.comb(n, 2)
    x = 6 * k - n + 4
    q = n - 3 * k - 2
    return math.comb(x, 2) + x * q + q * q


def e_max(n: int, k: int) -> tuple[int, tuple[str, ...]]:
    """Best edge count over the families defined at (n, k), with the argmax set."""
    _check_range(n, k)
    counts = {
        fam: edge_formula(fam, n, k) for fam in FAMILIES if family_valid(fam, n, k)
    }
    best = max(counts.values())
    return best, tuple(fam for fam in FAMILIES if counts.get(fam) == best)


# ===================================================================
# Thresholds (family transitions in k for fixed n)
# ===================================================================


@dataclass(frozen=True)
class Transition:
    """First k whose argmax family set differs from the previous k's."""

    k: int
    before: tuple[str, ...]
    after: tuple[str, ...]


@dataclass(frozen=True)
class Thresholds:
    """Real crossover points and the observed integer argmax transitions.

    closed_forms holds, in order: the E1/E2 boundary (2n-6)/9, the E2/E3
    boundary (n-1)/4, the E3/E4 boundary (5n-12+sqrt(3n^2-10n+12))/22,
    and the onset (n-2)/3 of the complete-graph regime of E4.
    transitions come from exact formula comparison over k = 0..n//3.
    """

    n: int
    closed_forms: tuple[float, float, float, float]
    transitions: tuple[Transition, ...]


def thresholds(n: int) -> Thresholds:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    closed = (
        (2 * n - 6) / 9,
        (n - 1) / 4,
        (5 * n - 12 + math.sqrt(3 * n * n - 10 * n + 12)) / 22,
        (n - 2) / 3,
    )
    transitions = []
    prev: tuple[str, ...] | None = None
    for k in range(n // 3 + 1):
        _, arg = e_max(n, k)
        if prev is not None and arg != prev:
            transitions.append(Transition(k, prev, arg))
        prev = arg
    return Thresholds(n, closed, tuple(transitions))


# ===================================================================
# Between-triangle edge counts by type (E4 only)
# ===================================================================


def classify_triangle(spec: ExtremalSpec, t: Triangle) -> str:
    """Type of a triangle of a non-clique E4 build: XXX, XXY1, XXY2 or XY1Y2."""
    parts = part_ranges(spec)
    labels = []
    for v in sorted(t):
        for label, part in parts.items():
            if v in part:
                labels.append(label)
                break
        else:
            raise ValueError(f"vertex {v} outside the graph")
    name = "".join(labels)
    if name not in TRIANGLE_TYPES:
        raise ValueError(f"triangle {tuple(t)} has unexpected type {name}")
    return name


def _type_profile(name: str) -> tuple[int, int, int]:
    """How many vertices of a triangle type land in X, Y1, Y2."""
    return (name.count("X"), name.count("1"), name.count("2"))


def type_matrix(
    spec: ExtremalSpec, packing: list[Triangle] | None = None
) -> list[list[int]]:
    """4x4 matrix of edge counts between disjoint triangles, by type pair.

    Rows and columns follow TRIANGLE_TYPES order.  The counts are
    structural: between two disjoint triangles, X-X, X-Y1, X-Y2 and
    Y1-Y2 vertex pairs are adjacent and Y1-Y1, Y2-Y2 pairs are not, so
    the count depends only on the two type profiles.  When a packing is
    given, every disjoint pair in it is classified and checked against
    the matrix; a mismatch or an unclassifiable triangle raises.
    """
    spec.validate()
    if spec.family != "E4" or 3 * spec.k >= spec.n - 2:
        raise ValueError("type_matrix needs a non-clique E4 spec")

    def entry(a: str, b: str) -> int:
        ax, a1, a2 = _type_profile(a)
        bx, b1, b2 = _type_profile(b)
        return ax * bx + ax * (b1 + b2) + bx * (a1 + a2) + a1 * b2 + a2 * b1

    matrix = [[entry(a, b) for b in TRIANGLE_TYPES] for a in TRIANGLE_TYPES]
    if packing is not None:
        from .graph import edges_between

        g = build(spec)
        typed = [(t, classify_triangle(spec, t)) for t in packing]
        for idx, (t, a) in enumerate(typed):
            for u, b in typed[idx + 1 :]:
                if set(t) & set(u):
                    continue
                got = edges_between(g, t, u)
                want = matrix[TRIANGLE_TYPES.index(a)][TRIANGLE_TYPES.index(b)]
                if got != want:
                    raise ValueError(
                        f"pair {t}({a}), {u}({b}): counted {got}, matrix says {want}"
                    )
    return matrix


def variants_of(family: str, n: int, k: int) -> list[int | None]:
    """Every variant selector the family admits at (n, k)."""
    if family == "E2":
        return [0, 1] if n % 2 else [0]
    if family == "E4" and family_valid("E4", n, k) and 3 * k < n - 2:
        return list(range(n - 3 * k - 1))
    return [None]


def packing_shortfalls(
    n_max: int = 15,
) -> list[tuple[str, int, int, int | None, int]]:
    """Valid builds holding fewer than k disjoint triangles, n <= n_max.

    Every family is guaranteed free of k+1 disjoint triangles, but only
    E1, E2 and E3 always reach k; E4 falls short when X is too small or
    the Y1/Y2 split too skewed.  Each row is (family, n, k, variant,
    exact packing number).  Uses the exact packer, so keep n_max small.
    """
    from .packing import packing_number

    out = []
    for n in range(n_max + 1):
        for k in range(n // 3 + 1):
            for fam in FAMILIES:
                if not family_valid(fam, n, k):
                    continue
                for v in variants_of(fam, n, k):
                    got = packing_number(build(ExtremalSpec(fam, n, k, v)))
                    if got < k:
                        out.append((fam, n, k, v, got))
    return out


# ===================================================================
# Per-k family table (figure data)
# ===================================================================


def figure2_data(n: int) -> list[tuple[int, int | None, int | None, int | None, int | None]]:
    """Rows (k, e_E1, e_E2, e_E3, e_E4) for k = 0..n//3; None when undefined."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    rows = []
    for k in range(n // 3 + 1):
        vals = tuple(
            edge_formula(fam, n, k) if family_valid(fam, n, k) else None
            for fam in FAMILIES
        )
        rows.append((k, *vals))
    return rows
