"""Canonical six-part decomposition and its edge-bound audit.

A graph whose triangles admit a maximum packing decomposes into the packed
triangles, split into four classes by how the outside structure sees them,
plus a maximum matching on the unpacked vertices and an independent
remainder:

* t1: triangles seen by at least two matching edges;
* t2: of the rest, those seen by a matching edge together with an
  independent vertex, or by two independent vertices;
* t3 / t4: the remaining pool, split by peeling.  While some pool triangle
  sends at most 8*(pool size - 1) edges to the rest of the pool, the
  lexicographically least such triangle is peeled into t3; the survivors
  form t4, so each of them sends more than 8*(t4 - 1) edges to the others.

``decompose`` picks, among all maximum packings, one whose outside matching
is largest, breaking ties by lexicographic packing order (the scan stops
early once the matching meets the trivial floor(outside/2) ceiling, which
cannot change the winner).  The peel sequence is retained as a trace so
that ``audit`` can replay it.

``audit`` validates the decomposition structurally (partition, class
rules, trace replay, maximality of the packing and of the outside
matching) and then evaluates every edge-count bound the decomposition
guarantees, one report line each.  Bounds whose guard fails (class of
size one, empty matching where a case split demands one) are reported as
skipped with the reason.  Canonicity of the packing choice is a
construction guarantee of ``decompose`` and is not re-derived here.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .bounds import Profile, f, f_prime, family_formula, h_lemma, _c2
from .graph import (
    Edge,
    Graph,
    Matching,
    Triangle,
    build_graph,
    edges_between,
    edges_within,
    max_matching,
    matching_number,
    sees,
    sees_vertex,
    vertex_mask,
)
from .packing import (
    ENUM_CAP,
    Packing,
    _PackSolver,
    _triangles_in,
    check_packing,
    packing_number,
)


def saturate(g: Graph, k: int) -> Graph:
    """Add every edge that keeps the graph free of k+1 disjoint triangles.

    One lexicographic pass suffices for edge-maximality because the packing
    number is monotone under edge addition: an edge rejected now would also
    be rejected later.
    """
    if packing_number(g) > k:
        raise ValueError(f"graph already packs more than k={k} triangles")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            candidate = g.with_edge(u, v)
            if packing_number(candidate) <= k:
                g = candidate
    return g


def random_saturated(n: int, k: int, seed: int, attempts: int = 32) -> Graph:
    """Edge-maximal graph with packing number at most k from a seeded start.

    Draws sparse random graphs until one packs at most k triangles (falling
    back to the empty graph), then saturates it.
    """
    rng = random.Random(seed)
    g = build_graph(n, [])
    for _ in range(attempts):
        p = rng.uniform(0.2, 0.4)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        candidate = build_graph(n, edges)
        if packing_number(candidate) <= k:
            g = candidate
            break
    return saturate(g, k)


class PeelStep(NamedTuple):
    triangle: Triangle
    edges_to_rest: int
    pool_size: int  # pool size at peel time, the peeled triangle included


@dataclass(frozen=True)
class Decomposition:
    t1: tuple[Triangle, ...]
    t2: tuple[Triangle, ...]
    t3: tuple[Triangle, ...]
    t4: tuple[Triangle, ...]
    matching: Matching
    independent: tuple[int, ...]
    peel_trace: tuple[PeelStep, ...]

    @property
    def packing(self) -> Packing:
        return tuple(sorted(self.t1 + self.t2 + self.t3 + self.t4))

    @property
    def profile(self) -> Profile:
        return Profile(
            len(self.t1),
            len(self.t2),
            len(self.t3),
            len(self.t4),
            len(self.matching),
            len(self.independent),
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "t1": [list(t) for t in self.t1],
                "t2": [list(t) for t in self.t2],
                "t3": [list(t) for t in self.t3],
                "t4": [list(t) for t in self.t4],
                "matching": [list(e) for e in self.matching],
                "independent": list(self.independent),
                "profile": list(self.profile),
                "peel_trace": [
                    {
                        "triangle": list(s.triangle),
                        "edges_to_rest": s.edges_to_rest,
                        "pool_size": s.pool_size,
                    }
                    for s in self.peel_trace
                ],
            },
            indent=2,
            sort_keys=True,
        )


class AuditLine(NamedTuple):
    name: str
    lhs: int | None
    rhs: int | None
    satisfied: bool  # vacuously True when skipped
    skipped: bool = False
    reason: str = ""


@dataclass(frozen=True)
class AuditReport:
    profile: Profile
    lines: tuple[AuditLine, ...]
    notes: str = ""

    @property
    def passed(self) -> bool:
        return all(line.satisfied for line in self.lines)

    @property
    def violations(self) -> tuple[AuditLine, ...]:
        return tuple(line for line in self.lines if not line.satisfied)

    def to_json(self) -> str:
        return json.dumps(
            {
                "profile": list(self.profile),
                "passed": self.passed,
                "lines": [
                    {
                        "name": ln.name,
                        "lhs": ln.lhs,
                        "rhs": ln.rhs,
                        "satisfied": ln.satisfied,
                        "skipped": ln.skipped,
                        "reason": ln.reason,
                    }
                    for ln in self.lines
                ],
                "notes": self.notes,
            },
            indent=2,
            sort_keys=True,
        )


def _canonical_packing(g: Graph, cap: int) -> tuple[Packing, Matching]:
    """Lex-least maximum packing with the largest outside matching.

    Scans completable packings in lex order, keeping the first one that
    strictly improves the outside matching; stops once the matching hits
    floor(outside/2).  Raises ValueError past cap visited packings.
    """
    solver = _PackSolver(g)
    full = (1 << g.n) - 1
    size = solver.opt(full)
    ceiling = (g.n - 3 * size) // 2
    best: tuple[Packing, Matching] | None = None
    leaves = 0
    prefix: list[Triangle] = []

    def rec(free: int, last: Triangle | None, remaining: int) -> None:
        nonlocal best, leaves
        if best is not None and len(best[1]) >= ceiling:
            return
        if remaining == 0:
            leaves += 1
            if leaves > cap:
                raise ValueError(f"more than {cap} maximum packings")
            matching = max_matching(g, allowed=free)
            if best is None or len(matching) > len(best[1]):
                best = (tuple(prefix), matching)
            return
        for t in _triangles_in(solver.adj, free):
            if last is not None and t <= last:
                continue
            tmask = vertex_mask(t)
            if solver.opt(free & ~tmask) == remaining - 1:
                prefix.append(t)
                rec(free & ~tmask, t, remaining - 1)
                prefix.pop()
                if best is not None and len(best[1]) >= ceiling:
                    return

    rec(full, None, size)
    assert best is not None
    return best


def _split_classes(
    g: Graph,
    packing: Packing,
    matching: Matching,
    independent: Sequence[int],
) -> tuple[
    tuple[Triangle, ...],
    tuple[Triangle, ...],
    tuple[Triangle, ...],
    tuple[Triangle, ...],
    tuple[PeelStep, ...],
]:
    t1: list[Triangle] = []
    t2: list[Triangle] = []
    pool: list[Triangle] = []
    for t in sorted(packing):
        seen_m = sum(1 for e in matching if sees(g, e, t))
        if seen_m >= 2:
            t1.append(t)
            continue
        seen_i = sum(1 for v in independent if sees_vertex(g, v, t))
        if (seen_m >= 1 and seen_i >= 1) or seen_i >= 2:
            t2.append(t)
        else:
            pool.append(t)

    trace: list[PeelStep] = []
    while pool:
        dsize = len(pool)
        step = None
        for t in pool:  # lex order; pool stays sorted
            rest = [v for s in pool if s is not t for v in s]
            sent = edges_between(g, t, rest)
            if sent <= 8 * (dsize - 1):
                step = PeelStep(t, sent, dsize)
                break
        if step is None:
            break
        trace.append(step)
        pool.remove(step.triangle)

    t3 = tuple(sorted(s.triangle for s in trace))
    return tuple(t1), tuple(t2), t3, tuple(pool), tuple(trace)


def _validate_pieces(
    g: Graph,
    packing: Packing,
    matching: Matching,
    independent: Sequence[int],
) -> None:
    pmask = check_packing(g, packing)
    mmask = 0
    for u, v in matching:
        if not g.has_edge(u, v):
            raise ValueError(f"inconsistent pieces: ({u},{v}) is not an edge")
        pair = 1 << u | 1 << v
        if pair & (pmask | mmask):
            raise ValueError(
                f"inconsistent pieces: matching pair ({u},{v}) overlaps"
            )
        mmask |= pair
    imask = vertex_mask(independent)
    if len(independent) != imask.bit_count():
        raise ValueError("inconsistent pieces: repeated independent vertex")
    full = (1 << g.n) - 1
    if (pmask | mmask | imask) != full or imask & (pmask | mmask):
        raise ValueError("inconsistent pieces: not a partition of the vertices")
    if edges_within(g, independent) != 0:
        raise ValueError("inconsistent pieces: independent set spans an edge")
    if len(matching) != matching_number(g, allowed=full & ~pmask):
        raise ValueError(
            "inconsistent pieces: matching not maximum outside the packing"
        )


def classify(
    g: Graph,
    packing: Packing,
    matching: Matching,
    independent: Sequence[int],
) -> tuple[
    tuple[Triangle, ...],
    tuple[Triangle, ...],
    tuple[Triangle, ...],
    tuple[Triangle, ...],
]:
    """Split a packing into the four classes for the given outside pieces.

    Standalone so tests can classify non-canonical packings; validates the
    pieces (partition, independence, matching maximal outside the packing)
    but not maximality or canonicity of the packing itself.
    """
    _validate_pieces(g, packing, matching, independent)
    t1, t2, t3, t4, _ = _split_classes(g, packing, matching, independent)
    return t1, t2, t3, t4


def decompose(g: Graph, cap: int = ENUM_CAP) -> Decomposition:
    """Canonical decomposition of g, deterministic for a given graph."""
    packing, matching = _canonical_packing(g, cap)
    covered = check_packing(g, packing)
    for u, v in matching:
        covered |= 1 << u | 1 << v
    independent = tuple(v for v in range(g.n) if not covered >> v & 1)
    t1, t2, t3, t4, trace = _split_classes(g, packing, matching, independent)
    return Decomposition(
        t1=t1,
        t2=t2,
        t3=t3,
        t4=t4,
        matching=matching,
        independent=independent,
        peel_trace=trace,
    )


def combined_bound(d: Decomposition) -> int:
    """Ceiling for the edges counted outside the t4/matching/independent core."""
    t4, m, i = d.profile.t4, d.profile.m, d.profile.i
    return f(d.profile) + (3 + 3 * m) * t4 + (2 + i) * t4


def _replay_trace(g: Graph, d: Decomposition) -> None:
    pool = sorted(d.t3 + d.t4)
    if tuple(sorted(s.triangle for s in d.peel_trace)) != d.t3:
        raise ValueError("invalid decomposition: trace does not spell out t3")
    for step in d.peel_trace:
        if step.triangle not in pool:
            raise ValueError(f"invalid decomposition: {step.triangle} not in pool")
        if step.pool_size != len(pool):
            raise ValueError("invalid decomposition: trace pool size mismatch")
        rest = [v for s in pool if s != step.triangle for v in s]
        sent = edges_between(g, step.triangle, rest)
        if sent != step.edges_to_rest:
            raise ValueError("invalid decomposition: trace edge count mismatch")
        if sent > 8 * (len(pool) - 1):
            raise ValueError("invalid decomposition: peel was not justified")
        pool.remove(step.triangle)
    if tuple(pool) != d.t4:
        raise ValueError("invalid decomposition: leftovers differ from t4")
    for t in pool:
        rest = [v for s in pool if s != t for v in s]
        if edges_between(g, t, rest) <= 8 * (len(pool) - 1):
            raise ValueError(
                f"invalid decomposition: {t} still eligible for peeling"
            )


def _validate_decomposition(g: Graph, d: Decomposition) -> None:
    packing = d.packing
    _validate_pieces(g, packing, d.matching, d.independent)
    solver = _PackSolver(g)
    if len(packing) != solver.opt((1 << g.n) - 1):
        raise ValueError("invalid decomposition: packing is not maximum")
    for t in sorted(packing):
        seen_m = sum(1 for e in d.matching if sees(g, e, t))
        seen_i = sum(1 for v in d.independent if sees_vertex(g, v, t))
        if t in d.t1:
            ok = seen_m >= 2
        elif t in d.t2:
            ok = seen_m < 2 and ((seen_m >= 1 and seen_i >= 1) or seen_i >= 2)
        else:
            ok = seen_m < 2 and not (
                (seen_m >= 1 and seen_i >= 1) or seen_i >= 2
            )
        if not ok:
            raise ValueError(f"invalid decomposition: {t} is misclassified")
    _replay_trace(g, d)


def audit(g: Graph, d: Decomposition) -> AuditReport:
    """Evaluate every edge bound the decomposition guarantees, line by line.

    Raises ValueError when d is not structurally a decomposition of g;
    bound failures never raise, they are reported as unsatisfied lines.
    """
    _validate_decomposition(g, d)
    prof = d.profile
    t1, t2, t3, t4, m, i = prof
    n = g.n
    k = prof.k

    verts = {
        1: [v for t in d.t1 for v in t],
        2: [v for t in d.t2 for v in t],
        3: [v for t in d.t3 for v in t],
        4: [v for t in d.t4 for v in t],
    }
    mv = [v for e in d.matching for v in e]
    iv = list(d.independent)
    tj = {1: t1, 2: t2, 3: t3, 4: t4}

    lines: list[AuditLine] = []

    def check(name: str, lhs: int, rhs: int, equality: bool = False) -> None:
        ok = lhs == rhs if equality else lhs <= rhs
        lines.append(AuditLine(name, lhs, rhs, ok))

    def skip(name: str, reason: str) -> None:
        lines.append(AuditLine(name, None, None, True, True, reason))

    check("independent_internal", edges_within(g, iv), 0, equality=True)
    check("independent_to_matching", edges_between(g, iv, mv), i * m)
    check("matching_internal", edges_within(g, mv), m * m)
    check("matching_to_t1", edges_between(g, mv, verts[1]), 4 * m * t1)
    check("independent_to_t1", edges_between(g, iv, verts[1]), 2 * i * t1)
    check("t1_internal", edges_within(g, verts[1]), 7 * _c2(t1) + 3 * t1)
    check("independent_to_t2", edges_between(g, iv, verts[2]), 2 * i * t2)
    check("t2_internal", edges_within(g, verts[2]), 8 * _c2(t2) + 3 * t2)
    check(
        "t3_internal_and_to_t4",
        edges_within(g, verts[3]) + edges_between(g, verts[3], verts[4]),
        8 * _c2(t3) + 8 * t3 * t4 + 3 * t3,
    )

    for j in (2, 3, 4):
        if t1 == 1:
            skip(f"t1_to_t{j}", "guard t1 != 1 not met")
        else:
            check(f"t1_to_t{j}", edges_between(g, verts[1], verts[j]), 7 * t1 * tj[j])
    for j in (3, 4):
        if t2 == 1:
            skip(f"t2_to_t{j}", "guard t2 != 1 not met")
        else:
            check(f"t2_to_t{j}", edges_between(g, verts[2], verts[j]), 8 * t2 * tj[j])

    check(
        "t1_matching_to_t2",
        edges_between(g, verts[1], verts[2]) + edges_between(g, mv, verts[2]),
        7 * t1 * t2 + (2 + 3 * m) * t2 if m >= 1 else 0,
    )
    for j in (3, 4):
        check(
            f"t1_matching_to_t{j}",
            edges_between(g, verts[1], verts[j]) + edges_between(g, mv, verts[j]),
            7 * t1 * tj[j] + (3 + 3 * m) * tj[j] if m >= 1 else 0,
        )
    for j in (3, 4):
        check(
            f"t2_independent_to_t{j}",
            edges_between(g, verts[2], verts[j]) + edges_between(g, iv, verts[j]),
            8 * t2 * tj[j] + (2 + i) * tj[j] if i >= 1 else 0,
        )

    check("t4_internal_trivial", edges_within(g, verts[4]), _c2(3 * t4))

    core = verts[4] + mv + iv
    outside_t4 = g.edge_count() - edges_within(g, core)
    check("outside_t4_vs_f_prime", outside_t4, f_prime(prof))
    if t1 != 1 and t2 != 1:
        check("outside_t4_vs_f", outside_t4, f(prof))
    else:
        skip("outside_t4_vs_f", "guard t1 != 1 and t2 != 1 not met")
    check(
        "combined_outside_t4",
        outside_t4 + edges_between(g, verts[4], mv + iv),
        combined_bound(d),
    )
    check("total_vs_h_lemma", g.edge_count(), h_lemma(prof))
    if 5 * k <= n - 8:
        check("e1_bound_small_k", g.edge_count(), family_formula("E1", n, k))
    else:
        skip("e1_bound_small_k", "guard k <= (n - 8)/5 not met")

    return AuditReport(profile=prof, lines=tuple(lines))
