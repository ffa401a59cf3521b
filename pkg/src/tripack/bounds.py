"""Profile arithmetic: six-variable bound functions and their verifiers.

A profile (t1, t2, t3, t4, m, i) records the piece sizes of a
packing-based decomposition: four classes of packed triangles, the size
of the matching outside the packing, and the number of remaining
independent vertices.  The functions here bound the edge count of an
n-vertex graph without k+1 disjoint triangles in terms of its profile;
the verifiers confirm numerically that each bound function is dominated
by the best construction value over the feasible set

    F(n, k) = { profiles : t1+t2+t3+t4 = k and 2m+i = n-3k }.

Everything evaluates in exact integer arithmetic.  The only fractional
quantities in the surrounding analysis are difference terms like x^2/2;
those live in the identity registry (identities.py), which works with
scaled integers.

Verification targets use the literal closed formulas for the four
construction families.  These agree with extremal.edge_formula wherever
the family is a valid, non-degenerate construction, and differ exactly
where it is not: E2/E4 formulas are excluded outside their validity
range, and the E4 polynomial is evaluated literally for n-3k < 2, where
it exceeds the complete graph (matching how the bound functions use it).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .graph import Graph, Triangle, build_graph

__all__ = [
    "KAPPA0_DEFAULT",
    "Profile",
    "SampleStrategy",
    "VerifyReport",
    "f_prime",
    "f",
    "h_lemma",
    "g_small",
    "g_ell",
    "h_aux_small",
    "h_aux_large",
    "p_fun",
    "family_formula",
    "max_family_formula",
    "enumerate_F",
    "verify_lemma_maxf",
    "verify_lemma_maxgsmall",
    "verify_lemma_maxgl",
    "moon_bound",
    "erdos_gallai_bound",
    "corradi_hajnal_deg",
    "turan_touching_bound",
    "brute_turan_touching",
    "p_lower_construction",
    "max_covered_by_disjoint_triangles",
    "linear_error_small",
    "linear_error_large",
]

KAPPA0_DEFAULT = 8000
"""Cutoff parameter of the large-packing bound; see g_ell.

The analysis only names one concrete component of its cutoff, 8000, so
that is the default; every verifier takes it as a parameter.
"""


class Profile(NamedTuple):
    """Piece sizes (t1, t2, t3, t4, m, i), all nonnegative."""

    t1: int
    t2: int
    t3: int
    t4: int
    m: int
    i: int

    @property
    def k(self) -> int:
        return self.t1 + self.t2 + self.t3 + self.t4

    @property
    def n(self) -> int:
        return 3 * self.k + 2 * self.m + self.i

    def in_F(self, n: int, k: int) -> bool:
        """Membership in F(n, k)."""
        return self.k == k and 2 * self.m + self.i == n - 3 * k


def _parts(p: Sequence[int]) -> tuple[int, int, int, int, int, int]:
    t1, t2, t3, t4, m, i = p
    if min(t1, t2, t3, t4, m, i) < 0:
        raise ValueError(f"profile fields must be nonnegative, got {tuple(p)}")
    return t1, t2, t3, t4, m, i


def _c2(x: int) -> int:
    """Binomial(x, 2) for x >= 0."""
    return x * (x - 1) // 2


def _poly_c2(x: int) -> int:
    """x(x-1)/2 for any integer x (polynomial continuation of _c2)."""
    return x * (x - 1) // 2


# ===================================================================
# The bound functions
# ===================================================================


def f_prime(p: Sequence[int]) -> int:
    """Raw sum of the per-part edge bounds, before boundary corrections.

    Collects every cross-part and internal bound that involves the four
    triangle classes: matching and independent vertices against t1/t2,
    internal t1/t2/t3 terms, the t3-t4 interaction, and the pairwise
    class bounds.  f applies the m = 0 / i = 0 corrections on top.
    """
    t1, t2, t3, t4, m, i = _parts(p)
    return (
        4 * m * t1
        + 2 * i * t1
        + 7 * _c2(t1)
        + 3 * t1
        + 2 * i * t2
        + 8 * _c2(t2)
        + 3 * t2
        + 8 * _c2(t3)
        + 8 * t3 * t4
        + 3 * t3
        + 7 * t1 * t2
        + (2 + 3 * m) * t2
        + 7 * t1 * (t3 + t4)
        + (3 + 3 * m) * t3
        + 8 * t2 * (t3 + t4)
        + (2 + i) * t3
    )


def f(p: Sequence[int]) -> int:
    """Edge bound outside the t4 block: f_prime with empty-part corrections.

    When the matching or the independent set is empty, some cross bounds
    tighten; the four cases subtract 0, 2*t2 + 3*t3, 2*t3, or
    2*t2 + 5*t3 accordingly.
    """
    t1, t2, t3, t4, m, i = _parts(p)
    base = f_prime(p)
    if m >= 1 and i >= 1:
        return base
    if m == 0 and i >= 1:
        return base - (2 * t2 + 3 * t3)
    if m >= 1:
        return base - 2 * t3
    return base - (2 * t2 + 5 * t3)


def h_lemma(p: Sequence[int]) -> int:
    """Total edge bound with the trivial complete-graph cap on the t4 block."""
    t1, t2, t3, t4, m, i = _parts(p)
    return (
        f(p)
        + i * m
        + m * m
        + (3 + 3 * m) * t4
        + (2 + i) * t4
        + _c2(3 * t4)
    )


def g_small(p: Sequence[int]) -> int:
    """Total edge bound when the t4 block itself is sparse.

    Applies when the t4 block carries at most 8*C(t4,2) + 10*t4 - 28
    edges; that cap replaces the complete-graph term of h_lemma.
    """
    t1, t2, t3, t4, m, i = _parts(p)
    return (
        f(p)
        + i * m
        + m * m
        + (3 + 3 * m) * t4
        + (2 + i) * t4
        + 8 * _c2(t4)
        + 10 * t4
        - 28
    )


def g_ell(p: Sequence[int], kappa0: int = KAPPA0_DEFAULT) -> int:
    """Total edge bound when the t4 block is dense, in three regimes.

    Below the cutoff t4 < max(176, kappa0, (2m+i)/3) it coincides with
    h_lemma.  At or above the cutoff the t4 block together with the
    matching and independent vertices is capped by p_fun, with a +20
    adjustment in the special case t1 = 1.
    """
    t1, t2, t3, t4, m, i = _parts(p)
    if kappa0 < 1:
        raise ValueError(f"kappa0 must be >= 1, got {kappa0}")
    if 3 * t4 < max(528, 3 * kappa0, 2 * m + i):
        return h_lemma(p)
    value = f(p) + p_fun(3 * t4 + 2 * m + i, 2 * m + i)
    if t1 == 1:
        value += 20
    return value


def p_fun(h: int, a: int) -> int:
    """Edge cap for an h-vertex block where disjoint triangles cover
    at most two vertices of a designated a-set.

    Two branches split at h = 9a.  The h >= 9a branch is evaluated
    literally even for a in {0, 1, 2}, where the (a-2) factor vanishes
    or goes negative; the covering statement behind the formula assumes
    a >= 3, but the bound functions feed it smaller values and rely on
    the literal polynomial.
    """
    if a < 0 or h < 2 * a:
        raise ValueError(f"p_fun needs 0 <= 2a <= h, got h={h}, a={a}")
    if h >= 9 * a:
        return (a - 2) * (h - a + 2) + _c2(h - 2 * a + 4)
    return a * (h - a) + _c2(h - 2 * a) + 6 * h


def h_aux_small(p: Sequence[int]) -> int:
    """Auxiliary form of h_lemma without the empty-part corrections.

    Equals f_prime plus the t4 and matching/independent terms of
    h_lemma; used for the shift identities of the small-t4 regime, where
    its difference from g_ell is one of 0, 2*t2 + 3*t3, 2*t3, or
    2*t2 + 5*t3 depending on which of m, i vanish.
    """
    t1, t2, t3, t4, m, i = _parts(p)
    return (
        f_prime(p)
        + i * m
        + m * m
        + (3 + 3 * m) * t4
        + (2 + i) * t4
        + _c2(3 * t4)
    )


def h_aux_large(p: Sequence[int]) -> int:
    """Auxiliary form of the large-t4 bound without corrections.

    Equals f_prime plus (2m+i-2)(3*t4+2) + C(3*t4-2m-i+4, 2), with the
    binomial evaluated as the polynomial x(x-1)/2 so the identity grid
    can cross the 3*t4 >= 2m+i boundary; in its intended regime the
    argument is nonnegative and the polynomial agrees with the binomial.
    """
    t1, t2, t3, t4, m, i = _parts(p)
    return (
        f_prime(p)
        + (2 * m + i - 2) * (3 * t4 + 2)
        + _poly_c2(3 * t4 - 2 * m - i + 4)
    )


# ===================================================================
# Construction formulas used as verification targets
# ===================================================================


def family_formula(family: str, n: int, k: int) -> int:
    """Literal closed-form edge count of one family.

    Raises ValueError where the family is excluded as a target: E2
    outside 4k < n-1, E3 outside n >= 2k+1, E4 outside 6k-n+4 >= 0.
    The E4 polynomial is evaluated literally even for n-3k < 2.
    """
    if n < 0 or k < 0 or 3 * k > n:
        raise ValueError(f"need 0 <= 3k <= n, got n={n}, k={k}")
    if family == "E1":
        r = n - k
        return _c2(k) + k * r + (r // 2) * ((r + 1) // 2)
    if family == "E2":
        if not 4 * k < n - 1:
            raise ValueError(f"E2 formula excluded at (n={n}, k={k})")
        return _c2(2 * k + 1) + (n // 2) * ((n + 1) // 2)
    if family == "E3":
        if not n >= 2 * k + 1:
            raise ValueError(f"E3 formula excluded at (n={n}, k={k})")
        return _c2(2 * k + 1) + (2 * k + 1) * (n - 2 * k - 1)
    if family == "E4":
        x = 6 * k - n + 4
        if x < 0:
            raise ValueError(f"E4 formula excluded at (n={n}, k={k})")
        q = n - 3 * k - 2
        return _c2(x) + x * q + q * q
    raise ValueError(f"unknown family {family!r}")


def max_family_formula(
    n: int, k: int, families: Sequence[str] = ("E1", "E2", "E3", "E4")
) -> int:
    """Largest family_formula value among the families defined at (n, k)."""
    best: int | None = None
    for fam in families:
        try:
            value = family_formula(fam, n, k)
        except ValueError:
            continue
        if best is None or value > best:
            best = value
    if best is None:
        raise ValueError(f"no family formula defined at (n={n}, k={k})")
    return best


# ===================================================================
# The feasible set
# ===================================================================


def enumerate_F(n: int, k: int) -> Iterator[Profile]:
    """All profiles of F(n, k), each exactly once, in lexicographic order."""
    if n < 0 or k < 0 or 3 * k > n:
        raise ValueError(f"need 0 <= 3k <= n, got n={n}, k={k}")
    rem = n - 3 * k
    for t1 in range(k + 1):
        for t2 in range(k - t1 + 1):
            for t3 in range(k - t1 - t2 + 1):
                t4 = k - t1 - t2 - t3
                for m in range(rem // 2 + 1):
                    yield Profile(t1, t2, t3, t4, m, rem - 2 * m)


def _compositions4(rng: random.Random, k: int) -> tuple[int, int, int, int]:
    """Uniform composition of k into four nonnegative parts."""
    b1, b2, b3 = sorted(rng.sample(range(k + 3), 3))
    return b1, b2 - b1 - 1, b3 - b2 - 1, k + 2 - b3


def _sample_profile(rng: random.Random, n: int, k: int) -> Profile:
    """Uniform member of F(n, k)."""
    t1, t2, t3, t4 = _compositions4(rng, k)
    rem = n - 3 * k
    m = rng.randint(0, rem // 2)
    return Profile(t1, t2, t3, t4, m, rem - 2 * m)


def _corner_profiles(n: int, k: int) -> list[Profile]:
    """Deterministic extreme profiles of F(n, k).

    Each triangle class in turn takes all of k (crossed with t1 = 1
    variants, since the bound functions treat t1 = 1 specially), and the
    matching size runs over {0, floor(rem/4), floor(rem/2)}.
    """
    rem = n - 3 * k
    concentrations: list[tuple[int, int, int, int]] = []
    for idx in range(4):
        base = [0, 0, 0, 0]
        base[idx] = k
        concentrations.append(tuple(base))
        if k >= 1 and idx != 0:
            shifted = [0, 0, 0, 0]
            shifted[0] = 1
            shifted[idx] = k - 1
            concentrations.append(tuple(shifted))
    mus = sorted({0, rem // 4, rem // 2})
    out = []
    for con in dict.fromkeys(concentrations):
        for mu in mus:
            out.append(Profile(*con, mu, rem - 2 * mu))
    return out


# ===================================================================
# Verification reports
# ===================================================================

_MAX_STORED_VIOLATIONS = 1000


@dataclass(frozen=True)
class SampleStrategy:
    """Budget for a corner-plus-samples verification run.

    A slice whose profile count is at most exhaust_below is scanned in
    full instead of being sampled.
    """

    samples: int = 100_000
    seed: int = 0
    exhaust_below: int = 50_000


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one numeric lemma verification.

    min_slack is the smallest RHS - LHS observed (0 means the bound is
    attained somewhere; negative values mean violations).  violations
    stores at most 1000 entries; the count in the notes is authoritative
    when truncated.
    """

    lemma: str
    params: dict
    points: int
    exhaustive: bool
    samples: int
    seed: int | None
    min_slack: int | None
    violations: tuple[dict, ...]
    notes: str = ""

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "params": dict(self.params),
            "points": self.points,
            "exhaustive": self.exhaustive,
            "samples": self.samples,
            "seed": self.seed,
            "min_slack": self.min_slack,
            "passed": self.passed,
            "violations": [dict(v) for v in self.violations],
            "notes": self.notes,
        }


def _profile_count(n: int, k: int) -> int:
    """|F(n, k)| without enumeration: compositions of k into four parts
    times the number of (mu, iota) splits of n - 3k."""
    return math.comb(k + 3, 3) * ((n - 3 * k) // 2 + 1)


class _Tracker:
    """Accumulates points, slack, and violations for a report."""

    def __init__(self) -> None:
        self.points = 0
        self.min_slack: int | None = None
        self.violations: list[dict] = []
        self.dropped = 0

    def record(self, profile: Profile, k: int, lhs: int, rhs: int) -> None:
        self.points += 1
        slack = rhs - lhs
        if self.min_slack is None or slack < self.min_slack:
            self.min_slack = slack
        if lhs > rhs:
            if len(self.violations) < _MAX_STORED_VIOLATIONS:
                self.violations.append(
                    {"profile": list(profile), "k": k, "lhs": lhs, "rhs": rhs}
                )
            else:
                self.dropped += 1

    def notes(self) -> str:
        if self.dropped:
            return f"{self.dropped} further violations not stored"
        return ""


def verify_lemma_maxf(n: int, k: int) -> VerifyReport:
    """Exhaustive check that max(f + im + m^2) over the t3 = t4 = 0
    slice of F(n, k) equals the best of the first three family formulas.

    Requires n >= 3k+2.  Reports a violation if any slice point exceeds
    the target or if the maximum falls short of it.
    """
    if k < 0 or n < 3 * k + 2:
        raise ValueError(f"need n >= 3k+2, got n={n}, k={k}")
    target = max_family_formula(n, k, families=("E1", "E2", "E3"))
    rem = n - 3 * k
    tracker = _Tracker()
    best: int | None = None
    best_profile: Profile | None = None
    for t1 in range(k + 1):
        t2 = k - t1
        for m in range(rem // 2 + 1):
            i = rem - 2 * m
            p = Profile(t1, t2, 0, 0, m, i)
            value = f(p) + i * m + m * m
            tracker.record(p, k, value, target)
            if best is None or value > best:
                best = value
                best_profile = p
    violations = list(tracker.violations)
    notes = tracker.notes()
    if best is not None and best < target:
        violations.append(
            {
                "profile": list(best_profile),
                "k": k,
                "lhs": best,
                "rhs": target,
                "reason": "maximum falls short of target",
            }
        )
    return VerifyReport(
        lemma="maxf",
        params={
            "n": n,
            "k": k,
            "target": target,
            "max_found": best,
            "argmax": list(best_profile) if best_profile is not None else None,
        },
        points=tracker.points,
        exhaustive=True,
        samples=0,
        seed=None,
        min_slack=tracker.min_slack,
        violations=tuple(violations),
        notes=notes,
    )


def verify_lemma_maxgsmall(
    n: int,
    strategy: SampleStrategy | None = None,
    *,
    report_only: bool = False,
) -> VerifyReport:
    """Corner-plus-samples check of g_small <= best family formula
    over F(n, k) for every k <= n/3.

    The hypothesis n >= 8406 is enforced unless report_only is set, in
    which case the same scan runs and the report is informational.
    """
    if n < 8406 and not report_only:
        raise ValueError(
            f"hypothesis n >= 8406 not met (n={n}); pass report_only=True "
            "to scan anyway"
        )
    strategy = strategy or SampleStrategy()
    kmax = n // 3
    targets = [max_family_formula(n, k) for k in range(kmax + 1)]
    tracker = _Tracker()
    exhausted = []
    for k in range(kmax + 1):
        rhs = targets[k]
        if _profile_count(n, k) <= strategy.exhaust_below:
            exhausted.append(k)
            for p in enumerate_F(n, k):
                tracker.record(p, k, g_small(p), rhs)
        else:
            for p in _corner_profiles(n, k):
                tracker.record(p, k, g_small(p), rhs)
    rng = random.Random(strategy.seed)
    sampled_ks = [k for k in range(kmax + 1) if k not in set(exhausted)]
    drawn = strategy.samples if sampled_ks else 0
    for _ in range(drawn):
        k = sampled_ks[rng.randrange(len(sampled_ks))]
        p = _sample_profile(rng, n, k)
        tracker.record(p, k, g_small(p), targets[k])
    notes = tracker.notes()
    if exhausted:
        tail = f"{len(exhausted)} of {kmax + 1} slices scanned in full"
        notes = f"{notes}; {tail}" if notes else tail
    return VerifyReport(
        lemma="maxgsmall",
        params={"n": n, "k_max": kmax, "report_only": report_only},
        points=tracker.points,
        exhaustive=len(exhausted) == kmax + 1,
        samples=drawn,
        seed=strategy.seed,
        min_slack=tracker.min_slack,
        violations=tuple(tracker.violations),
        notes=notes,
    )


def verify_lemma_maxgl(
    n: int,
    k: int | None = None,
    kappa0: int = KAPPA0_DEFAULT,
    strategy: SampleStrategy | None = None,
) -> VerifyReport:
    """Corner-plus-samples check of g_ell <= best family formula.

    Hypotheses: n >= max(4*10^4, 900*kappa0), and k in the window
    (n-8)/5 <= k <= n/3.  With k=None the whole window is swept: corner
    profiles for every k, samples spread uniformly over the window.
    """
    n_min = max(4 * 10**4, 900 * kappa0)
    if n < n_min:
        raise ValueError(f"need n >= max(4e4, 900*kappa0) = {n_min}, got n={n}")
    kmin = max(0, -(-(n - 8) // 5))
    kmax = n // 3
    if kmin > kmax:
        raise ValueError(f"empty k window at n={n}")
    if k is not None:
        if not kmin <= k <= kmax:
            raise ValueError(
                f"need (n-8)/5 <= k <= n/3, got k={k} outside [{kmin}, {kmax}]"
            )
        k_values: Sequence[int] = (k,)
    else:
        k_values = range(kmin, kmax + 1)
    strategy = strategy or SampleStrategy()
    tracker = _Tracker()
    targets = []
    for kk in k_values:
        rhs = max_family_formula(n, kk)
        targets.append(rhs)
        for p in _corner_profiles(n, kk):
            tracker.record(p, kk, g_ell(p, kappa0), rhs)
    rng = random.Random(strategy.seed)
    for _ in range(strategy.samples):
        pos = rng.randrange(len(k_values))
        kk = k_values[pos]
        p = _sample_profile(rng, n, kk)
        tracker.record(p, kk, g_ell(p, kappa0), targets[pos])
    return VerifyReport(
        lemma="maxgl",
        params={
            "n": n,
            "k": k,
            "k_min": kmin,
            "k_max": kmax,
            "kappa0": kappa0,
        },
        points=tracker.points,
        exhaustive=False,
        samples=strategy.samples,
        seed=strategy.seed,
        min_slack=tracker.min_slack,
        violations=tuple(tracker.violations),
        notes=tracker.notes(),
    )


# ===================================================================
# Classical bounds and the small brute-force oracle
# ===================================================================


def moon_bound(n: int, k: int) -> int:
    """Exact maximum edge count without k+1 disjoint triangles, valid
    for n >= 9k/2 + 4 (where it coincides with the E1 formula)."""
    if k < 0 or 2 * n < 9 * k + 8:
        raise ValueError(f"need n >= 9k/2 + 4, got n={n}, k={k}")
    return family_formula("E1", n, k)


def erdos_gallai_bound(n: int, k: int) -> int:
    """Maximum edge count of an n-vertex graph with no matching of
    size k+1; requires 2k+1 <= n."""
    if k < 0 or 2 * k + 1 > n:
        raise ValueError(f"need 0 <= 2k+1 <= n, got n={n}, k={k}")
    return max(k * (n - k) + _c2(k), _c2(2 * k + 1))


def corradi_hajnal_deg(n: int, k: int) -> int:
    """Largest minimum degree compatible with having no k+1 disjoint
    triangles: k + floor((n-k)/2)."""
    if n < 0 or k < 0 or 3 * k > n:
        raise ValueError(f"need 0 <= 3k <= n, got n={n}, k={k}")
    return k + (n - k) // 2


def turan_touching_bound(h: int, a: int) -> int:
    """Maximum edges of an h-vertex graph with a designated a-set no
    triangle touches: C(h-2a, 2) + a(h-a)."""
    if a < 0 or h < 2 * a:
        raise ValueError(f"need 0 <= 2a <= h, got h={h}, a={a}")
    return _c2(h - 2 * a) + a * (h - a)


_BRUTE_TURAN_CAP = 7
_turan_tables: dict[int, list[int]] = {}


def _turan_table(h: int) -> list[int]:
    """best[a] = max edges over all h-vertex graphs where no triangle
    touches {0..a-1}, computed by one scan over all edge subsets."""
    edges = [(u, v) for u in range(h) for v in range(u + 1, h)]
    index = {e: pos for pos, e in enumerate(edges)}
    groups: list[list[int]] = [[] for _ in range(h)]
    for x in range(h):
        for y in range(x + 1, h):
            for z in range(y + 1, h):
                mask3 = (
                    (1 << index[(x, y)])
                    | (1 << index[(x, z)])
                    | (1 << index[(y, z)])
                )
                groups[x].append(mask3)
    best = [0] * (h + 1)
    for mask in range(1 << len(edges)):
        min_vertex = h
        for v in range(h - 2):
            hit = False
            for mask3 in groups[v]:
                if mask & mask3 == mask3:
                    hit = True
                    break
            if hit:
                min_vertex = v
                break
        count = mask.bit_count()
        for a in range(min(min_vertex, h) + 1):
            if count > best[a]:
                best[a] = count
    return best


def brute_turan_touching(h: int, a: int) -> int:
    """True maximum edges over all h-vertex graphs in which no triangle
    intersects a designated a-set, by exhaustive edge-subset scan.

    Capped at h <= 7 (2^21 subsets); the per-h table is cached, so
    sweeping a at fixed h costs one scan.
    """
    if a < 0 or h < 2 * a:
        raise ValueError(f"need 0 <= 2a <= h, got h={h}, a={a}")
    if h > _BRUTE_TURAN_CAP:
        raise ValueError(f"exhaustive scan capped at h <= {_BRUTE_TURAN_CAP}")
    if h not in _turan_tables:
        _turan_tables[h] = _turan_table(h)
    return _turan_tables[h][a]


# ===================================================================
# Lower construction for p_fun
# ===================================================================


def p_lower_construction(h: int, a: int) -> tuple[Graph, tuple[int, ...]]:
    """Graph attaining p(h, a) edges while no disjoint triangle family
    covers three or more vertices of the designated a-set.

    Requires 3 <= a and 9a <= h.  Layout with s = a-1: vertices 0 and 1
    open a clique X of size h-a+2-s (they are the two designated
    vertices a triangle family may cover); the next s vertices form an
    independent set joined to everything outside itself; the last a-2
    designated vertices are independent and adjacent only to that set.
    Returns the graph and the designated set.
    """
    if a < 3 or h < 9 * a:
        raise ValueError(f"need 3 <= a <= h/9, got h={h}, a={a}")
    s = a - 1
    x = h - a + 2 - s
    clique = range(x)
    mid = range(x, x + s)
    tail = range(x + s, h)
    edges = []
    for u in clique:
        for v in clique:
            if u < v:
                edges.append((u, v))
    for w in mid:
        for u in clique:
            edges.append((u, w))
        for t in tail:
            edges.append((w, t))
    designated = (0, 1) + tuple(tail)
    return build_graph(h, edges), designated


def max_covered_by_disjoint_triangles(
    g: Graph, targets: Sequence[int]
) -> int:
    """Maximum number of target vertices covered by any family of
    pairwise vertex-disjoint triangles of g.

    Exact search: branches on the first still-coverable target vertex,
    trying each triangle through it (and skipping it).  Intended for
    graphs where few triangles touch the targets.
    """
    target_list = sorted(set(targets))
    for v in target_list:
        if not 0 <= v < g.n:
            raise ValueError(f"target vertex {v} out of range")
    triangles_at: dict[int, list[tuple[Triangle, int]]] = {}
    for v in target_list:
        rows = []
        nb = g.adj_mask(v)
        u_bits = nb
        while u_bits:
            u = (u_bits & -u_bits).bit_length() - 1
            u_bits &= u_bits - 1
            w_bits = nb & g.adj_mask(u) & ~((1 << (u + 1)) - 1)
            while w_bits:
                w = (w_bits & -w_bits).bit_length() - 1
                w_bits &= w_bits - 1
                rows.append((tuple(sorted((v, u, w))), (1 << v) | (1 << u) | (1 << w)))
        triangles_at[v] = rows
    target_set = set(target_list)

    def weight(tri: Triangle) -> int:
        return sum(1 for x in tri if x in target_set)

    best = 0

    def search(pos: int, used: int, covered: int) -> None:
        nonlocal best
        if covered + sum(
            1 for v in target_list[pos:] if not used >> v & 1
        ) <= best:
            return
        if pos == len(target_list):
            if covered > best:
                best = covered
            return
        v = target_list[pos]
        if used >> v & 1:
            search(pos + 1, used, covered)
            return
        for tri, mask in triangles_at[v]:
            if used & mask:
                continue
            search(pos + 1, used | mask, covered + weight(tri))
        search(pos + 1, used, covered)

    search(0, 0, 0)
    return best


# ===================================================================
# Linear-error budget checks for the two large-t4 regime analyses
# ===================================================================


class LinearErrorCheck(NamedTuple):
    """One sampled comparison of an exact evaluation against its
    quadratic leading form."""

    exact: int
    leading_num: int
    leading_den: int
    budget: int

    @property
    def within(self) -> bool:
        return abs(self.exact * self.leading_den - self.leading_num) <= (
            self.budget * self.leading_den
        )


def linear_error_small(n: int, k: int, mu: int) -> LinearErrorCheck:
    """Gap between h_aux_small at the packed profile
    (0, 2k-n/3, 0, (n-3k)/3, mu, n-3k-2mu) and its quadratic leading
    form; the analysis budgets the discarded linear terms at 6n.

    Requires 3 | n, n/6 <= k <= n/3 and 0 <= 2mu <= n-3k.
    """
    if n % 3 or not (0 <= 6 * k - n and 3 * k <= n) or not 0 <= 2 * mu <= n - 3 * k:
        raise ValueError(f"infeasible point n={n}, k={k}, mu={mu}")
    iota = n - 3 * k - 2 * mu
    exact = h_aux_small(Profile(0, 2 * k - n // 3, 0, (n - 3 * k) // 3, mu, iota))
    # 11kn/3 - 9k^2/2 - 6k*mu - 5n^2/18 + 5*mu*n/3 - mu^2, scaled by 18
    leading18 = (
        66 * k * n
        - 81 * k * k
        - 108 * k * mu
        - 5 * n * n
        + 30 * mu * n
        - 18 * mu * mu
    )
    return LinearErrorCheck(exact=exact, leading_num=leading18, leading_den=18, budget=6 * n)


def linear_error_large(n: int, k: int, mu: int) -> LinearErrorCheck:
    """Gap between h_aux_large at the packed profile
    (2k-n/3, 0, 0, (n-3k)/3, mu, n-3k-2mu) and its quadratic leading
    form 7kn/3 - n^2/18 - 3k^2; the analysis budgets the linear terms
    at 19n.  The exact value does not depend on how n-3k splits into
    2mu + iota.
    """
    if n % 3 or not (0 <= 6 * k - n and 3 * k <= n) or not 0 <= 2 * mu <= n - 3 * k:
        raise ValueError(f"infeasible point n={n}, k={k}, mu={mu}")
    iota = n - 3 * k - 2 * mu
    exact = h_aux_large(Profile(2 * k - n // 3, 0, 0, (n - 3 * k) // 3, mu, iota))
    leading18 = 42 * k * n - n * n - 54 * k * k
    return LinearErrorCheck(exact=exact, leading_num=leading18, leading_den=18, budget=19 * n)
