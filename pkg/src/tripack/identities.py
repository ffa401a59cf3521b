"""Registry of exact identities and inequalities among the profile bounds.

Every entry relates evaluations of the functions in ``bounds`` (``f``,
``f_prime``, ``h_lemma``, ``g_small``, ``h_aux_small``, ``h_aux_large``)
at shifted or reshaped profiles.  Three shapes of entry occur:

* shift equalities: moving ``x`` units of the tau budget between two
  coordinates changes the function by an explicit quadratic in ``x``;
* merge / trade inequalities: collapsing tau coordinates, or exchanging
  matching edges for pairs of single vertices, moves the value by at least
  an explicit amount;
* closed forms: profiles concentrated on one tau coordinate evaluate to
  explicit polynomials, some of which meet the family formulas exactly.

Both sides are computed in integers scaled by 4 (clearing the halves that
appear in quadratic shift terms; quarters never occur) and reported as
exact Fractions.  ``identity_check`` evaluates one named entry at one
point; ``run_identity_grid`` sweeps every entry over a dense grid plus
seeded random points and reports violations.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Optional, Sequence

from .bounds import (
    _c2,
    _poly_c2,
    f,
    f_prime,
    family_formula,
    g_small,
    h_aux_large,
    h_aux_small,
    h_lemma,
)

_COORD = ("t1", "t2", "t3", "t4", "m", "i")

# A point plus a shift amount; samplers aim inside the entry's guard but the
# driver re-checks, so a sampler is allowed to miss.
_Point = tuple[tuple[int, ...], int]
_Guard = Callable[[Sequence[int], int], Optional[str]]
_Pair = Callable[[Sequence[int], int], tuple[int, int]]
_Sampler = Callable[[random.Random, int, int], _Point]


class IdentityResult(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    ok: bool


@dataclass(frozen=True)
class Identity:
    name: str
    kind: str  # "eq" | "ge" | "le" | "lt", relating lhs to rhs
    uses_x: bool
    summary: str
    guard: _Guard
    pair: _Pair  # returns (4*lhs, 4*rhs) as exact integers
    sampler: _Sampler


def _holds(kind: str, lhs4: int, rhs4: int) -> bool:
    if kind == "eq":
        return lhs4 == rhs4
    if kind == "ge":
        return lhs4 >= rhs4
    if kind == "le":
        return lhs4 <= rhs4
    return lhs4 < rhs4


def _no_guard(p: Sequence[int], x: int) -> Optional[str]:
    return None


def _shift_guard(src: int, dst: int) -> _Guard:
    def guard(p: Sequence[int], x: int) -> Optional[str]:
        if p[src] - x < 0:
            return f"shift needs {_COORD[src]} >= x"
        if p[dst] + x < 0:
            return f"shift needs {_COORD[dst]} + x >= 0"
        return None

    return guard


def _shift_pair(fn: Callable[[Sequence[int]], int], src: int, dst: int,
                rhs4: Callable[..., int]) -> _Pair:
    def pair(p: Sequence[int], x: int) -> tuple[int, int]:
        q = list(p)
        q[src] -= x
        q[dst] += x
        return 4 * (fn(tuple(q)) - fn(tuple(p))), rhs4(*p, x=x)

    return pair


def _generic_sampler(uses_x: bool) -> _Sampler:
    def sample(rng: random.Random, coord_hi: int, x_hi: int) -> _Point:
        p = tuple(rng.randrange(coord_hi + 1) for _ in range(6))
        return p, (rng.randrange(x_hi + 1) if uses_x else 0)

    return sample


def _shift_sampler(src: int, dst: int) -> _Sampler:
    """Random profile with x drawn from the legal two-sided shift range."""

    def sample(rng: random.Random, coord_hi: int, x_hi: int) -> _Point:
        p = tuple(rng.randrange(coord_hi + 1) for _ in range(6))
        return p, rng.randint(-min(x_hi, p[dst]), min(x_hi, p[src]))

    return sample


def _min_m_sampler(min_m: int, uses_x: bool = False) -> _Sampler:
    def sample(rng: random.Random, coord_hi: int, x_hi: int) -> _Point:
        p = list(rng.randrange(coord_hi + 1) for _ in range(6))
        p[4] += min_m
        x = 0
        if uses_x:
            x = rng.randrange(min(x_hi, p[4] - 1) + 1)
        return tuple(p), x

    return sample


# --- f entries ------------------------------------------------------------


def _pair_f_shift(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    lhs = f((t1 + x, t2 - x, t3, t4, m, i)) - f(p)
    rhs4 = 2 * x * x + (4 * m - 4 * (t2 + t3 + t4) + 2) * x
    if m > 0:
        rhs4 -= 8 * x
    return 4 * lhs, rhs4


def _pair_f_merge(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    lhs = f((t1, t2 + t3, 0, t4, m, i)) - f(p)
    return 4 * lhs, 4 * (i - 3) * t3


def _pair_f_upper(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    st = t1 + t2 + t3 + t4
    rhs = 8 * _c2(st) - 8 * _c2(t4) + (4 * m + 2 * i + 6) * (t1 + t2 + t3) - t1 * t4
    return 4 * f(p), 4 * rhs


def _guard_f_trade(p: Sequence[int], x: int) -> Optional[str]:
    t1, t2, t3, t4, m, i = p
    if x < 0:
        return "needs x >= 0"
    if min(m, m - x, i + 2 * x) < 1:
        return "needs min(m, m - x, i + 2x) >= 1"
    return None


def _pair_f_trade(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    lhs = f((t1, t2, t3, t4, m - x, i + 2 * x)) - f(p)
    return 4 * lhs, 4 * x * (t2 - t3)


def _guard_m5(p: Sequence[int], x: int) -> Optional[str]:
    return None if p[4] >= 5 else "needs m >= 5"


def _pair_f_retire(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    lhs = f((t1, t2 + t3, 0, t4, m - 4, i + 8)) - f(p)
    return 4 * lhs, 4 * (4 * (t2 - t3) + (i + 5) * t3)


# --- h_lemma entries -------------------------------------------------------


def _pair_promote(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    lhs = h_lemma((t1 + t3 + t4, t2, 0, 0, m, i)) - h_lemma((t1, t2, 0, t3 + t4, m, i))
    return 4 * lhs, 4 * (t3 + t4) * (m + i - t2 - t3 - t4 - 4)


def _pair_hlemma_merge(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    return 4 * h_lemma((t1, t2, 0, t3 + t4, m, i)), 4 * h_lemma(p)


# --- auxiliary-form entries ------------------------------------------------


def _pair_aux_small_form(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    rhs = (
        f_prime(p)
        + i * m
        + m * m
        + (3 + 3 * m) * t4
        + (2 + i) * t4
        + _c2(3 * t4)
    )
    return 4 * h_aux_small(p), 4 * rhs


def _pair_aux_large_form(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    rhs = (
        f_prime(p)
        + (2 * m + i - 2) * (3 * t4 + 2)
        + _poly_c2(3 * t4 - 2 * m - i + 4)
    )
    return 4 * h_aux_large(p), 4 * rhs


# x-coefficient builders for the shift equalities; each returns 4*rhs.


def _rhs_small_t4_to_t1(t1, t2, t3, t4, m, i, x):
    return 4 * (x * x + (m + i - 4 - t2 - t3 - 2 * t4) * x)


def _rhs_small_t4_to_t2(t1, t2, t3, t4, m, i, x):
    return 2 * x * x + (4 * i - 10 - 4 * t4) * x


def _rhs_small_t4_to_t3(t1, t2, t3, t4, m, i, x):
    return 2 * x * x + (2 - 4 * t4) * x


def _rhs_t3_to_t1(t1, t2, t3, t4, m, i, x):
    return 2 * x * x + (4 * (m + i - t2 - t3 - t4) - 18) * x


def _rhs_t2_to_t1(t1, t2, t3, t4, m, i, x):
    return 2 * x * x + (4 * (m - t2 - t3 - t4) - 6) * x


def _rhs_t3_to_t2(t1, t2, t3, t4, m, i, x):
    return 4 * (i - 3) * x


def _rhs_large_t4_to_t1(t1, t2, t3, t4, m, i, x):
    return 4 * (x * x + (4 * m + 2 * i - t2 - t3 - 2 * t4 - 5) * x)


def _rhs_large_t4_to_t2(t1, t2, t3, t4, m, i, x):
    return 2 * x * x + (8 * i + 12 * m - 4 * t4 - 14) * x


def _rhs_large_t4_to_t3(t1, t2, t3, t4, m, i, x):
    return 2 * x * x + (12 * m + 4 * i - 4 * t4 - 2) * x


# --- concentrated-profile entries -----------------------------------------


def _guard_shape_t1(p: Sequence[int], x: int) -> Optional[str]:
    if p[1] or p[2] or p[3]:
        return "needs t2 = t3 = t4 = 0"
    return None


def _lhs_fixed(p: Sequence[int]) -> int:
    return f(p) + p[5] * p[4] + p[4] * p[4]


def _pair_conc_t1_closed(p: Sequence[int], x: int) -> tuple[int, int]:
    k, _, _, _, m, i = p
    rhs = 7 * _c2(k) + 3 * k + 2 * (2 * m + i) * k + m * (m + i)
    return 4 * _lhs_fixed(p), 4 * rhs


def _pair_conc_t1_le_e1(p: Sequence[int], x: int) -> tuple[int, int]:
    k, _, _, _, m, i = p
    n = 3 * k + 2 * m + i
    return 4 * _lhs_fixed(p), 4 * family_formula("E1", n, k)


def _guard_conc_t2_mu_zero(p: Sequence[int], x: int) -> Optional[str]:
    if p[0] or p[2] or p[3]:
        return "needs t1 = t3 = t4 = 0"
    if p[4] != 0:
        return "needs m = 0"
    if p[1] < 1:
        return "needs t2 >= 1"
    if p[5] < 2:
        return "needs i >= 2"
    return None


def _pair_conc_t2_mu_zero(p: Sequence[int], x: int) -> tuple[int, int]:
    _, k, _, _, _, i = p
    rhs = f((0, k, 0, 0, 1, i - 2)) + (i - 2) + 1
    return 4 * f(p), 4 * rhs


def _guard_shape_t2(min_m: int) -> _Guard:
    def guard(p: Sequence[int], x: int) -> Optional[str]:
        if p[0] or p[2] or p[3]:
            return "needs t1 = t3 = t4 = 0"
        if p[4] < min_m:
            return f"needs m >= {min_m}"
        return None

    return guard


def _pair_conc_t2_closed(p: Sequence[int], x: int) -> tuple[int, int]:
    _, k, _, _, m, i = p
    n = 3 * k + 2 * m + i
    rhs = 8 * _c2(k) + 5 * k + 2 * (2 * m + i) * k + m * (n - m - 4 * k)
    return 4 * _lhs_fixed(p), 4 * rhs


def _guard_conc_t2_balanced(p: Sequence[int], x: int) -> Optional[str]:
    base = _guard_shape_t2(1)(p, x)
    if base:
        return base
    _, k, _, _, m, i = p
    n = 3 * k + 2 * m + i
    if m != (n - 4 * k) // 2 and m != -((4 * k - n) // 2):
        return "needs m = (n - 4k)/2 rounded either way"
    return None


def _pair_conc_t2_balanced(p: Sequence[int], x: int) -> tuple[int, int]:
    _, k, _, _, m, i = p
    n = 3 * k + 2 * m + i
    rhs = _c2(2 * k + 1) + (n // 2) * ((n + 1) // 2)
    return 4 * _lhs_fixed(p), 4 * rhs


def _guard_conc_t2_mu_one(p: Sequence[int], x: int) -> Optional[str]:
    if p[0] or p[2] or p[3]:
        return "needs t1 = t3 = t4 = 0"
    if p[4] != 1:
        return "needs m = 1"
    return None


def _pair_conc_t2_mu_one(p: Sequence[int], x: int) -> tuple[int, int]:
    _, k, _, _, _, i = p
    return 4 * _lhs_fixed(p), 4 * family_formula("E3", 3 * k + 2 + i, k)


# --- g_small entries -------------------------------------------------------


def _pair_gs_upper(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    st = t1 + t2 + t3 + t4
    rhs = 8 * _c2(st) + (4 * m + 2 * i + 15) * st - 28 + i * m + m * m
    return 4 * g_small(p), 4 * rhs


def _guard_m26(p: Sequence[int], x: int) -> Optional[str]:
    return None if p[4] >= 26 else "needs m >= 26"


def _pair_gs_trade(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    bar = t2 + t3 + t4
    lhs = g_small((t1, bar, 0, 0, m - 25, i + 50)) - g_small((t1, bar, 0, 0, m, i))
    return 4 * lhs, 4 * (25 * bar - 25 * i - 625)


def _pair_gs_merge(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    bar = t2 + t3 + t4
    lhs = g_small((t1 + bar, 0, 0, 0, m, i)) - g_small((t1, bar, 0, 0, m, i))
    return 4 * lhs, 4 * (bar * m - _c2(bar) - 2 * bar)


def _pair_gs_flatten(p: Sequence[int], x: int) -> tuple[int, int]:
    t1, t2, t3, t4, m, i = p
    bar = t2 + t3 + t4
    lhs = g_small(p) - g_small((t1, bar, 0, 0, m, i))
    return 4 * lhs, 4 * (9 * t4 - (t3 + t4) * (i - 3))


# --- shape samplers ---------------------------------------------------------


def _sample_shape_t1(rng: random.Random, coord_hi: int, x_hi: int) -> _Point:
    c = coord_hi + 1
    return (rng.randrange(c), 0, 0, 0, rng.randrange(c), rng.randrange(c)), 0


def _sample_shape_t2_mu_zero(rng: random.Random, coord_hi: int, x_hi: int) -> _Point:
    return (0, rng.randrange(1, coord_hi + 2), 0, 0, 0, rng.randrange(2, coord_hi + 3)), 0


def _sample_shape_t2(rng: random.Random, coord_hi: int, x_hi: int) -> _Point:
    c = coord_hi + 1
    return (0, rng.randrange(c), 0, 0, rng.randrange(1, c + 1), rng.randrange(c)), 0


def _sample_shape_t2_balanced(rng: random.Random, coord_hi: int, x_hi: int) -> _Point:
    k = rng.randrange(coord_hi + 1)
    i = max(0, k + rng.choice((-1, 0, 1)))
    return (0, k, 0, 0, rng.randrange(1, coord_hi + 2), i), 0


def _sample_shape_t2_mu_one(rng: random.Random, coord_hi: int, x_hi: int) -> _Point:
    c = coord_hi + 1
    return (0, rng.randrange(c), 0, 0, 1, rng.randrange(c)), 0


T1, T2, T3, T4 = 0, 1, 2, 3


def _entry(name, kind, summary, guard, pair, sampler=None, uses_x=False):
    return Identity(
        name=name,
        kind=kind,
        uses_x=uses_x,
        summary=summary,
        guard=guard,
        pair=pair,
        sampler=sampler if sampler is not None else _generic_sampler(uses_x),
    )


def _shift_entry(name, fn, src, dst, rhs4, summary):
    return _entry(
        name,
        "eq",
        summary,
        _shift_guard(src, dst),
        _shift_pair(fn, src, dst, rhs4),
        sampler=_shift_sampler(src, dst),
        uses_x=True,
    )


_ENTRIES = (
    _entry(
        "f_shift_t2_to_t1",
        "eq",
        "moving x from t2 to t1 changes f by a quadratic with a mu>0 correction",
        _shift_guard(T2, T1),
        _pair_f_shift,
        sampler=_shift_sampler(T2, T1),
        uses_x=True,
    ),
    _entry(
        "f_merge_t3_into_t2",
        "ge",
        "folding t3 into t2 gains at least (i - 3) per folded unit",
        _no_guard,
        _pair_f_merge,
    ),
    _entry(
        "f_quadratic_upper",
        "le",
        "f is at most a quadratic in the tau total",
        _no_guard,
        _pair_f_upper,
    ),
    _entry(
        "f_trade_edge_for_singles",
        "ge",
        "trading x matching edges for 2x singles gains at least x(t2 - t3)",
        _guard_f_trade,
        _pair_f_trade,
        sampler=_min_m_sampler(2, uses_x=True),
        uses_x=True,
    ),
    _entry(
        "f_retire_four_edges",
        "ge",
        "retiring four matching edges while folding t3 into t2 gains enough",
        _guard_m5,
        _pair_f_retire,
        sampler=_min_m_sampler(5),
    ),
    _entry(
        "hlemma_promote_t34",
        "eq",
        "promoting the t3+t4 mass to t1 shifts h_lemma by an explicit product",
        _no_guard,
        _pair_promote,
    ),
    _entry(
        "hlemma_merge_t3_into_t4",
        "ge",
        "folding t3 into t4 never decreases h_lemma",
        _no_guard,
        _pair_hlemma_merge,
    ),
    _entry(
        "aux_small_form",
        "eq",
        "h_aux_small decomposes as f_prime plus the fixed and t4 terms",
        _no_guard,
        _pair_aux_small_form,
    ),
    _entry(
        "aux_large_form",
        "eq",
        "h_aux_large decomposes as f_prime plus the large-t4 tail",
        _no_guard,
        _pair_aux_large_form,
    ),
    _shift_entry("aux_small_t4_to_t1", h_aux_small, T4, T1, _rhs_small_t4_to_t1,
                 "t4-to-t1 shift of h_aux_small"),
    _shift_entry("aux_small_t4_to_t2", h_aux_small, T4, T2, _rhs_small_t4_to_t2,
                 "t4-to-t2 shift of h_aux_small"),
    _shift_entry("aux_small_t4_to_t3", h_aux_small, T4, T3, _rhs_small_t4_to_t3,
                 "t4-to-t3 shift of h_aux_small"),
    _shift_entry("aux_small_t3_to_t1", h_aux_small, T3, T1, _rhs_t3_to_t1,
                 "t3-to-t1 shift of h_aux_small"),
    _shift_entry("aux_small_t2_to_t1", h_aux_small, T2, T1, _rhs_t2_to_t1,
                 "t2-to-t1 shift of h_aux_small"),
    _shift_entry("aux_small_t3_to_t2", h_aux_small, T3, T2, _rhs_t3_to_t2,
                 "t3-to-t2 shift of h_aux_small"),
    _shift_entry("aux_large_t2_to_t1", h_aux_large, T2, T1, _rhs_t2_to_t1,
                 "t2-to-t1 shift of h_aux_large"),
    _shift_entry("aux_large_t3_to_t1", h_aux_large, T3, T1, _rhs_t3_to_t1,
                 "t3-to-t1 shift of h_aux_large"),
    _shift_entry("aux_large_t3_to_t2", h_aux_large, T3, T2, _rhs_t3_to_t2,
                 "t3-to-t2 shift of h_aux_large"),
    _shift_entry("aux_large_t4_to_t1", h_aux_large, T4, T1, _rhs_large_t4_to_t1,
                 "t4-to-t1 shift of h_aux_large"),
    _shift_entry("aux_large_t4_to_t2", h_aux_large, T4, T2, _rhs_large_t4_to_t2,
                 "t4-to-t2 shift of h_aux_large"),
    _shift_entry("aux_large_t4_to_t3", h_aux_large, T4, T3, _rhs_large_t4_to_t3,
                 "t4-to-t3 shift of h_aux_large"),
    _entry(
        "conc_t1_closed_form",
        "eq",
        "all tau on t1: the fixed-part value is an explicit polynomial",
        _guard_shape_t1,
        _pair_conc_t1_closed,
        sampler=_sample_shape_t1,
    ),
    _entry(
        "conc_t1_le_e1",
        "le",
        "all tau on t1: the fixed-part value is at most the E1 formula",
        _guard_shape_t1,
        _pair_conc_t1_le_e1,
        sampler=_sample_shape_t1,
    ),
    _entry(
        "conc_t2_mu_zero_not_max",
        "lt",
        "all tau on t2 with m = 0: strictly beaten by conceding one edge",
        _guard_conc_t2_mu_zero,
        _pair_conc_t2_mu_zero,
        sampler=_sample_shape_t2_mu_zero,
    ),
    _entry(
        "conc_t2_closed_form",
        "eq",
        "all tau on t2 with m >= 1: the fixed-part value is a polynomial",
        _guard_shape_t2(1),
        _pair_conc_t2_closed,
        sampler=_sample_shape_t2,
    ),
    _entry(
        "conc_t2_attains_e2",
        "eq",
        "all tau on t2 with balanced m: the fixed-part value meets E2's formula",
        _guard_conc_t2_balanced,
        _pair_conc_t2_balanced,
        sampler=_sample_shape_t2_balanced,
    ),
    _entry(
        "conc_t2_mu_one_attains_e3",
        "eq",
        "all tau on t2 with m = 1: the fixed-part value meets E3's formula",
        _guard_conc_t2_mu_one,
        _pair_conc_t2_mu_one,
        sampler=_sample_shape_t2_mu_one,
    ),
    _entry(
        "gsmall_quadratic_upper",
        "le",
        "g_small is at most a quadratic in the tau total",
        _no_guard,
        _pair_gs_upper,
    ),
    _entry(
        "gsmall_trade_edges_for_singles",
        "ge",
        "trading 25 matching edges for 50 singles gains at least 25*(t2+t3+t4) - 25i - 625",
        _guard_m26,
        _pair_gs_trade,
        sampler=_min_m_sampler(26),
    ),
    _entry(
        "gsmall_merge_t2_into_t1",
        "ge",
        "merging the flattened tail into t1 gains at least an explicit amount",
        _no_guard,
        _pair_gs_merge,
    ),
    _entry(
        "gsmall_flatten_to_t2",
        "le",
        "flattening t3, t4 into t2 costs g_small at most 9*t4 - (t3+t4)(i-3)",
        _no_guard,
        _pair_gs_flatten,
    ),
)

IDENTITIES: dict[str, Identity] = {e.name: e for e in _ENTRIES}


def identity_names() -> tuple[str, ...]:
    return tuple(IDENTITIES)


def identity_check(name: str, p: Sequence[int], x: int = 0) -> IdentityResult:
    """Evaluate one named identity at profile p (and shift x where used).

    Returns exact Fractions for both sides and whether the entry's relation
    holds.  Raises ValueError for an unknown name, a profile that is not six
    non-negative integers, an x given to an entry that takes none, or a
    guard violation.
    """
    entry = IDENTITIES.get(name)
    if entry is None:
        raise ValueError(
            f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}"
        )
    p = tuple(p)
    if len(p) != 6 or any(not isinstance(c, int) or c < 0 for c in p):
        raise ValueError(f"profile must be six non-negative integers, got {p!r}")
    if not entry.uses_x and x != 0:
        raise ValueError(f"{name} takes no shift argument, got x={x}")
    reason = entry.guard(p, x)
    if reason is not None:
        raise ValueError(f"{name} not applicable at {p}, x={x}: {reason}")
    lhs4, rhs4 = entry.pair(p, x)
    return IdentityResult(
        Fraction(lhs4, 4), Fraction(rhs4, 4), _holds(entry.kind, lhs4, rhs4)
    )


_MAX_STORED_VIOLATIONS = 1000


@dataclass(frozen=True)
class GridReport:
    """Result of sweeping every identity over a grid plus random samples."""

    max_coord: int
    max_x: int
    samples: int
    seed: int
    sample_coord_hi: int
    sample_x_hi: int
    checks: int
    skipped: int
    violations: tuple
    notes: str = ""

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> str:
        return json.dumps(
            {
                "max_coord": self.max_coord,
                "max_x": self.max_x,
                "samples": self.samples,
                "seed": self.seed,
                "sample_coord_hi": self.sample_coord_hi,
                "sample_x_hi": self.sample_x_hi,
                "checks": self.checks,
                "skipped": self.skipped,
                "passed": self.passed,
                "violations": [
                    {"name": n, "profile": list(p), "x": x, "lhs": l, "rhs": r}
                    for n, p, x, l, r in self.violations
                ],
                "notes": self.notes,
            },
            indent=2,
            sort_keys=True,
        )


def run_identity_grid(
    max_coord: int = 6,
    max_x: int = 4,
    samples: int = 100_000,
    seed: int = 0,
    *,
    sample_coord_hi: int = 60,
    sample_x_hi: int = 12,
) -> GridReport:
    """Check every identity on the full coordinate grid plus random points.

    The grid covers all profiles with coordinates up to max_coord and, for
    entries that take a shift, every x in [-max_x, max_x]; combinations a
    guard rejects are counted as skipped.  Each random round draws one point
    per entry from that entry's own sampler (shape-constrained entries get
    conforming points), with coordinates up to sample_coord_hi and shifts up
    to sample_x_hi.
    """
    rng = random.Random(seed)
    entries = list(IDENTITIES.values())
    checks = 0
    skipped = 0
    dropped = 0
    violations: list[tuple] = []

    def check(entry: Identity, p: tuple, x: int) -> None:
        nonlocal checks, skipped, dropped
        if entry.guard(p, x) is not None:
            skipped += 1
            return
        lhs4, rhs4 = entry.pair(p, x)
        checks += 1
        if _holds(entry.kind, lhs4, rhs4):
            return
        if len(violations) < _MAX_STORED_VIOLATIONS:
            violations.append(
                (entry.name, p, x, str(Fraction(lhs4, 4)), str(Fraction(rhs4, 4)))
            )
        else:
            dropped += 1

    for p in itertools.product(range(max_coord + 1), repeat=6):
        for entry in entries:
            if entry.uses_x:
                for x in range(-max_x, max_x + 1):
                    check(entry, p, x)
            else:
                check(entry, p, 0)

    for _ in range(samples):
        for entry in entries:
            p, x = entry.sampler(rng, sample_coord_hi, sample_x_hi)
            check(entry, p, x)

    notes = ""
    if dropped:
        notes = f"{dropped} further violations not stored"
    return GridReport(
        max_coord=max_coord,
        max_x=max_x,
        samples=samples,
        seed=seed,
        sample_coord_hi=sample_coord_hi,
        sample_x_hi=sample_x_hi,
        checks=checks,
        skipped=skipped,
        violations=tuple(violations),
        notes=notes,
    )
