"""Exact closed forms and recursions, all in unbounded integer arithmetic.

The central object is the threshold function ``fk``: the m-by-n grid under
full row/column symmetry admits a distinguishing k-coloring exactly when
``fk(k, m) <= n <= k**m - fk(k, m)``.  Everything else here is derived from
that window, from the wreath-product counting rule ``n_r >= d * |G|``, or
from the closed-form counts of distinguishing colorings for the symmetric
and alternating groups.
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import CapExceededError

DEFAULT_MAX_R = 10**6

# Stand-in result for "no finite palette works".  Unreachable for finite
# faithful actions (coloring every point differently always distinguishes),
# so the search routines return plain ints and never produce it.
INFINITE = math.inf

# fk values per k, filled bottom-up: _fk_tables[k][m] is fk(k, m) for m >= 2.
# Fills are idempotent, so concurrent use is safe under the GIL.
_fk_tables: dict[int, list[int]] = {}


def binomial(a: int, b: int) -> int:
    """Exact C(a, b); zero when b > a."""
    return math.comb(a, b)


def multinomial(counts) -> int:
    """Number of distinct orderings of a multiset with the given multiplicities."""
    counts = list(counts)
    out = math.factorial(sum(counts))
    for c in counts:
        out //= math.factorial(c)
    return out


def fk(k: int, m: int) -> int:
    """The grid-window threshold.

    ``fk(k, m) = 1`` for ``m <= k``; otherwise it is the smallest ``t`` with
    ``1 < t < m`` and ``m <= k**t - fk(k, t)``.  Memoized per ``k`` and filled
    bottom-up, since the recursion only ever looks at smaller arguments.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if m < 2:
        raise ValueError("m must be >= 2")
    if m <= k:
        return 1
    table = _fk_tables.setdefault(k, [0, 0])  # indices 0,1 unused
    for mm in range(len(table), m + 1):
        if mm <= k:
            table.append(1)
            continue
        for t in range(2, mm):
            if mm <= k**t - table[t]:
                table.append(t)
                break
        else:  # pragma: no cover - t = mm - 1 always satisfies the bound
            raise AssertionError(f"no threshold found for k={k}, m={mm}")
    return table[m]


def feasible_window(m: int, k: int) -> tuple[int, int]:
    """Inclusive range of column counts n for which the m-by-n grid has a
    distinguishing k-coloring.  A single row is distinguishable iff its cells
    are pairwise distinct, giving the window (1, k)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return (1, k)
    t = fk(k, m)
    return (t, k**m - t)


def grid_feasible(m: int, n: int, k: int) -> bool:
    """True iff the m-by-n grid has a distinguishing k-coloring."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m >= 2 and n == 1:
        return m <= k  # single column: needs pairwise distinct cells
    lo, hi = feasible_window(m, k)
    return lo <= n <= hi


def direct_product_distinguishing_number(m: int, n: int) -> int:
    """Distinguishing number of the m-by-n grid under full row/column symmetry.

    Degenerate single-row and single-column grids reduce to the natural
    symmetric action on the other side.  Otherwise scan k = 2, 3, ...; the
    scan stops by k = max(m, n) because then fk(k, m) = 1 <= n <= k**m - 1.
    """
    if m < 1 or n < 1:
        raise ValueError("dimensions must be >= 1")
    if m == 1:
        return n
    if n == 1:
        return m
    k = 2
    while not grid_feasible(m, n, k):
        k += 1
    return k


def table_values(max_mn: int) -> list[list[int]]:
    """The square table of grid distinguishing numbers for 1 <= m, n <= max_mn."""
    return [
        [direct_product_distinguishing_number(m, n) for n in range(1, max_mn + 1)]
        for m in range(1, max_mn + 1)
    ]


def wreath_distinguishing_number(
    nr: Callable[[int], int],
    d: int,
    inner_order: int,
    max_r: int = DEFAULT_MAX_R,
) -> int:
    """Distinguishing number of a wreath product action.

    ``nr(r)`` counts the distinguishing r-colorings of the inner action, ``d``
    is the distinguishing number of the outer action, ``inner_order`` the
    order of the inner group.  The answer is the least r with
    ``nr(r) >= d * inner_order``.
    """
    if d < 1 or inner_order < 1:
        raise ValueError("d and inner_order must be >= 1")
    need = d * inner_order
    for r in range(1, max_r + 1):
        if nr(r) >= need:
            return r
    raise CapExceededError(
        f"count function never reached {need} for r <= {max_r}"
    )


def nr_symmetric(n: int, r: int) -> int:
    """Number of distinguishing r-colorings of 1..n under the full symmetric
    group: every point needs its own color, so C(r, n) * n!."""
    if n < 1 or r < 1:
        raise ValueError("n and r must be >= 1")
    return binomial(r, n) * math.factorial(n)


def nr_alternating(n: int, r: int) -> int:
    """Number of distinguishing r-colorings of 1..n under the alternating
    group (n >= 3): either one color repeats exactly twice or all colors are
    distinct."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if r < 1:
        raise ValueError("r must be >= 1")
    paired = binomial(r, n - 1) * binomial(n, 2) * math.factorial(n - 1)
    return paired + binomial(r, n) * math.factorial(n)


def sn_wreath_number(n: int, d: int) -> int:
    """Distinguishing number of a wreath product with symmetric inner group:
    least r with C(r, n) >= d."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    r = 1
    while binomial(r, n) < d:
        r += 1
    return r


def an_wreath_number(n: int, d: int) -> int:
    """Distinguishing number of a wreath product with alternating inner group
    (n >= 3): least r with (n-1) * C(r, n-1) + 2 * C(r, n) >= d."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if d < 1:
        raise ValueError("d must be >= 1")
    r = 1
    while (n - 1) * binomial(r, n - 1) + 2 * binomial(r, n) < d:
        r += 1
    return r
