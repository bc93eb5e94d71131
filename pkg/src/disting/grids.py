"""Distinguishing colorings of m-by-n grids: explicit construction and verification.

The grid's symmetry group permutes rows and columns independently.  A grid
coloring is distinguishing exactly when its columns are pairwise distinct and
no nontrivial row permutation maps the set of columns onto itself; this is
what :func:`verify` checks directly, at cost m! instead of m!*n!.

:func:`construct` produces a distinguishing k-coloring for every feasible
(m, n, k), i.e. whenever ``grid_feasible`` holds, by combining a handful of
pinned seed grids with four deterministic moves:

* transpose (rows and columns play symmetric roles),
* complement (use exactly the k**m - n column colorings the grid does not),
* extend (append columns whose color multiset no existing column has; such
  columns cannot be reached from existing ones by any row permutation),
* palette reinterpretation (a (k-1)-coloring is also a k-coloring).
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .colorings import Coloring
from .errors import CapExceededError, InfeasibleGridError
from .formulas import feasible_window, fk, grid_feasible, multinomial

DEFAULT_MAX_COMPLEMENT_COLUMNS = 10**6
DEFAULT_ORACLE_BUDGET = 10**9
DEFAULT_VERIFY_MAX_ROWS = 11

# Full qualifying-column pools are cached only for column universes up to
# this size; larger universes are scanned lazily.
_POOL_CACHE_LIMIT = 2**20


@dataclass(frozen=True)
class GridColoring:
    """An m-by-n matrix of colors drawn from ``1..k``.

    ``cells`` is row-major.  Rectangularity and color range are checked at
    construction; the distinguishing property is not (use :func:`verify`).
    """

    k: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("palette size must be >= 1")
        if not self.cells or not self.cells[0]:
            raise ValueError("grid must have at least one row and one column")
        width = len(self.cells[0])
        for row in self.cells:
            if len(row) != width:
                raise ValueError("rows must all have the same length")
        if min(min(row) for row in self.cells) < 1 or (
            max(max(row) for row in self.cells) > self.k
        ):
            raise ValueError(f"cell values must lie in 1..{self.k}")

    @classmethod
    def _trusted(cls, k: int, cells: tuple[tuple[int, ...], ...]) -> "GridColoring":
        # Constructor bypassing validation, for transforms that provably
        # preserve the invariants (transpose, palette widening).
        grid = object.__new__(cls)
        object.__setattr__(grid, "k", k)
        object.__setattr__(grid, "cells", cells)
        return grid

    @property
    def m(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return len(self.cells[0])

    @cached_property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.cells))

    def with_palette(self, k: int) -> "GridColoring":
        """The same cells declared over a (weakly) larger palette."""
        if k < self.k:
            raise ValueError(f"cannot shrink palette from {self.k} to {k}")
        return GridColoring._trusted(k, self.cells)

    def to_coloring(self) -> Coloring:
        """Row-major flattening, matching GridAction's point order."""
        return Coloring(tuple(itertools.chain.from_iterable(self.cells)), self.k)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.cells)

    @classmethod
    def from_text(cls, text: str, k: int | None = None) -> "GridColoring":
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if line:
                rows.append(tuple(int(tok) for tok in line.split()))
        if not rows:
            raise ValueError("empty grid text")
        if k is None:
            k = max(max(row) for row in rows)
        return cls(k, tuple(rows))

    def to_json(self) -> str:
        payload = {
            "cells": [list(row) for row in self.cells],
            "k": self.k,
            "m": self.m,
            "n": self.n,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "GridColoring":
        payload = json.loads(text)
        try:
            cells = tuple(tuple(int(v) for v in row) for row in payload["cells"])
            k = int(payload["k"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed grid JSON: {exc}") from exc
        grid = cls(k, cells)
        if "m" in payload and payload["m"] != grid.m:
            raise ValueError(f"declared m={payload['m']} but grid has {grid.m} rows")
        if "n" in payload and payload["n"] != grid.n:
            raise ValueError(f"declared n={payload['n']} but grid has {grid.n} columns")
        return grid


def _permuted_column(col: tuple[int, ...], sigma: tuple[int, ...]) -> tuple[int, ...]:
    """Image of a column under the row permutation i -> sigma[i] (0-based)."""
    moved = [0] * len(col)
    for i, v in enumerate(col):
        moved[sigma[i]] = v
    return tuple(moved)


def transpose(grid: GridColoring) -> GridColoring:
    """Swap rows and columns; preserves the distinguishing property."""
    return GridColoring._trusted(grid.k, grid.columns)


def square_coloring(m: int) -> GridColoring:
    """The m-by-m two-coloring with 1 strictly above the diagonal.

    Row i has m - i entries of color 1 and the columns are pairwise distinct,
    which makes the coloring distinguishing for every m >= 2.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    cells = tuple(
        tuple(1 if i < j else 2 for j in range(1, m + 1)) for i in range(1, m + 1)
    )
    return GridColoring(2, cells)


def complement(
    grid: GridColoring,
    max_columns: int = DEFAULT_MAX_COMPLEMENT_COLUMNS,
) -> GridColoring:
    """The grid using exactly the column colorings absent from ``grid``.

    Columns come out in lexicographic order.  If ``grid`` is distinguishing,
    so is the complement: a nontrivial row permutation must push some column
    of the original outside its own column set, i.e. into the complement.
    """
    total = grid.k**grid.m
    if total > max_columns:
        raise CapExceededError(
            f"complement would enumerate {total} columns (cap {max_columns})"
        )
    used = set(grid.columns)
    if len(used) != grid.n:
        raise ValueError("columns must be pairwise distinct")
    if grid.n >= total:
        raise ValueError("grid already uses every possible column coloring")
    cols = [
        col
        for col in itertools.product(range(1, grid.k + 1), repeat=grid.m)
        if col not in used
    ]
    return GridColoring(grid.k, tuple(zip(*cols)))


@lru_cache(maxsize=128)
def _column_multisets(grid: GridColoring) -> frozenset[tuple[int, ...]]:
    return frozenset(tuple(sorted(col)) for col in grid.columns)


@lru_cache(maxsize=64)
def _qualifying_pool(
    k: int, m: int, used_multisets: frozenset[tuple[int, ...]]
) -> tuple[tuple[int, ...], ...]:
    return tuple(
        col
        for col in itertools.product(range(1, k + 1), repeat=m)
        if tuple(sorted(col)) not in used_multisets
    )


def _iter_qualifying(k: int, m: int, used_multisets) -> "itertools.chain":
    if k**m <= _POOL_CACHE_LIMIT:
        return iter(_qualifying_pool(k, m, frozenset(used_multisets)))
    return (
        col
        for col in itertools.product(range(1, k + 1), repeat=m)
        if tuple(sorted(col)) not in used_multisets
    )


def _capacity_from_multisets(k: int, m: int, used: frozenset) -> int:
    occupied = sum(multinomial(Counter(ms).values()) for ms in used)
    return k**m - occupied


def extension_capacity(grid: GridColoring) -> int:
    """Number of column colorings no row permutation can produce from ``grid``.

    Two columns are related by a row permutation exactly when their color
    multisets coincide, so this counts columns by multiset class: k**m minus
    the sizes of the classes already present.
    """
    return _capacity_from_multisets(grid.k, grid.m, _column_multisets(grid))


def extend(grid: GridColoring, l: int) -> GridColoring:
    """Widen a distinguishing grid to ``l`` columns.

    Appends the lexicographically smallest columns whose color multiset
    differs from that of every existing column.  Such columns are unreachable
    by row permutations, so the result stays distinguishing.
    """
    used = _column_multisets(grid)
    capacity = _capacity_from_multisets(grid.k, grid.m, used)
    if not grid.n <= l <= grid.n + capacity:
        raise ValueError(
            f"l must lie in [{grid.n}, {grid.n + capacity}] "
            f"(N = {capacity} columns available); got {l}"
        )
    needed = l - grid.n
    if needed == 0:
        return grid
    fresh = list(itertools.islice(_iter_qualifying(grid.k, grid.m, used), needed))
    cols = list(grid.columns) + fresh
    return GridColoring(grid.k, tuple(zip(*cols)))


def verify(grid: GridColoring, max_rows: int = DEFAULT_VERIFY_MAX_ROWS) -> bool:
    """Decide whether ``grid`` is a distinguishing coloring of the grid action.

    The coloring is distinguishing iff (i) all columns are pairwise distinct
    and (ii) no nontrivial row permutation maps the column set onto itself
    (the unique column permutation restoring positions would otherwise yield
    a nontrivial color-preserving symmetry).  Row permutations are pruned to
    those preserving the per-row color counts, which any set stabilizer must.
    """
    m = grid.m
    if m > max_rows:
        raise CapExceededError(
            f"verify enumerates row permutations and caps m at {max_rows}; "
            "run the full group-element check via GridAction instead"
        )
    cols = grid.columns
    colset = set(cols)
    if len(colset) != len(cols):
        return False
    palette = range(1, grid.k + 1)
    coarse = [tuple(row.count(c) for c in palette) for row in grid.cells]
    if len(set(coarse)) == m:
        return True
    # A stabilizing row permutation maps columns to columns with the same
    # color multiset, hence each multiset class onto itself.  Refine the row
    # signature to per-class color counts; only rows with identical refined
    # signatures can be exchanged.  A class containing every arrangement of
    # its multiset gives each row the same counts, so only deficient classes
    # carry information and the full ones are skipped.
    by_class: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for col in cols:
        by_class.setdefault(tuple(sorted(col)), []).append(col)
    refined: list[list[int]] = [[] for _ in range(m)]
    for multiset in sorted(by_class):
        group = by_class[multiset]
        if len(group) == multinomial(Counter(multiset).values()):
            continue
        for i, row in enumerate(zip(*group)):
            refined[i].extend(row.count(c) for c in palette)
    classes: dict[tuple[int, ...], list[int]] = {}
    for i, signature in enumerate(map(tuple, refined)):
        classes.setdefault(signature, []).append(i)
    if all(len(rows) == 1 for rows in classes.values()):
        return True
    # Scan columns from the rarest multiset class outward: images of a rare
    # class escape a bad candidate fastest.
    size_of = {ms: len(group) for ms, group in by_class.items()}
    ordered_cols = sorted(cols, key=lambda c: size_of[tuple(sorted(c))])
    class_lists = list(classes.values())
    pools = [itertools.permutations(rows) for rows in class_lists]
    identity = tuple(range(m))
    for combo in itertools.product(*pools):
        sigma = [0] * m
        for sources, targets in zip(class_lists, combo):
            for s, t in zip(sources, targets):
                sigma[s] = t
        sigma = tuple(sigma)
        if sigma == identity:
            continue
        for col in ordered_cols:
            if _permuted_column(col, sigma) not in colset:
                break
        else:
            return False
    return True


def feasible_oracle(
    m: int, n: int, k: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> bool:
    """Existence of a distinguishing k-coloring of the m-by-n grid, checked
    by enumerating n-subsets of the k**m possible column colorings.

    A subset works iff no nontrivial row permutation stabilizes it set-wise.
    Completely independent of the window formula; intended as its oracle.
    """
    if m < 1 or n < 1:
        raise ValueError("dimensions must be >= 1")
    if k < 2:
        raise ValueError("k must be >= 2")
    total = k**m
    work = math.comb(total, n) * math.factorial(m)
    if work > budget:
        raise CapExceededError(
            f"oracle needs about {work} primitive checks (budget {budget})"
        )
    if n > total:
        return False
    columns = list(itertools.product(range(1, k + 1), repeat=m))
    index = {col: i for i, col in enumerate(columns)}
    identity = tuple(range(m))
    sigma_maps = [
        tuple(index[_permuted_column(col, sigma)] for col in columns)
        for sigma in itertools.permutations(range(m))
        if sigma != identity
    ]
    for combo in itertools.combinations(range(total), n):
        chosen = set(combo)
        for smap in sigma_maps:
            for i in combo:
                if smap[i] not in chosen:
                    break
            else:
                break  # this permutation stabilizes the subset
        else:
            return True
    return False


# Pinned seed grids: pairwise distinct columns and pairwise distinct row
# counts of color 1, hence distinguishing.  Transcribed once and regression
# tested; everything wider is derived from these.
_PINNED_SEEDS: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {
    (2, 1): ((1,), (2,)),
    (2, 2): ((1, 1), (1, 2)),
    (2, 3): ((1, 1, 2), (1, 2, 2)),
    (3, 4): ((1, 1, 1, 2), (1, 1, 2, 2), (1, 2, 2, 2)),
    (4, 4): ((1, 1, 1, 2), (1, 2, 2, 1), (2, 1, 2, 2), (2, 2, 2, 2)),
    (5, 4): (
        (1, 1, 1, 1),
        (1, 1, 1, 2),
        (1, 2, 2, 1),
        (2, 1, 2, 2),
        (2, 2, 2, 2),
    ),
}


def balanced_wide_coloring(m: int) -> GridColoring:
    """For even m >= 6: an m-by-(m+1) two-coloring where row i has m + 1 - i
    entries of color 1 while every column has exactly m/2.

    The distinct row counts make it distinguishing; the uniform column
    multiset leaves all unbalanced columns available to :func:`extend`.
    """
    if m < 6 or m % 2:
        raise ValueError("m must be even and >= 6")
    half = m // 2
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 2):
            if j == 1:
                dark = i == 2 or i >= half + 2
            elif j == 2:
                dark = 3 <= i <= half + 1 or i == m
            elif j <= half + 1:
                dark = (j <= i <= half) or i >= m - j + 2
            else:
                dark = i == m + 2 - j or (i > half and i != 3 * half + 2 - j)
            row.append(2 if dark else 1)
        rows.append(tuple(row))
    return GridColoring(2, tuple(rows))


def balanced_square_coloring(m: int) -> GridColoring:
    """For odd m >= 7: an m-by-m two-coloring built by stacking an all-1 row
    on top of the balanced wide coloring of m - 1.

    Row i keeps m + 1 - i entries of color 1; every column carries
    (m + 1) / 2 of them, so large extensions remain possible.
    """
    if m < 7 or m % 2 == 0:
        raise ValueError("m must be odd and >= 7")
    base = balanced_wide_coloring(m - 1)
    return GridColoring(2, ((1,) * m,) + base.cells)


def _two_color_extension_base(m: int) -> GridColoring:
    if m in (3, 4, 5):
        return GridColoring(2, _PINNED_SEEDS[(m, 4)])
    if m % 2 == 0:
        return balanced_wide_coloring(m)
    return balanced_square_coloring(m)


def _construct_two_colors(m: int, n: int) -> GridColoring:
    if (m, n) in _PINNED_SEEDS:
        return GridColoring(2, _PINNED_SEEDS[(m, n)])
    if n == m:
        if m >= 7 and m % 2:
            return balanced_square_coloring(m)
        return square_coloring(m)
    if n < m:
        return transpose(construct(n, m, 2))
    if n > 2 ** (m - 1):
        return complement(construct(m, 2**m - n, 2))
    return extend(_two_color_extension_base(m), n)


def _construct_wide_palette(m: int, n: int, k: int) -> GridColoring:
    # m <= k: a single column of pairwise distinct colors seeds the grid.
    # Its multiset class has m! <= k**m / 2 columns, so extension reaches
    # every n up to half the column universe; complement covers the rest.
    if 2 * n > k**m:
        return complement(construct(m, k**m - n, k))
    seed = GridColoring(k, tuple((i,) for i in range(1, m + 1)))
    return extend(seed, n)


def _construct_reduced_palette(m: int, n: int, k: int) -> GridColoring:
    prev = fk(k - 1, m)
    prev_total = (k - 1) ** m
    if prev <= n <= prev_total - prev:
        return construct(m, n, k - 1).with_palette(k)
    if prev_total - prev < n <= k**m - prev:
        base = construct(m, prev_total - prev, k - 1).with_palette(k)
        return extend(base, n)
    if n < prev:
        return transpose(construct(n, m, k))
    return complement(construct(m, k**m - n, k))


@lru_cache(maxsize=64)
def construct(m: int, n: int, k: int) -> GridColoring:
    """A distinguishing k-coloring of the m-by-n grid, when one exists.

    Deterministic: the same (m, n, k) always yields the same grid.  Raises
    InfeasibleGridError, naming the violated bound, outside the feasibility
    window.  A small result cache keeps the shared intermediate grids of
    consecutive calls warm.
    """
    if m < 1 or n < 1:
        raise ValueError("dimensions must be >= 1")
    if k < 2:
        raise ValueError("k must be >= 2")
    if not grid_feasible(m, n, k):
        lo, hi = feasible_window(m, k)
        raise InfeasibleGridError(
            f"no distinguishing {k}-coloring of the {m}x{n} grid: "
            f"n must lie in [{lo}, {hi}]"
        )
    if m == 1:
        return GridColoring(k, (tuple(range(1, n + 1)),))
    if n == 1:
        return transpose(construct(1, m, k))
    if k == 2:
        return _construct_two_colors(m, n)
    if m <= k:
        return _construct_wide_palette(m, n, k)
    return _construct_reduced_palette(m, n, k)
