"""Colorings of a point set and exhaustive distinguishing-number searches.

A coloring distinguishes an action when no element except the identity maps
every point to a point of the same color.  The routines here are the
brute-force side of the package: they enumerate colorings and group elements
directly, spend an explicit work budget while doing so, and fail loudly when
the budget runs out rather than returning a truncated answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .actions import GroupAction
from .errors import CapExceededError

# Default budget in (coloring, element) checks for one search call.
DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Coloring:
    """A point-indexed color assignment with a declared palette size.

    ``colors[i]`` is the color of the i-th point in the action's point order;
    values lie in ``1..r``.  The palette may be larger than the set of colors
    actually used.
    """

    colors: tuple[int, ...]
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("palette size must be >= 1")
        if any(not 1 <= c <= self.r for c in self.colors):
            raise ValueError(f"colors must lie in 1..{self.r}")

    @property
    def domain_size(self) -> int:
        return len(self.colors)

    def with_palette(self, r: int) -> "Coloring":
        return Coloring(self.colors, r)


@dataclass(frozen=True)
class ColoringOrbitSet:
    """Distinguishing colorings lying in pairwise distinct orbits.

    Under the induced action on colorings, a distinguishing coloring has a
    trivial stabilizer, so each orbit has exactly ``orbit_size`` = group
    order members.
    """

    representatives: tuple[Coloring, ...]
    orbit_size: int


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self, amount: int) -> None:
        self.left -= amount
        if self.left < 0:
            raise CapExceededError(
                "element-coloring check budget exhausted; raise the budget to proceed"
            )


def _check_domain(action: GroupAction, coloring: Coloring) -> None:
    if coloring.domain_size != len(action.points):
        raise ValueError(
            f"coloring has {coloring.domain_size} entries, action has "
            f"{len(action.points)} points"
        )


def is_color_preserving(action: GroupAction, coloring: Coloring, element) -> bool:
    """True iff every point keeps its color under ``element``."""
    _check_domain(action, coloring)
    colors = coloring.colors
    for i, p in enumerate(action.points):
        if colors[action.point_index(action.apply(p, element))] != colors[i]:
            return False
    return True


def _first_preserver(
    colors: tuple[int, ...], index_perms: Iterator[tuple[int, ...]]
) -> tuple[bool, int]:
    """Scan elements in canonical order; return (found_preserver, elements_scanned)."""
    scanned = 0
    for perm in index_perms:
        scanned += 1
        for i, pi in enumerate(perm):
            if colors[pi] != colors[i]:
                break
        else:
            return True, scanned
    return False, scanned


def is_distinguishing(action: GroupAction, coloring: Coloring) -> bool:
    """True iff no non-identity element preserves the coloring."""
    _check_domain(action, coloring)
    found, _ = _first_preserver(
        coloring.colors, action.iter_nonidentity_index_perms()
    )
    return not found


def _canonical_colorings(npoints: int, palette: int) -> Iterator[tuple[int, ...]]:
    """Colorings using exactly ``palette`` colors, one per recoloring class.

    Canonical form: the first occurrence of each color value is increasing.
    Whether a coloring distinguishes is invariant under renaming colors, so
    one representative per class suffices for existence searches.
    """
    prefix: list[int] = []

    def rec(used: int) -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        if palette - used > npoints - i:
            return
        if i == npoints:
            yield tuple(prefix)
            return
        for c in range(1, min(used + 1, palette) + 1):
            prefix.append(c)
            yield from rec(max(used, c))
            prefix.pop()

    yield from rec(0)


def distinguishing_number(action: GroupAction, budget: int = DEFAULT_BUDGET) -> int:
    """Least palette size admitting a distinguishing coloring, by search.

    For a faithful action this is at most the number of points (coloring
    every point differently always works), so the scan over r terminates.
    """
    npoints = len(action.points)
    tracker = _Budget(budget)
    for r in range(1, npoints + 1):
        for colors in _canonical_colorings(npoints, r):
            found, scanned = _first_preserver(
                colors, action.iter_nonidentity_index_perms()
            )
            tracker.spend(max(scanned, 1))
            if not found:
                return r
    raise ValueError(
        "no distinguishing coloring found; the action is not faithful"
    )


def count_distinguishing_colorings(
    action: GroupAction, r: int, budget: int = DEFAULT_BUDGET
) -> int:
    """Exact number of r-colorings (labeled, all r**npoints of them) that
    distinguish the action."""
    if r < 1:
        raise ValueError("r must be >= 1")
    npoints = len(action.points)
    tracker = _Budget(budget)
    total = 0
    for colors in itertools.product(range(1, r + 1), repeat=npoints):
        found, scanned = _first_preserver(
            colors, action.iter_nonidentity_index_perms()
        )
        tracker.spend(max(scanned, 1))
        if not found:
            total += 1
    return total


def orbit_representatives(
    action: GroupAction, r: int, count: int, budget: int = DEFAULT_BUDGET
) -> ColoringOrbitSet:
    """``count`` distinguishing r-colorings in pairwise distinct orbits.

    The induced action sends a coloring ``a`` to the coloring whose value at
    a point x is the value of ``a`` at the preimage of x.  Colorings are
    scanned in lexicographic order; each representative found claims its
    whole orbit, so later hits in the same orbit are skipped.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    npoints = len(action.points)
    tracker = _Budget(budget)
    index_perms = tuple(action.iter_nonidentity_index_perms())
    reps: list[Coloring] = []
    claimed: set[tuple[int, ...]] = set()
    for colors in itertools.product(range(1, r + 1), repeat=npoints):
        if colors in claimed:
            continue
        found, scanned = _first_preserver(colors, iter(index_perms))
        tracker.spend(max(scanned, 1))
        if found:
            continue
        reps.append(Coloring(colors, r))
        claimed.add(colors)
        for perm in index_perms:
            moved = [0] * npoints
            for i, pi in enumerate(perm):
                moved[pi] = colors[i]
            claimed.add(tuple(moved))
        if len(reps) == count:
            return ColoringOrbitSet(tuple(reps), action.order())
    raise ValueError(
        f"only {len(reps)} orbits of distinguishing {r}-colorings exist, "
        f"need {count}"
    )


def wreath_coloring(
    inner_representatives: ColoringOrbitSet, outer_coloring: Coloring
) -> Coloring:
    """Product coloring distinguishing a wreath action.

    The outer coloring picks, for each outer point, one inner representative;
    the product point ``(x, y)`` receives that representative's color at x.
    Point order matches :class:`disting.actions.WreathAction` (inner-major).
    Distinguishing is guaranteed when the representatives lie in distinct
    orbits and the outer coloring distinguishes the outer action.
    """
    reps = inner_representatives.representatives
    if not reps:
        raise ValueError("need at least one inner representative")
    nx = reps[0].domain_size
    r = reps[0].r
    if any(a.domain_size != nx or a.r != r for a in reps):
        raise ValueError("inner representatives must share domain and palette")
    if max(outer_coloring.colors) > len(reps):
        raise ValueError(
            f"outer coloring uses color {max(outer_coloring.colors)} but only "
            f"{len(reps)} representatives are available"
        )
    out = []
    for ix in range(nx):
        for b in outer_coloring.colors:
            out.append(reps[b - 1].colors[ix])
    return Coloring(tuple(out), r)
