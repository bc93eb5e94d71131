"""Right actions of finite groups on finite point sets.

Four concrete actions are provided:

* :class:`NaturalAction` -- a permutation group moving the points ``1..n``
  it is written on (covers symmetric, alternating and generator-defined
  groups alike);
* :class:`GridAction` -- rows-times-columns symmetry of an m-by-n grid,
  acting by a row permutation together with a column permutation;
* :class:`WreathAction` -- the imprimitive product: one inner group element
  per outer point plus an outer element shuffling the copies.

Every action exposes the same small interface (``apply``, ``compose``,
``inverse``, element enumeration in a canonical order), which is what the
search code in :mod:`disting.colorings` runs on.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from math import factorial
from typing import Any, Iterator, Mapping, NamedTuple

from .errors import CapExceededError
from .groups import DEFAULT_MAX_ELEMENTS, FiniteGroup, alternating_group, symmetric_group
from .perms import Perm

# Above this many (element, point) entries the image tables of all elements
# are not cached but regenerated on each pass.
_INDEX_CACHE_LIMIT = 4_000_000


class GroupAction(ABC):
    """A faithful right action: ``apply(apply(x, g), h) == apply(x, compose(g, h))``."""

    points: tuple

    @abstractmethod
    def order(self) -> int:
        """Number of group elements."""

    @abstractmethod
    def iter_elements(self) -> Iterator:
        """All elements in canonical order, identity first."""

    @abstractmethod
    def identity_element(self) -> Any: ...

    @abstractmethod
    def compose(self, g, h) -> Any:
        """The element acting like g followed by h."""

    @abstractmethod
    def inverse(self, g) -> Any: ...

    @abstractmethod
    def contains_element(self, g) -> bool: ...

    @abstractmethod
    def element_key(self, g):
        """Sort key realizing the canonical element order."""

    @abstractmethod
    def apply(self, point, g):
        """Image of ``point`` under ``g``; validates membership of both."""

    # -- shared plumbing -------------------------------------------------

    def __init__(self):
        self._point_index: dict | None = None
        self._index_perm_cache: tuple | None = None

    def point_index(self, point) -> int:
        if self._point_index is None:
            self._point_index = {p: i for i, p in enumerate(self.points)}
        try:
            return self._point_index[point]
        except KeyError:
            raise ValueError(f"{point!r} is not a point of {self!r}") from None

    def index_permutation(self, g) -> tuple[int, ...]:
        """The element as a permutation of point indices (0-based)."""
        return tuple(self.point_index(self.apply(p, g)) for p in self.points)

    def iter_nonidentity_index_perms(self) -> Iterator[tuple[int, ...]]:
        """Index permutations of all non-identity elements, canonical order."""
        if self._index_perm_cache is not None:
            return iter(self._index_perm_cache)
        if self.order() * len(self.points) <= _INDEX_CACHE_LIMIT:
            ident = self.identity_element()
            self._index_perm_cache = tuple(
                self.index_permutation(g)
                for g in self.iter_elements()
                if g != ident
            )
            return iter(self._index_perm_cache)
        return self._stream_nonidentity_index_perms()

    def _stream_nonidentity_index_perms(self) -> Iterator[tuple[int, ...]]:
        ident = self.identity_element()
        for g in self.iter_elements():
            if g != ident:
                yield self.index_permutation(g)

    def is_faithful(self) -> bool:
        """True iff every non-identity element moves some point."""
        trivial = tuple(range(len(self.points)))
        return all(p != trivial for p in self.iter_nonidentity_index_perms())


class NaturalAction(GroupAction):
    """A permutation group acting on the points ``1..degree`` it permutes."""

    def __init__(self, group: FiniteGroup):
        super().__init__()
        self.group = group
        self.points = tuple(range(1, group.degree + 1))

    def __repr__(self):
        return f"NaturalAction(degree={self.group.degree}, order={self.group.order})"

    def order(self) -> int:
        return self.group.order

    def iter_elements(self) -> Iterator[Perm]:
        return iter(self.group.elements)

    def identity_element(self) -> Perm:
        return self.group.identity

    def compose(self, g: Perm, h: Perm) -> Perm:
        return g * h

    def inverse(self, g: Perm) -> Perm:
        return g.inverse()

    def contains_element(self, g) -> bool:
        return isinstance(g, Perm) and g in self.group

    def element_key(self, g: Perm):
        return g.images

    def apply(self, point: int, g: Perm) -> int:
        self.point_index(point)
        if not self.contains_element(g):
            raise ValueError(f"{g!r} is not an element of {self!r}")
        return g(point)


def natural_symmetric_action(n: int) -> NaturalAction:
    return NaturalAction(symmetric_group(n))


def natural_alternating_action(n: int) -> NaturalAction:
    return NaturalAction(alternating_group(n))


class GridElement(NamedTuple):
    """A grid symmetry: permute rows by ``rows``, then columns by ``cols``."""

    rows: Perm
    cols: Perm


class GridAction(GroupAction):
    """All of S_m x S_n acting on the cells of an m-by-n grid.

    Points are ``(row, col)`` pairs, 1-based, enumerated row-major.  Elements
    are never materialized up front; with ``m! * n!`` of them, enumeration is
    streamed in lexicographic order.
    """

    def __init__(self, m: int, n: int):
        super().__init__()
        if m < 1 or n < 1:
            raise ValueError("grid dimensions must be >= 1")
        self.m = m
        self.n = n
        self.points = tuple((i, j) for i in range(1, m + 1) for j in range(1, n + 1))

    def __repr__(self):
        return f"GridAction({self.m}, {self.n})"

    def order(self) -> int:
        return factorial(self.m) * factorial(self.n)

    def iter_elements(self) -> Iterator[GridElement]:
        for rimg in itertools.permutations(range(1, self.m + 1)):
            rp = Perm(rimg)
            for cimg in itertools.permutations(range(1, self.n + 1)):
                yield GridElement(rp, Perm(cimg))

    def identity_element(self) -> GridElement:
        return GridElement(Perm.identity(self.m), Perm.identity(self.n))

    def compose(self, g: GridElement, h: GridElement) -> GridElement:
        return GridElement(g.rows * h.rows, g.cols * h.cols)

    def inverse(self, g: GridElement) -> GridElement:
        return GridElement(g.rows.inverse(), g.cols.inverse())

    def contains_element(self, g) -> bool:
        return (
            isinstance(g, GridElement)
            and g.rows.degree == self.m
            and g.cols.degree == self.n
        )

    def element_key(self, g: GridElement):
        return (g.rows.images, g.cols.images)

    def apply(self, point, g: GridElement):
        self.point_index(point)
        if not self.contains_element(g):
            raise ValueError(f"{g!r} is not an element of {self!r}")
        i, j = point
        return (g.rows(i), g.cols(j))

    def iter_nonidentity_index_perms(self) -> Iterator[tuple[int, ...]]:
        if self.order() * len(self.points) <= _INDEX_CACHE_LIMIT:
            return super().iter_nonidentity_index_perms()
        return self._stream_grid_index_perms()

    def _stream_grid_index_perms(self) -> Iterator[tuple[int, ...]]:
        m, n = self.m, self.n
        id_rows = tuple(range(m))
        id_cols = tuple(range(n))
        for rp in itertools.permutations(range(m)):
            row_base = [r * n for r in rp]
            rows_trivial = rp == id_rows
            for cp in itertools.permutations(range(n)):
                if rows_trivial and cp == id_cols:
                    continue
                yield tuple(b + c for b in row_base for c in cp)


class WreathElement(NamedTuple):
    """One inner element per outer point, plus an outer element.

    Acting on ``(x, y)``: ``x`` moves by ``inner_parts[index of y]``, ``y``
    moves by ``outer_part``.
    """

    inner_parts: tuple
    outer_part: Any


class WreathAction(GroupAction):
    """The wreath product of two actions on the product of their point sets.

    The element count is ``|G| ** |Y| * |H|`` for inner group G and outer
    group H on outer set Y; all elements are materialized at construction,
    guarded by ``max_elements``.
    """

    def __init__(
        self,
        inner: GroupAction,
        outer: GroupAction,
        max_elements: int = DEFAULT_MAX_ELEMENTS,
    ):
        super().__init__()
        self.inner = inner
        self.outer = outer
        ny = len(outer.points)
        total = inner.order() ** ny * outer.order()
        if total > max_elements:
            raise CapExceededError(
                f"wreath group would have {total} elements (cap {max_elements})"
            )
        self.points = tuple(
            (x, y) for x in inner.points for y in outer.points
        )
        inner_elements = tuple(inner.iter_elements())
        outer_elements = tuple(outer.iter_elements())
        self._elements = tuple(
            WreathElement(parts, h)
            for parts in itertools.product(inner_elements, repeat=ny)
            for h in outer_elements
        )
        self._element_set = frozenset(self._elements)

    def __repr__(self):
        return (
            f"WreathAction(inner={self.inner!r}, outer={self.outer!r}, "
            f"order={len(self._elements)})"
        )

    def order(self) -> int:
        return len(self._elements)

    def iter_elements(self) -> Iterator[WreathElement]:
        return iter(self._elements)

    def identity_element(self) -> WreathElement:
        ny = len(self.outer.points)
        return WreathElement(
            (self.inner.identity_element(),) * ny, self.outer.identity_element()
        )

    def compose(self, g: WreathElement, h: WreathElement) -> WreathElement:
        # Semidirect rule: the part at y composes g's part at y with h's part
        # at the image of y under g's outer move.
        outer = self.outer
        parts = tuple(
            self.inner.compose(
                g.inner_parts[iy],
                h.inner_parts[outer.point_index(outer.apply(y, g.outer_part))],
            )
            for iy, y in enumerate(outer.points)
        )
        return WreathElement(parts, outer.compose(g.outer_part, h.outer_part))

    def inverse(self, g: WreathElement) -> WreathElement:
        outer = self.outer
        h_inv = outer.inverse(g.outer_part)
        parts = tuple(
            self.inner.inverse(
                g.inner_parts[outer.point_index(outer.apply(y, h_inv))]
            )
            for y in outer.points
        )
        return WreathElement(parts, h_inv)

    def contains_element(self, g) -> bool:
        return isinstance(g, WreathElement) and g in self._element_set

    def element_key(self, g: WreathElement):
        return (
            tuple(self.inner.element_key(p) for p in g.inner_parts),
            self.outer.element_key(g.outer_part),
        )

    def apply(self, point, g: WreathElement):
        self.point_index(point)
        if not self.contains_element(g):
            raise ValueError(f"{g!r} is not an element of {self!r}")
        x, y = point
        iy = self.outer.point_index(y)
        return (
            self.inner.apply(x, g.inner_parts[iy]),
            self.outer.apply(y, g.outer_part),
        )

    def element(self, parts_by_point: Mapping, outer_part) -> WreathElement:
        """Build an element from a mapping ``outer point -> inner element``;
        unmapped points get the inner identity."""
        ident = self.inner.identity_element()
        parts = tuple(
            parts_by_point.get(y, ident) for y in self.outer.points
        )
        el = WreathElement(parts, outer_part)
        if not self.contains_element(el):
            raise ValueError("parts or outer element not in the component groups")
        return el


def apply(action: GroupAction, point, element):
    """Image of ``point`` under ``element`` in the given action."""
    return action.apply(point, element)


def build_wreath_group(
    inner: GroupAction,
    outer: GroupAction,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> WreathAction:
    """Materialize the wreath product action of ``inner`` by ``outer``."""
    return WreathAction(inner, outer, max_elements)
