"""Finite permutation groups built by closing a generator list under products."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import CapExceededError
from .perms import Perm

DEFAULT_MAX_ELEMENTS = 10**7


@dataclass(frozen=True)
class FiniteGroup:
    """A fully enumerated permutation group of a fixed degree.

    ``elements`` is sorted by image table, so iteration order is deterministic
    and the identity always comes first.
    """

    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]

    @cached_property
    def _element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def __contains__(self, p: Perm) -> bool:
        return p in self._element_set

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1


def closure(
    degree: int,
    generators: Iterable[Perm],
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> FiniteGroup:
    """Smallest group containing ``generators``, enumerated breadth-first.

    Raises CapExceededError once more than ``max_elements`` elements appear;
    an incomplete enumeration is never returned.
    """
    gens = tuple(generators)
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != {degree}")
    ident = Perm.identity(degree)
    elements = {ident}
    frontier = [ident]
    while frontier:
        grown = []
        for a in frontier:
            for g in gens:
                c = a * g
                if c not in elements:
                    if len(elements) >= max_elements:
                        raise CapExceededError(
                            f"group closure exceeds {max_elements} elements"
                        )
                    elements.add(c)
                    grown.append(c)
        frontier = grown
    return FiniteGroup(degree, gens, tuple(sorted(elements)))


def trivial_group(degree: int) -> FiniteGroup:
    return closure(degree, [])


def symmetric_group(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return trivial_group(1)
    gens = [Perm.transposition(n, 1, 2)]
    if n > 2:
        gens.append(Perm.cycle(n, range(1, n + 1)))
    return closure(n, gens, max_elements)


def alternating_group(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteGroup:
    """A_n as the closure of the 3-cycles (1 2 i); trivial for n < 3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n < 3:
        return trivial_group(n)
    gens = [Perm.cycle(n, (1, 2, i)) for i in range(3, n + 1)]
    return closure(n, gens, max_elements)


def parse_generator_file(
    text: str, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> FiniteGroup:
    """Parse the generator file format: a ``degree N`` line, then one
    permutation per line in cycle notation."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].lower().startswith("degree"):
        raise ValueError("generator file must start with a 'degree N' line")
    parts = lines[0].split()
    if len(parts) != 2:
        raise ValueError(f"malformed degree line: {lines[0]!r}")
    degree = int(parts[1])
    if degree < 1:
        raise ValueError("degree must be >= 1")
    gens = [Perm.parse(ln, degree) for ln in lines[1:]]
    return closure(degree, gens, max_elements)
