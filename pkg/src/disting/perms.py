"""Permutations of {1..n} stored as image tables.

Points are 1-based.  Actions are written on the right, so composition is
"first p, then q": ``compose(p, q)(x) == q(p(x))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_CYCLE_SHAPE = re.compile(r"^\s*(\(\s*(\d+(\s+\d+)*)?\s*\)\s*)+$")
_CYCLE_BODY = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation as the tuple of images: ``images[i - 1]`` is the image of ``i``.

    Ordering and hashing follow the image table, which makes sorted element
    lists (and therefore every enumeration built on them) deterministic.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images!r}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def transposition(cls, degree: int, a: int, b: int) -> "Perm":
        return cls.from_cycles(degree, [(a, b)])

    @classmethod
    def cycle(cls, degree: int, points) -> "Perm":
        return cls.from_cycles(degree, [tuple(points)])

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Perm":
        """Build a permutation from disjoint cycles."""
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = tuple(cyc)
            for x in cyc:
                if not 1 <= x <= degree:
                    raise ValueError(f"cycle point {x} outside 1..{degree}")
                if x in seen:
                    raise ValueError(f"cycles are not disjoint at point {x}")
                seen.add(x)
            for i, x in enumerate(cyc):
                images[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Perm":
        """Parse cycle notation like ``(1 2)(3 4 5)`` or an image table like ``3 1 2``.

        ``()`` denotes the identity (the degree must then be given).  For cycle
        notation without an explicit degree, the largest mentioned point is used.
        """
        text = text.strip()
        if text.startswith("("):
            if not _CYCLE_SHAPE.match(text):
                raise ValueError(f"malformed cycle notation: {text!r}")
            cycles = []
            for body in _CYCLE_BODY.findall(text):
                points = tuple(int(tok) for tok in body.split())
                if points:
                    cycles.append(points)
            if degree is None:
                if not cycles:
                    raise ValueError("identity '()' needs an explicit degree")
                degree = max(max(c) for c in cycles)
            return cls.from_cycles(degree, cycles)
        images = tuple(int(tok) for tok in text.split())
        if not images:
            raise ValueError("empty permutation text")
        if degree is not None and len(images) != degree:
            raise ValueError(f"image table has length {len(images)}, expected {degree}")
        return cls(images)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self.images):
            raise ValueError(f"point {point} outside 1..{len(self.images)}")
        return self.images[point - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        """``self`` then ``other``."""
        if len(self.images) != len(other.images):
            raise ValueError(
                f"degree mismatch: {len(self.images)} vs {len(other.images)}"
            )
        oi = other.images
        return Perm(tuple(oi[i - 1] for i in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(img == i + 1 for i, img in enumerate(self.images))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated to start at its smallest point."""
        out = []
        seen = [False] * len(self.images)
        for start in range(1, len(self.images) + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self.images[start - 1]
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self.images[x - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)

    def image_string(self) -> str:
        return " ".join(str(x) for x in self.images)

    def __str__(self) -> str:
        return self.cycle_string()


def identity(degree: int) -> Perm:
    return Perm.identity(degree)


def compose(p: Perm, q: Perm) -> Perm:
    """Acting by ``compose(p, q)`` equals acting by ``p`` then by ``q``."""
    return p * q


def inverse(p: Perm) -> Perm:
    return p.inverse()
