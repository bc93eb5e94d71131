"""Exceptions shared across the package."""


class CapExceededError(RuntimeError):
    """An enumeration cap or work budget would be exceeded.

    Raised instead of silently truncating a search: brute-force answers are
    only trustworthy when the enumeration actually completed.
    """


class InfeasibleGridError(ValueError):
    """The requested grid has no distinguishing coloring with the given palette."""
