"""Small named monoids used by the example corpus, the CLI and the tests."""

from __future__ import annotations

from .monoid import FiniteMonoid, symmetric_group

# rows are the left factor; element k is named str(k + 1)
EXAMPLE_A_TABLE = (
    (0, 1, 2, 3),
    (1, 1, 2, 2),
    (2, 1, 2, 1),
    (3, 1, 2, 0),
)

EXAMPLE_A_RELATION = (
    ("1", "1"), ("1", "2"), ("1", "3"), ("2", "2"), ("2", "3"),
    ("3", "2"), ("3", "3"), ("4", "2"), ("4", "3"), ("4", "4"),
)


def example_a() -> FiniteMonoid:
    return FiniteMonoid(EXAMPLE_A_TABLE, 0, ("1", "2", "3", "4"))


def zero_square() -> FiniteMonoid:
    """``{1, a, 0}`` with ``a*a = 0`` and ``0`` absorbing."""
    return FiniteMonoid(((0, 1, 2), (1, 2, 2), (2, 2, 2)), 0, ("1", "a", "0"))


def trivial() -> FiniteMonoid:
    return FiniteMonoid(((0,),), 0, ("1",))


def s3() -> FiniteMonoid:
    return symmetric_group(3)
