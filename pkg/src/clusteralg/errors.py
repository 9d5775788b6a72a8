"""Exception types shared across the package."""

from __future__ import annotations


class InvariantViolation(Exception):
    """An internal certainty failed; the computation cannot be trusted.

    Raised when a fact that is guaranteed by theory (exactness of the
    exchange-relation division, verification of a constructed plan,
    alternation of belt matrices, ...) does not hold at runtime.  This
    always indicates an implementation bug, never bad user input.
    """


class NotDivisible(ArithmeticError):
    """Exact Laurent-polynomial division has no integer-coefficient result."""


class NotSkewSymmetrizable(ValueError):
    """No positive integer diagonal D makes D*B skew-symmetric."""


class DecomposableMatrix(ValueError):
    """Group-level operations require an indecomposable exchange matrix."""


class NotBipartite(ValueError):
    """The operation needs a source/sink bipartition and none exists."""
