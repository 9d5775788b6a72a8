"""Canonical exchange matrices used across the test suite and verify runs.

All constructors return fresh ExchangeMatrix values; orientation always
reads arrow i -> j for a positive entry b_ij.
"""

from __future__ import annotations

from .exchange import ExchangeMatrix


def a2_matrix() -> ExchangeMatrix:
    return ExchangeMatrix([[0, 1], [-1, 0]])


def b2_matrix() -> ExchangeMatrix:
    return ExchangeMatrix([[0, 1], [-2, 0]])


def g2_matrix() -> ExchangeMatrix:
    return ExchangeMatrix([[0, 1], [-3, 0]])


def kronecker_matrix(b: int = 2) -> ExchangeMatrix:
    """Rank-2 matrix with a single weight-b*b double arrow."""
    return ExchangeMatrix([[0, b], [-b, 0]])


def rank1_matrix() -> ExchangeMatrix:
    return ExchangeMatrix([[0]])


def zero_matrix(n: int) -> ExchangeMatrix:
    return ExchangeMatrix([[0] * n for _ in range(n)])


def path3(a: int, b: int) -> ExchangeMatrix:
    """1 -> 2 -> 3 with weights a, b."""
    return ExchangeMatrix([[0, a, 0], [-a, 0, b], [0, -b, 0]])


def fork3(a: int, b: int) -> ExchangeMatrix:
    """1 -> 2 <- 3 with weights a, b."""
    return ExchangeMatrix([[0, a, 0], [-a, 0, -b], [0, b, 0]])


def a3_path_matrix() -> ExchangeMatrix:
    return path3(1, 1)


def a3_alternating_matrix() -> ExchangeMatrix:
    """Sink-at-2 orientation; bipartite, used by the belt fixtures."""
    return fork3(1, 1)


def a4_path_matrix() -> ExchangeMatrix:
    """1 -> 2 -> 3 -> 4, all weights 1."""
    return ExchangeMatrix(
        [[0, 1, 0, 0], [-1, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]]
    )


def acyclic_triangle(a: int, b: int, c: int) -> ExchangeMatrix:
    """1 -> 2 (a), 2 -> 3 (b), 1 -> 3 (c)."""
    return ExchangeMatrix([[0, a, c], [-a, 0, b], [-c, -b, 0]])


def cyclic_triangle(a: int, b: int, c: int) -> ExchangeMatrix:
    """1 -> 2 (a), 2 -> 3 (b), 3 -> 1 (c)."""
    return ExchangeMatrix([[0, a, -c], [-a, 0, b], [c, -b, 0]])


def fork_chord_triangle(x: int, y: int, z: int) -> ExchangeMatrix:
    """1 -> 2 (x), 3 -> 2 (y), 1 -> 3 (z): no arrows pass through vertex 2."""
    return ExchangeMatrix([[0, x, z], [-x, 0, -y], [-z, y, 0]])


def markov_matrix() -> ExchangeMatrix:
    """The all-weight-2 directed triangle."""
    return cyclic_triangle(2, 2, 2)


def rank4_v1_matrix() -> ExchangeMatrix:
    """4x4 with every entry in {-1,0,1} yet of infinite mutation type."""
    return ExchangeMatrix(
        [[0, 1, 1, 1], [-1, 0, 1, 0], [-1, -1, 0, -1], [-1, 0, 1, 0]]
    )


def weighted_path3_matrix() -> ExchangeMatrix:
    """Acyclic, largest entry 2, triangle-free, infinite mutation type."""
    return path3(2, 1)
