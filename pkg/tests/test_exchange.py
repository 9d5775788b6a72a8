"""Unit tests for exchange matrices, permutations and quivers."""

from __future__ import annotations

import pytest

from clusteralg.errors import NotSkewSymmetrizable
from clusteralg.exchange import (
    Diagram,
    ExchangeMatrix,
    Permutation,
    Quiver,
    all_permutations,
    apply_matrix_sequence,
    is_inflexion,
    matrix_mutation_class,
)
from clusteralg.fixtures import (
    a2_matrix,
    a3_path_matrix,
    acyclic_triangle,
    b2_matrix,
    cyclic_triangle,
    kronecker_matrix,
    markov_matrix,
    rank4_v1_matrix,
    weighted_path3_matrix,
)


class TestExchangeMatrix:
    def test_zero_diagonal_required(self):
        with pytest.raises(ValueError):
            ExchangeMatrix([[1, 0], [0, 0]])

    def test_sign_pattern_required(self):
        # b_12 > 0 forces b_21 < 0
        with pytest.raises((ValueError, NotSkewSymmetrizable)):
            ExchangeMatrix([[0, 1], [1, 0]])

    def test_symmetrizer_found(self):
        assert b2_matrix().symmetrizer == (2, 1)
        assert a2_matrix().symmetrizer == (1, 1)

    def test_not_skew_symmetrizable_rejected(self):
        # cycle with inconsistent weight ratios has no symmetrizer
        with pytest.raises(NotSkewSymmetrizable):
            ExchangeMatrix([[0, 1, -1], [-2, 0, 1], [1, -1, 0]])

    def test_mutation_hand_value_rank2(self):
        # mutation negates everything in rank 2
        assert a2_matrix().mutate(1) == -a2_matrix()
        assert kronecker_matrix(2).mutate(2) == -kronecker_matrix(2)

    def test_mutation_hand_value_rank3(self):
        # path 1 -> 2 -> 3 mutated at 2: arrows reverse at 2, composite 1 -> 3
        B = a3_path_matrix().mutate(2)
        assert B == ExchangeMatrix([[0, -1, 1], [1, 0, -1], [-1, 1, 0]])

    def test_mutation_is_involutive(self):
        for B in (a3_path_matrix(), b2_matrix(), rank4_v1_matrix()):
            for k in range(1, B.n + 1):
                assert B.mutate(k).mutate(k) == B

    def test_mutation_commutes_with_global_negation(self):
        B = acyclic_triangle(1, 1, 2)
        for k in range(1, 4):
            assert (-B).mutate(k) == -(B.mutate(k))

    def test_v_and_max_abs_product(self):
        assert a2_matrix().v() == 1
        assert kronecker_matrix(2).v() == 2
        assert kronecker_matrix(2).max_abs_product() == 4
        assert b2_matrix().max_abs_product() == 2

    def test_acyclicity(self):
        assert a3_path_matrix().is_acyclic()
        assert acyclic_triangle(1, 1, 2).is_acyclic()
        assert not cyclic_triangle(1, 1, 1).is_acyclic()
        assert not markov_matrix().is_acyclic()

    def test_bipartition(self):
        # alternating orientation: sources +1, sinks -1
        assert a2_matrix().bipartition() == (1, -1)
        assert a3_path_matrix().bipartition() is None
        assert markov_matrix().bipartition() is None

    def test_underlying_edges_and_triangles(self):
        B = acyclic_triangle(1, 1, 2)
        assert B.underlying_edges() == [(1, 2), (1, 3), (2, 3)]
        assert B.underlying_triangles() == [(1, 2, 3)]
        assert weighted_path3_matrix().underlying_triangles() == []

    def test_indecomposable(self):
        assert a3_path_matrix().is_indecomposable()
        assert not ExchangeMatrix([[0, 0], [0, 0]]).is_indecomposable()

    def test_permuted_entries(self):
        B = a3_path_matrix()
        sigma = Permutation.from_cycle_notation(3, "(1 2 3)")
        C = B.permuted(sigma)
        for i in range(1, 4):
            for j in range(1, 4):
                assert C.entry(i, j) == B.entry(sigma(i), sigma(j))


class TestPermutation:
    def test_cycle_notation_roundtrip(self):
        sigma = Permutation.from_cycle_notation(4, "(1 4)(2 3)")
        assert sigma.cycle_notation() == "(1 4)(2 3)"
        assert sigma(1) == 4 and sigma(2) == 3

    def test_identity_spellings(self):
        for text in ("", "id", "()", "e"):
            assert Permutation.from_cycle_notation(3, text).is_identity()
        assert Permutation.identity(3).cycle_notation() == "id"

    def test_compose_and_inverse(self):
        a = Permutation.from_cycle_notation(3, "(1 2)")
        b = Permutation.from_cycle_notation(3, "(2 3)")
        # compose(a, b) applies b first
        c = a.compose(b)
        assert [c(i) for i in (1, 2, 3)] == [2, 3, 1]
        assert c.compose(c.inverse()).is_identity()

    def test_all_permutations_count(self):
        assert len(list(all_permutations(4))) == 24
        assert len({p.cycle_notation() for p in all_permutations(3)}) == 6

    def test_invalid_cycles_rejected(self):
        with pytest.raises(ValueError):
            Permutation.from_cycle_notation(3, "(1 4)")
        with pytest.raises(ValueError):
            Permutation.from_cycle_notation(3, "(1 1)")


class TestQuiverAndDiagram:
    def test_quiver_needs_skew_symmetric(self):
        with pytest.raises(ValueError):
            Quiver(b2_matrix())

    def test_from_arrows_roundtrip(self):
        Q = Quiver.from_arrows(3, [(1, 2), (2, 3, 2)])
        assert Q.arrows() == [(1, 2, 1), (2, 3, 2)]
        assert Q.matrix.entry(3, 2) == -2

    def test_quiver_mutation_matches_matrix_mutation(self):
        Q = Quiver(a3_path_matrix())
        assert Q.mutate(2).matrix == a3_path_matrix().mutate(2)

    def test_diagram_weights(self):
        D = Diagram.of(b2_matrix())
        assert D.weight(1, 2) == 2
        assert D.weight(2, 1) == 2
        assert Diagram.of(a2_matrix()).weight(1, 2) == 1

    def test_inflexion(self):
        # path 1 -> 2 -> 3: arrows pass through 2
        B = a3_path_matrix()
        assert is_inflexion(B, 2, 1, 3)
        assert not is_inflexion(B, 1, 2, 3)


class TestMatrixClass:
    def test_rank2_simple_class(self):
        # the rank-2 simple matrix has class {B, -B}
        cls = matrix_mutation_class(a2_matrix(), max_matrices=10)
        assert cls.complete and len(cls) == 2
        assert cls.find(-a2_matrix()) is not None

    def test_markov_class_is_sign_pair(self):
        cls = matrix_mutation_class(markov_matrix(), max_matrices=10)
        assert cls.complete and len(cls) == 2

    def test_rank3_path_class_size(self):
        cls = matrix_mutation_class(a3_path_matrix(), max_matrices=50)
        assert cls.complete and len(cls) == 14

    def test_truncation_reported(self):
        cls = matrix_mutation_class(rank4_v1_matrix(), max_matrices=5)
        assert not cls.complete and len(cls) == 5

    def test_words_replay(self):
        cls = matrix_mutation_class(a3_path_matrix(), max_matrices=50)
        for M, word in zip(cls.matrices, cls.words):
            assert apply_matrix_sequence(a3_path_matrix(), word) == M
