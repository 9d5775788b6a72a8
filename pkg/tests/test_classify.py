"""Unit tests for finiteness classification and the group-size probe."""

from __future__ import annotations

import json

import pytest

from clusteralg.classify import (
    automorphism_finiteness_probe,
    classify,
    dynkin_type,
    is_finite_mutation_type,
    is_finite_type,
    main1_conditions,
    search_m_and_acyclic,
)
from clusteralg.exchange import apply_matrix_sequence
from clusteralg.fixtures import (
    a2_matrix,
    a3_path_matrix,
    b2_matrix,
    g2_matrix,
    kronecker_matrix,
    markov_matrix,
    rank4_v1_matrix,
    weighted_path3_matrix,
)
from clusteralg.seeds import LabeledSeed


class TestDecisions:
    def test_a2_finite_both_ways(self):
        ft = is_finite_type(a2_matrix(), 100)
        fmt = is_finite_mutation_type(a2_matrix(), 100)
        assert ft.status == "yes" and ft.witness is None
        assert fmt.status == "yes" and fmt.witness is None

    def test_kronecker_root_violation(self):
        K = kronecker_matrix()
        d = is_finite_type(K, 50)
        assert d.status == "no"
        w = d.witness
        assert (w.sequence, w.i, w.j, w.product) == ((), 1, 2, 4)
        assert w.replay(K, 3)
        # rank 2 always has a two-element matrix class
        assert is_finite_mutation_type(K, 50).status == "yes"

    def test_markov_statuses(self):
        M = markov_matrix()
        assert is_finite_type(M, 50).status == "no"
        assert is_finite_mutation_type(M, 50).status == "yes"

    def test_rank4_witnesses_replay(self):
        B = rank4_v1_matrix()
        ft = is_finite_type(B, 200)
        fmt = is_finite_mutation_type(B, 200)
        assert ft.status == "no"
        assert ft.witness.replay(B, 3)
        assert fmt.status == "no"
        w = fmt.witness
        assert (w.sequence, w.i, w.j, w.product) == ((2, 4), 1, 3, 9)
        assert w.replay(B, 4)

    def test_unknown_within_tiny_budget(self):
        assert is_finite_type(a3_path_matrix(), 5).status == "unknown"
        assert is_finite_type(a3_path_matrix(), 200).status == "yes"


class TestMSearch:
    def test_rank4_infimum_met_at_root(self):
        m = search_m_and_acyclic(rank4_v1_matrix(), 200)
        assert m.min_v == 1
        assert m.min_v_word == ()
        assert m.m_certified
        assert m.acyclic_word == ()

    def test_weighted_path_stays_at_two(self):
        m = search_m_and_acyclic(weighted_path3_matrix(), 200)
        assert m.min_v == 2
        # the class never closes, so the bound stays an upper bound
        assert not m.m_certified

    def test_single_mutations_can_raise_v(self):
        assert apply_matrix_sequence(rank4_v1_matrix(), (2, 4)).v() == 3
        assert apply_matrix_sequence(weighted_path3_matrix(), (2, 1)).v() == 3


class TestMain1Conditions:
    def test_rank4_meets_only_first(self):
        f = main1_conditions(rank4_v1_matrix(), 200)
        assert (f.i, f.ii, f.iii) == (True, False, False)
        assert f.any

    def test_weighted_path_meets_second(self):
        W = weighted_path3_matrix()
        assert W.is_acyclic()
        assert W.v() == 2
        assert W.underlying_triangles() == []
        f = main1_conditions(W, 200)
        assert f.ii
        assert not f.i

    def test_rejects_skew_symmetrizable_only(self):
        with pytest.raises(ValueError):
            main1_conditions(b2_matrix(), 10)


class TestDynkinType:
    def test_named_diagrams(self):
        assert dynkin_type(a2_matrix()) == ("A2", 3)
        assert dynkin_type(a3_path_matrix()) == ("A3", 4)
        assert dynkin_type(b2_matrix()) == ("B2", 4)
        assert dynkin_type(g2_matrix()) == ("G2", 6)

    def test_unnamed_diagrams(self):
        assert dynkin_type(kronecker_matrix()) is None
        assert dynkin_type(markov_matrix()) is None
        assert dynkin_type(weighted_path3_matrix()) is None


class TestClassification:
    def test_rank4_record(self):
        c = classify(rank4_v1_matrix(), budget=200)
        assert c.finite_type == "no"
        assert c.finite_mutation_type == "no"
        assert c.mutation_acyclic == "yes"
        assert (c.v, c.m_upper_bound, c.m_exact) == (1, 1, True)
        assert c.main1.i and not c.main1.ii
        assert c.dynkin is None

    def test_budget_tags_unknown_statuses(self):
        c = classify(rank4_v1_matrix(), budget=2)
        assert c.finite_mutation_type == "unknown(budget=2)"

    def test_json_round_trip(self):
        payload = json.loads(classify(a2_matrix(), budget=100).to_json())
        assert payload["finite_type"] == "yes"
        assert payload["dynkin"] == "A2"
        assert payload["main1_conditions"] == {"i": True, "ii": False, "iii": False}
        assert payload["budget"] == 100

    def test_symmetrizable_record_skips_quiver_flags(self):
        c = classify(b2_matrix(), budget=100)
        assert c.main1 is None
        assert c.finite_type == "yes"
        assert c.dynkin == "B2"


class TestFinitenessProbe:
    def test_finite_type_forces_finite(self):
        for B in (a2_matrix(), a3_path_matrix(), b2_matrix()):
            p = automorphism_finiteness_probe(LabeledSeed.initial(B), 100)
            assert p.status == "finite"

    def test_kronecker_infinite_with_replay(self):
        s = LabeledSeed.initial(kronecker_matrix())
        p = automorphism_finiteness_probe(s, 50)
        assert p.status == "infinite"
        assert p.witness == (1, 2)
        assert p.powers_checked == 5
        assert p.replay(s)

    def test_markov_infinite_with_replay(self):
        s = LabeledSeed.initial(markov_matrix())
        p = automorphism_finiteness_probe(s, 50)
        assert p.status == "infinite"
        assert p.witness == (1, 2)
        assert p.replay(s)

    def test_weighted_path_uses_bipartite_composite(self):
        # low power cap: entries grow doubly exponentially on this matrix
        s = LabeledSeed.initial(weighted_path3_matrix())
        p = automorphism_finiteness_probe(s, 60, powers=2)
        assert p.status == "infinite"
        assert p.witness == (1, 2, 3)
        assert p.powers_checked == 2
        assert p.replay(s)

    def test_undecided_when_type_is_open(self):
        p = automorphism_finiteness_probe(LabeledSeed.initial(a3_path_matrix()), 5)
        assert p.status == "unknown"
        assert p.witness is None
