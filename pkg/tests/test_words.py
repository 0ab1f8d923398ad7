import itertools
import random

import pytest

from artintwist import (
    ContractViolation,
    CoxeterGraph,
    ExponentAssignment,
    ParseError,
    RaagExpression,
    apply_type_i,
    apply_type_ii,
    ends_in,
    format_expression,
    ii_equivalent,
    is_m_reduced,
    is_trivial_raag,
    m_reduce,
    m_reduce_with_trace,
    parse_expression,
    split_criterion,
    type_i_positions,
    type_ii_positions,
)
from catalogues import all_expressions, small_type_catalogue
from conftest import commutation_of
from oracles import (
    ii_closure,
    oracle_ends_in,
    oracle_ii_equivalent,
    oracle_is_m_reduced,
    oracle_is_trivial,
)


def expr(text):
    return parse_expression(text)


class TestExpressionType:
    def test_zero_exponent_rejected(self):
        with pytest.raises(ContractViolation):
            RaagExpression((("a", 0),))

    def test_inverse(self):
        w = expr("a^2 b^-1")
        assert w.inverse() == expr("b a^-2")
        assert w.inverse().inverse() == w

    def test_exponent_assignment_validation(self):
        with pytest.raises(ContractViolation):
            ExponentAssignment({"a": 1})
        powers = ExponentAssignment({"a": 2, "b": 5})
        assert powers.of("b") == 5
        with pytest.raises(ContractViolation):
            powers.of("z")


class TestIsMReduced:
    def test_commuting_sandwich(self, a2_comm):
        assert not is_m_reduced(a2_comm, expr("a b a^-1"))

    def test_braid_sandwich(self, a2):
        assert is_m_reduced(a2, expr("a b a^-1"))

    def test_empty(self, a2):
        assert is_m_reduced(a2, RaagExpression())

    def test_adjacent_same_generator(self, a2):
        assert not is_m_reduced(a2, expr("a a^3"))

    def test_same_generator_witness(self, a3):
        # the middle occurrence of a is itself the required witness
        assert not is_m_reduced(a3, expr("a a a"))
        assert is_m_reduced(a3, expr("a b a b a"))

    def test_unknown_generator(self, a2):
        with pytest.raises(ContractViolation):
            is_m_reduced(a2, expr("z"))


class TestMReduce:
    def test_commuting_cancellation(self, a2_comm):
        assert m_reduce(a2_comm, expr("a b^2 a^-1")) == expr("b^2")

    def test_adjacent_merge(self, a2):
        assert m_reduce(a2, expr("a^2 a^3")) == expr("a^5")

    def test_fixpoint(self, a2):
        w = expr("a b a^-1")
        assert m_reduce(a2, w) == w

    def test_output_is_reduced_and_idempotent(self, a4):
        rng = random.Random(3)
        for _ in range(300):
            syls = tuple(
                (rng.choice(a4.vertices), rng.choice([-2, -1, 1, 2]))
                for _ in range(rng.randrange(8))
            )
            w = RaagExpression(syls)
            reduced = m_reduce(a4, w)
            assert is_m_reduced(a4, reduced)
            assert m_reduce(a4, reduced) == reduced
            assert len(reduced) <= len(w)

    def test_trace_replays(self, a4):
        rng = random.Random(4)
        for _ in range(200):
            syls = tuple(
                (rng.choice(a4.vertices), rng.choice([-2, -1, 1, 2]))
                for _ in range(rng.randrange(7))
            )
            w = RaagExpression(syls)
            reduced, trace = m_reduce_with_trace(a4, w)
            assert reduced == m_reduce(a4, w)
            replay = w
            for kind, i in trace:
                if kind == "I":
                    assert i in type_i_positions(a4, replay)
                    replay = apply_type_i(a4, replay, i)
                else:
                    assert i in type_ii_positions(a4, replay)
                    replay = apply_type_ii(a4, replay, i)
            assert replay == reduced


class TestElementaryMoves:
    def test_type_i_merges(self, a2):
        assert apply_type_i(a2, expr("a^2 a^-2"), 0) == RaagExpression()
        assert apply_type_i(a2, expr("b a^2 a"), 1) == expr("b a^3")

    def test_type_i_requires_equal_generators(self, a2):
        with pytest.raises(ContractViolation):
            apply_type_i(a2, expr("a b"), 0)

    def test_type_ii_swaps(self, a2_comm):
        assert apply_type_ii(a2_comm, expr("a b"), 0) == expr("b a")

    def test_type_ii_requires_commuting(self, a2):
        with pytest.raises(ContractViolation):
            apply_type_ii(a2, expr("a b"), 0)
        with pytest.raises(ContractViolation):
            apply_type_ii(a2, expr("a a"), 0)


class TestEndsIn:
    def test_commuting_pair(self, a2_comm):
        w = expr("b a")
        assert ends_in(a2_comm, w, "a")
        assert ends_in(a2_comm, w, "b")

    def test_braid_pair(self, a2):
        w = expr("b a")
        assert ends_in(a2, w, "b")
        assert not ends_in(a2, w, "a")

    def test_single_syllable(self, a2):
        assert ends_in(a2, expr("a"), "a")
        assert not ends_in(a2, expr("a"), "b")

    def test_rejects_non_reduced(self, a2):
        with pytest.raises(ContractViolation):
            ends_in(a2, expr("a a"), "a")

    def test_invariant_under_type_ii(self, a4):
        rng = random.Random(5)
        count = 0
        while count < 100:
            syls = tuple(
                (rng.choice(a4.vertices), rng.choice([-1, 1]))
                for _ in range(rng.randrange(1, 6))
            )
            w = RaagExpression(syls)
            if not is_m_reduced(a4, w):
                continue
            count += 1
            answers = {s: ends_in(a4, w, s) for s in a4.vertices}
            for u in ii_closure(w.syllables, commutation_of(a4)):
                wu = RaagExpression(u)
                assert {s: ends_in(a4, wu, s) for s in a4.vertices} == answers

    def test_matches_oracle(self, a4):
        commutes = commutation_of(a4)
        for syls in all_expressions(a4.vertices, 4, (-1, 1)):
            w = RaagExpression(syls)
            if not is_m_reduced(a4, w):
                continue
            for s in a4.vertices:
                assert ends_in(a4, w, s) == oracle_ends_in(syls, commutes, s)


class TestIIEquivalent:
    def test_commuting_swap(self, a2_comm):
        assert ii_equivalent(a2_comm, expr("a b"), expr("b a"))

    def test_braid_pair_not_swappable(self, a2):
        assert not ii_equivalent(a2, expr("a b"), expr("b a"))

    def test_reflexive(self, a4):
        rng = random.Random(6)
        for _ in range(50):
            syls = tuple(
                (rng.choice(a4.vertices), rng.choice([-2, -1, 1, 2]))
                for _ in range(rng.randrange(6))
            )
            w = RaagExpression(syls)
            assert ii_equivalent(a4, w, w)

    def test_distinguishes_exponents(self, a2_comm):
        assert not ii_equivalent(a2_comm, expr("a b"), expr("b a^2"))

    def test_matches_oracle_exhaustively(self):
        g = CoxeterGraph(
            ["a", "b", "c"], {("a", "b"): 3}
        )  # c commutes with both
        commutes = commutation_of(g)
        family = list(all_expressions(g.vertices, 3, (-1, 1)))
        for syls in family:
            closure = ii_closure(syls, commutes)
            w = RaagExpression(syls)
            for other in family:
                assert ii_equivalent(g, w, RaagExpression(other)) == (other in closure)

    def test_symmetric_and_transitive_on_closures(self, a4):
        commutes = commutation_of(a4)
        rng = random.Random(7)
        for _ in range(50):
            syls = tuple(
                (rng.choice(a4.vertices), rng.choice([-1, 1]))
                for _ in range(rng.randrange(1, 6))
            )
            closure = list(ii_closure(syls, commutes))
            u = RaagExpression(rng.choice(closure))
            v = RaagExpression(rng.choice(closure))
            w = RaagExpression(syls)
            assert ii_equivalent(a4, w, u) and ii_equivalent(a4, u, w)
            assert ii_equivalent(a4, u, v)


class TestIsTrivial:
    def test_plain_cancellation(self, a2):
        assert is_trivial_raag(a2, expr("a a^-1"))

    def test_commuting_commutator(self, a2_comm):
        assert is_trivial_raag(a2_comm, expr("a b a^-1 b^-1"))

    def test_braid_commutator(self, a2):
        w = expr("a b a^-1 b^-1")
        assert not is_trivial_raag(a2, w)
        assert not oracle_is_trivial(w.syllables, commutation_of(a2))

    def test_matches_oracle_on_random_words(self, a4):
        commutes = commutation_of(a4)
        rng = random.Random(8)
        for _ in range(300):
            syls = tuple(
                (rng.choice(a4.vertices), rng.choice([-2, -1, 1, 2]))
                for _ in range(rng.randrange(6))
            )
            assert is_trivial_raag(a4, RaagExpression(syls)) == oracle_is_trivial(
                syls, commutes
            )


class TestSplitCriterion:
    def test_braid_sandwich(self, a2):
        assert split_criterion(a2, expr("a b a"), 2)

    def test_commuting_sandwich(self, a2_comm):
        assert not split_criterion(a2_comm, expr("a b a"), 2)

    def test_all_cuts_match_is_m_reduced(self):
        for g in small_type_catalogue(3):
            for syls in all_expressions(g.vertices, 4, (-1, 1)):
                if len(syls) < 2:
                    continue
                w = RaagExpression(syls)
                expected = is_m_reduced(g, w)
                for r in range(2, len(syls) + 1):
                    assert split_criterion(g, w, r) == expected

    def test_cut_out_of_range(self, a2):
        w = expr("a b a")
        for r in (0, 1, 4):
            with pytest.raises(ContractViolation):
                split_criterion(a2, w, r)


class TestAgainstOracles:
    """Spot validation on one mixed graph; the acceptance suite covers the
    exhaustive families."""

    def test_mixed_graph(self):
        g = CoxeterGraph(
            ["a", "b", "c", "d"],
            {("a", "b"): 3, ("b", "c"): 3, ("a", "d"): 3},
        )
        commutes = commutation_of(g)
        rng = random.Random(9)
        for _ in range(400):
            syls = tuple(
                (rng.choice(g.vertices), rng.choice([-2, -1, 1, 2]))
                for _ in range(rng.randrange(6))
            )
            w = RaagExpression(syls)
            assert is_m_reduced(g, w) == oracle_is_m_reduced(syls, commutes)
            assert is_trivial_raag(g, w) == oracle_is_trivial(syls, commutes)

    def test_strengthened_uniqueness(self, a4):
        # two M-reduced forms of the same element are II-equivalent
        commutes = commutation_of(a4)
        rng = random.Random(10)
        for _ in range(150):
            syls = tuple(
                (rng.choice(a4.vertices), rng.choice([-2, -1, 1, 2]))
                for _ in range(rng.randrange(1, 6))
            )
            w = RaagExpression(syls)
            variant = syls
            for _ in range(6):
                from oracles import elementary_moves

                nexts = elementary_moves(variant, commutes)
                if not nexts:
                    break
                variant = rng.choice(nexts)
            r1 = m_reduce(a4, w)
            r2 = m_reduce(a4, RaagExpression(variant))
            assert ii_equivalent(a4, r1, r2)


class TestTextFormat:
    def test_parse(self):
        w = parse_expression("a^2 b c^-1")
        assert w.syllables == (("a", 2), ("b", 1), ("c", -1))

    def test_empty(self):
        assert parse_expression("  ") == RaagExpression()
        assert format_expression(RaagExpression()) == ""

    def test_round_trip(self):
        rng = random.Random(11)
        gens = ("a", "b", "longname", "x.1")
        for _ in range(100):
            syls = tuple(
                (rng.choice(gens), rng.choice([-7, -1, 1, 2, 13]))
                for _ in range(rng.randrange(6))
            )
            w = RaagExpression(syls)
            assert parse_expression(format_expression(w)) == w

    def test_errors(self, a2):
        with pytest.raises(ParseError):
            parse_expression("a^0")
        with pytest.raises(ParseError):
            parse_expression("a^b")
        with pytest.raises(ParseError):
            parse_expression("z", a2)

    def test_error_column(self):
        with pytest.raises(ParseError) as err:
            parse_expression("a^2 b^x")
        assert err.value.column == 5
