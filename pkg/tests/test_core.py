"""Core data model: partitions, sign vectors, complements, r values."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ntl.core import (
    Complement,
    DyadicProbability,
    Partition,
    SignVector,
    a_matrix,
    complement,
    complement_size,
    count_template_vectors,
    iter_complement_signs,
    r_lambda,
    template_vectors,
)
from ntl.errors import NotFairlyDivisibleError

partitions = st.lists(st.integers(1, 6), min_size=1, max_size=8).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True))))


class TestPartition:
    def test_sorting_required(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_positive_parts_required(self):
        with pytest.raises(ValueError):
            Partition((2, 0))
        with pytest.raises(ValueError):
            Partition(())

    def test_from_string_comma(self):
        assert Partition.from_string("2,1,1").parts == (2, 1, 1)

    def test_from_string_compact(self):
        assert Partition.from_string("2211").parts == (2, 2, 1, 1)

    def test_from_string_rejects_garbage(self):
        for bad in ("", "2,x", "0,1", "1,2"):
            with pytest.raises(ValueError):
                Partition.from_string(bad)

    def test_attributes(self):
        p = Partition((4, 2, 2, 1))
        assert p.k == 4
        assert p.total == 9
        assert p.gcd == 1
        assert p.multiplicities() == {4: 1, 2: 2, 1: 1}
        assert str(p) == "4,2,2,1"

    @given(partitions)
    def test_roundtrip(self, p):
        assert Partition.from_string(str(p)) == p


class TestSignVector:
    def test_str(self):
        assert str(SignVector(3, 0b010)) == "+-+"

    def test_signs(self):
        assert SignVector(4, 0b1001).signs == (-1, 1, 1, -1)

    def test_negation_and_normalized(self):
        v = SignVector(3, 0b101)
        assert (-v).signs == (1, -1, 1)
        assert not v.normalized and (-v).normalized
        assert SignVector.from_signs((1, -1, 1)) == -v


class TestComplement:
    def test_1111(self):
        # the classic 4-part all-ones complement, p = 3
        comp = complement(Partition((1, 1, 1, 1)))
        assert [str(v) for v in comp.vectors] == ["++--", "+-+-", "+--+"]
        assert comp.p == 3 and comp.size == 6

    def test_21111(self):
        comp = complement(Partition((2, 1, 1, 1, 1)))
        assert [str(v) for v in comp.vectors] == ["++---", "+-+--", "+--+-", "+---+"]

    def test_full_includes_negations(self):
        comp = complement(Partition((1, 1)))
        full = list(comp.full())
        assert len(full) == 2
        assert {tuple(v) for v in full} == {(1, -1), (-1, 1)}

    def test_empty_for_odd_total(self):
        assert complement(Partition((2, 1))).p == 0
        assert complement(Partition((3, 1, 1))).p == 0
        assert complement(Partition((1, 1, 1))).p == 0

    @given(partitions)
    @settings(max_examples=60, deadline=None)
    def test_lex_order_and_leading_plus(self, p):
        comp = complement(p)
        strs = [str(v) for v in comp.vectors]
        assert strs == sorted(strs)          # lex order, + before -
        assert all(s[0] == "+" for s in strs)

    @given(partitions)
    @settings(max_examples=60, deadline=None)
    def test_size_matches_counting(self, p):
        # lazy generation and the subset-sum count must agree
        assert len(complement(p).vectors) * 2 == complement_size(p)

    @given(partitions)
    @settings(max_examples=60, deadline=None)
    def test_vectors_annihilate(self, p):
        for v in complement(p).vectors:
            assert sum(a * s for a, s in zip(p.parts, v.signs)) == 0


class TestRLambda:
    def test_known_values(self):
        assert str(r_lambda(Partition((1, 1)))) == "1/2"
        assert str(r_lambda(Partition((1, 1, 1, 1)))) == "3/8"
        assert str(r_lambda(Partition((2, 1, 1, 1, 1)))) == "1/4"
        assert str(r_lambda(Partition((2, 2, 1, 1, 1, 1)))) == "7/32"
        assert str(r_lambda(Partition((1,) * 6))) == "5/16"

    def test_zero_for_odd(self):
        r = r_lambda(Partition((1, 1, 1)))
        assert r.fraction == 0

    def test_decimal(self):
        assert r_lambda(Partition((2, 2, 1, 1, 1, 1))).decimal() == "0.21875"

    def test_large_k_runs(self):
        # the DP scales far beyond what enumeration could reach
        r = r_lambda(Partition((1,) * 28))
        assert r.fraction == Fraction(math.comb(28, 14), 2 ** 28)

    @given(partitions)
    @settings(max_examples=80, deadline=None)
    def test_matches_direct_count(self, p):
        direct = sum(
            1 for signs in itertools.product((1, -1), repeat=p.k)
            if sum(a * s for a, s in zip(p.parts, signs)) == 0)
        assert r_lambda(p).fraction == Fraction(direct, 2 ** p.k)

    @given(partitions)
    @settings(max_examples=40, deadline=None)
    def test_comparisons(self, p):
        r = r_lambda(p)
        assert (r <= r_lambda(Partition((1, 1)))) == (r.fraction <= Fraction(1, 2))


class TestAMatrix:
    def test_rows_are_complement_elements(self):
        p = Partition((1, 1, 1, 1))
        rows = a_matrix(p)
        comp = complement(p)
        assert len(rows) == p.k
        for i, row in enumerate(rows):
            assert row == tuple(v.signs[i] for v in comp.vectors)

    def test_not_fairly_divisible(self):
        with pytest.raises(NotFairlyDivisibleError):
            a_matrix(Partition((1, 1, 1)))


class TestTemplateVectors:
    def test_count_formula(self):
        # 2^{k-1} n falling k / prod mult!
        p = Partition((1, 1))
        assert count_template_vectors(p, 3) == 2 * 3 * 2 // 2

    def test_enumeration_matches_count(self):
        for parts, n in (((1, 1), 4), ((2, 1, 1), 4), ((2, 2, 1), 5), ((3, 2, 1), 4)):
            p = Partition(parts)
            vecs = list(template_vectors(p, n))
            assert len(vecs) == count_template_vectors(p, n)
            assert len(set(vecs)) == len(vecs)

    def test_vectors_have_right_template(self):
        p = Partition((2, 1, 1))
        for v in template_vectors(p, 5):
            assert tuple(sorted((abs(x) for x in v if x), reverse=True)) == p.parts
            first = next(x for x in v if x)
            assert first > 0

    def test_no_room(self):
        with pytest.raises(ValueError):
            list(template_vectors(Partition((1, 1, 1)), 2))
