"""
Statistic Tests

Tests for:
- Worked-example values on B_6 and G(4,5)
- Family checks and name parsing
- Equidistribution and pointwise properties on small groups
- Memoized inv/maj against direct pair counts
"""
from collections import Counter

import pytest

from app.core.exceptions import FamilyMismatchError, InvalidElementError, UnknownStatisticError, UsageError
from app.domain.elements import Family, LetterOrder, enumerate_group, parse_element
from app.domain import statistics as st
from app.domain.statistics import StatName, StatRef, evaluate


def distribution(stat, family, n, r):
    return Counter(stat(pi) for pi in enumerate_group(family, n, r))


class TestSignedExample:
    """Test suite for 3̄ 1 6̄ 2 5̄ 4̄ in B_6."""

    @pytest.mark.parametrize("name, expected", [
        (StatName.NEG, 4),
        (StatName.MAJOR, 11),
        (StatName.FMAJ_B, 26),
        (StatName.FMAJ_CAP_B, 16),
        (StatName.LEN_B, 26),
        (StatName.SUM_NEG, 18),
        (StatName.INV_ABS, 6),
    ])
    def test_golden_values(self, signed_example, name, expected):
        """
        Happy Path: statistics of the signed worked example
        Expected: fmaj = 2·11 + 4 = 26, Fmaj = 2·6 + 4 = 16, ...
        """
        assert evaluate(name, signed_example, Family.B) == expected

    def test_integer_order_inv_and_maj(self, signed_example):
        """
        Happy Path: inv_A and maj_A under the integer order
        Expected: 8 and 6
        """
        assert st.inv(signed_example, LetterOrder.INTEGER_B) == 8
        assert st.maj(signed_example, LetterOrder.INTEGER_B) == 6

    def test_nmaj_follows_its_definition(self, signed_example):
        """
        Happy Path: nmaj = maj_A + Σ_{Neg} |π_i| = 6 + 18
        Expected: 24 (a printed value of 30 does not match the definition)
        """
        assert st.nmaj(signed_example) == 24
        assert st.nmaj(signed_example) != 30

    def test_d_lengths_in_rank_two(self):
        """
        Happy Path: ℓ^D on D_2
        Expected: ℓ^D(1̄ 2̄) = 2, ℓ^D(2̄ 1̄) = 1
        """
        assert st.len_d(parse_element("-1 -2", 2)) == 2
        assert st.len_d(parse_element("-2 -1", 2)) == 1


class TestColoredExample:
    """Test suite for 2^[1] 1^[3] 5 4 3^[2] in G(4,5)."""

    @pytest.mark.parametrize("name, expected", [
        (StatName.FMAJ_G, 38),
        (StatName.RMAJ, 19),
        (StatName.RINV, 16),
        (StatName.FMAF, 34),
        (StatName.FIX, 1),
        (StatName.Z, 6),
    ])
    def test_golden_values(self, colored_example, name, expected):
        """
        Happy Path: flag statistics of the colored worked example
        Expected: fmaj 38, rmaj 19, rinv 16, fmaf 34
        """
        assert evaluate(name, colored_example, Family.G) == expected

    def test_fixed_set_form_agrees(self, colored_example):
        """
        Happy Path: fmaf through Σ Fix - C(fix+1, 2)
        Expected: 34
        """
        assert st.fmaf_fixed_form(colored_example) == 34

    def test_binomial_without_shift_overcounts(self, colored_example):
        """
        Boundary: reading the correction as C(fix, 2)
        Expected: differs by r·fix, giving 38 instead of 34
        """
        fixed = st.fix(colored_example)
        overcount = st.fmaf_fixed_form(colored_example) + colored_example.r * fixed
        assert overcount == 38

    def test_length_of_small_element(self):
        """
        Happy Path: ℓ(2^[1] 1) in G(2,2)
        Expected: 2
        """
        assert st.len_g(parse_element("2[1] 1", 2)) == 2


class TestFamilyChecks:
    """Test suite for statistic/family compatibility."""

    def test_signed_statistic_on_colored_group(self, colored_example):
        """
        Edge Case: fmaj (B_n) on G(4,5)
        Expected: FamilyMismatchError
        """
        with pytest.raises(FamilyMismatchError):
            evaluate(StatName.FMAJ_B, colored_example, Family.G)

    def test_d_statistic_on_odd_element(self):
        """
        Edge Case: ℓ^D on an element with one negative
        Expected: FamilyMismatchError
        """
        with pytest.raises(FamilyMismatchError):
            st.len_d(parse_element("-1 2", 2))

    def test_parse_is_case_sensitive_for_flag_majors(self):
        """
        Edge Case: 'fmaj' vs 'Fmaj' vs 'FMAJ'
        Expected: two different statistics; the all-caps spelling is rejected
        """
        assert StatName.parse("fmaj") is StatName.FMAJ_B
        assert StatName.parse("Fmaj") is StatName.FMAJ_CAP_B
        assert StatName.parse("RMAJ") is StatName.RMAJ
        with pytest.raises(UnknownStatisticError):
            StatName.parse("FMAJ")

    def test_unknown_statistic(self):
        """
        Edge Case: 'sorting-index'
        Expected: UnknownStatisticError
        """
        with pytest.raises(UnknownStatisticError):
            StatName.parse("sorting-index")

    def test_inv_needs_an_order(self):
        """
        Edge Case: StatRef(inv) without an order
        Expected: UsageError
        """
        with pytest.raises(UsageError):
            StatRef(StatName.INV)


class TestDistributions:
    """Test suite for equidistribution and pointwise properties."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_b_mahonian_statistics(self, n):
        """
        Property: fmaj, Fmaj and nmaj are equidistributed with ℓ^B on B_n
        Expected: identical value histograms
        """
        reference = distribution(st.len_b, Family.B, n, 2)
        for stat in (st.fmaj_b, st.fmaj_cap_b, st.nmaj):
            assert distribution(stat, Family.B, n, 2) == reference

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_dmaj_is_mahonian_on_d(self, n):
        """
        Property: dmaj and ℓ^D on D_n
        Expected: identical value histograms
        """
        assert distribution(st.dmaj, Family.D, n, 2) == distribution(st.len_d, Family.D, n, 2)

    @pytest.mark.parametrize("r, n", [(2, 3), (3, 3), (4, 2)])
    def test_flag_statistics_equidistributed(self, r, n):
        """
        Property: fmaj, rmaj, rinv and fmaf share one distribution on G(r,n)
        Expected: identical value histograms
        """
        reference = distribution(st.fmaj_g, Family.G, n, r)
        for stat in (st.rmaj, st.rinv, st.fmaf):
            assert distribution(stat, Family.G, n, r) == reference

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_inv_maj_joint_distribution_is_symmetric(self, n):
        """
        Property: Σ t^inv q^maj over S_n
        Expected: symmetric under t <-> q
        """
        joint = Counter(
            (st.inv(pi, LetterOrder.NATURAL_S), st.maj(pi, LetterOrder.NATURAL_S))
            for pi in enumerate_group(Family.S, n, 1)
        )
        assert all(joint[(a, b)] == joint[(b, a)] for a, b in joint)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_parity_lemma_holds_pointwise(self, n):
        """
        Property: inv(|π|) + inv_A(π) ≡ |Neg(π) ∩ even| (mod 2)
        Expected: holds at every π ∈ B_n
        """
        for pi in enumerate_group(Family.B, n, 2):
            total = st.inv_abs(pi) + st.inv(pi, LetterOrder.INTEGER_B) + st.neg_even(pi)
            assert total % 2 == 0, str(pi)

    @pytest.mark.parametrize("r, n", [(1, 3), (2, 3), (3, 3), (4, 4)])
    def test_fixed_set_form_matches_everywhere(self, r, n):
        """
        Property: fmaf and its fixed-set form
        Expected: equal at every element of G(r,n)
        """
        for pi in enumerate_group(Family.G, n, r):
            assert st.fmaf(pi) == st.fmaf_fixed_form(pi), str(pi)

    def test_length_agrees_with_signed_length_at_two_colors(self):
        """
        Property: ℓ on G(2,n) is ℓ^B
        Expected: equal at every element of B_4
        """
        for pi in enumerate_group(Family.B, 4, 2):
            assert st.len_g(pi) == st.len_b(pi)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_lmaj_agrees_with_nmaj_at_two_colors(self, n):
        """
        Property: lmaj on G(2,n) is nmaj
        Expected: equal at every element of B_n
        """
        for pi in enumerate_group(Family.B, n, 2):
            assert st.lmaj(pi) == st.nmaj(pi), str(pi)


class TestOrderStatistics:
    """Test suite for the memoized (inv, maj) computation."""

    @pytest.mark.parametrize("order", [LetterOrder.VALUE_BLOCK_G, LetterOrder.COLOR_BLOCK_G])
    def test_cached_values_match_pair_counts(self, order):
        """
        Property: inv and maj via relative-order patterns
        Expected: same as counting pairs and descents on the keys of G(3,4)
        """
        for pi in enumerate_group(Family.G, 4, 3):
            keys = [order.key(v, c, 4, 3) for v, c in pi.letters]
            pairs = sum(1 for i in range(4) for j in range(i + 1, 4) if keys[i] > keys[j])
            descents = sum(i for i in range(1, 4) if keys[i - 1] > keys[i])
            assert (st.inv(pi, order), st.maj(pi, order)) == (pairs, descents), str(pi)

    def test_values_are_memoized_per_order(self, colored_example):
        """
        Happy Path: repeated evaluation under two orders
        Expected: one memo entry per order, values stable
        """
        first = st.order_stats(colored_example, LetterOrder.COLOR_BLOCK_G)
        st.order_stats(colored_example, LetterOrder.VALUE_BLOCK_G)
        assert st.order_stats(colored_example, LetterOrder.COLOR_BLOCK_G) == first
        memo = colored_example.memo()
        assert ("inv-maj", LetterOrder.COLOR_BLOCK_G) in memo
        assert ("inv-maj", LetterOrder.VALUE_BLOCK_G) in memo

    def test_long_elements_skip_the_pattern_cache(self):
        """
        Boundary: more letters than the pattern cache covers
        Expected: direct count, n(n-1)/2 inversions for the reversal
        """
        n = st.PATTERN_CACHE_MAX_N + 2
        reversal = parse_element(" ".join(str(v) for v in range(n, 0, -1)), 1)
        assert st.inv(reversal, LetterOrder.NATURAL_S) == n * (n - 1) // 2
        assert st.maj(reversal, LetterOrder.NATURAL_S) == n * (n - 1) // 2

    def test_evaluate_rejects_an_order_without_colors(self, signed_example):
        """
        Edge Case: inv under NaturalS on a signed element
        Expected: InvalidElementError from the validating entry point
        """
        with pytest.raises(InvalidElementError):
            evaluate(StatName.INV, signed_example, Family.B, LetterOrder.NATURAL_S)
