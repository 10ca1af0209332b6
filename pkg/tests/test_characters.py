"""
Character Tests

Tests for:
- Parsing and family rules for named characters and χ_{a,b}
- Multiplicativity of χ_{a,b} under wreath composition
- The r = 2 dictionary between χ_{a,b} and the named B_n characters
"""
import pytest

from app.core.exceptions import FamilyMismatchError, UsageError
from app.domain.characters import CharSpec, char_value, compose, parse_char
from app.domain.cyclotomic import CycInt, omega
from app.domain.elements import Family, enumerate_group, parse_element


class TestParseChar:
    """Test suite for parse_char."""

    # ========================================
    # EDGE CASE TESTS
    # ========================================

    def test_named_character_outside_family(self):
        """
        Edge Case: 'neg' on S_n
        Expected: FamilyMismatchError
        """
        with pytest.raises(FamilyMismatchError):
            parse_char("neg", Family.S, 1)

    def test_chi_outside_g(self):
        """
        Edge Case: 'a=1,b=0' on B_n
        Expected: FamilyMismatchError
        """
        with pytest.raises(FamilyMismatchError):
            parse_char("a=1,b=0", Family.B, 2)

    def test_chi_parameters_out_of_range(self):
        """
        Edge Case: b = r
        Expected: UsageError
        """
        with pytest.raises(UsageError):
            parse_char("a=0,b=3", Family.G, 3)

    def test_unknown_name(self):
        """
        Edge Case: 'parity'
        Expected: UsageError
        """
        with pytest.raises(UsageError):
            parse_char("parity", Family.B, 2)

    # ========================================
    # HAPPY PATH TESTS
    # ========================================

    def test_missing_text_is_trivial(self):
        """
        Happy Path: no character given
        Expected: trivial character
        """
        assert parse_char(None, Family.G, 4).is_trivial
        assert parse_char("", Family.B, 2).is_trivial

    def test_chi_text(self):
        """
        Happy Path: 'a=1, b=2'
        Expected: χ_{1,2} on G(3,n)
        """
        spec = parse_char("a=1, b=2", Family.G, 3)
        assert spec.is_chi and (spec.a, spec.b) == (1, 2)

    def test_names_are_case_insensitive(self):
        """
        Happy Path: 'INVA' and 'Sign'
        Expected: invA and sign
        """
        assert parse_char("INVA", Family.D, 2).name == "invA"
        assert parse_char("Sign", Family.S, 1).name == "sign"


class TestCharacterValues:
    """Test suite for character evaluation."""

    def test_chi_on_small_element(self):
        """
        Happy Path: χ_{1,1}(2^[1] 1) in G(3,2): ℓ = 2, Z = 1
        Expected: (-1)^(2-1) ω^1 = -ω
        """
        pi = parse_element("2[1] 1", 3)
        assert char_value(CharSpec.chi(3, 1, 1), pi) == -omega(3, 1)

    def test_signed_example_values(self, signed_example):
        """
        Happy Path: named characters at 3̄ 1 6̄ 2 5̄ 4̄ (ℓ^B 26, neg 4, inv|π| 6, inv_A 8)
        Expected: every value is +1
        """
        for name in ("sign", "neg", "abssign", "invA"):
            assert char_value(CharSpec(Family.B, 2, name), signed_example) == 1

    def test_d_character_on_b_element(self):
        """
        Edge Case: D_n character at an element with one negative
        Expected: FamilyMismatchError
        """
        with pytest.raises(FamilyMismatchError):
            char_value(CharSpec(Family.D, 2, "sign"), parse_element("-1 2", 2))

    def test_ring_of_character_and_element_must_agree(self):
        """
        Edge Case: χ for r = 3 at an element of G(4, 2)
        Expected: FamilyMismatchError
        """
        with pytest.raises(FamilyMismatchError):
            char_value(CharSpec.chi(3, 0, 1), parse_element("1[3] 2", 4))

    @pytest.mark.parametrize("r, n", [(2, 3), (3, 3), (4, 2)])
    def test_chi_is_multiplicative(self, r, n):
        """
        Property: χ_{a,b}(π∘π') = χ_{a,b}(π) χ_{a,b}(π')
        Expected: holds for every pair and every (a, b)
        """
        elements = list(enumerate_group(Family.G, n, r))
        signature = CharSpec.chi(r, 0, 0).signature()
        sig = {pi: signature(pi) for pi in elements}
        specs = [CharSpec.chi(r, a, b) for a in (0, 1) for b in range(r)]
        for pi in elements:
            for other in elements:
                product_sig = signature(compose(pi, other))
                for spec in specs:
                    expected = spec.value_at(sig[pi]) * spec.value_at(sig[other])
                    assert spec.value_at(product_sig) == expected

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_two_color_dictionary(self, n):
        """
        Property: at r = 2, χ_{0,1} = neg, χ_{1,0} = abssign, χ_{1,1} = sign
        Expected: equal at every element of B_n
        """
        pairs = [((0, 0), "trivial"), ((0, 1), "neg"), ((1, 0), "abssign"), ((1, 1), "sign")]
        for pi in enumerate_group(Family.B, n, 2):
            for (a, b), name in pairs:
                assert char_value(CharSpec.chi(2, a, b), pi) == char_value(CharSpec(Family.B, 2, name), pi)

    def test_value_is_a_root_of_unity(self, rng):
        """
        Property: |χ| = 1, so χ^(2r) = 1
        Expected: holds on random elements of G(5,4)
        """
        elements = list(enumerate_group(Family.G, 4, 5))
        for pi in rng.sample(elements, 50):
            value = char_value(CharSpec.chi(5, 1, 3), pi)
            assert value ** 10 == CycInt.one(5)
