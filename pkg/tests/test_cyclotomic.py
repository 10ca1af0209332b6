"""
Cyclotomic Integer Tests

Tests for:
- Φ_r coefficients and the canonical basis size φ(r)
- Ring axioms on random elements (seeded)
- Roots of unity relations
- Ring mismatch and 64-bit overflow errors
- Human formatting
"""
import pytest

from app.core.exceptions import CoefficientOverflowError, RingMismatchError, UsageError
from app.domain.cyclotomic import (
    INT64_MAX,
    CycInt,
    cyclotomic_poly,
    degree,
    omega,
    signed_omega,
)


def random_element(rng, r):
    return CycInt.from_coeffs(r, [rng.randint(-9, 9) for _ in range(r)])


class TestCyclotomicPolynomial:
    """Test suite for Φ_r."""

    # ========================================
    # EDGE CASE TESTS
    # ========================================

    def test_nonpositive_order_raises_error(self):
        """
        Edge Case: r = 0
        Expected: UsageError
        """
        with pytest.raises(UsageError):
            cyclotomic_poly(0)

    # ========================================
    # HAPPY PATH TESTS
    # ========================================

    @pytest.mark.parametrize("r, expected", [
        (1, (-1, 1)),
        (2, (1, 1)),
        (3, (1, 1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (8, (1, 0, 0, 0, 1)),
    ])
    def test_known_polynomials(self, r, expected):
        """
        Happy Path: small cyclotomic polynomials
        Expected: coefficients lowest degree first
        """
        assert cyclotomic_poly(r) == expected

    @pytest.mark.parametrize("r, phi", [(1, 1), (2, 1), (3, 2), (4, 2), (5, 4), (6, 2), (12, 4)])
    def test_degree_is_euler_phi(self, r, phi):
        """
        Happy Path: basis size
        Expected: φ(r)
        """
        assert degree(r) == phi


class TestCycIntArithmetic:
    """Test suite for Z[ω] arithmetic."""

    # ========================================
    # EDGE CASE TESTS
    # ========================================

    def test_mixed_orders_raise_ring_mismatch(self):
        """
        Edge Case: adding elements of Z[ω_3] and Z[ω_4]
        Expected: RingMismatchError
        """
        with pytest.raises(RingMismatchError):
            omega(3, 1) + omega(4, 1)

    def test_overflow_is_reported(self):
        """
        Edge Case: coefficient leaves the signed 64-bit range
        Expected: CoefficientOverflowError
        """
        big = CycInt.from_int(2, INT64_MAX)
        with pytest.raises(CoefficientOverflowError):
            big + 1

    def test_negative_power_raises_error(self):
        """
        Edge Case: ω^-1 via pow
        Expected: UsageError
        """
        with pytest.raises(UsageError):
            omega(5, 1) ** -1

    # ========================================
    # BOUNDARY TESTS
    # ========================================

    def test_order_one_is_plain_integers(self):
        """
        Boundary: r = 1
        Expected: ω = 1 and arithmetic is integer arithmetic
        """
        assert omega(1, 7) == 1
        assert (CycInt.from_int(1, 6) * 7).as_int() == 42

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6, 8])
    def test_omega_powers_wrap(self, r):
        """
        Boundary: ω^r
        Expected: 1, and ω^(k+r) = ω^k
        """
        assert omega(r, 1) ** r == 1
        assert omega(r, r + 2) == omega(r, 2)

    # ========================================
    # HAPPY PATH TESTS
    # ========================================

    @pytest.mark.parametrize("r", [2, 3, 4, 5, 6, 7, 8])
    def test_roots_of_unity_sum_to_zero(self, r):
        """
        Happy Path: 1 + ω + ... + ω^(r-1)
        Expected: 0 for r >= 2
        """
        total = CycInt.zero(r)
        for k in range(r):
            total = total + omega(r, k)
        assert total.is_zero()

    def test_omega_squared_for_cube_roots(self):
        """
        Happy Path: ω^2 in Z[ω_3]
        Expected: -1 - ω
        """
        assert omega(3, 2) == CycInt.from_coeffs(3, [-1, -1])
        assert omega(3, 2).format() == "-1-w"

    def test_signed_omega(self):
        """
        Happy Path: -ω^k
        Expected: negation of ω^k
        """
        assert signed_omega(4, -1, 3) == -omega(4, 3)
        assert signed_omega(4, 1, 3) == omega(4, 3)

    def test_equals_raises_on_mismatch(self):
        """
        Happy Path: equals is canonical equality
        Expected: True on equal values, RingMismatchError across rings
        """
        assert omega(6, 3).equals(CycInt.from_int(6, -1))
        with pytest.raises(RingMismatchError):
            omega(6, 1).equals(omega(3, 1))

    def test_format_examples(self):
        """
        Happy Path: human formatting
        Expected: powers of w, lowest first
        """
        assert CycInt.from_coeffs(5, [2, 0, 0, 1]).format() == "2+w^3"
        assert CycInt.zero(5).format() == "0"
        assert CycInt.from_coeffs(5, [0, -3]).format() == "-3w"

    # ========================================
    # PROPERTY TESTS
    # ========================================

    @pytest.mark.parametrize("r", [3, 4, 5, 6, 8])
    def test_ring_axioms_on_random_elements(self, r, rng):
        """
        Property: commutativity, associativity and distributivity
        Expected: hold exactly on seeded random elements
        """
        for _ in range(25):
            x, y, z = (random_element(rng, r) for _ in range(3))
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert (x - x).is_zero()

    def test_json_form(self):
        """
        Property: to_json/from_json preserve the canonical coefficients
        Expected: same value back
        """
        value = CycInt.from_coeffs(5, [1, 2, 3, 4, 5])
        assert CycInt.from_json(value.to_json()) == value
