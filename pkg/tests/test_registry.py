"""
Identity Registry Tests

Tests for:
- Catalog integrity (unique ids, groups, erratum records)
- Filtering by group, id prefix and tag
- Parameter constraints and closed-form expansion
"""
import pytest

from app.core.exceptions import ConstraintViolationError, UnknownIdentityError
from app.domain.cyclotomic import omega
from app.domain.identities import Expectation
from app.domain.polynomials import Poly2, format_human
from app.infrastructure.registry import CATALOG, CATALOG_BY_ID


class TestCatalog:
    """Test suite for the built-in catalog."""

    def test_ids_are_unique(self):
        """
        Happy Path: catalog ids
        Expected: no duplicates
        """
        assert len(CATALOG_BY_ID) == len(CATALOG)

    def test_every_record_states_its_identity(self):
        """
        Happy Path: the statement column of `list`
        Expected: every record carries a non-blank statement
        """
        assert all(record.statement.strip() for record in CATALOG)

    def test_every_group_is_present(self):
        """
        Happy Path: groups in the catalog
        Expected: S, B, D, G and G5
        """
        assert {record.group for record in CATALOG} == {"S", "B", "D", "G", "G5"}

    def test_only_the_printed_d_form_is_an_erratum(self):
        """
        Happy Path: expectation flags
        Expected: D.len.invA.printed alone, and it carries a note
        """
        errata = [record for record in CATALOG if record.expected is Expectation.ERRATUM]
        assert [record.id for record in errata] == ["D.len.invA.printed"]
        assert errata[0].note

    def test_flag_fmaf_records_need_even_r(self):
        """
        Happy Path: fmaf signed identities
        Expected: tagged r-even and restricted to even r
        """
        fmaf_signed = [r for r in CATALOG if r.id.startswith("G5.fmaf-") or r.id == "G5.fmaj-fmaf"]
        assert len(fmaf_signed) == 4
        assert all(record.even_r and "r-even" in record.tags for record in fmaf_signed)


class TestRegistryService:
    """Test suite for RegistryService."""

    # ========================================
    # EDGE CASE TESTS
    # ========================================

    def test_unknown_id(self, registry):
        """
        Edge Case: id not in the catalog
        Expected: UnknownIdentityError
        """
        with pytest.raises(UnknownIdentityError):
            registry.get("B.len.nothing")

    def test_odd_r_refused_for_fmaf(self, registry):
        """
        Edge Case: G5.fmaf-rinv at r = 3
        Expected: ConstraintViolationError
        """
        with pytest.raises(ConstraintViolationError):
            registry.rhs_closed_form("G5.fmaf-rinv", 2, r=3)

    def test_r_required_for_g(self, registry):
        """
        Edge Case: G identity without r
        Expected: ConstraintViolationError
        """
        with pytest.raises(ConstraintViolationError):
            registry.rhs_closed_form("G.dist.len", 2)

    def test_fixed_r_family_rejects_other_r(self, registry):
        """
        Edge Case: B identity at r = 3
        Expected: ConstraintViolationError
        """
        with pytest.raises(ConstraintViolationError):
            registry.rhs_closed_form("B.dist.len", 2, r=3)

    def test_chi_parameters_checked(self, registry):
        """
        Edge Case: a = 2 or b >= r for a χ_{a,b} identity; a, b on a plain identity
        Expected: ConstraintViolationError
        """
        with pytest.raises(ConstraintViolationError):
            registry.rhs_closed_form("G.len.chi", 2, r=3, a=2, b=0)
        with pytest.raises(ConstraintViolationError):
            registry.rhs_closed_form("G.len.chi", 2, r=3, a=0, b=3)
        with pytest.raises(ConstraintViolationError):
            registry.rhs_closed_form("B.dist.len", 2, a=1)

    def test_transpose_record_has_no_closed_form(self, registry):
        """
        Edge Case: symmetry record
        Expected: ConstraintViolationError from rhs_closed_form
        """
        with pytest.raises(ConstraintViolationError):
            registry.rhs_closed_form("G5.symmetry", 2, r=2)

    def test_n_below_minimum(self, registry):
        """
        Boundary: n = 0
        Expected: ConstraintViolationError
        """
        with pytest.raises(ConstraintViolationError):
            registry.rhs_closed_form("S.poincare", 0)

    # ========================================
    # HAPPY PATH TESTS
    # ========================================

    def test_filter_by_group_is_case_insensitive(self, registry):
        """
        Happy Path: filter 'd'
        Expected: only D records, in catalog order
        """
        records = registry.list_identities("d")
        assert records and all(record.group == "D" for record in records)
        assert records[0].id == "D.dist"

    def test_filter_by_prefix(self, registry):
        """
        Happy Path: filter 'B.len'
        Expected: the four B length identities
        """
        ids = [record.id for record in registry.list_identities("B.len")]
        assert ids == ["B.len.sign", "B.len.neg", "B.len.abssign", "B.len.invA"]

    def test_filter_all_and_tag(self, registry):
        """
        Happy Path: 'all' and tag 'r-even'
        Expected: whole catalog; four tagged records
        """
        assert len(registry.list_identities("all")) == len(registry)
        assert len(registry.list_identities(tag="r-even")) == 4

    def test_gessel_simion_at_three(self, registry):
        """
        Happy Path: Π [k]_{(-1)^(k-1) q} at n = 3
        Expected: 1 - q^3
        """
        assert registry.rhs_closed_form("S.gessel-simion", 3) == Poly2.from_int_coeffs(1, [1, 0, 0, -1])

    def test_hyperoctahedral_at_two(self, registry):
        """
        Happy Path: Π [2k]_q at n = 2
        Expected: 1 + 2q + 2q^2 + 2q^3 + q^4
        """
        assert format_human(registry.rhs_closed_form("B.dist.len", 2)) == "1 + 2q + 2q^2 + 2q^3 + q^4"

    def test_chi_closed_form_single_letter(self, registry):
        """
        Happy Path: G.len.chi at n = 1, r = 3, a = 0, b = 1
        Expected: 1 + ωq + ω^2 q^2
        """
        rhs = registry.rhs_closed_form("G.len.chi", 1, r=3, a=0, b=1)
        assert rhs == Poly2(3, {(0, 0): 1, (1, 0): omega(3, 1), (2, 0): omega(3, 2)})
        assert format_human(rhs) == "1 + (w)q + (-1-w)q^2"

    def test_length_oracles(self, registry):
        """
        Happy Path: Σ q^ℓ closed form over G(3,3) and G(4,3)
        Expected: known coefficient lists
        """
        assert registry.rhs_closed_form("G.dist.len", 3, r=3).int_coefficients() == [
            1, 3, 6, 10, 15, 20, 23, 24, 23, 19, 12, 5, 1]
        assert registry.rhs_closed_form("G.dist.len", 3, r=4).int_coefficients() == [
            1, 3, 6, 11, 18, 27, 36, 44, 50, 52, 49, 40, 27, 14, 5, 1]

    def test_parity_lemma_closed_form_is_group_order(self, registry):
        """
        Happy Path: Π [2k] at the constant argument
        Expected: |B_4| = 384
        """
        assert registry.rhs_closed_form("B.lemma.parity", 4) == 384

    def test_constraints_text(self, registry):
        """
        Happy Path: constraint summaries
        Expected: fixed r for B, parity rule for even-r records, χ rule for G.len.chi
        """
        assert registry.get("B.dist.len").constraints() == "n>=1; r=2"
        assert "r even" in registry.get("G5.fmaf-fmaj").constraints()
        assert "a in {0,1}" in registry.get("G.len.chi").constraints()
