"""
Summation Domain Tests

Tests for:
- DomainFactory lookup
- Whole-group and U-set domains (sizes, partitions)
"""
import pytest

from app.core.exceptions import UsageError
from app.domain.elements import Family, LetterOrder
from app.domain.identities import DomainKind, DomainSpec
from app.infrastructure.enumerators import DomainFactory, GroupDomain, USetDomain
from app.infrastructure.enumerators.useset_domain import WHOLE


class TestDomainFactory:
    """Test suite for DomainFactory."""

    def test_group_spec_gives_group_domain(self):
        """
        Happy Path: default DomainSpec
        Expected: GroupDomain labelled B_3
        """
        domain = DomainFactory.create(DomainSpec(), Family.B, 3, 2)
        assert isinstance(domain, GroupDomain)
        assert domain.label == "B_3"

    def test_useset_spec_gives_useset_domain(self):
        """
        Happy Path: U-set under ColorBlockG
        Expected: USetDomain carrying the order in its label
        """
        spec = DomainSpec(DomainKind.USET, LetterOrder.COLOR_BLOCK_G)
        domain = DomainFactory.create(spec, Family.G, 2, 3)
        assert isinstance(domain, USetDomain)
        assert domain.label == "U-set[ColorBlockG] of G(3,2)"

    def test_supported_kinds(self):
        """
        Happy Path: built-in registrations
        Expected: whole group and U-set
        """
        assert set(DomainFactory.supported_kinds()) == {DomainKind.GROUP, DomainKind.USET}


class TestGroupDomain:
    """Test suite for whole-group domains."""

    @pytest.mark.parametrize("family, n, r", [(Family.S, 4, 1), (Family.D, 3, 2), (Family.G, 3, 4)])
    def test_partitions_add_up_to_size(self, family, n, r):
        """
        Property: first-letter partitions
        Expected: n·r labels whose element counts sum to the group order
        """
        domain = GroupDomain(family, n, r)
        partitions = domain.partitions()
        assert len(partitions) == n * r
        assert sum(sum(1 for _ in domain.elements_in(p)) for p in partitions) == domain.size


class TestUSetDomain:
    """Test suite for U-set domains."""

    def test_single_partition_is_the_whole_domain(self):
        """
        Boundary: U-sets are folded in one piece
        Expected: one label whose elements are exactly elements()
        """
        domain = USetDomain(Family.D, 4, 2, LetterOrder.INTEGER_B)
        assert domain.partitions() == [WHOLE]
        assert list(domain.elements_in(WHOLE)) == list(domain.elements())
        assert len(list(domain.elements())) == domain.size == 8

    def test_unknown_partition_raises_error(self):
        """
        Edge Case: a first-letter label on a U-set
        Expected: UsageError
        """
        domain = USetDomain(Family.B, 2, 2, LetterOrder.INTEGER_B)
        with pytest.raises(UsageError):
            list(domain.elements_in((1, 0)))
