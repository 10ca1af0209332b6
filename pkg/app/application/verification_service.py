"""
Verification Service - Facade Pattern Implementation

Design Pattern: Facade
- Provides a simplified interface to the verification subsystem
- Orchestrates: RegistryService, DomainFactory, HistogramFold

SOLID Principles:
- SRP: Only handles comparing brute-force sums with closed forms
- DIP: Depends on injected registry and fold engine
"""
import time
from collections import Counter, OrderedDict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.config import get_settings
from app.core.exceptions import UsageError
from app.core.logging import logger
from app.domain.elements import ColoredPerm, format_element
from app.domain.identities import Comparison, Expectation, IdentityRecord
from app.domain.polynomials import Poly2
from app.infrastructure.enumerators.domain_factory import DomainFactory
from app.infrastructure.folding.histogram_fold import (
    FoldPlan,
    HistogramFold,
    apply_weights,
    monomial_function,
)
from app.application.registry_service import RegistryService

WITNESS_MAX_N = 4


class Verdict(str, Enum):
    EQUAL = "equal"
    MISMATCH = "mismatch"
    EXPECTED_MISMATCH = "expected-mismatch-confirmed"


@dataclass
class VerifyReport:
    """Outcome of one identity check at fixed (n, r, a, b)."""
    identity_id: str
    n: int
    r: int
    a: int
    b: int
    lhs: Poly2
    rhs: Poly2
    verdict: Verdict
    difference: Poly2
    count: int
    expected_count: int
    elapsed_ms: float
    as_expected: bool
    note: Optional[str] = None
    witness: Optional[ColoredPerm] = None

    def to_json(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            "id": self.identity_id,
            "params": {"n": self.n, "r": self.r, "a": self.a, "b": self.b},
            "verdict": self.verdict.value,
            "as_expected": self.as_expected,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "diff": self.difference.to_json(),
            "count": self.count,
            "expected_count": self.expected_count,
            "ms": round(self.elapsed_ms, 3),
        }
        if self.note:
            data["note"] = self.note
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        return data


def exit_code(reports: Sequence[VerifyReport]) -> int:
    """0 when every verdict is as expected, 1 otherwise."""
    return 0 if all(report.as_expected for report in reports) else 1


class VerificationService:
    """
    Facade for identity verification.

    Orchestrates:
    1. Parameter validation against the record's constraints
    2. Streaming the summation domain into a histogram (cached per (id, n, r))
    3. Applying the character for (a, b) and comparing with the closed form
    """

    def __init__(
        self,
        registry: Optional[RegistryService] = None,
        folder: Optional[HistogramFold] = None,
        cache_size: Optional[int] = None,
    ):
        """
        Initialize with dependencies (Dependency Injection).

        Args:
            registry: Identity lookup (defaults to the built-in catalog)
            folder: Fold engine (defaults to settings-driven HistogramFold)
            cache_size: histograms kept, least recently used evicted first
        """
        settings = get_settings()
        self._registry = registry or RegistryService()
        self._folder = folder or HistogramFold(settings.threads, settings.parallel_threshold)
        self._cache_size = max(1, cache_size or settings.cache_size)
        self._cache: "OrderedDict[Tuple[str, int, int], Tuple[Counter, int]]" = OrderedDict()

        logger.debug("VerificationService initialized with dependencies")

    @property
    def registry(self) -> RegistryService:
        return self._registry

    def _plan(self, record: IdentityRecord, n: int, r: int, a: int = 0, b: int = 0) -> FoldPlan:
        return FoldPlan(record.family, n, r, record.domain, record.weight, record.character_spec(r, a, b))

    def _histogram(self, record: IdentityRecord, n: int, r: int) -> Tuple[Counter, int]:
        key = (record.id, n, r)
        if key in self._cache:
            self._cache.move_to_end(key)
            return self._cache[key]
        # character signatures do not depend on (a, b), fold with (0, 0)
        entry = self._folder.histogram(self._plan(record, n, r))
        self._cache[key] = entry
        if len(self._cache) > self._cache_size:
            evicted, _ = self._cache.popitem(last=False)
            logger.debug(f"Evicted cached histogram {evicted}")
        return entry

    @property
    def cached_keys(self) -> List[Tuple[str, int, int]]:
        """(id, n, r) of the cached histograms, least recently used first."""
        return list(self._cache)

    def lhs_bruteforce(self, identity_id: str, n: int, r: Optional[int] = None,
                       a: Optional[int] = None, b: Optional[int] = None) -> Poly2:
        """Σ over the record's domain of weight(π), computed exactly."""
        record = self._registry.get(identity_id)
        r, a, b = record.resolve(n, r, a, b)
        histogram, _ = self._histogram(record, n, r)
        return apply_weights(histogram, record.character_spec(r, a, b), r)

    def verify(self, identity_id: str, n: int, r: Optional[int] = None,
               a: Optional[int] = None, b: Optional[int] = None) -> VerifyReport:
        """
        Compare the brute-force sum with the record's right side.

        Raises:
            UnknownIdentityError: unknown id
            ConstraintViolationError: parameters outside the record's constraints
        """
        record = self._registry.get(identity_id)
        r, a, b = record.resolve(n, r, a, b)
        logger.info(f"Verifying {record.id} at n={n}, r={r}, a={a}, b={b}")

        start = time.perf_counter()
        histogram, count = self._histogram(record, n, r)
        lhs = apply_weights(histogram, record.character_spec(r, a, b), r)
        if record.compare is Comparison.TRANSPOSE:
            rhs = lhs.transpose()
        else:
            rhs = record.closed_form(n, r, a, b)
        difference = lhs - rhs
        elapsed_ms = (time.perf_counter() - start) * 1000.0

        equal = difference.is_zero()
        if record.expected is Expectation.ERRATUM:
            verdict = Verdict.EQUAL if equal else Verdict.EXPECTED_MISMATCH
            as_expected = not equal
        else:
            verdict = Verdict.EQUAL if equal else Verdict.MISMATCH
            as_expected = equal

        witness = None
        if not equal and n <= WITNESS_MAX_N:
            witness = self.witness(record, n, r, difference)

        note = record.note
        expected_count = DomainFactory.create(record.domain, record.family, n, r).size
        if count != expected_count:
            # a sum over the wrong domain proves nothing either way
            logger.error(f"{record.id} n={n} r={r}: enumerated {count} elements, domain has {expected_count}")
            verdict, as_expected = Verdict.MISMATCH, False
            note = f"enumerated {count} elements but the domain has {expected_count}"

        report = VerifyReport(
            identity_id=record.id, n=n, r=r, a=a, b=b,
            lhs=lhs, rhs=rhs, verdict=verdict, difference=difference,
            count=count, expected_count=expected_count, elapsed_ms=elapsed_ms,
            as_expected=as_expected, note=note, witness=witness,
        )
        self._log_outcome(report)
        return report

    def witness(self, record: IdentityRecord, n: int, r: int, difference: Poly2) -> Optional[ColoredPerm]:
        """First element (enumeration order) whose monomial lies in the support of the difference."""
        support = set(difference.terms)
        monomial = monomial_function(self._plan(record, n, r))
        for pi in DomainFactory.create(record.domain, record.family, n, r).elements():
            if monomial(pi) in support:
                return pi
        return None

    def verify_range(self, filter: Optional[str] = None, max_n: int = 4, max_r: int = 3,
                     tag: Optional[str] = None) -> List[VerifyReport]:
        """
        Sweep every matching record over n = min_n..max_n, its valid r up to
        max_r and, for χ_{a,b} records, every (a, b).
        """
        if max_n < 1 or max_r < 1:
            raise UsageError(f"bounds must be >= 1, got max_n={max_n}, max_r={max_r}")
        records = self._registry.list_identities(filter, tag)
        logger.info(f"Sweeping {len(records)} identities up to n={max_n}, r={max_r}")
        reports: List[VerifyReport] = []
        for record in records:
            for n in range(record.min_n, max_n + 1):
                for r in record.r_values(max_r):
                    for a, b in record.ab_values(r):
                        reports.append(self.verify(record.id, n, r, a, b))
        return reports

    @staticmethod
    def _log_outcome(report: VerifyReport) -> None:
        summary = (f"{report.identity_id} n={report.n} r={report.r} a={report.a} b={report.b}: "
                   f"{report.verdict.value} ({report.count} elements, {report.elapsed_ms:.1f} ms)")
        if report.verdict is Verdict.EXPECTED_MISMATCH:
            logger.warning(f"Known erratum confirmed: {summary}")
        elif report.as_expected:
            logger.success(summary)
        else:
            witness = f"; witness {format_element(report.witness)}" if report.witness else ""
            logger.error(f"Unexpected verdict: {summary}{witness}")
