"""
Selftest Service - Facade Pattern Implementation

Design Pattern: Facade
- Runs the worked examples end to end through the public services
- Orchestrates: statistics, decompositions, DistributionService, VerificationService

SOLID Principles:
- SRP: Only handles comparing computed values with pinned reference values
- DIP: Depends on injected distribution and verification services
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from app.core.exceptions import MahonianBaseException
from app.core.logging import logger
from app.domain.elements import (
    Family,
    LetterOrder,
    decompose,
    format_element,
    parse_element,
    reduce_tilde,
)
from app.domain.statistics import (
    StatName,
    evaluate,
    fmaf_fixed_form,
    inv,
    len_g,
    maj,
)
from app.application.distribution_service import DistributionService
from app.application.verification_service import Verdict, VerificationService

SIGNED_EXAMPLE = "-3 1 -6 2 -5 -4"
COLORED_EXAMPLE = "2[1] 1[3] 5 4 3[2]"

# Σ q^{len} over G(3,3) and G(4,3), lowest degree first
LENGTH_ORACLES = {
    3: [1, 3, 6, 10, 15, 20, 23, 24, 23, 19, 12, 5, 1],
    4: [1, 3, 6, 11, 18, 27, 36, 44, 50, 52, 49, 40, 27, 14, 5, 1],
}


@dataclass
class SelftestCheck:
    """One pinned value compared with what the engine computes."""
    name: str
    expected: str
    actual: str
    passed: bool
    note: Optional[str] = None

    def to_json(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "passed": self.passed,
        }
        if self.note:
            data["note"] = self.note
        return data


class SelftestService:
    """
    Facade for the built-in self-test.

    Each check is isolated: an exception inside one check is recorded as a
    failure for that check and the run continues.
    """

    def __init__(
        self,
        distributions: Optional[DistributionService] = None,
        verifier: Optional[VerificationService] = None,
    ):
        """
        Initialize with dependencies (Dependency Injection).

        Args:
            distributions: Distribution facade
            verifier: Verification facade
        """
        self._distributions = distributions or DistributionService()
        self._verifier = verifier or VerificationService()
        logger.debug("SelftestService initialized with dependencies")

    def run(self) -> List[SelftestCheck]:
        """Run every check in a fixed order."""
        checks: List[SelftestCheck] = []
        for name, expected, compute, note in self._cases():
            try:
                actual = str(compute())
            except MahonianBaseException as exc:
                actual = f"error: {exc.message}"
            checks.append(SelftestCheck(name, str(expected), actual, actual == str(expected), note))

        failed = [check.name for check in checks if not check.passed]
        if failed:
            logger.error(f"Selftest failed: {', '.join(failed)}")
        else:
            logger.success(f"Selftest passed ({len(checks)} checks)")
        return checks

    @staticmethod
    def passed(checks: List[SelftestCheck]) -> bool:
        return all(check.passed for check in checks)

    def _cases(self):
        signed = parse_element(SIGNED_EXAMPLE, 2)
        colored = parse_element(COLORED_EXAMPLE, 4)

        def b_stat(name: StatName) -> Callable[[], int]:
            return lambda: evaluate(name, signed, Family.B)

        def g_stat(name: StatName) -> Callable[[], int]:
            return lambda: evaluate(name, colored, Family.G)

        def decomposition(text: str, r: int, order: LetterOrder) -> Callable[[], str]:
            def run() -> str:
                tau, rho = decompose(parse_element(text, r), order)
                return f"{format_element(tau)} | {format_element(rho)}"
            return run

        def tilde() -> str:
            fixed, reduced = reduce_tilde(colored)
            return f"{fixed} {format_element(reduced)}"

        def length_coefficients(r: int) -> Callable[[], List[int]]:
            return lambda: self._distributions.distribution(Family.G, 3, r).int_coefficients()

        def verdict(identity_id: str, n: int) -> Callable[[], str]:
            return lambda: self._verifier.verify(identity_id, n).verdict.value

        return [
            ("B inv_A", 8, lambda: inv(signed, LetterOrder.INTEGER_B), None),
            ("B maj_A", 6, lambda: maj(signed, LetterOrder.INTEGER_B), None),
            ("B neg", 4, b_stat(StatName.NEG), None),
            ("B major", 11, b_stat(StatName.MAJOR), None),
            ("B fmaj", 26, b_stat(StatName.FMAJ_B), None),
            ("B Fmaj", 16, b_stat(StatName.FMAJ_CAP_B), None),
            ("B nmaj", 24, b_stat(StatName.NMAJ),
             "maj_A plus the absolute values of the negative letters; 30 is a known misprint"),
            ("B length", 26, b_stat(StatName.LEN_B), None),
            ("G fmaj", 38, g_stat(StatName.FMAJ_G), None),
            ("G rmaj", 19, g_stat(StatName.RMAJ), None),
            ("G rinv", 16, g_stat(StatName.RINV), None),
            ("G fmaf", 34, g_stat(StatName.FMAF), None),
            ("G fmaf fixed-set form", 34, lambda: fmaf_fixed_form(colored), None),
            ("G reduction", "[4] 2[1] 1[3] 4 3[2]", tilde, None),
            ("G length of 2[1] 1", 2, lambda: len_g(parse_element("2[1] 1", 2)), None),
            ("B decomposition", "5[1] 2[1] 1[1] 3 4 | 4 1 3 5 2",
             decomposition("3 -5 -1 4 -2", 2, LetterOrder.INTEGER_B), None),
            ("G decomposition", "4[2] 3[2] 1[1] 2 | 4 1 3 2",
             decomposition("2 4[2] 1[1] 3[2]", 3, LetterOrder.VALUE_BLOCK_G), None),
            ("G(3,3) length distribution", LENGTH_ORACLES[3], length_coefficients(3), None),
            ("G(4,3) length distribution", LENGTH_ORACLES[4], length_coefficients(4), None),
            ("S.gessel-simion n=4", Verdict.EQUAL.value, verdict("S.gessel-simion", 4), None),
            ("B.len.sign n=3", Verdict.EQUAL.value, verdict("B.len.sign", 3), None),
            ("D.len.invA.printed n=2", Verdict.EXPECTED_MISMATCH.value,
             verdict("D.len.invA.printed", 2), "printed product is a known erratum"),
            ("D.len.invA.corrected n=3", Verdict.EQUAL.value, verdict("D.len.invA.corrected", 3), None),
        ]
