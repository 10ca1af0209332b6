"""
Performance Tests

Tests for:
- Streaming the heavy colored statistics over a whole G(r,n)
- Parallel and sequential folds agreeing on a large domain
- Whole-catalog sweeps staying inside their time budgets

Tests marked slow run only with `pytest --runslow`.
"""
import time

import pytest

from app.domain.characters import CharSpec
from app.domain.elements import Family, enumerate_group
from app.domain.identities import DomainSpec, Weight
from app.domain.statistics import StatName, StatRef, statistic
from app.infrastructure.folding import FoldPlan, HistogramFold

COLORED_STATS = [
    statistic(name) for name in
    (StatName.FMAJ_G, StatName.RMAJ, StatName.RINV, StatName.FMAF, StatName.LEN_G, StatName.LMAJ)
]


def _stream(family: Family, n: int, r: int) -> int:
    count = 0
    for pi in enumerate_group(family, n, r):
        for stat in COLORED_STATS:
            stat(pi)
        count += 1
    return count


class TestColoredStatistics:
    """Wall-clock budgets for the six colored statistics."""

    def test_g45_streams_quickly(self):
        """
        Boundary: all 122880 elements of G(4,5), six statistics each
        Expected: well under ten seconds
        """
        start = time.perf_counter()
        assert _stream(Family.G, 5, 4) == 122880
        assert time.perf_counter() - start < 10.0

    @pytest.mark.slow
    def test_g46_streams_within_budget(self):
        """
        Boundary: all 2949120 elements of G(4,6), six statistics each
        Expected: under thirty seconds
        """
        start = time.perf_counter()
        assert _stream(Family.G, 6, 4) == 2949120
        assert time.perf_counter() - start < 30.0

    @pytest.mark.slow
    def test_g46_parallel_fold_is_identical(self):
        """
        Property: partitioned fold of G(4,6) in four workers
        Expected: same histogram and count as the sequential fold
        """
        plan = FoldPlan(
            Family.G, 6, 4, DomainSpec(),
            Weight(q_stat=StatRef(StatName.FMAF), t_stat=StatRef(StatName.RINV)),
            CharSpec.trivial(Family.G, 4),
        )
        engine = HistogramFold(threads=4, parallel_threshold=1)
        sequential = engine.histogram(plan, parallel=False)
        assert engine.histogram(plan, parallel=True) == sequential
        assert sequential[1] == 2949120


class TestSweeps:
    """Wall-clock budgets for whole-catalog sweeps."""

    @pytest.mark.slow
    @pytest.mark.parametrize("group, max_n, max_r, budget", [
        ("B", 6, 2, 5.0),
        ("S", 8, 1, 1.0),
    ])
    def test_sweep_within_budget(self, verifier, group, max_n, max_r, budget):
        """
        Boundary: every record of a group up to max_n
        Expected: all as expected, inside the budget
        """
        start = time.perf_counter()
        reports = verifier.verify_range(group, max_n=max_n, max_r=max_r)
        elapsed = time.perf_counter() - start
        assert all(rep.as_expected for rep in reports)
        assert elapsed < budget
