"""
Histogram Fold - streaming evaluation of weighted sums over a domain

Each element contributes one count to the bucket
(q exponent, t exponent, sign parity, character signature). Weights are
applied once per bucket afterwards, so a single enumeration answers every
character of the same signature kind (all 2r of the χ_{a,b}).

Folds over first-letter partitions are independent and merge by Counter
addition, so a parallel run yields the same histogram as a sequential one.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from typing import Callable, Dict, Hashable, Iterable, Optional, Tuple

from app.core.logging import logger
from app.domain.characters import CharSpec
from app.domain.cyclotomic import CycInt
from app.domain.elements import ColoredPerm, Family
from app.domain.identities import DomainSpec, Weight
from app.domain.polynomials import Poly2
from app.infrastructure.enumerators.domain_factory import DomainFactory

Bucket = Tuple[int, int, int, Hashable]


@dataclass(frozen=True)
class FoldPlan:
    """Everything a worker process needs to fold one domain (picklable)."""
    family: Family
    n: int
    r: int
    domain: DomainSpec
    weight: Weight
    character: CharSpec


def _bucket_function(plan: FoldPlan) -> Callable[[ColoredPerm], Bucket]:
    sign_fns = [s.evaluator() for s in plan.weight.sign_stats]
    q_fn = plan.weight.q_stat.evaluator() if plan.weight.q_stat else None
    t_fn = plan.weight.t_stat.evaluator() if plan.weight.t_stat else None
    sig_fn = plan.character.signature()

    def bucket(pi: ColoredPerm) -> Bucket:
        parity = sum(f(pi) for f in sign_fns) % 2 if sign_fns else 0
        return (
            q_fn(pi) if q_fn else 0,
            t_fn(pi) if t_fn else 0,
            parity,
            sig_fn(pi),
        )
    return bucket


def monomial_function(plan: FoldPlan) -> Callable[[ColoredPerm], Tuple[int, int]]:
    """(q exponent, t exponent) of an element's term."""
    bucket = _bucket_function(plan)
    return lambda pi: bucket(pi)[:2]


def fold_stream(plan: FoldPlan, elements: Iterable[ColoredPerm]) -> Counter:
    """Sequential fold of a stream into a bucket histogram."""
    bucket = _bucket_function(plan)
    histogram: Counter = Counter()
    for pi in elements:
        histogram[bucket(pi)] += 1
    return histogram


def _fold_partition(plan: FoldPlan, partition: Hashable) -> Counter:
    domain = DomainFactory.create(plan.domain, plan.family, plan.n, plan.r)
    histogram = fold_stream(plan, domain.elements_in(partition))
    logger.debug(f"Folded partition {partition} of {domain.label}: {sum(histogram.values())} elements")
    return histogram


def apply_weights(histogram: Counter, character: CharSpec, r: int) -> Poly2:
    """Turn a bucket histogram into Σ χ(π)(-1)^parity q^a t^b."""
    # integer totals per (monomial, signature) first, then one ring multiply each
    totals: Dict[Tuple[int, int, Hashable], int] = {}
    for (qe, te, parity, sig), count in histogram.items():
        key = (qe, te, sig)
        totals[key] = totals.get(key, 0) + (-count if parity else count)
    terms: Dict[Tuple[int, int], CycInt] = {}
    values: Dict[Hashable, CycInt] = {}
    for (qe, te, sig), total in totals.items():
        if total == 0:
            continue
        if sig not in values:
            values[sig] = character.value_at(sig)
        contribution = values[sig] * total
        m = (qe, te)
        terms[m] = terms[m] + contribution if m in terms else contribution
    return Poly2(r, terms)


class HistogramFold:
    """
    Folds a FoldPlan's domain, in parallel when it is large enough.

    Args:
        threads: cap on worker processes (1 disables parallelism)
        parallel_threshold: smallest domain size worth splitting
    """

    def __init__(self, threads: int = 1, parallel_threshold: int = 50000):
        self._threads = max(1, threads)
        self._threshold = parallel_threshold

    def histogram(self, plan: FoldPlan, parallel: Optional[bool] = None) -> Tuple[Counter, int]:
        """
        Fold the plan's domain.

        Args:
            plan: what to fold
            parallel: force (True) or forbid (False) the partitioned fold;
                None decides from the domain size

        Returns:
            (bucket histogram, number of elements visited)
        """
        domain = DomainFactory.create(plan.domain, plan.family, plan.n, plan.r)
        partitions = domain.partitions()
        if parallel is None:
            parallel = self._threads > 1 and domain.size >= self._threshold
        if parallel and len(partitions) > 1:
            workers = min(self._threads, len(partitions))
            logger.debug(f"Folding {domain.label} over {len(partitions)} partitions with {workers} workers")
            histogram: Counter = Counter()
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_fold_partition, repeat(plan), partitions):
                    histogram.update(part)
        else:
            logger.debug(f"Folding {domain.label} sequentially ({domain.size} elements)")
            histogram = fold_stream(plan, domain.elements())
        return histogram, sum(histogram.values())

    def fold(self, plan: FoldPlan, parallel: Optional[bool] = None) -> Tuple[Poly2, int]:
        """Weighted sum over the domain and the element count."""
        histogram, count = self.histogram(plan, parallel)
        return apply_weights(histogram, plan.character, plan.r), count
