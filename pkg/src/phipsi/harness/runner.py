"""
Runs the verification suites found under suites/content.

Cases are independent and pure; they fan out to a thread pool and the results
are put back in key order, so the output does not depend on scheduling.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional, Tuple
import logging
import time

from .. import load_all as ld
from ..data_cache import PhiCache
from ..errors import PhipsiError, UnknownSuiteError
from .results import Case, CaseResult, Expectations, Failure, SuiteResult, merge


@dataclass(frozen=True)
class SuiteBounds:
    primes: Tuple[int, ...] = (2, 3, 5)
    max_order_phi: int = 24
    max_order_quotient: int = 16
    max_order_radical: int = 12
    cyclic_pairs: Tuple[Tuple[int, int], ...] = ((2, 2), (2, 4), (2, 6), (2, 8), (2, 12),
                                                 (3, 3), (3, 4), (3, 6), (5, 4))
    membership_limit: int = 3**6
    layout_limit: int = 8
    scan_limit: int = 2**13
    census_limit: int = 10**5
    random_pairs: int = 10**4
    seed: int = 0
    workers: int = 4

    def with_max_order(self, max_order: Optional[int]) -> "SuiteBounds":
        """Cap every group-order bound at max_order."""
        if max_order is None:
            return self
        return replace(self,
                       max_order_phi=min(self.max_order_phi, max_order),
                       max_order_quotient=min(self.max_order_quotient, max_order),
                       max_order_radical=min(self.max_order_radical, max_order),
                       cyclic_pairs=tuple((p, m) for p, m in self.cyclic_pairs if m <= max_order))


def suite_names() -> List[str]:
    return [s.name for s in ld.get_suites(SuiteBounds(), None)]


def run_case(case: Case) -> CaseResult:
    start = time.time()
    expect = Expectations(case.key, case.inputs)
    try:
        case.check(expect)
    except PhipsiError as e:
        expect.checks += 1
        expect.failures.append(Failure(case.key, "raised", case.inputs, "no error", f"{type(e).__name__}: {e}"))
    return CaseResult(case.key, case.family, expect.checks, expect.failures, time.time() - start)


def run_cases(name: str, cases: List[Case], workers: int) -> SuiteResult:
    start = time.time()
    logging.info(f"Running {name}: {len(cases)} cases on {workers} workers")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_case, cases))
    else:
        results = [run_case(c) for c in cases]
    results.sort(key=lambda r: r.key)

    failures = [f for r in results for f in r.failures]
    res = SuiteResult(name, sum(r.checks for r in results), failures, time.time() - start, results)
    logging.info(f"{name}: {res.cases_run} checks, {len(failures)} failures in {res.wall_time:.1f}s")
    return res


def run_suite(name: str, bounds: SuiteBounds = SuiteBounds(), cache: Optional[PhiCache] = None) -> SuiteResult:
    cache = cache if cache is not None else PhiCache()
    suites = ld.get_suites(bounds, cache)
    known = [s.name for s in suites]

    if name == "all":
        return merge("all", [run_cases(s.name, s.cases, bounds.workers) for s in suites])
    if name not in known:
        raise UnknownSuiteError(f"Unknown suite '{name}', expected one of {known + ['all']}")
    s = next(s for s in suites if s.name == name)
    return run_cases(s.name, s.cases, bounds.workers)
