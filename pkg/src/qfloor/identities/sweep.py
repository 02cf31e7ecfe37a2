"""Range sweeps over a registry entry, optionally spread across processes.

Cases are enumerated once in the parent, cut into contiguous chunks and
reassembled in enumeration order, so the summary does not depend on the
number of workers. Workers start from the parent's class-number memo and
send back whatever they added.
"""
from __future__ import annotations

import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor

from .. import classnum
from .registry import get
from .reports import IdentityReport, SweepSummary, WidthError

WIDTH_LIMIT = 1e10
COUNTEREXAMPLE_CAP = 50


def estimate_ops(id: str, max_n: int) -> float:
    return float(get(id).cost(max_n))


def check_width(id: str, max_n: int, allow_large: bool = False) -> float:
    ops = estimate_ops(id, max_n)
    if ops > WIDTH_LIMIT and not allow_large:
        raise WidthError(
            f"{id} up to {max_n} needs about {ops:.3g} operations "
            f"(limit {WIDTH_LIMIT:.0e}); pass allow_large to run it anyway"
        )
    return ops


def _run_chunk(id: str, cases: list[tuple[int, ...]], cap: int):
    from .registry import check

    before = set(classnum.memo_snapshot())
    failures: list[IdentityReport] = []
    failed = 0
    for params in cases:
        report = check(id, params)
        if not report.passed:
            failed += 1
            if len(failures) < cap:
                failures.append(report)
    learned = {d: h for d, h in classnum.memo_snapshot().items() if d not in before}
    return failed, failures, learned


def _chunks(cases: list, pieces: int) -> list[list]:
    size = -(-len(cases) // pieces) if cases else 1
    return [cases[i : i + size] for i in range(0, len(cases), size)]


def _init_worker(memo: dict[int, int], table_limit: int) -> None:
    classnum.memo_update(memo)
    if table_limit:
        # no-op under fork, where the parent's table is inherited
        classnum.ensure_table(table_limit)


def _pool(parallelism: int) -> ProcessPoolExecutor:
    methods = multiprocessing.get_all_start_methods()
    ctx = multiprocessing.get_context("fork" if "fork" in methods else "spawn")
    return ProcessPoolExecutor(
        max_workers=parallelism,
        mp_context=ctx,
        initializer=_init_worker,
        initargs=(classnum.memo_snapshot(), classnum.table_limit()),
    )


def sweep(
    id: str,
    max_n: int | None = None,
    parallelism: int = 1,
    *,
    allow_large: bool = False,
    cap: int = COUNTEREXAMPLE_CAP,
) -> SweepSummary:
    entry = get(id)
    if max_n is None:
        max_n = entry.default_max
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    if parallelism < 1:
        raise ValueError(f"parallelism must be >= 1, got {parallelism}")
    check_width(id, max_n, allow_large)

    start = time.perf_counter()
    if entry.class_bound is not None:
        classnum.ensure_table(entry.class_bound(max_n))
    cases = list(entry.cases(max_n))
    if parallelism == 1 or len(cases) < 2:
        results = [_run_chunk(id, cases, cap)]
    else:
        # several chunks per worker evens out uneven per-case cost
        pieces = _chunks(cases, parallelism * 4)
        with _pool(parallelism) as pool:
            results = list(pool.map(_run_chunk, [id] * len(pieces), pieces, [cap] * len(pieces)))
        for _, _, learned in results:
            classnum.memo_update(learned)

    failed = sum(r[0] for r in results)
    counterexamples = [rep for r in results for rep in r[1]][:cap]
    summary = SweepSummary(
        id=id,
        domain=entry.domain,
        max_n=max_n,
        cases_checked=len(cases),
        counterexample_count=failed,
        counterexamples=counterexamples,
        wall_time=time.perf_counter() - start,
        kind=entry.kind,
    )
    if id == "table-2":
        brute = sum(1 for c in cases if c[2] == 1)
        closed = len(cases) - brute
        verdict = "match" if failed == 0 else f"checked, {failed} mismatch(es)"
        summary.note = f"{brute} brute-force cells + {closed} closed-form cells {verdict}"
    elif id == "table-1":
        rows = len({c[0] for c in cases})
        bad_rows = len({r.params[0] for r in counterexamples})
        summary.note = f"{rows - bad_rows}/{rows} rows match"
    return summary
