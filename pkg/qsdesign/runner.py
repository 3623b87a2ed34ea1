"""
Replay drivers: run one case, or every case on a pool of worker processes.

Cases are independent, so the pool only changes the order in which they
finish. The :class:`~qsdesign.report.EliminationReport` sorts its entries,
which makes the output identical for every worker count.
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Iterable, List, Optional

from .catalog import all_cases, get_case
from .report import EliminationReport, ReportEntry
from .sieve import DEFAULT_CONFIG, SieveConfig, run_case
from .special import SPECIAL_CASE_IDS, run_special

__all__ = ('case_ids', 'run_one', 'run_all')

Progress = Callable[[str], None]


def case_ids(include_special: bool = True) -> List[str]:
    """
    Ids of every case a full replay covers, sorted.
    """
    ids = [case.id for case in all_cases()]
    if include_special:
        ids += list(SPECIAL_CASE_IDS)
    return sorted(ids)


def run_one(case_id: str,
            config: SieveConfig = DEFAULT_CONFIG) -> List[ReportEntry]:
    """
    Run the case with the given id.

    :raises UnknownCaseError: if no such case exists
    """
    if case_id in SPECIAL_CASE_IDS:
        return run_special(case_id, config)
    return run_case(get_case(case_id), config)


def run_all(config: SieveConfig = DEFAULT_CONFIG,
            ids: Optional[Iterable[str]] = None,
            progress: Optional[Progress] = None) -> EliminationReport:
    """
    Run every case (or the given ones) and collect the report.

    :param config: Replay settings; ``config.workers > 1`` uses a process
                   pool
    :param ids: Case ids to run instead of the full replay
    :param progress: Called with each case id once it is done
    """
    todo = sorted(ids) if ids is not None else case_ids()
    report = EliminationReport()

    if config.workers == 1 or len(todo) < 2:
        for case_id in todo:
            report.extend(run_one(case_id, config))
            if progress is not None:
                progress(case_id)
        return report

    with ProcessPoolExecutor(max_workers=config.workers) as executor:
        futures = {executor.submit(run_one, case_id, config): case_id
                   for case_id in todo}
        for future in as_completed(futures):
            report.extend(future.result())
            if progress is not None:
                progress(futures[future])

    return report
