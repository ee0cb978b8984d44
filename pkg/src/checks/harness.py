"""
Runs every applicable check on every subject of a catalog.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import Iterable, List, Optional

from src.checks.catalog import CatalogEntry, SkippedEntry, Subject, build_subjects, default_catalog
from src.checks.registry import CheckResult, registered_checks, run_check
from src.checks.report import Report
from src.utils.config import DEFAULT_CONFIG, Config
from src.utils.errors import UnknownCheckError

logger = logging.getLogger(__name__)


def select_checks(check_filter: Optional[Iterable[str]] = None) -> List[str]:
    """Registered check ids in registration order, restricted to ``check_filter`` when given.

    Raises:
        UnknownCheckError: when the filter names an unregistered check
    """
    checks = registered_checks()
    if not check_filter:
        return list(checks)
    wanted = list(dict.fromkeys(check_filter))
    unknown = [c for c in wanted if c not in checks]
    if unknown:
        raise UnknownCheckError(f"unknown check ids: {', '.join(unknown)}", witness={"known": sorted(checks)})
    return [c for c in checks if c in wanted]


def run_subject(subject: Subject, check_ids: List[str]) -> List[CheckResult]:
    """Every selected check whose kind matches the subject, in the given order."""
    checks = registered_checks()
    results = []
    for check_id in check_ids:
        if checks[check_id].kind != subject.kind:
            continue
        results.append(run_check(check_id, subject))
    logger.debug(f"{subject.name}: {len(results)} checks run")
    return results


def run_catalog(subjects: List[Subject], skipped: Optional[List[SkippedEntry]] = None,
                check_filter: Optional[Iterable[str]] = None, workers: int = 1) -> Report:
    """Cross product of the selected checks with the subjects.

    With ``workers > 1`` subjects run on a thread pool; results keep catalog order.
    """
    check_ids = select_checks(check_filter)
    start_time = datetime.now()
    logger.info(f"Running {len(check_ids)} checks on {len(subjects)} subjects with {workers} worker(s)")

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_subject = list(pool.map(lambda s: run_subject(s, check_ids), subjects))
    else:
        per_subject = [run_subject(s, check_ids) for s in subjects]

    results = [r for batch in per_subject for r in batch]
    report = Report(datetime.now().isoformat(), results, list(skipped or []))
    counts = report.status_counts()
    logger.info(f"Harness finished in {datetime.now() - start_time}: "
                + ", ".join(f"{status} {n}" for status, n in counts.items()))
    return report


def verify(entries: Optional[List[CatalogEntry]] = None, config: Config = DEFAULT_CONFIG,
           check_filter: Optional[Iterable[str]] = None, quotients: bool = True,
           workers: Optional[int] = None) -> Report:
    """Build the catalog (default when ``entries`` is None) and run it."""
    entries = default_catalog() if entries is None else entries
    subjects, skipped = build_subjects(entries, config, quotients=quotients)
    return run_catalog(subjects, skipped, check_filter, workers or config.workers)
