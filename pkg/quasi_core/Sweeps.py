import logging
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)


def run_sweep(fn, chunks, jobs=1):
    """Apply fn to every chunk and concatenate the returned lists in chunk order."""
    chunks = list(chunks)
    logger.debug("sweep over %d chunks with %d job(s)", len(chunks), jobs)
    if jobs <= 1 or len(chunks) <= 1:
        results = [fn(chunk) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            # map preserves input order, so output does not depend on jobs
            results = list(pool.map(fn, chunks))
    merged = []
    for part in results:
        merged.extend(part)
    return merged
