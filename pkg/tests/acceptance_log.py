"""Per-criterion results collected by test_acceptance and printed by conftest."""
import time
from contextlib import contextmanager

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str, limit: float):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        first = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        RESULTS[number] = f"FAIL  criterion {number}: {title} ({elapsed:.2f} s) -- {first}"
        raise
    RESULTS[number] = f"PASS  criterion {number}: {title} ({elapsed:.2f} s)"
