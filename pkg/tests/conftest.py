import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rigidtriples.ratmat import RatMatrix  # noqa: E402


def rand_rat(rng, bound=9, den=7):
    return Fraction(rng.randint(-bound * den, bound * den), rng.randint(1, den))


def rand_matrix(rng, n, m=None):
    return RatMatrix([[rand_rat(rng) for _ in range(m or n)] for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: int(k[1:])):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"{key:4s} {'PASS' if ok else 'FAIL'}  {detail}")
