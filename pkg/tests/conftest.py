import random

import pytest

from kkdesign.codes import BinaryCode

ACCEPTANCE_LINES = []


def record_acceptance(line):
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_code(rng, n, size, duplicates=True):
    if duplicates:
        return BinaryCode(n, tuple(rng.randrange(1 << n) for _ in range(size)))
    size = min(size, 1 << n)
    return BinaryCode(n, tuple(rng.sample(range(1 << n), size)))


def random_linear_code(rng, n, dim, translate=True):
    """Span of `dim` random words, optionally shifted by a random coset leader."""
    span = {0}
    for _ in range(dim):
        g = rng.randrange(1, 1 << n)
        span |= {w ^ g for w in span}
    shift = rng.randrange(1 << n) if translate else 0
    return BinaryCode(n, tuple(sorted(w ^ shift for w in span)))


def random_poly_coeffs(rng, deg, lo=-5, hi=5, den=4):
    from fractions import Fraction

    return [Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den)) for _ in range(deg + 1)]


@pytest.fixture
def rng():
    return random.Random(20240611)
