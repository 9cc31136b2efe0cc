from __future__ import annotations

import random
from pathlib import Path

import pytest

from gf2codes import Gf2Matrix, LinearCode, parse_generator_text

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Populated by test_acceptance.py; echoed after the run so each criterion
# gets one visible pass/fail line even under output capture.
ACCEPTANCE_RESULTS: list[tuple[int, str, str]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, status in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[acceptance] criterion {num} ({desc}): {status}")


def load_code(name: str) -> LinearCode:
    return LinearCode.from_rows(parse_generator_text((FIXTURES / name).read_text()))


def random_code(rng: random.Random, n: int, rows: int) -> LinearCode:
    """A code spanned by uniformly random rows (dimension = their rank)."""
    return LinearCode.from_rows(
        Gf2Matrix.from_ints([rng.getrandbits(n) for _ in range(rows)], n)
    )


def all_codewords(code: LinearCode) -> list[int]:
    """Every codeword as a bit-packed int, by span doubling (not Gray order)."""
    words = [0]
    for row in code.generator.row_bits():
        words += [w ^ row for w in words]
    return words


@pytest.fixture
def golay() -> LinearCode:
    return load_code("golay_24_12.txt")


@pytest.fixture
def hamming_7_4() -> LinearCode:
    return load_code("hamming_7_4.txt")


@pytest.fixture
def hamming_8_4() -> LinearCode:
    return load_code("hamming_8_4.txt")


@pytest.fixture
def even_weight_4() -> LinearCode:
    return load_code("even_weight_4.txt")


@pytest.fixture
def repetition_5() -> LinearCode:
    return load_code("repetition_5.txt")
