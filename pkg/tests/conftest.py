import random

import pytest

# one line per acceptance criterion, echoed again at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def acceptance(capsys):
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print(f"\n{line}")
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
