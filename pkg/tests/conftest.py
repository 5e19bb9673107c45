from __future__ import annotations

from pathlib import Path

import pytest

from brauercat import load_configuration

FIXTURES = Path(__file__).parent / "fixtures"

_acceptance_lines: list[str] = []


@pytest.fixture
def toy():
    """Two polygons U = 1^2 2 3^2 4 and V = 1 2 3 4^2, all multiplicities 1."""
    return load_configuration(FIXTURES / "toy.json")


@pytest.fixture
def toy_path() -> Path:
    return FIXTURES / "toy.json"


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> None:
        _acceptance_lines.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
