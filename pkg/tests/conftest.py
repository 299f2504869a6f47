"""Shared test plumbing: the acceptance-criterion result board.

Acceptance tests record one line per criterion here; the lines are
printed in a dedicated terminal section at the end of the run so each
criterion shows a single PASS/FAIL verdict with its measured numbers.
"""

from __future__ import annotations

_CRITERIA: dict[int, tuple[str, bool, str]] = {}


def record_criterion(num: int, name: str, passed: bool, detail: str = "") -> None:
    _CRITERIA[num] = (name, bool(passed), detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        name, passed, detail = _CRITERIA[num]
        verdict = "PASS" if passed else "FAIL"
        line = f"criterion {num:2d} {verdict}  {name}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
