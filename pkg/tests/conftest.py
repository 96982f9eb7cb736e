from __future__ import annotations

CRITERIA: dict[int, bool] = {}


def record(n: int, ok: bool, detail: str = "") -> None:
    CRITERIA[n] = ok
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}"
    print(line + (f" ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if CRITERIA[n] else 'FAIL'}")
