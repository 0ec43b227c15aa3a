"""Shared PASS/FAIL line recorder for the acceptance suite.

Lines print immediately (visible under ``pytest -s``) and are echoed in a
terminal-summary block by ``conftest.py`` so they always reach the log.
"""

LINES: list[str] = []


def record(number: int, ok: bool, label: str, seconds: float | None = None) -> bool:
    verdict = "PASS" if ok else "FAIL"
    line = f"criterion {number:02d} {verdict}  {label}"
    if seconds is not None:
        line += f"  ({seconds:.1f}s)"
    LINES.append(line)
    print(line, flush=True)
    return ok
