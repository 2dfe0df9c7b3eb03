import os
import sys
from collections import defaultdict

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = defaultdict(list)
_TITLES: dict[int, str] = {}


@pytest.fixture
def acceptance():
    """``record(k, title, case, ok, detail)`` for the acceptance summary."""

    def record(k: int, title: str, case: str, ok: bool, detail: str = "") -> None:
        _TITLES[k] = title
        _ACCEPTANCE[k].append((case, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_ACCEPTANCE):
        cases = _ACCEPTANCE[k]
        bad = [(c, d) for c, ok, d in cases if not ok]
        verdict = "PASS" if not bad else "FAIL"
        line = f"criterion {k} [{verdict}] {_TITLES[k]} ({len(cases) - len(bad)}/{len(cases)} cases)"
        terminalreporter.write_line(line)
        for case, detail in bad:
            terminalreporter.write_line(f"    failed: {case}: {detail}")
