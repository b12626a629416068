from __future__ import annotations

import os

from hypothesis import HealthCheck, settings

from qrst.qt_algebra import RationalQT

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_NAMES = {"q": RationalQT.q(), "t": RationalQT.t()}


def rq(text: str) -> RationalQT:
    """Build a rational function from a short formula in q and t."""
    value = eval(text, {"__builtins__": {}}, dict(_NAMES))
    return value if isinstance(value, RationalQT) else RationalQT.from_laurent(value)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
