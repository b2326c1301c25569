"""Shared fixtures: a per-session catalog run cache and the criteria board.

Catalog experiments are expensive (the 2D ones take minutes), and several
acceptance checks grade the same runs, so each catalog id is executed at
most once per session and its summary is shared.  The criteria board
collects one verdict per numbered acceptance check and prints them as a
block after the test summary, whether or not the individual tests passed.
"""

from __future__ import annotations

import pytest

from mnls.harness import run_experiment

_CRITERIA_LABELS = {
    1: "closed-form diagnostics of the T0=1.5 profile",
    2: "standing-wave fidelity at dt=1e-3",
    3: "virial identity residuals, second-order decay",
    4: "first-layer blowup time under refinement",
    5: "managed-Laplacian global run, bounded oscillation",
    6: "managed-nonlinearity global run, decaying peaks",
    7: "constructed blowup inside the second focusing layer",
    8: "managed-Laplacian backward construction fails before t=2",
    9: "supercritical-mass family: collapse vs stabilization",
    10: "2D fast switching: collapse vs managed survival",
    11: "conservation laws on completed catalog runs",
    12: "byte-identical reruns",
}


class CriteriaBoard:
    def __init__(self):
        self.results = {
            num: {"label": label, "ok": None, "detail": "not run"}
            for num, label in _CRITERIA_LABELS.items()
        }

    def record(self, num: int, ok: bool, detail: str) -> None:
        self.results[num] = {
            "label": _CRITERIA_LABELS[num],
            "ok": bool(ok),
            "detail": detail,
        }


_BOARD = CriteriaBoard()
_RUN_CACHE: dict[str, dict] = {}


@pytest.fixture(scope="session")
def criteria_board():
    return _BOARD


@pytest.fixture(scope="session")
def catalog_run(tmp_path_factory):
    """Factory: run a catalog experiment once per session, cache the summary."""
    root = tmp_path_factory.mktemp("catalog_runs")

    def runner(name: str) -> dict:
        if name not in _RUN_CACHE:
            _RUN_CACHE[name] = run_experiment(name, root / name)
        return _RUN_CACHE[name]

    return runner


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_BOARD.results):
        r = _BOARD.results[num]
        if r["ok"] is None:
            verdict = "NOT RUN"
        else:
            verdict = "PASS" if r["ok"] else "FAIL"
        tr.write_line(f"criterion {num:2d} {verdict:7s} {r['label']}: {r['detail']}")
