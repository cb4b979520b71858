from pathlib import Path

import pytest

from orbihilb.root_data import parse_root, standard_sweep

DATA = Path(__file__).parent / "data"
SWEEP = [rs.name for rs in standard_sweep()]


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture(params=SWEEP)
def sweep_root(request):
    return parse_root(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys

    results = {}
    for name, mod in list(sys.modules.items()):
        if name.split(".")[-1] == "test_acceptance":
            results.update(getattr(mod, "RESULTS", {}))
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, summary = results[number]
        terminalreporter.write_line(f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'} {summary}")
