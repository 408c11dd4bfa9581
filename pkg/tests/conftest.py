from __future__ import annotations

import importlib

import pytest

from galois_param import _purepy

BACKENDS = [pytest.param(_purepy, id="python")]
try:
    BACKENDS.append(pytest.param(importlib.import_module("galois_param._speedups"), id="cython"))
except ImportError:  # extension not built; only the fallback is tested
    pass


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
