import os

import pytest


@pytest.fixture(autouse=True)
def _clean_guardrail_env(monkeypatch):
    # Guardrail overrides from the outer environment must not leak into tests.
    for name in list(os.environ):
        if name.startswith("IDEALSAT_") and name != "IDEALSAT_BACKEND":
            monkeypatch.delenv(name)
