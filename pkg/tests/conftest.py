import logging

import pytest

from settings import reset_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    """Re-read MODULI_* for every test and drop handlers bound to a test's stderr."""
    reset_settings()
    yield
    reset_settings()
    root = logging.getLogger()
    for handler in [h for h in root.handlers if getattr(h, "_moduli_handler", False)]:
        root.removeHandler(handler)
