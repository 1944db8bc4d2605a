import pytest

from weyl_eulerian import enumeration


@pytest.fixture(autouse=True)
def _reset_workers():
    yield
    enumeration.set_default_workers(None)
