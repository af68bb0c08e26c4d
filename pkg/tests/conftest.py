import pytest

from g2zeta.adjoint import default_basis


@pytest.fixture(scope="session")
def basis():
    """The calibrated adjoint model; built once per session."""
    return default_basis()
