import pytest

from nilsplit import catalog
from nilsplit.lie_algebras import ce_model
from nilsplit.symplectic import SymplecticForm, is_symplectic


@pytest.fixture(scope="session")
def catalog_models():
    """name -> CEModel for every catalog algebra."""
    return {name: ce_model(catalog.get(name).to_spec()) for name in catalog.names()}


@pytest.fixture(scope="session")
def symplectic_forms(catalog_models):
    """name -> certified SymplecticForm for the symplectic catalog entries."""
    forms = {}
    for name in catalog.symplectic_names():
        model = catalog_models[name]
        form = SymplecticForm.from_coeffs(model, catalog.get(name).omega_coeffs())
        cert = is_symplectic(model, form.omega)
        assert cert.symplectic, f"catalog omega for {name} failed certification"
        forms[name] = form
    return forms
