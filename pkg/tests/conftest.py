import pytest

from hhring.algebra import algebra_create
from hhring.homcomplex import CohomologySession
from hhring.products import ProductSession
from hhring.scalars import field_create

_sessions = {}
_products = {}


@pytest.fixture(scope="session")
def session_cache():
    def get(m, N, char):
        key = (m, N, char)
        if key not in _sessions:
            _sessions[key] = CohomologySession(
                algebra_create(m, N, field_create(char)))
        return _sessions[key]
    return get


@pytest.fixture(scope="session")
def product_cache(session_cache):
    def get(m, N, char):
        key = (m, N, char)
        if key not in _products:
            _products[key] = ProductSession(session_cache(m, N, char))
        return _products[key]
    return get
