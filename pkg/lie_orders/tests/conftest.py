import factory
import pytest

from lie_orders.domain import LieTypeSpec, Series


class LieTypeSpecFactory(factory.Factory):
    """
    Factory for Lie type tags, A1(5) by default.
    """

    series = Series.A
    rank = 1
    ell = 5
    f = 1

    class Meta:
        model = LieTypeSpec


@pytest.fixture
def create_spec():
    """
    Fixture for LieTypeSpecFactory
    """
    return LieTypeSpecFactory


@pytest.fixture
def first_primes() -> list[int]:
    return [5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
