import factory
import pytest

from group_core.domain import FiniteGroup
from group_core.factory import GroupFactory
from group_core.services import make_matrix_group, make_perm_group


class PermGroupFactory(factory.Factory):
    """
    Factory for permutation groups given by raw generators.
    """

    degree = 3
    generators = factory.LazyAttribute(lambda o: [[2, 3, 1]])
    name = factory.Sequence(lambda n: f"G{n}")

    class Meta:
        model = FiniteGroup

    @classmethod
    def _create(cls, model_class, *args, **kwargs) -> FiniteGroup:
        return make_perm_group(**kwargs)


@pytest.fixture
def create_perm_group():
    """
    Fixture for PermGroupFactory
    """
    return PermGroupFactory


class MatrixGroupFactory(factory.Factory):
    """
    Factory for matrix groups over prime fields.
    """

    n = 2
    p = 5
    generator_matrices = factory.LazyAttribute(lambda o: [[[1, 1], [0, 1]], [[1, 0], [1, 1]]])

    class Meta:
        model = FiniteGroup

    @classmethod
    def _create(cls, model_class, *args, **kwargs) -> FiniteGroup:
        return make_matrix_group(**kwargs)


@pytest.fixture
def create_matrix_group():
    """
    Fixture for MatrixGroupFactory
    """
    return MatrixGroupFactory


class NamedGroupFactory(factory.Factory):
    """
    Factory for named groups, ``kind:params``.
    """

    named = "cyclic:6"

    class Meta:
        model = FiniteGroup

    @classmethod
    def _create(cls, model_class, *args, **kwargs) -> FiniteGroup:
        return GroupFactory.build_named(**kwargs)


@pytest.fixture
def create_named_group():
    """
    Fixture for NamedGroupFactory
    """
    return NamedGroupFactory


@pytest.fixture
def s3():
    return NamedGroupFactory(named="symmetric:3")


@pytest.fixture
def s4():
    return NamedGroupFactory(named="symmetric:4")


@pytest.fixture
def c6():
    return NamedGroupFactory(named="cyclic:6")


@pytest.fixture
def sl2_5():
    return NamedGroupFactory(named="special_linear:2,5")
