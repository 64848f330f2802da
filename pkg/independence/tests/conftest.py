import factory
import pytest

from group_core.factory import GroupFactory
from group_core.services import make_hom, subgroup
from independence.domain import HomFamily, InertiaAssignment, Place

S3_IDENTITY = [[2, 1, 3], [2, 3, 1]]
S3_SIGN = [[2, 1], [1, 2]]


class HomFamilyFactory(factory.Factory):
    """
    Factory for families over a named domain. ``homs`` lists
    (label, named codomain, generator images).
    """

    domain = "cyclic:6"
    homs = factory.LazyAttribute(
        lambda o: [("2", "cyclic:2", [[2, 1]]), ("3", "cyclic:3", [[2, 3, 1]])]
    )
    name = factory.Sequence(lambda n: f"family{n}")

    class Meta:
        model = HomFamily

    @classmethod
    def _create(cls, model_class, *args, **kwargs) -> HomFamily:
        domain = GroupFactory.build_named(kwargs["domain"])
        homs, labels = [], []
        for label, codomain, images in kwargs["homs"]:
            homs.append(make_hom(domain, GroupFactory.build_named(codomain), images))
            labels.append(label)
        return model_class(domain, tuple(homs), tuple(labels), name=kwargs["name"])


@pytest.fixture
def create_family():
    """
    Fixture for HomFamilyFactory
    """
    return HomFamilyFactory


@pytest.fixture
def crt_family():
    return HomFamilyFactory()


@pytest.fixture
def diagonal_c2():
    return HomFamilyFactory(
        domain="cyclic:2", homs=[("a", "cyclic:2", [[2, 1]]), ("b", "cyclic:2", [[2, 1]])]
    )


@pytest.fixture
def s3_identity_sign():
    return HomFamilyFactory(
        domain="symmetric:3",
        homs=[("id", "symmetric:3", S3_IDENTITY), ("sign", "cyclic:2", S3_SIGN)],
    )


@pytest.fixture
def klein_projections():
    return HomFamilyFactory(
        domain="klein",
        homs=[("x", "cyclic:2", [[2, 1], [1, 2]]), ("y", "cyclic:2", [[1, 2], [2, 1]])],
    )


@pytest.fixture
def s3_at_three():
    """
    Identity onto S3 labelled by the prime 3.
    """
    return HomFamilyFactory(domain="symmetric:3", homs=[("3", "symmetric:3", S3_IDENTITY)])


@pytest.fixture
def inertia_at():
    """
    Builds a one-place inertia assignment on ``family`` for ``label``.
    """

    def build(family: HomFamily, label: str, p: int, generators: list) -> InertiaAssignment:
        I = subgroup(family.domain, generators)
        return InertiaAssignment(places=(Place(place="v", p=p, subgroups={label: I}),))

    return build
