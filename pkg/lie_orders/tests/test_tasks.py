import pytest

from lie_orders.serializers import CatalogueQuerySerializer
from lie_orders.tasks import build_catalogue, check_disjoint


def test_build_catalogue_returns_machine_form() -> None:
    """
    Test that the task result is the serialized catalogue.
    """
    data = build_catalogue.delay(5, 10**6).get()
    assert [entry["order"] for entry in data["entries"]] == [5, 60, 7800, 126000, 372000, 976500]
    assert data["entries"][1]["witnesses"] == ["A1(5)"]


def test_check_disjoint_returns_machine_form() -> None:
    data = check_disjoint.delay(5, 7, 10**8).get()
    assert data["disjoint"] is True
    assert data["collisions"] == []


@pytest.mark.parametrize(
    "payload, valid",
    [
        ({"ells": [5, 7], "bound": 100}, True),
        ({"ells": [], "bound": 100}, False),
        ({"ells": [3], "bound": 100}, False),
        ({"ells": [5], "bound": 0}, False),
    ],
)
def test_catalogue_query_serializer(payload, valid) -> None:
    assert CatalogueQuerySerializer(data=payload).is_valid() is valid
