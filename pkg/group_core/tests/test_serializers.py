import pytest
from rest_framework.exceptions import ValidationError

from group_core.exceptions import InvalidPermutation
from group_core.services import composition_factors, simple_quotients

from ..serializers import FactorsReportSerializer, dump_group, load_group


# load_group
def test_load_group_permutation_form() -> None:
    group = load_group({"degree": 3, "generators": [[2, 1, 3], [2, 3, 1]]})
    assert group.order == 6


def test_load_group_matrix_form() -> None:
    """
    Test that the matrix form is recognised by its ``matrices`` field.
    """
    group = load_group({"n": 2, "p": 5, "matrices": [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]})
    assert group.order == 120
    assert group.matrix_tag is not None


@pytest.mark.parametrize(
    "payload",
    [
        {"degree": 0, "generators": []},
        {"generators": [[1]]},
        {"n": 2, "p": 5, "matrices": [[[1, 1]]]},
        {"n": 2, "p": 5, "matrices": [[[1, 7], [0, 1]]]},
        [1, 2, 3],
    ],
)
def test_load_group_rejects_malformed(payload) -> None:
    with pytest.raises(ValidationError):
        load_group(payload)


def test_load_group_rejects_non_bijection() -> None:
    with pytest.raises(InvalidPermutation):
        load_group({"degree": 3, "generators": [[1, 1, 2]]})


def test_dump_group_reloads(create_named_group) -> None:
    """
    Test that a dumped group loads back to an equal group, matrix groups
    included (they come back in permutation form).
    """
    for named in ("dihedral:5", "special_linear:2,3"):
        group = create_named_group(named=named)
        assert load_group(dump_group(group)) == group


# FactorsReportSerializer
def test_factors_report_serializer(sl2_5) -> None:
    data = FactorsReportSerializer(
        {
            "group": sl2_5,
            "factors": composition_factors(sl2_5),
            "simple_quotients": simple_quotients(sl2_5),
            "lemma1": None,
        }
    ).data
    assert data["group"]["order"] == 120
    assert [f["label"] for f in data["factors"]] == ["C2", "A1(5)"]
    assert data["factors"][0]["kind"] == "cyclic"
    assert [f["label"] for f in data["simple_quotients"]] == ["A1(5)"]
