from typing import Any

from rest_framework import serializers
from rest_framework.serializers import Serializer

from .domain import FiniteGroup
from .services import make_matrix_group, make_perm_group


def permutation_field(**kwargs) -> serializers.ListField:
    return serializers.ListField(child=serializers.IntegerField(min_value=1), **kwargs)


class PermutationGroupSerializer(Serializer):
    """
    Group file of the form {"degree": int, "generators": [[int, ...], ...]}
    with 1-based images.
    """

    degree = serializers.IntegerField(min_value=1)
    generators = serializers.ListField(child=permutation_field(), allow_empty=True)
    name = serializers.CharField(required=False, default="", allow_blank=True)

    def create(self, validated_data: dict[str, Any]) -> FiniteGroup:
        return make_perm_group(
            validated_data["degree"],
            validated_data["generators"],
            cap=validated_data.get("cap"),
            name=validated_data["name"],
        )


class MatrixGroupSerializer(Serializer):
    """
    Group file of the form {"n": int, "p": int, "matrices": [...]}, entries
    already reduced mod p.
    """

    n = serializers.IntegerField(min_value=1)
    p = serializers.IntegerField(min_value=2)
    matrices = serializers.ListField(
        child=serializers.ListField(
            child=serializers.ListField(child=serializers.IntegerField(min_value=0))
        ),
        allow_empty=True,
    )
    name = serializers.CharField(required=False, default="", allow_blank=True)

    def validate(self, data: dict[str, Any]) -> dict[str, Any]:
        n, p = data["n"], data["p"]
        for matrix in data["matrices"]:
            if len(matrix) != n or any(len(row) != n for row in matrix):
                raise serializers.ValidationError(f"every matrix must be {n}x{n}")
            if any(entry >= p for row in matrix for entry in row):
                raise serializers.ValidationError(f"matrix entries must be reduced mod {p}")
        return data

    def create(self, validated_data: dict[str, Any]) -> FiniteGroup:
        return make_matrix_group(
            validated_data["n"],
            validated_data["p"],
            validated_data["matrices"],
            cap=validated_data.get("cap"),
            name=validated_data["name"],
        )


def load_group(payload: Any, cap: int | None = None) -> FiniteGroup:
    """
    Validates a group object (permutation or matrix form) and builds it.
    """
    if isinstance(payload, dict) and "matrices" in payload:
        serializer = MatrixGroupSerializer(data=payload)
    else:
        serializer = PermutationGroupSerializer(data=payload)
    serializer.is_valid(raise_exception=True)
    return serializer.save(cap=cap)


def dump_group(group: FiniteGroup) -> dict[str, Any]:
    """
    Permutation form of a group, loadable again with ``load_group``.
    """
    return {
        "degree": group.degree,
        "generators": [list(g) for g in group.generators],
        "name": group.name,
    }


class FiniteGroupSerializer(Serializer):
    name = serializers.CharField()
    degree = serializers.IntegerField()
    order = serializers.IntegerField()


class SimpleFactorSerializer(Serializer):
    kind = serializers.CharField()
    order = serializers.IntegerField()
    label = serializers.CharField()
    flagged = serializers.BooleanField()
    note = serializers.CharField()


class Lemma1ReportSerializer(Serializer):
    ell = serializers.IntegerField()
    holds = serializers.BooleanField()
    outside = SimpleFactorSerializer(many=True)
    ell_divisible_outside = SimpleFactorSerializer(many=True)


class FactorsReportSerializer(Serializer):
    """
    Output of the ``factors`` command.
    """

    group = FiniteGroupSerializer()
    factors = SimpleFactorSerializer(many=True)
    simple_quotients = SimpleFactorSerializer(many=True)
    lemma1 = Lemma1ReportSerializer(required=False, allow_null=True)
