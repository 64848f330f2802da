from typing import Any

from rest_framework import serializers
from rest_framework.serializers import Serializer

from group_core.serializers import (FiniteGroupSerializer,
                                    SimpleFactorSerializer, dump_group,
                                    load_group, permutation_field)
from group_core.services import make_hom, subgroup

from .domain import HomFamily, InertiaAssignment, Place
from .exceptions import InvalidFamily


class HomEntrySerializer(Serializer):
    label = serializers.CharField()
    codomain = serializers.JSONField()
    images = serializers.ListField(child=permutation_field(), allow_empty=True)


class HomFamilySerializer(Serializer):
    """
    Family file: {"domain": <group>, "homs": [{"label", "codomain", "images"}]}.
    Elements of matrix groups are given in their permutation form.
    """

    domain = serializers.JSONField()
    homs = HomEntrySerializer(many=True, allow_empty=False)
    name = serializers.CharField(required=False, default="", allow_blank=True)

    def create(self, validated_data: dict[str, Any]) -> HomFamily:
        cap = validated_data.get("cap")
        domain = load_group(validated_data["domain"], cap)
        homs, labels = [], []
        for entry in validated_data["homs"]:
            codomain = load_group(entry["codomain"], cap)
            homs.append(make_hom(domain, codomain, entry["images"]))
            labels.append(entry["label"])
        return HomFamily(domain, tuple(homs), tuple(labels), name=validated_data["name"])


def load_family(payload: Any, cap: int | None = None) -> HomFamily:
    serializer = HomFamilySerializer(data=payload)
    serializer.is_valid(raise_exception=True)
    return serializer.save(cap=cap)


def dump_family(family: HomFamily) -> dict[str, Any]:
    return {
        "name": family.name,
        "domain": dump_group(family.domain),
        "homs": [
            {
                "label": label,
                "codomain": dump_group(hom.codomain),
                "images": [list(y) for y in hom.generator_images],
            }
            for label, hom in family
        ],
    }


class PlaceSerializer(Serializer):
    place = serializers.CharField()
    p = serializers.IntegerField(min_value=2)
    subgroup_generators_per_label = serializers.DictField(
        child=serializers.ListField(child=permutation_field(), allow_empty=True)
    )


class InertiaAssignmentSerializer(Serializer):
    """
    Inertia file; needs the family in the context to resolve labels and
    build the subgroups of its domain.
    """

    places = PlaceSerializer(many=True)

    def create(self, validated_data: dict[str, Any]) -> InertiaAssignment:
        family: HomFamily = self.context["family"]
        places = []
        for entry in validated_data["places"]:
            subgroups = {}
            for label, generators in entry["subgroup_generators_per_label"].items():
                if label not in family.labels:
                    raise InvalidFamily(f"inertia at {entry['place']} names unknown label {label!r}")
                subgroups[label] = subgroup(family.domain, generators)
            places.append(Place(place=entry["place"], p=entry["p"], subgroups=subgroups))
        return InertiaAssignment(places=tuple(places))


def load_inertia(payload: Any, family: HomFamily) -> InertiaAssignment:
    serializer = InertiaAssignmentSerializer(data=payload, context={"family": family})
    serializer.is_valid(raise_exception=True)
    return serializer.save()


class SubgroupSerializer(FiniteGroupSerializer):
    generators = serializers.ListField(child=permutation_field())


class SharedQuotientSerializer(Serializer):
    i = serializers.CharField()
    j = serializers.CharField()
    factor = SimpleFactorSerializer()


class Lemma2VerdictSerializer(Serializer):
    applies = serializers.BooleanField()
    conclusion = serializers.CharField()
    collisions = SharedQuotientSerializer(many=True)
    flagged = SharedQuotientSerializer(many=True)
    findings = serializers.ListField(child=serializers.CharField())


class GoursatWitnessSerializer(Serializer):
    i = serializers.CharField()
    j = serializers.CharField()
    quotient = FiniteGroupSerializer()


class IsolatedDefectSerializer(Serializer):
    label = serializers.CharField()
    defect = serializers.IntegerField()


class IndependenceReportSerializer(Serializer):
    """
    Machine form of an independence report, field for field.
    """

    labels = serializers.ListField(child=serializers.CharField())
    satisfies_R = serializers.BooleanField()
    satisfies_R1 = serializers.BooleanField()
    satisfies_R2 = serializers.BooleanField()
    product_order = serializers.IntegerField()
    diagonal_order = serializers.IntegerField()
    ro_index = serializers.IntegerField()
    gamma_prime = SubgroupSerializer()
    independence_index = serializers.IntegerField()
    isolated_defects = IsolatedDefectSerializer(many=True)
    lemma2 = Lemma2VerdictSerializer()
    goursat = GoursatWitnessSerializer(many=True)
    findings = serializers.ListField(child=serializers.CharField())
    seed = serializers.IntegerField(allow_null=True)


class SemistableIndexSerializer(Serializer):
    label = serializers.CharField()
    ell = serializers.IntegerField()
    a = FiniteGroupSerializer()
    plus = FiniteGroupSerializer()
    h = FiniteGroupSerializer()
    lemma5_ok = serializers.BooleanField()
    jordan_index = serializers.IntegerField()
    jordan_ok = serializers.BooleanField(allow_null=True)


class SemistableReportSerializer(Serializer):
    indices = SemistableIndexSerializer(many=True)
    lemma4_ok = serializers.BooleanField()
    reduced_lemma2 = Lemma2VerdictSerializer()
    dimension = serializers.IntegerField(allow_null=True)
    findings = serializers.ListField(child=serializers.CharField())


class CorpusAuditSerializer(Serializer):
    seed = serializers.IntegerField()
    index = serializers.IntegerField()
    name = serializers.CharField()
    order = serializers.IntegerField()
    homs = serializers.IntegerField()
    satisfies_R = serializers.BooleanField()
    criteria_agree = serializers.BooleanField()
    lemma2_applies = serializers.BooleanField()
    lemma2_sound = serializers.BooleanField()
    gamma_prime_ok = serializers.BooleanField()
    maximality_checked = serializers.BooleanField()
    goursat_ok = serializers.BooleanField()
    frattini_triples = serializers.IntegerField()
    frattini_ok = serializers.BooleanField()
    jordan_holder_ok = serializers.BooleanField()
    jordan_ok = serializers.BooleanField()
    findings = serializers.ListField(child=serializers.CharField())
