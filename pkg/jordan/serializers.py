from rest_framework import serializers
from rest_framework.serializers import Serializer

from group_core.serializers import FiniteGroupSerializer


class JordanWitnessSerializer(Serializer):
    abelian_normal_subgroup = FiniteGroupSerializer()
    index = serializers.IntegerField()


class Theorem3PrimeProbeSerializer(Serializer):
    n = serializers.IntegerField()
    p = serializers.IntegerField()
    group_order = serializers.IntegerField()
    jordan_index = serializers.IntegerField()
    bound = serializers.IntegerField()
    within_bound = serializers.BooleanField()


class JordanReportSerializer(Serializer):
    """
    Output of the ``jordan`` command; ``within`` is null when no d was given
    and ``theorem3prime`` is null unless that check was asked for.
    """

    group = FiniteGroupSerializer()
    jordan_index = serializers.IntegerField()
    witness = JordanWitnessSerializer()
    d = serializers.IntegerField(allow_null=True)
    within = serializers.BooleanField(allow_null=True)
    theorem3prime = Theorem3PrimeProbeSerializer(allow_null=True)


class BoundsReportSerializer(Serializer):
    n = serializers.IntegerField()
    frobenius = serializers.IntegerField()
    collins = serializers.IntegerField(allow_null=True)
