from rest_framework import serializers
from rest_framework.serializers import Serializer


class WitnessListField(serializers.Field):
    """
    Renders witnesses (Lie type tags or the cyclic tag) by their labels.
    """

    def to_representation(self, value) -> list[str]:
        return [witness.label for witness in value]


class OrderEntrySerializer(Serializer):
    order = serializers.IntegerField()
    witnesses = WitnessListField()


class SigmaCatalogueSerializer(Serializer):
    """
    Machine form of a catalogue; orders stay exact integers.
    """

    ell = serializers.IntegerField()
    bound = serializers.IntegerField()
    entries = OrderEntrySerializer(many=True)


class CollisionSerializer(Serializer):
    order = serializers.IntegerField()
    first = WitnessListField()
    second = WitnessListField()


class ArtinReportSerializer(Serializer):
    ell1 = serializers.IntegerField()
    ell2 = serializers.IntegerField()
    bound = serializers.IntegerField()
    disjoint = serializers.BooleanField()
    collisions = CollisionSerializer(many=True)


class CatalogueQuerySerializer(Serializer):
    """
    Validates the characteristic list and bound given on the command line.
    """

    ells = serializers.ListField(
        child=serializers.IntegerField(min_value=5), allow_empty=False
    )
    bound = serializers.IntegerField(min_value=1)
