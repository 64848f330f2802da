from dataclasses import dataclass
from typing import Any

from django.conf import settings
from django.db import models
from rest_framework import serializers
from rest_framework.serializers import Serializer


class OutputMode(models.TextChoices):
    TABLE = "table", "Text table"
    MACHINE = "machine", "Machine-readable JSON"


@dataclass(frozen=True)
class RunConfig:
    order_cap: int
    seed: int
    output_mode: OutputMode
    precision: int
    workers: int

    @property
    def machine(self) -> bool:
        return self.output_mode == OutputMode.MACHINE


class RunConfigSerializer(Serializer):
    """
    Validates the run configuration after command-line overrides are merged
    into the settings defaults.
    """

    order_cap = serializers.IntegerField(min_value=1)
    seed = serializers.IntegerField(min_value=0, max_value=2**64 - 1)
    output_mode = serializers.ChoiceField(choices=OutputMode.choices)
    precision = serializers.IntegerField(min_value=8)
    workers = serializers.IntegerField(min_value=1)

    def create(self, validated_data: dict[str, Any]) -> RunConfig:
        return RunConfig(
            order_cap=validated_data["order_cap"],
            seed=validated_data["seed"],
            output_mode=OutputMode(validated_data["output_mode"]),
            precision=validated_data["precision"],
            workers=validated_data["workers"],
        )


def _pick(value: Any, default: Any) -> Any:
    return default if value is None else value


def load_config(options: dict[str, Any]) -> RunConfig:
    payload = {
        "order_cap": _pick(options.get("cap"), settings.GROUP_ORDER_CAP),
        "seed": _pick(options.get("seed"), settings.CORPUS_SEED),
        "output_mode": OutputMode.MACHINE if options.get("machine") else settings.OUTPUT_MODE,
        "precision": _pick(options.get("precision"), settings.BOUND_PRECISION_BITS),
        "workers": _pick(options.get("workers"), settings.CLI_WORKERS),
    }
    serializer = RunConfigSerializer(data=payload)
    serializer.is_valid(raise_exception=True)
    return serializer.save()
