from django.core.management.base import CommandParser

from cli.base import GroupInputCommand
from cli.config import RunConfig
from cli.utils import render_rows, yes_no
from group_core.serializers import FactorsReportSerializer
from group_core.services import (composition_factors, lemma1_check,
                                 simple_quotients)


class Command(GroupInputCommand):
    help = "Print the composition factors of a group, optionally with Sigma_ell membership"

    def add_command_arguments(self, parser: CommandParser) -> None:
        super().add_command_arguments(parser)
        parser.add_argument("--ell", type=int, help="Label factors with membership for this prime")

    def compute(self, config: RunConfig, **options) -> dict:
        group = self.load_group(config, options)
        ell = options.get("ell")
        return FactorsReportSerializer(
            {
                "group": group,
                "factors": composition_factors(group),
                "simple_quotients": simple_quotients(group),
                "lemma1": lemma1_check(group, ell) if ell else None,
            }
        ).data

    def render_table(self, data: dict) -> str:
        group = data["group"]
        lines = [f"{group['name'] or 'group'} of order {group['order']}"]
        lemma1 = data["lemma1"]
        outside = {f["label"] for f in lemma1["outside"]} if lemma1 else set()

        rows = []
        for factor in data["factors"]:
            row = [factor["label"], factor["kind"]]
            if lemma1:
                row.append("outside" if factor["label"] in outside else "ok")
            row.append(factor["order"])
            rows.append(row)
        lines.append(render_rows(rows))
        lines.append("simple quotients: " + ", ".join(f["label"] for f in data["simple_quotients"]))
        if lemma1:
            lines.append(f"lemma 1 holds for ell={lemma1['ell']}: {yes_no(lemma1['holds'])}")
        return "\n".join(line for line in lines if line)
