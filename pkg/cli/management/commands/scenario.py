from django.core.management.base import CommandParser

from cli.base import LabCommand
from cli.config import RunConfig
from cli.utils import write_json
from independence.serializers import IndependenceReportSerializer, dump_family
from independence.services import analyse, truncation_scenario

from .indep import render_report


class Command(LabCommand):
    help = "Build the truncated Z/p^M family, optionally write it to a file, and report on it"

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--p", type=int, required=True)
        parser.add_argument("--M", type=int, required=True, dest="M")
        parser.add_argument("--out", help="Write the family file here")

    def compute(self, config: RunConfig, **options) -> dict:
        family = truncation_scenario(options["p"], options["M"], cap=config.order_cap)
        if options.get("out"):
            write_json(options["out"], dump_family(family))
        report = IndependenceReportSerializer(analyse(family, seed=config.seed)).data
        return {"family": family.name, "report": report, "semistable": None}

    def render_table(self, data: dict) -> str:
        return f"{data['family']}\n{render_report(data)}"
