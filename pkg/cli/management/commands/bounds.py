from django.core.management.base import CommandParser

from cli.base import LabCommand
from cli.config import RunConfig
from cli.utils import render_rows
from jordan.serializers import BoundsReportSerializer
from jordan.services import bounds


class Command(LabCommand):
    help = "Print the Jordan constant bounds for matrices of size n"

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--n", type=int, required=True)

    def compute(self, config: RunConfig, **options) -> dict:
        return BoundsReportSerializer(bounds(options["n"], precision=config.precision)).data

    def render_table(self, data: dict) -> str:
        rows = [("n", data["n"]), ("frobenius", data["frobenius"])]
        if data["collins"] is not None:
            rows.append(("collins", data["collins"]))
        return render_rows(rows)
