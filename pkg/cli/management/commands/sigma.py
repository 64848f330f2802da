from django.core.management.base import CommandParser

from cli.base import LabCommand
from cli.config import RunConfig
from cli.utils import dispatch, render_rows
from lie_orders.serializers import CatalogueQuerySerializer
from lie_orders.tasks import build_catalogue


class Command(LabCommand):
    help = "Print the sorted orders of the characteristic-ell family up to a bound"

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--ell", type=int, required=True)
        parser.add_argument("--bound", type=int, required=True)

    def compute(self, config: RunConfig, **options) -> dict:
        query = CatalogueQuerySerializer(data={"ells": [options["ell"]], "bound": options["bound"]})
        query.is_valid(raise_exception=True)
        (catalogue,) = dispatch(
            build_catalogue, [(options["ell"], options["bound"])], config.workers
        )
        return catalogue

    def render_table(self, data: dict) -> str:
        return render_rows(
            (" | ".join(entry["witnesses"]), entry["order"]) for entry in data["entries"]
        )
