from itertools import combinations

from django.core.management.base import CommandParser

from cli.base import LabCommand
from cli.config import RunConfig
from cli.utils import dispatch, render_rows, yes_no
from lie_orders.exceptions import SamePrime
from lie_orders.serializers import CatalogueQuerySerializer
from lie_orders.tasks import check_disjoint


class Command(LabCommand):
    help = "Check that the order sets of several characteristics are pairwise disjoint"

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--ells", required=True, help="Comma separated distinct primes, e.g. 5,7")
        parser.add_argument("--bound", type=int, required=True)

    def compute(self, config: RunConfig, **options) -> dict:
        ells = [part.strip() for part in options["ells"].split(",") if part.strip()]
        query = CatalogueQuerySerializer(data={"ells": ells, "bound": options["bound"]})
        query.is_valid(raise_exception=True)
        requested = query.validated_data["ells"]
        if len(requested) < 2 or len(set(requested)) != len(requested):
            raise SamePrime(f"Need at least two distinct primes, got {requested}")
        ells = sorted(requested)

        calls = [(a, b, options["bound"]) for a, b in combinations(ells, 2)]
        pairs = dispatch(check_disjoint, calls, config.workers)
        return {
            "ells": ells,
            "bound": options["bound"],
            "pairs": pairs,
            "disjoint": all(pair["disjoint"] for pair in pairs),
        }

    def render_table(self, data: dict) -> str:
        verdicts = {}
        for pair in data["pairs"]:
            verdicts[pair["ell1"], pair["ell2"]] = verdicts[pair["ell2"], pair["ell1"]] = pair["disjoint"]

        ells = data["ells"]
        rows = [["", *ells]]
        for row in ells:
            rows.append([row, *(yes_no(verdicts.get((row, column))) for column in ells)])
        for pair in data["pairs"]:
            for collision in pair["collisions"]:
                rows.append(
                    (
                        f"collision {collision['order']}",
                        f"{' | '.join(collision['first'])} = {' | '.join(collision['second'])}",
                    )
                )
        return f"{render_rows(rows)}\ndisjoint: {yes_no(data['disjoint'])}"
