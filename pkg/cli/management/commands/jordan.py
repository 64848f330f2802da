from django.core.management.base import CommandParser

from cli.base import GroupInputCommand
from cli.config import RunConfig
from cli.utils import render_rows, yes_no
from group_core.services import trivial_subgroup
from jordan.serializers import JordanReportSerializer
from jordan.services import jordan_check, jordan_index, theorem3prime_probe


class Command(GroupInputCommand):
    help = "Print the minimal index of an abelian normal subgroup, optionally checked against d"

    def add_command_arguments(self, parser: CommandParser) -> None:
        super().add_command_arguments(parser)
        parser.add_argument("--d", type=int, help="Bound to check the index against")
        parser.add_argument(
            "--theorem3prime",
            action="store_true",
            help="For a matrix group over F_p of order prime to p, check the index against d(n)",
        )

    def compute(self, config: RunConfig, **options) -> dict:
        group = self.load_group(config, options)
        d = options.get("d")
        index, witness = jordan_index(group)
        return JordanReportSerializer(
            {
                "group": group,
                "jordan_index": index,
                "witness": witness,
                "d": d,
                "within": jordan_check(group, d) if d is not None else None,
                "theorem3prime": (
                    theorem3prime_probe(group, trivial_subgroup(group))
                    if options.get("theorem3prime")
                    else None
                ),
            }
        ).data

    def render_table(self, data: dict) -> str:
        rows = [
            ("group", data["group"]["name"] or "-"),
            ("order", data["group"]["order"]),
            ("abelian normal subgroup", data["witness"]["abelian_normal_subgroup"]["order"]),
            ("jordan index", data["jordan_index"]),
        ]
        if data["d"] is not None:
            rows.append((f"index <= {data['d']}", yes_no(data["within"])))
        if (matrix := data["theorem3prime"]) is not None:
            rows.append((f"index <= d({matrix['n']}) = {matrix['bound']}", yes_no(matrix["within_bound"])))
        return render_rows(rows)
