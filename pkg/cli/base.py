import json
import logging
from typing import Any

from django.core.management.base import BaseCommand, CommandError, CommandParser
from rest_framework.exceptions import APIException

from group_core.domain import FiniteGroup
from group_core.factory import GroupFactory
from group_core.serializers import load_group

from .config import RunConfig, load_config
from .utils import read_json, render_machine

logger = logging.getLogger("project")


def describe(exc: APIException) -> str:
    """
    ``<code>: <detail>`` for any error of the DRF hierarchy.
    """
    detail = exc.detail
    if isinstance(detail, (list, dict)):
        return f"{exc.default_code}: {json.dumps(detail)}"
    return f"{getattr(detail, 'code', None) or exc.default_code}: {detail}"


class LabCommand(BaseCommand):
    """
    Base of every subcommand. Subclasses implement ``compute`` returning
    serializer data and ``render_table`` for the text form; output is
    written only once it is complete.
    """

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--machine", action="store_true", help="Print machine-readable JSON")
        parser.add_argument("--seed", type=int, help="Seed for seeded choices")
        parser.add_argument("--cap", type=int, help="Order cap for every enumeration")
        parser.add_argument("--precision", type=int, help="Initial bracket width in bits")
        parser.add_argument("--workers", type=int, help="Worker threads for parallel work")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser: CommandParser) -> None:
        pass

    def handle(self, *args, **options) -> None:
        try:
            config = load_config(options)
            data = self.compute(config, **options)
            output = render_machine(data).decode() if config.machine else self.render_table(data)
        except APIException as exc:
            logger.error("%s failed: %s", self.__module__.rsplit(".", 1)[-1], describe(exc))
            raise CommandError(describe(exc))
        self.stdout.write(output)

    def compute(self, config: RunConfig, **options) -> Any:
        raise NotImplementedError

    def render_table(self, data: Any) -> str:
        raise NotImplementedError


class GroupInputCommand(LabCommand):
    """
    Subcommand reading one group, from a file or ``--named kind:params``.
    """

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("group_file", nargs="?", help="Group file (JSON)")
        parser.add_argument("--named", help="Named group, e.g. special_linear:2,5")

    def load_group(self, config: RunConfig, options: dict[str, Any]) -> FiniteGroup:
        if options.get("named"):
            return GroupFactory.build_named(options["named"], cap=config.order_cap)
        if not options.get("group_file"):
            raise CommandError("usage: give a group file or --named")
        return load_group(read_json(options["group_file"]), cap=config.order_cap)
