from django.core.management.base import CommandParser

from cli.base import LabCommand
from cli.config import RunConfig
from cli.utils import dispatch, render_rows
from independence.tasks import audit_corpus_family

CHECKS = (
    ("criteria_agree", "(R) = (R1) = (R2)"),
    ("lemma2_sound", "lemma 2 soundness"),
    ("gamma_prime_ok", "Gamma' maximality"),
    ("goursat_ok", "Goursat witnesses"),
    ("frattini_ok", "Frattini argument"),
    ("jordan_holder_ok", "Jordan-Holder"),
    ("jordan_ok", "Jordan index 1 = abelian"),
)


class Command(LabCommand):
    help = "Audit a seeded corpus of small families against every property check"

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--samples", type=int, default=500)

    def compute(self, config: RunConfig, **options) -> dict:
        calls = [(config.seed, index, config.order_cap) for index in range(options["samples"])]
        audits = dispatch(audit_corpus_family, calls, config.workers)
        return {
            "seed": config.seed,
            "samples": len(audits),
            "independent": sum(a["satisfies_R"] for a in audits),
            "lemma2_applies": sum(a["lemma2_applies"] for a in audits),
            "maximality_checked": sum(a["maximality_checked"] for a in audits),
            "frattini_triples": sum(a["frattini_triples"] for a in audits),
            "failures": {key: sum(not a[key] for a in audits) for key, _ in CHECKS},
            "findings": [
                f"{a['index']} {a['name']}: {message}" for a in audits for message in a["findings"]
            ],
        }

    def render_table(self, data: dict) -> str:
        rows = [
            ("seed", data["seed"]),
            ("families", data["samples"]),
            ("independent", data["independent"]),
            ("condition (D) holds", data["lemma2_applies"]),
            ("maximality checked", data["maximality_checked"]),
            ("Frattini triples", data["frattini_triples"]),
        ]
        rows += [(f"{title} failures", data["failures"][key]) for key, title in CHECKS]
        lines = [render_rows(rows)] + [f"finding: {message}" for message in data["findings"]]
        return "\n".join(lines)
