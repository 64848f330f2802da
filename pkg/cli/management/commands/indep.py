from django.core.management.base import CommandParser

from cli.base import LabCommand
from cli.config import RunConfig
from cli.utils import read_json, render_rows, yes_no
from independence.semistable import semistable_decompose
from independence.serializers import (IndependenceReportSerializer,
                                      SemistableReportSerializer, load_family,
                                      load_inertia)
from independence.services import analyse, normalize


def render_report(data: dict) -> str:
    """
    Text form of an independence report, with the semistable part when present.
    """
    report = data["report"]
    rows = [
        ("labels", ", ".join(report["labels"])),
        ("(R) / (R1) / (R2)", " / ".join(yes_no(report[k]) for k in ("satisfies_R", "satisfies_R1", "satisfies_R2"))),
        ("product order", report["product_order"]),
        ("diagonal order", report["diagonal_order"]),
        ("index", report["ro_index"]),
        ("Gamma' order", report["gamma_prime"]["order"]),
        ("independence index", report["independence_index"]),
        ("lemma 2", report["lemma2"]["conclusion"]),
    ]
    rows += [(f"isolated defect {d['label']}", d["defect"]) for d in report["isolated_defects"]]
    rows += [(f"goursat {w['i']} / {w['j']}", w["quotient"]["order"]) for w in report["goursat"]]
    lines = [render_rows(rows)]

    semistable = data.get("semistable")
    if semistable:
        lines.append(
            render_rows(
                [("label", "A", "G+", "H", "unramified", "jordan index")]
                + [
                    (
                        entry["label"],
                        entry["a"]["order"],
                        entry["plus"]["order"],
                        entry["h"]["order"],
                        yes_no(entry["lemma5_ok"]),
                        entry["jordan_index"],
                    )
                    for entry in semistable["indices"]
                ]
            )
        )
        lines.append(f"local images inside the diagonal: {yes_no(semistable['lemma4_ok'])}")
        lines.append(f"lemma 2 after reduction: {semistable['reduced_lemma2']['conclusion']}")

    findings = report["findings"] + (semistable["findings"] if semistable else [])
    lines += [f"finding: {message}" for message in findings]
    return "\n".join(lines)


class Command(LabCommand):
    help = "Report on the independence of a family of homomorphisms"

    def add_command_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("family_file", help="Family file (JSON)")
        parser.add_argument("--inertia", help="Inertia assignment file (JSON)")
        parser.add_argument("--dimension", type=int, help="Matrix size n for the Jordan check on H_l")

    def compute(self, config: RunConfig, **options) -> dict:
        family = normalize(load_family(read_json(options["family_file"]), cap=config.order_cap))
        report = IndependenceReportSerializer(analyse(family, seed=config.seed)).data

        semistable = None
        if options.get("inertia"):
            inertia = load_inertia(read_json(options["inertia"]), family)
            semistable = SemistableReportSerializer(
                semistable_decompose(family, inertia, options.get("dimension"))
            ).data
        return {"family": family.name, "report": report, "semistable": semistable}

    def render_table(self, data: dict) -> str:
        return render_report(data)
