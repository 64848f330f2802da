import json
from io import StringIO
from math import factorial

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from rest_framework.renderers import JSONRenderer

S3 = {"degree": 3, "generators": [[2, 1, 3], [2, 3, 1]], "name": "S3"}
S3_FAMILY = {
    "domain": S3,
    "homs": [{"label": "3", "codomain": S3, "images": [[2, 1, 3], [2, 3, 1]]}],
}
S3_INERTIA = {"places": [{"place": "v3", "p": 3, "subgroup_generators_per_label": {"3": [[2, 3, 1]]}}]}
C3 = {"degree": 3, "generators": [[2, 3, 1]], "name": "C3"}
C3_INTO_S3 = {"domain": C3, "homs": [{"label": "3", "codomain": S3, "images": [[2, 3, 1]]}]}


# sigma / artin
def test_sigma_table(run) -> None:
    lines = run("sigma", ell=5, bound=10**6).splitlines()
    assert len(lines) == 6
    assert lines[-1].endswith("976500")
    assert lines[1].startswith("A1(5)")


def test_sigma_machine(run_machine) -> None:
    data = run_machine("sigma", ell=7, bound=3 * 10**7)
    assert [e["order"] for e in data["entries"]] == [7, 168, 58800, 1876896, 5663616, 20176632]


def test_sigma_rejects_small_ell(run) -> None:
    with pytest.raises(CommandError, match="invalid"):
        run("sigma", ell=3, bound=100)


def test_artin(run) -> None:
    assert run("artin", ells="5,7", bound=10**8).splitlines()[-1] == "disjoint: yes"


def test_artin_machine(run_machine) -> None:
    data = run_machine("artin", ells="5,7,11", bound=10**6)
    assert [(p["ell1"], p["ell2"]) for p in data["pairs"]] == [(5, 7), (5, 11), (7, 11)]
    assert data["disjoint"] is True


def test_artin_grid(run) -> None:
    lines = run("artin", ells="11,5,7", bound=10**6).splitlines()
    assert lines[0].split() == ["5", "7", "11"]
    assert lines[1].split() == ["5", "-", "yes", "yes"]
    assert lines[3].split() == ["11", "yes", "yes", "-"]
    assert lines[-1] == "disjoint: yes"


@pytest.mark.parametrize("ells", ["5,5", "5", "7,5,7"])
def test_artin_needs_distinct_primes(run, ells) -> None:
    with pytest.raises(CommandError, match="^same_prime"):
        run("artin", ells=ells, bound=10**6)


# bounds
def test_bounds(run, run_machine) -> None:
    assert run("bounds", n=2).splitlines()[-1].endswith("390625")
    assert run_machine("bounds", n=1)["frobenius"] == 15
    data = run_machine("bounds", n=71)
    assert data["collins"] == factorial(72)
    assert len(str(data["collins"])) == 104


def test_bounds_precision_is_a_usage_error(run) -> None:
    with pytest.raises(CommandError, match="invalid"):
        run("bounds", n=2, precision=4)


# factors / jordan
def test_factors_named(run_machine) -> None:
    data = run_machine("factors", named="special_linear:2,5", ell=5)
    assert [f["label"] for f in data["factors"]] == ["C2", "A1(5)"]
    assert data["lemma1"]["holds"] is True


def test_factors_file(run, write_file) -> None:
    out = run("factors", write_file("s3.json", S3))
    assert out.startswith("S3 of order 6")
    assert "simple quotients: C2" in out


def test_factors_needs_input(run) -> None:
    with pytest.raises(CommandError, match="usage"):
        run("factors")


def test_jordan(run_machine) -> None:
    data = run_machine("jordan", named="symmetric:3", d=2)
    assert data["jordan_index"] == 2
    assert data["within"] is True
    assert run_machine("jordan", named="alternating:5")["within"] is None


def test_jordan_theorem3prime(run, run_machine, write_file) -> None:
    path = write_file("torus.json", {"n": 2, "p": 5, "matrices": [[[2, 0], [0, 1]]]})
    data = run_machine("jordan", path, theorem3prime=True)
    assert data["theorem3prime"] == {
        "n": 2,
        "p": 5,
        "group_order": 4,
        "jordan_index": 1,
        "bound": 390625,
        "within_bound": True,
    }
    assert run("jordan", path, theorem3prime=True).splitlines()[-1].split()[-1] == "yes"
    assert run_machine("jordan", path)["theorem3prime"] is None


def test_jordan_theorem3prime_needs_order_prime_to_p(run) -> None:
    with pytest.raises(CommandError, match="^characteristic_divides_order"):
        run("jordan", named="special_linear:2,5", theorem3prime=True)


# indep / scenario
def test_scenario_report(run_machine) -> None:
    data = run_machine("scenario", p=3, M=4)
    assert data["report"]["ro_index"] == 729
    assert data["semistable"] is None


def test_scenario_file_feeds_indep(run_machine, tmp_path) -> None:
    """
    Test that the written family file gives the same report through indep.
    """
    path = tmp_path / "truncation.json"
    from_scenario = run_machine("scenario", p=3, M=3, out=str(path))
    from_file = run_machine("indep", str(path))
    assert from_file["report"] == from_scenario["report"]
    assert from_file["report"]["ro_index"] == 27


def test_indep_with_inertia(run_machine, write_file) -> None:
    data = run_machine(
        "indep", write_file("family.json", S3_FAMILY), inertia=write_file("inertia.json", S3_INERTIA), dimension=1
    )
    (entry,) = data["semistable"]["indices"]
    assert (entry["a"]["order"], entry["plus"]["order"], entry["h"]["order"]) == (3, 3, 2)
    assert entry["jordan_ok"] is True


def test_indep_table(run, write_file) -> None:
    out = run("indep", write_file("family.json", S3_FAMILY), inertia=write_file("inertia.json", S3_INERTIA))
    assert "lemma 2 after reduction: independent" in out
    assert "finding:" not in out


def test_indep_replaces_codomains_by_images(run_machine, write_file) -> None:
    family = write_file("family.json", C3_INTO_S3)
    without = run_machine("indep", family)
    with_inertia = run_machine("indep", family, inertia=write_file("inertia.json", S3_INERTIA))
    assert with_inertia["report"] == without["report"]
    (entry,) = with_inertia["semistable"]["indices"]
    assert entry["a"]["order"] == 3


# errors
def test_malformed_file(run, write_file) -> None:
    with pytest.raises(CommandError, match="^parse_error"):
        run("factors", write_file("broken.json", "{not json"))


def test_undecodable_file(run, write_file) -> None:
    with pytest.raises(CommandError, match="^parse_error"):
        run("factors", write_file("binary.json", b"\xff\xfe\x00\x01"))


def test_missing_file(run) -> None:
    with pytest.raises(CommandError, match="^parse_error"):
        run("indep", "/nonexistent/family.json")


def test_cap_exceeded(run) -> None:
    with pytest.raises(CommandError, match="^cap_exceeded"):
        run("factors", named="symmetric:5", cap=100)


def test_scenario_honours_cap(run) -> None:
    with pytest.raises(CommandError, match="^cap_exceeded"):
        run("scenario", p=3, M=5, cap=100)


def test_corpus_honours_cap(run) -> None:
    with pytest.raises(CommandError, match="^cap_exceeded"):
        run("corpus", samples=5, cap=1)


@pytest.mark.parametrize("options", [{"cap": 0}, {"workers": 0}, {"seed": -1}])
def test_invalid_config(run, options) -> None:
    with pytest.raises(CommandError):
        run("bounds", n=1, **options)


def test_errors_print_nothing(write_file) -> None:
    """
    Test that a failing command leaves stdout empty.
    """
    out = StringIO()
    inertia = {"places": [{"place": "v2", "p": 2, "subgroup_generators_per_label": {"3": [[2, 1, 3]]}}]}
    with pytest.raises(CommandError, match="^semistability_violated"):
        call_command(
            "indep", write_file("family.json", S3_FAMILY), inertia=write_file("inertia.json", inertia), stdout=out
        )
    assert out.getvalue() == ""


# machine output
@pytest.mark.parametrize(
    "name, args, options",
    [
        ("sigma", (), {"ell": 5, "bound": 10**6}),
        ("bounds", (), {"n": 71}),
        ("scenario", (), {"p": 3, "M": 4}),
        ("factors", (), {"named": "general_linear:2,7", "ell": 7}),
    ],
)
def test_machine_output_round_trips(run, name, args, options) -> None:
    out = run(name, *args, machine=True, **options).rstrip("\n")
    assert JSONRenderer().render(json.loads(out)).decode() == out


def test_corpus_is_identical_across_workers(run) -> None:
    single = run("corpus", samples=24, workers=1, machine=True)
    threaded = run("corpus", samples=24, workers=4, machine=True)
    assert single == threaded
    data = json.loads(single)
    assert data["samples"] == 24
    assert all(count == 0 for count in data["failures"].values())
    assert data["findings"] == []


def test_corpus_records_seed(run_machine) -> None:
    first = run_machine("corpus", samples=10, seed=1)
    second = run_machine("corpus", samples=10, seed=1)
    assert first == second
    assert first["seed"] == 1
