import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from sympy import primefactors

from group_core.domain import FiniteGroup
from group_core.factory import GroupFactory
from group_core.services import (all_subgroups, composition_factors,
                                 direct_product, frattini_check, is_abelian,
                                 normal_subgroups, quotient)
from jordan.services import jordan_index

from .domain import HomFamily
from .services import (check_R, check_R1, check_R2, goursat_witness,
                       independence_subgroup, lemma2_verdict, normalize,
                       restrict_family)

logger = logging.getLogger("project")

MAX_CORPUS_ORDER = 200
MAX_CORPUS_HOMS = 4
MAXIMALITY_ORDER = 100

# named groups the corpus draws from, with their orders
BASE_GROUPS: tuple[tuple[str, int], ...] = (
    *((f"cyclic:{n}", n) for n in range(1, 13)),
    *((f"dihedral:{n}", 2 * n) for n in range(3, 11)),
    *((f"symmetric:{n}", [1, 2, 6, 24, 120][n - 1]) for n in range(2, 6)),
    ("alternating:4", 12),
    ("alternating:5", 60),
    ("klein", 4),
)


@dataclass(frozen=True)
class CorpusFamily:
    seed: int
    index: int
    name: str
    family: HomFamily


@dataclass(frozen=True)
class CorpusAudit:
    """
    Outcome of every property check on one corpus family.
    """

    seed: int
    index: int
    name: str
    order: int
    homs: int
    satisfies_R: bool
    criteria_agree: bool
    lemma2_applies: bool
    lemma2_sound: bool
    gamma_prime_ok: bool
    maximality_checked: bool
    goursat_ok: bool
    frattini_triples: int
    frattini_ok: bool
    jordan_holder_ok: bool
    jordan_ok: bool
    findings: tuple[str, ...] = field(default=())


@lru_cache(maxsize=64)
def _named(named: str, cap: int | None = None) -> FiniteGroup:
    return GroupFactory.build_named(named, cap=cap)


@lru_cache(maxsize=256)
def _product(first: str, second: str, cap: int | None = None) -> FiniteGroup:
    return direct_product(_named(first, cap), _named(second, cap), cap=cap)


def _pick_group(rng: random.Random, cap: int | None) -> tuple[str, FiniteGroup]:
    first, first_order = rng.choice(BASE_GROUPS)
    if rng.random() < 0.5:
        partners = [(n, o) for n, o in BASE_GROUPS if first_order * o <= MAX_CORPUS_ORDER and o > 1]
        if partners and first_order > 1:
            second, _ = rng.choice(partners)
            return f"{first} x {second}", _product(first, second, cap)
    return first, _named(first, cap)


def build_corpus_family(seed: int, index: int, cap: int | None = None) -> CorpusFamily:
    """
    Family number ``index`` of the corpus for ``seed``: a small group and up to
    four projections onto quotients by randomly chosen normal subgroups.
    """
    rng = random.Random(f"{seed}:{index}")
    name, domain = _pick_group(rng, cap)
    candidates = normal_subgroups(domain)

    homs, kernel_orders = [], []
    for _ in range(rng.randint(1, MAX_CORPUS_HOMS)):
        N = rng.choice(candidates)
        homs.append(quotient(domain, N).projection)
        kernel_orders.append(N.order)

    labels = tuple(f"rho{i}" for i in range(1, len(homs) + 1))
    family = HomFamily(domain, tuple(homs), labels, name=f"{name} / {kernel_orders}")
    return CorpusFamily(seed=seed, index=index, name=family.name, family=family)


def build_corpus(seed: int, samples: int, cap: int | None = None) -> list[CorpusFamily]:
    corpus = [build_corpus_family(seed, index, cap) for index in range(samples)]
    logger.info("Built corpus of %s families for seed %s", samples, seed)
    return corpus


def audit_family(entry: CorpusFamily) -> CorpusAudit:
    """
    Runs the criterion equivalence, Lemma 2 soundness, Gamma' maximality
    (exhaustive up to order 100), Goursat soundness, Frattini triples and
    Jordan-Holder agreement on one corpus family.
    """
    family = normalize(entry.family)
    domain = family.domain
    findings: list[str] = []

    def finding(message: str) -> None:
        logger.error("corpus %s:%s %s: %s", entry.seed, entry.index, entry.name, message)
        findings.append(message)

    r, r1, r2 = check_R(family), check_R1(family), check_R2(family)
    criteria_agree = r == r1 == r2
    if not criteria_agree:
        finding(f"(R)={r}, (R1)={r1}, (R2)={r2}")

    verdict = lemma2_verdict(family)
    lemma2_sound = not verdict.applies or r
    if not lemma2_sound:
        finding("condition (D) holds for a dependent family")

    gamma_prime = independence_subgroup(family)
    gamma_prime_ok = check_R(restrict_family(family, gamma_prime))
    if not gamma_prime_ok:
        finding("restriction to Gamma' is not independent")

    maximality_checked = domain.order <= MAXIMALITY_ORDER
    if maximality_checked:
        for H in all_subgroups(domain):
            if not H <= gamma_prime and check_R(restrict_family(family, H)):
                gamma_prime_ok = False
                finding(f"subgroup of order {H.order} is independent but not inside Gamma'")

    goursat_ok = True
    for i, j in combinations(family.labels, 2):
        pair = HomFamily(domain, (family.hom(i), family.hom(j)), (i, j))
        witness = goursat_witness(family, i, j)
        if (witness is None) != check_R(pair):
            goursat_ok = False
            finding(f"Goursat witness for ({i}, {j}) disagrees with (R)")
        elif witness is not None:
            rho_i, rho_j = family.hom(i), family.hom(j)
            if witness.quotient.order == 1 or any(
                witness.f_i(rho_i(x)) != witness.f_j(rho_j(x)) for x in domain
            ):
                goursat_ok = False
                finding(f"Goursat witness for ({i}, {j}) is unsound")

    frattini_triples, frattini_ok = 0, True
    for I in normal_subgroups(domain):
        for p in primefactors(I.order):
            frattini_triples += 1
            if not frattini_check(domain, I, p).holds:
                frattini_ok = False
                finding(f"Frattini fails for |I|={I.order}, p={p}")

    rng = random.Random(f"{entry.seed}:{entry.index}:series")
    jordan_holder_ok = composition_factors(domain) == composition_factors(domain, rng)
    if not jordan_holder_ok:
        finding("two composition series give different factors")

    jordan_ok = (jordan_index(domain)[0] == 1) == is_abelian(domain)
    if not jordan_ok:
        finding("Jordan index 1 does not match commutativity")

    return CorpusAudit(
        seed=entry.seed,
        index=entry.index,
        name=entry.name,
        order=domain.order,
        homs=len(family),
        satisfies_R=r,
        criteria_agree=criteria_agree,
        lemma2_applies=verdict.applies,
        lemma2_sound=lemma2_sound,
        gamma_prime_ok=gamma_prime_ok,
        maximality_checked=maximality_checked,
        goursat_ok=goursat_ok,
        frattini_triples=frattini_triples,
        frattini_ok=frattini_ok,
        jordan_holder_ok=jordan_holder_ok,
        jordan_ok=jordan_ok,
        findings=tuple(findings),
    )
