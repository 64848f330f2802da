import logging
import random
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Mapping

from sympy import isprime

from group_core.domain import FactorKind, FiniteGroup
from group_core.exceptions import InvalidPrime
from group_core.factory import GroupFactory
from group_core.services import (assemble, compose, corestrict, image,
                                 image_of, intersection, is_surjective, join,
                                 kernel, make_hom, quotient, restrict,
                                 simple_quotients, subgroup_from_elements)
from group_core.utils import concat

from .domain import (GoursatWitness, HomFamily, IndependenceReport,
                     IsolatedDefect, Lemma2Verdict, SharedQuotient,
                     SpliceResult)
from .exceptions import InvalidFamily, NotSurjective

logger = logging.getLogger("project")


# family plumbing
def normalize(family: HomFamily) -> HomFamily:
    """
    Replaces every codomain by the image, so all homomorphisms are onto.
    """
    return HomFamily(
        family.domain, tuple(corestrict(h) for h in family.homs), family.labels, family.name
    )


def require_surjective(family: HomFamily) -> None:
    for label, hom in family:
        if not is_surjective(hom):
            raise NotSurjective(f"homomorphism {label} is not onto {hom.codomain!r}")


def restrict_family(family: HomFamily, H: FiniteGroup) -> HomFamily:
    return HomFamily(H, tuple(restrict(h, H) for h in family.homs), family.labels)


def quotient_family(family: HomFamily, normal_subgroups: Mapping[str, FiniteGroup]) -> HomFamily:
    """
    Composes each rho_i with G_i -> G_i/A_i; labels without an entry keep their
    homomorphism.
    """
    unknown = set(normal_subgroups) - set(family.labels)
    if unknown:
        raise InvalidFamily(f"unknown labels {sorted(unknown)}")

    homs = []
    for label, hom in family:
        A = normal_subgroups.get(label)
        homs.append(hom if A is None else compose(hom, quotient(hom.codomain, A).projection))
    return HomFamily(family.domain, tuple(homs), family.labels, family.name)


def splice_families(first: HomFamily, second: HomFamily, seed: int) -> SpliceResult:
    """
    Mixes two families over the same domain and labels, taking each index from
    one of them by a seeded choice.
    """
    if first.domain != second.domain:
        raise InvalidFamily("spliced families must share their domain")
    if first.labels != second.labels:
        raise InvalidFamily("spliced families must share their labels")

    rng = random.Random(f"splice:{seed}")
    picks = tuple(rng.randrange(2) for _ in first.labels)
    homs = tuple(
        (first, second)[pick].homs[i] for i, pick in enumerate(picks)
    )
    logger.info("Spliced %s indices with picks %s", len(picks), picks)
    return SpliceResult(family=HomFamily(first.domain, homs, first.labels), picks=picks)


# images and orders
@lru_cache(maxsize=1024)
def diagonal_image(family: HomFamily) -> FiniteGroup:
    """
    rho(Gamma) inside the product of the codomains, on the disjoint union of
    their points. At most |Gamma| elements.
    """
    degree = sum(h.codomain.degree for h in family.homs)
    gens = tuple(dict.fromkeys(concat(h(g) for h in family.homs) for g in family.domain.generators))
    elements = {concat(h(x) for h in family.homs) for x in family.domain.elements}
    return assemble(degree, gens, elements, name="diagonal")


def product_order(family: HomFamily) -> int:
    return prod(image(h).order for h in family.homs)


def ro_index(family: HomFamily) -> int:
    """
    (prod rho_i(Gamma) : rho(Gamma)).
    """
    return product_order(family) // diagonal_image(family).order


def check_R(family: HomFamily) -> bool:
    return ro_index(family) == 1


@lru_cache(maxsize=1024)
def kernels(family: HomFamily) -> tuple[FiniteGroup, ...]:
    return tuple(kernel(h) for h in family.homs)


@lru_cache(maxsize=1024)
def complementary_kernels(family: HomFamily) -> tuple[FiniteGroup, ...]:
    """
    N'_i, the intersection of the kernels N_j for j != i (the whole domain
    when there is no other index).
    """
    N = kernels(family)
    result = []
    for i in range(len(N)):
        elements = family.domain.element_set
        for j, Nj in enumerate(N):
            if j != i:
                elements = elements & Nj.element_set
        result.append(subgroup_from_elements(family.domain, elements))
    return tuple(result)


def check_R1(family: HomFamily) -> bool:
    """
    Gamma = N_i·N'_i for every i.
    """
    order = family.domain.order
    return all(
        Ni.order * Npi.order // len(intersection(Ni, Npi)) == order
        for Ni, Npi in zip(kernels(family), complementary_kernels(family))
    )


def check_R2(family: HomFamily) -> bool:
    """
    Gamma is generated by the N'_i.
    """
    return join(family.domain, *complementary_kernels(family)).order == family.domain.order


def independence_subgroup(family: HomFamily) -> FiniteGroup:
    """
    Gamma', the subgroup generated by the N'_i. The family restricted to it
    always satisfies (R); a failure is logged as an error.
    """
    gamma_prime = join(family.domain, *complementary_kernels(family))
    if not check_R(restrict_family(family, gamma_prime)):
        logger.error("Restriction to Gamma' = %r is not independent", gamma_prime)
    return gamma_prime


def independence_index(family: HomFamily) -> int:
    return family.domain.order // independence_subgroup(family).order


def isolated_defect(family: HomFamily, label: str) -> int:
    """
    |G_i / rho_i(N'_i)|.
    """
    i = family.labels.index(label)
    hom = family.homs[i]
    return image(hom).order // image_of(hom, complementary_kernels(family)[i]).order


# pairwise criteria
def goursat_witness(family: HomFamily, i: str, j: str) -> GoursatWitness | None:
    """
    For a dependent pair, the common quotient A = G_i / rho_i(ker rho_j) with
    the two surjections onto it; None when the pair is independent.
    """
    rho_i, rho_j = corestrict(family.hom(i)), corestrict(family.hom(j))
    pair = HomFamily(family.domain, (rho_i, rho_j), (i, j))
    if check_R(pair):
        return None

    G_i, G_j = rho_i.codomain, rho_j.codomain
    shadow = image_of(rho_i, kernel(rho_j))
    projection = quotient(G_i, shadow).projection
    f_i = projection

    induced = {}
    for x in family.domain.elements:
        induced.setdefault(rho_j(x), f_i(rho_i(x)))
    f_j = make_hom(G_j, projection.codomain, [induced[g] for g in G_j.generators])

    mismatches = [x for x in family.domain.elements if f_i(rho_i(x)) != f_j(rho_j(x))]
    if mismatches or projection.codomain.order == 1:
        logger.error("Goursat witness for (%s, %s) fails on %s elements", i, j, len(mismatches))

    return GoursatWitness(i=i, j=j, quotient=projection.codomain, f_i=f_i, f_j=f_j)


def goursat_witnesses(family: HomFamily) -> tuple[GoursatWitness, ...]:
    pairs = (goursat_witness(family, i, j) for i, j in combinations(family.labels, 2))
    return tuple(w for w in pairs if w is not None)


def lemma2_verdict(family: HomFamily) -> Lemma2Verdict:
    """
    Condition (D): no simple quotient of rho_i(Gamma) is isomorphic to one of
    rho_j(Gamma) for i != j. Factors are compared by kind and order; any pair
    involving an unidentified factor is flagged and blocks the verdict.
    """
    quotients = {label: simple_quotients(image(h)) for label, h in family}

    collisions, flagged = [], []
    for i, j in combinations(family.labels, 2):
        for factor in quotients[i]:
            if factor in quotients[j]:
                collisions.append(SharedQuotient(i, j, factor))
        for factor in quotients[i] + quotients[j]:
            if factor.kind == FactorKind.UNIDENTIFIED:
                logger.warning("Comparison (%s, %s) involves %s", i, j, factor.label)
                flagged.append(SharedQuotient(i, j, factor))

    findings = []
    verdict = Lemma2Verdict(collisions=tuple(collisions), flagged=tuple(flagged))
    if verdict.applies and not check_R(family):
        message = f"condition (D) holds but the family {family.name or list(family.labels)} is dependent"
        logger.error(message)
        findings.append(message)

    return Lemma2Verdict(collisions=verdict.collisions, flagged=verdict.flagged, findings=tuple(findings))


# scenarios
def truncation_scenario(p: int, M: int, *, cap: int | None = None) -> HomFamily:
    """
    Gamma = Z/p^M with its reductions onto Z/p^i for i = 1..M. The index
    (prod : image) is p^(M(M-1)/2), unbounded in M.
    """
    if p == 2 or not isprime(p):
        raise InvalidPrime(f"{p} is not an odd prime")
    if M < 1:
        raise InvalidFamily(f"M must be >= 1, got {M}")

    domain = GroupFactory.build_named(f"cyclic:{p**M}", cap=cap)
    homs = []
    for i in range(1, M + 1):
        target = GroupFactory.build_named(f"cyclic:{p**i}", cap=cap)
        homs.append(make_hom(domain, target, target.generators))
    labels = tuple(f"{p}^{i}" for i in range(1, M + 1))
    return HomFamily(domain, tuple(homs), labels, name=f"truncation({p},{M})")


# report
def analyse(family: HomFamily, seed: int | None = None) -> IndependenceReport:
    """
    Every criterion on the surjective version of ``family``, with the
    equivalences and the Gamma' postcondition checked on the way.
    """
    family = normalize(family)
    findings = []

    satisfies_R, satisfies_R1, satisfies_R2 = check_R(family), check_R1(family), check_R2(family)
    if not satisfies_R == satisfies_R1 == satisfies_R2:
        message = f"(R)={satisfies_R}, (R1)={satisfies_R1}, (R2)={satisfies_R2} disagree"
        logger.error(message)
        findings.append(message)

    gamma_prime = independence_subgroup(family)
    if not check_R(restrict_family(family, gamma_prime)):
        findings.append("restriction to Gamma' is not independent")

    gamma_prime_image = diagonal_image(restrict_family(family, gamma_prime)).order
    N_prime = complementary_kernels(family)
    pieces = prod(image_of(h, Npi).order for h, Npi in zip(family.homs, N_prime))
    if pieces != gamma_prime_image:
        message = f"prod |rho_i(N'_i)| = {pieces} but |rho(Gamma')| = {gamma_prime_image}"
        logger.error(message)
        findings.append(message)

    lemma2 = lemma2_verdict(family)
    findings.extend(lemma2.findings)

    goursat = goursat_witnesses(family)
    dependent_pairs = {
        (i, j)
        for i, j in combinations(family.labels, 2)
        if not check_R(HomFamily(family.domain, (family.hom(i), family.hom(j)), (i, j)))
    }
    if {(w.i, w.j) for w in goursat} != dependent_pairs:
        message = "Goursat witnesses do not match the dependent pairs"
        logger.error(message)
        findings.append(message)

    diagonal = diagonal_image(family)
    report = IndependenceReport(
        labels=family.labels,
        satisfies_R=satisfies_R,
        satisfies_R1=satisfies_R1,
        satisfies_R2=satisfies_R2,
        product_order=product_order(family),
        diagonal_order=diagonal.order,
        gamma_prime=gamma_prime,
        independence_index=family.domain.order // gamma_prime.order,
        isolated_defects=tuple(
            IsolatedDefect(label, isolated_defect(family, label)) for label in family.labels
        ),
        lemma2=lemma2,
        goursat=goursat,
        findings=tuple(findings),
        seed=seed,
    )
    logger.info(
        "Analysed family %s: |Gamma|=%s, index %s, (R)=%s",
        family.name or list(family.labels),
        family.domain.order,
        report.ro_index,
        satisfies_R,
    )
    return report
