import logging

from sympy import isprime, multiplicity

from group_core.domain import FiniteGroup
from group_core.services import (image_of, is_normal, join, normal_closure,
                                 plus_subgroup, quotient, restrict)
from group_core.utils import concat
from jordan.services import frobenius_bound, jordan_index

from .domain import (BaseChangeIndex, BaseChangeReport, HomFamily,
                     InertiaAssignment, SemistableIndex, SemistableReport)
from .exceptions import InvalidFamily, SemistabilityViolated
from .services import (diagonal_image, lemma2_verdict, quotient_family,
                       require_surjective)

logger = logging.getLogger("project")


def _is_power_of(order: int, ell: int) -> bool:
    return order == ell ** multiplicity(ell, order)


def label_prime(label: str) -> int:
    try:
        ell = int(label)
    except ValueError:
        raise InvalidFamily(f"label {label!r} is not a prime")
    if not isprime(ell):
        raise InvalidFamily(f"label {label!r} is not a prime")
    return ell


def local_closure(family: HomFamily, inertia: InertiaAssignment, label: str) -> FiniteGroup:
    """
    Normal closure in the domain of the inertia subgroups designated for
    ``label`` at places of residue characteristic equal to the label.
    """
    ell = label_prime(label)
    seed = [
        g
        for place, I in inertia.designated(label)
        if place.p == ell
        for g in I.generators
    ]
    return normal_closure(family.domain, seed)


def semistable_decompose(
    family: HomFamily, inertia: InertiaAssignment, dimension: int | None = None
) -> SemistableReport:
    """
    A_l, G+_l and H_l = G_l / G+_l·A_l for every index of a surjective family
    labelled by primes, with the unramified check on H_l, the containment of
    the A_l in the diagonal image and the Lemma 2 verdict on the family
    reduced modulo the A_l.
    """
    require_surjective(family)
    findings: list[str] = []
    indices = []
    a_groups: dict[str, FiniteGroup] = {}

    for label, hom in family:
        ell = label_prime(label)
        for place, I in inertia.designated(label):
            if place.p != ell and not _is_power_of(image_of(hom, I).order, ell):
                raise SemistabilityViolated(
                    f"inertia at {place.place} (p={place.p}) maps onto a group of order "
                    f"{image_of(hom, I).order} under {label}"
                )

        N = local_closure(family, inertia, label)
        A = image_of(hom, N)
        plus = plus_subgroup(hom.codomain, ell)
        projection = quotient(hom.codomain, join(hom.codomain, plus, A)).projection
        H = projection.codomain
        a_groups[label] = A

        lemma5_ok = all(
            projection(hom(x)) == H.identity
            for _, I in inertia.designated(label)
            for x in I.generators
        )
        if not lemma5_ok:
            message = f"inertia is ramified in H_{label}"
            logger.error(message)
            findings.append(message)
        if H.order % ell == 0:
            message = f"|H_{label}| = {H.order} is divisible by {ell}"
            logger.error(message)
            findings.append(message)

        index, _ = jordan_index(H)
        jordan_ok = None if dimension is None else index <= frobenius_bound(dimension)
        if jordan_ok is False:
            message = f"Jordan index {index} of H_{label} exceeds d({dimension})"
            logger.error(message)
            findings.append(message)

        indices.append(
            SemistableIndex(
                label=label,
                ell=ell,
                a=A,
                plus=plus,
                h=H,
                lemma5_ok=lemma5_ok,
                jordan_index=index,
                jordan_ok=jordan_ok,
            )
        )

    lemma4_ok = _contains_local_images(family, a_groups)
    if not lemma4_ok:
        logger.warning("Diagonal image does not contain the product of the A_l")

    reduced = lemma2_verdict(quotient_family(family, a_groups))
    findings.extend(reduced.findings)
    logger.info("Semistable decomposition of %s indices, lemma4=%s", len(indices), lemma4_ok)

    return SemistableReport(
        indices=tuple(indices),
        lemma4_ok=lemma4_ok,
        reduced_lemma2=reduced,
        dimension=dimension,
        findings=tuple(findings),
    )


def _contains_local_images(family: HomFamily, a_groups: dict[str, FiniteGroup]) -> bool:
    """
    Whether rho(Gamma) contains each A_l placed in its own factor.
    """
    diagonal = diagonal_image(family)
    for position, (label, hom) in enumerate(family):
        for a in a_groups[label].generators:
            parts = [h.codomain.identity for h in family.homs]
            parts[position] = a
            if concat(parts) not in diagonal:
                return False
    return True


def base_change_check(
    family: HomFamily, inertia: InertiaAssignment, subgroup: FiniteGroup
) -> BaseChangeReport:
    """
    Finite shadow of passing to an unramified extension: ``subgroup`` plays
    Gamma_1 and must contain the normal closure of every designated inertia
    subgroup. Per index, compares G'_l = rho_l(Gamma_1) with G_l.
    """
    require_surjective(family)
    if not subgroup <= family.domain:
        raise InvalidFamily("base change subgroup must lie in the domain")
    if not is_normal(family.domain, subgroup):
        raise InvalidFamily("base change subgroup must be normal in the domain")

    indices, findings = [], []
    for label, hom in family:
        ell = label_prime(label)
        for place, I in inertia.designated(label):
            if not normal_closure(family.domain, I.generators) <= subgroup:
                raise InvalidFamily(f"inertia at {place.place} is not contained in the subgroup")

        G = hom.codomain
        N = local_closure(family, inertia, label)
        A = image_of(hom, N)
        plus = plus_subgroup(G, ell)

        # conjugates of inertia are inertia groups too, so Gamma_1 sees all of N
        G1 = image_of(hom, subgroup)
        A1 = image_of(restrict(hom, subgroup), normal_closure(subgroup, N.generators))
        plus1 = plus_subgroup(G1, ell)

        entry = BaseChangeIndex(
            label=label,
            ell=ell,
            index=G.order // G1.order,
            plus_equal=plus1 == plus,
            a_equal=A1 == A,
            product_ok=_product_order(plus1, A1) == G1.order,
            contained=G1 <= join(G, plus, A),
        )
        if entry.applies and not (entry.plus_equal and entry.a_equal and entry.product_ok):
            message = f"base change conclusion fails for {label}"
            logger.error(message)
            findings.append(message)
        indices.append(entry)

    return BaseChangeReport(indices=tuple(indices), findings=tuple(findings))


def _product_order(A: FiniteGroup, B: FiniteGroup) -> int:
    return A.order * B.order // len(A.element_set & B.element_set)
