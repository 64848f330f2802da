import logging
from functools import lru_cache
from itertools import count
from math import gcd, prod
from typing import Iterator

from group_core.exceptions import InvariantViolated

from .domain import (FIXED_RANK, MIN_RANK, ArtinReport, Collision,
                     CyclicWitness, LieTypeSpec, OrderEntry, Series,
                     SigmaCatalogue, Witness, validate_ell)
from .exceptions import SamePrime

logger = logging.getLogger("project")

# degrees d of the factors (q^d - 1) for the untwisted exceptional groups
EXCEPTIONAL_DEGREES: dict[str, tuple[int, ...]] = {
    Series.G2: (2, 6),
    Series.F4: (2, 6, 8, 12),
    Series.E6: (2, 5, 6, 8, 9, 12),
    Series.E7: (2, 6, 8, 10, 12, 14, 18),
    Series.E8: (2, 8, 12, 14, 18, 20, 24, 30),
}


def q_exponent(spec: LieTypeSpec) -> int:
    """
    Exponent N of the power of q dividing the order (number of positive roots).
    """
    n = spec.rank
    match spec.series:
        case Series.A | Series.TWISTED_A:
            return n * (n + 1) // 2
        case Series.B | Series.C:
            return n * n
        case Series.D | Series.TWISTED_D:
            return n * (n - 1)
        case Series.TRIALITY_D4:
            return 12
        case Series.G2:
            return 6
        case Series.F4:
            return 24
        case Series.E6 | Series.TWISTED_E6:
            return 36
        case Series.E7:
            return 63
        case Series.E8:
            return 120
    raise ValueError(f"Unknown series {spec.series}")


def minimal_order_bound(spec: LieTypeSpec) -> int:
    """
    q^N, a lower bound for order_simple(spec); increasing in both rank and f.
    """
    return spec.q ** q_exponent(spec)


def order_simply_connected(spec: LieTypeSpec) -> int:
    """
    Order of the group of rational points of the simply connected form.
    """
    q, n = spec.q, spec.rank
    top = minimal_order_bound(spec)

    match spec.series:
        case Series.A:
            return top * prod(q**i - 1 for i in range(2, n + 2))
        case Series.TWISTED_A:
            return top * prod(q**i - (-1) ** i for i in range(2, n + 2))
        case Series.B | Series.C:
            return top * prod(q ** (2 * i) - 1 for i in range(1, n + 1))
        case Series.D:
            return top * (q**n - 1) * prod(q ** (2 * i) - 1 for i in range(1, n))
        case Series.TWISTED_D:
            return top * (q**n + 1) * prod(q ** (2 * i) - 1 for i in range(1, n))
        case Series.TRIALITY_D4:
            return top * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
        case Series.TWISTED_E6:
            return (
                top
                * (q**2 - 1)
                * (q**5 + 1)
                * (q**6 - 1)
                * (q**8 - 1)
                * (q**9 + 1)
                * (q**12 - 1)
            )
    return top * prod(q**d - 1 for d in EXCEPTIONAL_DEGREES[spec.series])


def center_order(spec: LieTypeSpec) -> int:
    q, n = spec.q, spec.rank

    match spec.series:
        case Series.A:
            return gcd(n + 1, q - 1)
        case Series.TWISTED_A:
            return gcd(n + 1, q + 1)
        case Series.B | Series.C | Series.E7:
            return gcd(2, q - 1)
        case Series.D:
            return gcd(4, q**n - 1)
        case Series.TWISTED_D:
            return gcd(4, q**n + 1)
        case Series.E6:
            return gcd(3, q - 1)
        case Series.TWISTED_E6:
            return gcd(3, q + 1)
    return 1


def order_simple(spec: LieTypeSpec) -> int:
    """
    Order of the simple group: simply connected order divided by the centre.
    """
    full, center = order_simply_connected(spec), center_order(spec)
    quotient, remainder = divmod(full, center)
    if remainder:
        raise InvariantViolated(f"centre order {center} does not divide |{spec}|")
    return quotient


def _ranks(series: Series) -> Iterator[int]:
    if series in FIXED_RANK:
        yield FIXED_RANK[series]
        return
    yield from count(MIN_RANK[series])


def iter_specs(ell: int, bound: int) -> Iterator[tuple[LieTypeSpec, int]]:
    """
    Yields every (spec, order) with order <= bound: ascending f within
    ascending rank within series, cutting a branch once q^N passes the bound.
    """
    for series in Series:
        for rank in _ranks(series):
            if minimal_order_bound(LieTypeSpec(series, rank, ell, 1)) > bound:
                break
            for f in count(1):
                spec = LieTypeSpec(series, rank, ell, f)
                if minimal_order_bound(spec) > bound:
                    break
                order = order_simple(spec)
                if order <= bound:
                    yield spec, order


@lru_cache(maxsize=256)
def sigma_catalogue(ell: int, bound: int) -> SigmaCatalogue:
    """
    Sorted catalogue of the distinct orders of the family in characteristic
    ``ell`` up to ``bound``, with every witness of each order.
    """
    validate_ell(ell)
    witnesses: dict[int, list[Witness]] = {}

    if ell <= bound:
        witnesses[ell] = [CyclicWitness(ell)]

    for spec, order in iter_specs(ell, bound):
        witnesses.setdefault(order, []).append(spec)

    entries = tuple(
        OrderEntry(order=order, witnesses=tuple(witnesses[order]))
        for order in sorted(witnesses)
    )
    logger.info(
        "Catalogue for ell=%s up to %s: %s orders", ell, bound, len(entries)
    )
    return SigmaCatalogue(ell=ell, bound=bound, entries=entries)


def artin_disjoint(ell1: int, ell2: int, bound: int) -> ArtinReport:
    """
    Compares the order sets of two characteristics; any shared order is
    reported verbatim.
    """
    if ell1 == ell2:
        raise SamePrime(f"ell1 = ell2 = {ell1}")

    first, second = sigma_catalogue(ell1, bound), sigma_catalogue(ell2, bound)
    second_by_order = {entry.order: entry for entry in second.entries}

    collisions = tuple(
        Collision(
            order=entry.order,
            first=entry.witnesses,
            second=second_by_order[entry.order].witnesses,
        )
        for entry in first.entries
        if entry.order in second_by_order
    )

    if collisions:
        logger.error(
            "Orders shared between ell=%s and ell=%s: %s",
            ell1,
            ell2,
            [c.order for c in collisions],
        )

    return ArtinReport(ell1=ell1, ell2=ell2, bound=bound, collisions=collisions)


def identify_simple_by_order(order: int, ell: int) -> list[Witness]:
    """
    Every member of the family in characteristic ``ell`` whose order is
    ``order``. B_n(q) and C_n(q) share an order and both come back.
    """
    validate_ell(ell)
    if order < ell:
        return []
    entry = sigma_catalogue(ell, order).get(order)
    return list(entry.witnesses) if entry else []
