import logging
from math import factorial, isqrt

from django.conf import settings

from group_core.domain import FiniteGroup
from group_core.exceptions import InvariantViolated
from group_core.services import is_abelian, normal_subgroups, quotient

from .domain import BoundsReport, JordanWitness, Theorem3PrimeProbe
from .exceptions import (CharacteristicDividesOrder, InvalidBound,
                         NotAMatrixGroup, OutOfRange)
from .utils import ceil_power_bracket, sqrt_bracket

logger = logging.getLogger("project")

COLLINS_RANGE_START = 71


def jordan_index(G: FiniteGroup) -> tuple[int, JordanWitness]:
    """
    Minimal index (G:A) over abelian normal subgroups A. The largest abelian
    normal subgroup in canonical order is the witness.
    """
    for N in reversed(normal_subgroups(G)):
        if is_abelian(N):
            index = G.order // N.order
            return index, JordanWitness(abelian_normal_subgroup=N, index=index)
    raise InvariantViolated("the trivial subgroup is always abelian and normal")


def jordan_check(G: FiniteGroup, d: int) -> bool:
    if d < 1:
        raise InvalidBound(f"d must be >= 1, got {d}")
    index, _ = jordan_index(G)
    return index <= d


def frobenius_bound(n: int, precision: int | None = None) -> int:
    """
    Smallest integer >= (sqrt(8n) + 1)^(2n^2).

    When 8n is a perfect square the value is an exact integer power. Otherwise
    sqrt(8n) is bracketed by dyadic rationals and the bracket is halved in
    width (bits doubled) until both ends give the same ceiling.
    """
    if n < 0:
        raise OutOfRange(f"n must be >= 0, got {n}")

    exponent = 2 * n * n
    root = isqrt(8 * n)
    if root * root == 8 * n:
        return (root + 1) ** exponent

    bits = precision or settings.BOUND_PRECISION_BITS
    while True:
        lo, hi = sqrt_bracket(8 * n, bits)
        low_ceiling, high_ceiling = ceil_power_bracket(lo + 1, hi + 1, exponent)
        if low_ceiling == high_ceiling:
            logger.debug("frobenius_bound(%s) settled at %s bits", n, bits)
            return low_ceiling
        bits *= 2


def collins_bound(n: int) -> int:
    if n < COLLINS_RANGE_START:
        raise OutOfRange(f"(n+1)! is the optimal bound only for n >= {COLLINS_RANGE_START}")
    return factorial(n + 1)


def bounds(n: int, precision: int | None = None) -> BoundsReport:
    return BoundsReport(
        n=n,
        frobenius=frobenius_bound(n, precision),
        collins=collins_bound(n) if n >= COLLINS_RANGE_START else None,
    )


def theorem3prime_probe(H: FiniteGroup, I: FiniteGroup) -> Theorem3PrimeProbe:
    """
    Jordan index of G = H/I for a matrix group H over F_p, with |G| prime to p.
    """
    if H.matrix_tag is None:
        raise NotAMatrixGroup(f"{H!r} carries no matrix dimension")

    n, p = H.matrix_tag.n, H.matrix_tag.p
    G = quotient(H, I).group
    if G.order % p == 0:
        raise CharacteristicDividesOrder(f"{p} divides |G| = {G.order}")

    index, _ = jordan_index(G)
    result = Theorem3PrimeProbe(
        n=n, p=p, group_order=G.order, jordan_index=index, bound=frobenius_bound(n)
    )
    if not result.within_bound:
        logger.error("Jordan index %s of %r exceeds d(%s) = %s", index, G, n, result.bound)
    return result
