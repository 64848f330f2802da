from typing import Iterable, Sequence

from .exceptions import CapExceeded, InvalidPermutation

Perm = tuple[int, ...]


def identity_perm(degree: int) -> Perm:
    return tuple(range(1, degree + 1))


def as_perm(images: Sequence[int], degree: int) -> Perm:
    """
    Validates a one-line image list (1-based) and returns it as a tuple.
    """
    perm = tuple(int(i) for i in images)
    if len(perm) != degree or sorted(perm) != list(range(1, degree + 1)):
        raise InvalidPermutation(
            f"{list(images)} is not a permutation of 1..{degree}"
        )
    return perm


def mul(x: Perm, y: Perm) -> Perm:
    """
    Product x·y: apply x first, then y.
    """
    return tuple(y[i - 1] for i in x)


def inv(x: Perm) -> Perm:
    result = [0] * len(x)
    for point, image in enumerate(x, start=1):
        result[image - 1] = point
    return tuple(result)


def conj(x: Perm, g: Perm) -> Perm:
    """
    Conjugate g^-1·x·g.
    """
    return mul(mul(inv(g), x), g)


def power(x: Perm, exponent: int) -> Perm:
    result = identity_perm(len(x))
    base = x if exponent >= 0 else inv(x)
    for _ in range(abs(exponent)):
        result = mul(result, base)
    return result


def element_order(x: Perm) -> int:
    identity = identity_perm(len(x))
    order, current = 1, x
    while current != identity:
        current = mul(current, x)
        order += 1
    return order


def concat(parts: Iterable[Perm]) -> Perm:
    """
    Joins permutations of consecutive point blocks into one permutation of their
    disjoint union.
    """
    result: list[int] = []
    for part in parts:
        shift = len(result)
        result.extend(i + shift for i in part)
    return tuple(result)


def closure(degree: int, generators: Sequence[Perm], cap: int) -> frozenset[Perm]:
    """
    Enumerates the group generated by ``generators`` by breadth-first
    multiplication from the identity. Finite, so closure under products
    already gives inverses.
    """
    identity = identity_perm(degree)
    seen = {identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in generators:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise CapExceeded(
                            f"Group order exceeds the cap of {cap} elements"
                        )
                    next_frontier.append(y)
        frontier = next_frontier
    return frozenset(seen)
