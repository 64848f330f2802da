from group_core.domain import FiniteGroup
from group_core.services import make_perm_group
from group_core.utils import identity_perm

from .base import GroupBuilder


def _cycle(points: list[int], degree: int) -> list[int]:
    images = list(identity_perm(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        images[a - 1] = b
    return images


class CyclicBuilder(GroupBuilder):
    """
    Z/n acting regularly on n points
    """

    def build(self, n: int, cap: int | None = None) -> FiniteGroup:
        return make_perm_group(n, [_cycle(list(range(1, n + 1)), n)], cap=cap, name=f"C{n}")


class DihedralBuilder(GroupBuilder):
    """
    Symmetries of the n-gon, order 2n
    """

    minimum = 3

    def build(self, n: int, cap: int | None = None) -> FiniteGroup:
        rotation = _cycle(list(range(1, n + 1)), n)
        reflection = [1] + list(range(n, 1, -1))
        return make_perm_group(n, [rotation, reflection], cap=cap, name=f"D{2 * n}")


class SymmetricBuilder(GroupBuilder):
    def build(self, n: int, cap: int | None = None) -> FiniteGroup:
        gens = [_cycle([1, 2], n), _cycle(list(range(1, n + 1)), n)] if n > 1 else []
        return make_perm_group(n, gens, cap=cap, name=f"S{n}")


class AlternatingBuilder(GroupBuilder):
    """
    Generated by the 3-cycles (1 2 k)
    """

    def build(self, n: int, cap: int | None = None) -> FiniteGroup:
        gens = [_cycle([1, 2, k], n) for k in range(3, n + 1)]
        return make_perm_group(n, gens, cap=cap, name=f"A{n}")


class KleinBuilder(GroupBuilder):
    arity = 0

    def parse(self, params: list[int]) -> list[int]:
        return super().parse(params) if params else params

    def build(self, cap: int | None = None) -> FiniteGroup:
        return make_perm_group(4, [[2, 1, 4, 3], [3, 4, 1, 2]], cap=cap, name="V4")
