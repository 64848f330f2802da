from dataclasses import dataclass

from group_core.domain import FiniteGroup


@dataclass(frozen=True)
class JordanWitness:
    """
    Abelian normal subgroup realising the minimal index.
    """

    abelian_normal_subgroup: FiniteGroup
    index: int


@dataclass(frozen=True)
class Theorem3PrimeProbe:
    n: int
    p: int
    group_order: int
    jordan_index: int
    bound: int

    @property
    def within_bound(self) -> bool:
        return self.jordan_index <= self.bound


@dataclass(frozen=True)
class BoundsReport:
    n: int
    frobenius: int
    collins: int | None = None
