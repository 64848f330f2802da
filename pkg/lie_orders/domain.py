from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from django.db import models
from sympy import isprime

from .exceptions import InvalidEll, InvalidRank


class Series(models.TextChoices):
    """
    Series of simple groups of Lie type in characteristic >= 5.
    Suzuki and Ree twisted forms do not occur there.
    """

    A = "A", "Linear"
    TWISTED_A = "2A", "Unitary"
    B = "B", "Orthogonal (odd dimension)"
    C = "C", "Symplectic"
    D = "D", "Orthogonal (split, even dimension)"
    TWISTED_D = "2D", "Orthogonal (non-split, even dimension)"
    TRIALITY_D4 = "3D4", "Triality twisted D4"
    G2 = "G2", "G2"
    F4 = "F4", "F4"
    E6 = "E6", "E6"
    TWISTED_E6 = "2E6", "Twisted E6"
    E7 = "E7", "E7"
    E8 = "E8", "E8"


# lowest rank per classical series after removing small-rank coincidences
MIN_RANK: dict[str, int] = {
    Series.A: 1,
    Series.TWISTED_A: 2,
    Series.B: 2,
    Series.C: 3,
    Series.D: 4,
    Series.TWISTED_D: 4,
}

FIXED_RANK: dict[str, int] = {
    Series.TRIALITY_D4: 4,
    Series.G2: 2,
    Series.F4: 4,
    Series.E6: 6,
    Series.TWISTED_E6: 6,
    Series.E7: 7,
    Series.E8: 8,
}


def validate_ell(ell: int) -> int:
    if ell < 5 or not isprime(ell):
        raise InvalidEll(f"ell = {ell} is not a prime >= 5")
    return ell


@dataclass(frozen=True)
class LieTypeSpec:
    """
    Tag (series, rank, ell, f) of a simple group of Lie type over the field
    with q = ell**f elements. For exceptional series the rank is fixed and may
    be omitted.
    """

    series: Series
    rank: int | None
    ell: int
    f: int = 1

    def __post_init__(self) -> None:
        series = Series(self.series)
        object.__setattr__(self, "series", series)

        if series in FIXED_RANK:
            if self.rank is None:
                object.__setattr__(self, "rank", FIXED_RANK[series])
            elif self.rank != FIXED_RANK[series]:
                raise InvalidRank(
                    f"{series} has rank {FIXED_RANK[series]}, got {self.rank}"
                )
        elif self.rank is None or self.rank < MIN_RANK[series]:
            raise InvalidRank(
                f"{series} needs rank >= {MIN_RANK[series]}, got {self.rank}"
            )

        if self.f < 1:
            raise InvalidRank(f"field exponent must be >= 1, got {self.f}")
        validate_ell(self.ell)

    @property
    def q(self) -> int:
        return self.ell**self.f

    @property
    def is_exceptional(self) -> bool:
        return self.series in FIXED_RANK

    @property
    def label(self) -> str:
        if self.is_exceptional:
            return f"{self.series}({self.q})"
        return f"{self.series}{self.rank}({self.q})"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class CyclicWitness:
    """
    The cyclic member Z/ell of the family.
    """

    ell: int

    @property
    def label(self) -> str:
        return f"Z/{self.ell}"

    def __str__(self) -> str:
        return self.label


Witness = Union[LieTypeSpec, CyclicWitness]


@dataclass(frozen=True)
class OrderEntry:
    order: int
    witnesses: tuple[Witness, ...]


@dataclass(frozen=True)
class SigmaCatalogue:
    """
    All distinct orders of the family up to ``bound``, strictly increasing.
    """

    ell: int
    bound: int
    entries: tuple[OrderEntry, ...]

    @property
    def orders(self) -> list[int]:
        return [entry.order for entry in self.entries]

    def get(self, order: int) -> OrderEntry | None:
        for entry in self.entries:
            if entry.order == order:
                return entry
        return None


@dataclass(frozen=True)
class Collision:
    order: int
    first: tuple[Witness, ...]
    second: tuple[Witness, ...]


@dataclass(frozen=True)
class ArtinReport:
    ell1: int
    ell2: int
    bound: int
    collisions: tuple[Collision, ...]

    @property
    def disjoint(self) -> bool:
        return not self.collisions
