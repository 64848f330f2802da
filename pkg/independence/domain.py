from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from django.db import models

from group_core.domain import FiniteGroup, GroupHom, SimpleFactorId

from .exceptions import InvalidFamily


@dataclass(frozen=True)
class HomFamily:
    """
    Homomorphisms rho_i: domain -> G_i sharing one domain, one label each.
    """

    domain: FiniteGroup
    homs: tuple[GroupHom, ...]
    labels: tuple[str, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if not self.homs:
            raise InvalidFamily("a family needs at least one homomorphism")
        if len(self.labels) != len(self.homs):
            raise InvalidFamily(f"{len(self.homs)} homomorphisms but {len(self.labels)} labels")
        if len(set(self.labels)) != len(self.labels):
            raise InvalidFamily(f"duplicate labels in {list(self.labels)}")
        for label, hom in zip(self.labels, self.homs):
            if hom.domain != self.domain:
                raise InvalidFamily(f"homomorphism {label} has a different domain")

    def __len__(self) -> int:
        return len(self.homs)

    def __iter__(self) -> Iterator[tuple[str, GroupHom]]:
        return iter(zip(self.labels, self.homs))

    def hom(self, label: str) -> GroupHom:
        try:
            return self.homs[self.labels.index(label)]
        except ValueError:
            raise InvalidFamily(f"no homomorphism labelled {label!r}")


@dataclass(frozen=True)
class SpliceResult:
    """
    Family mixed from two others; ``picks[i]`` is 0 or 1 for the source of index i.
    """

    family: HomFamily
    picks: tuple[int, ...]


@dataclass(frozen=True)
class Place:
    place: str
    p: int
    subgroups: Mapping[str, FiniteGroup]


@dataclass(frozen=True)
class InertiaAssignment:
    """
    Inertia subgroups of the domain, one per (place, label), and the residue
    characteristic of each place.
    """

    places: tuple[Place, ...] = ()

    def designated(self, label: str) -> Iterator[tuple[Place, FiniteGroup]]:
        for place in self.places:
            if label in place.subgroups:
                yield place, place.subgroups[label]


class Conclusion(models.TextChoices):
    INDEPENDENT = "independent", "Independent"
    INCONCLUSIVE = "inconclusive", "Inconclusive"


@dataclass(frozen=True)
class SharedQuotient:
    i: str
    j: str
    factor: SimpleFactorId


@dataclass(frozen=True)
class Lemma2Verdict:
    """
    Pairwise comparison of simple quotients of the images. ``flagged`` holds
    comparisons involving unidentified factors, which block ``applies``.
    """

    collisions: tuple[SharedQuotient, ...]
    flagged: tuple[SharedQuotient, ...]
    findings: tuple[str, ...] = ()

    @property
    def applies(self) -> bool:
        return not self.collisions and not self.flagged

    @property
    def conclusion(self) -> Conclusion:
        return Conclusion.INDEPENDENT if self.applies else Conclusion.INCONCLUSIVE


@dataclass(frozen=True)
class GoursatWitness:
    """
    Common nontrivial quotient A of G_i and G_j with f_i∘rho_i = f_j∘rho_j.
    """

    i: str
    j: str
    quotient: FiniteGroup
    f_i: GroupHom
    f_j: GroupHom


@dataclass(frozen=True)
class IsolatedDefect:
    label: str
    defect: int


@dataclass(frozen=True)
class IndependenceReport:
    labels: tuple[str, ...]
    satisfies_R: bool
    satisfies_R1: bool
    satisfies_R2: bool
    product_order: int
    diagonal_order: int
    gamma_prime: FiniteGroup
    independence_index: int
    isolated_defects: tuple[IsolatedDefect, ...]
    lemma2: Lemma2Verdict
    goursat: tuple[GoursatWitness, ...]
    findings: tuple[str, ...] = ()
    seed: int | None = None

    @property
    def ro_index(self) -> int:
        return self.product_order // self.diagonal_order


@dataclass(frozen=True)
class SemistableIndex:
    """
    A_ell, G+_ell and H_ell = G_ell / G+_ell·A_ell for one label.
    """

    label: str
    ell: int
    a: FiniteGroup
    plus: FiniteGroup
    h: FiniteGroup
    lemma5_ok: bool
    jordan_index: int
    jordan_ok: bool | None = None


@dataclass(frozen=True)
class SemistableReport:
    indices: tuple[SemistableIndex, ...]
    lemma4_ok: bool
    reduced_lemma2: Lemma2Verdict
    dimension: int | None = None
    findings: tuple[str, ...] = ()


@dataclass(frozen=True)
class BaseChangeIndex:
    label: str
    ell: int
    index: int
    plus_equal: bool
    a_equal: bool
    product_ok: bool
    contained: bool

    @property
    def index_below_ell(self) -> bool:
        return self.index < self.ell

    @property
    def applies(self) -> bool:
        return self.index_below_ell and self.contained


@dataclass(frozen=True)
class BaseChangeReport:
    indices: tuple[BaseChangeIndex, ...]
    findings: tuple[str, ...] = field(default=())
