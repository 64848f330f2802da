from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import TYPE_CHECKING, Mapping

from django.db import models

from .utils import Perm, identity_perm

if TYPE_CHECKING:
    from lie_orders.domain import Witness


@dataclass(frozen=True)
class MatrixTag:
    """
    Marks a group built from n×n matrices over the p-element field.
    """

    n: int
    p: int


@dataclass(frozen=True, eq=False, repr=False)
class FiniteGroup:
    """
    Explicitly enumerated permutation group.

    ``elements`` is sorted lexicographically on the one-line image form; that
    sort order is the canonical element order used for every deterministic
    choice in the library. Two groups are equal when they act on the same
    number of points and have the same element set, whatever their generators.
    """

    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]
    matrix_tag: MatrixTag | None = None
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return identity_perm(self.degree)

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    @cached_property
    def _hash(self) -> int:
        return hash((self.degree, self.element_set))

    def __contains__(self, x: object) -> bool:
        return x in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.degree == other.degree and self.element_set == other.element_set

    def __hash__(self) -> int:
        return self._hash

    def __le__(self, other: FiniteGroup) -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set

    def __repr__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"<FiniteGroup {label}order={self.order} degree={self.degree}>"


@dataclass(frozen=True, eq=False, repr=False)
class GroupHom:
    """
    Verified homomorphism; ``table`` is the full element map.
    """

    domain: FiniteGroup
    codomain: FiniteGroup
    generator_images: tuple[Perm, ...]
    table: Mapping[Perm, Perm]

    @property
    def element_map(self) -> Mapping[Perm, Perm]:
        return MappingProxyType(dict(self.table))

    def __call__(self, x: Perm) -> Perm:
        return self.table[x]

    def __repr__(self) -> str:
        return f"<GroupHom {self.domain!r} -> {self.codomain!r}>"


class FactorKind(models.TextChoices):
    """
    Kinds of composition factor labels.
    """

    CYCLIC = "cyclic", "Cyclic"
    LIE = "lie", "Lie type"
    UNIDENTIFIED = "unidentified", "Unidentified"


@dataclass(frozen=True)
class SimpleFactorId:
    """
    Label of a finite simple group. Equality and hashing use only the kind and
    the order; witnesses and the provenance note ride along.
    """

    kind: FactorKind
    order: int
    witnesses: tuple[Witness, ...] = field(default=(), compare=False)
    note: str = field(default="", compare=False)

    @property
    def label(self) -> str:
        if self.kind == FactorKind.CYCLIC:
            return f"C{self.order}"
        if self.kind == FactorKind.LIE:
            return " | ".join(w.label for w in self.witnesses)
        return f"unidentified({self.order})"

    @property
    def flagged(self) -> bool:
        return self.kind == FactorKind.UNIDENTIFIED

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class FrattiniResult:
    holds: bool
    sylow: FiniteGroup
    normalizer: FiniteGroup
    product_order: int


@dataclass(frozen=True)
class Lemma1Report:
    ell: int
    factors: tuple[SimpleFactorId, ...]
    outside: tuple[SimpleFactorId, ...]
    ell_divisible_outside: tuple[SimpleFactorId, ...]

    @property
    def holds(self) -> bool:
        return not self.outside and not self.ell_divisible_outside


@dataclass(frozen=True)
class Quotient:
    group: FiniteGroup
    projection: GroupHom
    representatives: tuple[Perm, ...]
