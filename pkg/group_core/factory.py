from rest_framework.exceptions import ValidationError

from group_core.builders.base import GroupBuilder
from group_core.builders.linear import GeneralLinearBuilder, SpecialLinearBuilder
from group_core.builders.permutation import (AlternatingBuilder, CyclicBuilder,
                                             DihedralBuilder, KleinBuilder,
                                             SymmetricBuilder)
from group_core.domain import FiniteGroup


class GroupFactory:
    """
    Factory class for instantiating named group builders.
    """

    builders = {
        "cyclic": CyclicBuilder,
        "dihedral": DihedralBuilder,
        "symmetric": SymmetricBuilder,
        "alternating": AlternatingBuilder,
        "klein": KleinBuilder,
        "special_linear": SpecialLinearBuilder,
        "general_linear": GeneralLinearBuilder,
    }

    @staticmethod
    def get_builder(kind: str) -> GroupBuilder:
        """
        Returns an instance of the builder registered under ``kind``.
        """
        try:
            return GroupFactory.builders[kind.lower()]()
        except KeyError:
            raise ValidationError(
                f"unknown group kind {kind!r}; expected one of {sorted(GroupFactory.builders)}"
            )

    @staticmethod
    def build_named(named: str, cap: int | None = None) -> FiniteGroup:
        """
        Builds a group from ``kind:params``, e.g. ``dihedral:5`` or
        ``special_linear:2,5``.
        """
        kind, _, raw = named.partition(":")
        try:
            params = [int(p) for p in raw.split(",") if p.strip()]
        except ValueError:
            raise ValidationError(f"parameters of {named!r} must be integers")

        builder = GroupFactory.get_builder(kind)
        return builder.build(*builder.parse(params), cap=cap)
