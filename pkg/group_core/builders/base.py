from abc import ABC, abstractmethod

from rest_framework.exceptions import ValidationError

from group_core.domain import FiniteGroup


class GroupBuilder(ABC):
    """
    Abstract class for named group families
    """

    arity: int = 1
    minimum: int = 1

    def parse(self, params: list[int]) -> list[int]:
        if len(params) != self.arity:
            raise ValidationError(
                f"{type(self).__name__} takes {self.arity} parameter(s), got {len(params)}"
            )
        if params[0] < self.minimum:
            raise ValidationError(f"first parameter must be >= {self.minimum}")
        return params

    @abstractmethod
    def build(self, *params: int, cap: int | None = None) -> FiniteGroup:
        """
        Group construction
        """
        raise NotImplementedError
