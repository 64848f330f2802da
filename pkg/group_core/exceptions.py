from typing import Any

from rest_framework.exceptions import APIException


class GroupTheoryException(APIException):
    """
    Base error of every group-theoretic precondition failure
    """

    status_code = 400
    default_detail = "Group computation error"
    default_code = "group_error"


class CapExceeded(GroupTheoryException):
    """
    Enumeration passed the configured order cap
    """

    default_detail = "Group enumeration exceeded the order cap"
    default_code = "cap_exceeded"


class InvalidPermutation(GroupTheoryException):
    default_detail = "Image list is not a bijection of the points"
    default_code = "invalid_permutation"


class SingularMatrix(GroupTheoryException):
    default_detail = "Matrix is not invertible over the field"
    default_code = "singular_matrix"


class ElementNotInGroup(GroupTheoryException):
    default_detail = "Element does not belong to the group"
    default_code = "element_not_in_group"


class NotNormal(GroupTheoryException):
    default_detail = "Subgroup is not normal"
    default_code = "not_normal"


class InvalidPrime(GroupTheoryException):
    default_detail = "Argument must be a prime number"
    default_code = "invalid_prime"


class NotAHomomorphism(GroupTheoryException):
    """
    Generator assignment does not extend to a homomorphism.

    ``witness`` holds a domain element together with two different images the
    graph subgroup assigns to it.
    """

    default_detail = "Generator images do not define a homomorphism"
    default_code = "not_a_homomorphism"

    def __init__(
        self, detail: Any = None, code: str | None = None, witness: Any = None
    ) -> None:
        super().__init__(detail, code)
        self.witness = witness


class InvariantViolated(GroupTheoryException):
    """
    A computed result contradicts a theorem the computation relies on
    """

    default_detail = "Internal consistency check failed"
    default_code = "invariant_violated"
