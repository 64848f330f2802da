from group_core.exceptions import GroupTheoryException


class OutOfRange(GroupTheoryException):
    """
    No optimal value is known below the requested range
    """

    default_detail = "Argument outside the range where the bound is known"
    default_code = "out_of_range"


class CharacteristicDividesOrder(GroupTheoryException):
    default_detail = "The characteristic divides the order of the quotient"
    default_code = "characteristic_divides_order"


class NotAMatrixGroup(GroupTheoryException):
    default_detail = "Group was not built from matrices"
    default_code = "not_a_matrix_group"


class InvalidBound(GroupTheoryException):
    default_detail = "Index bound must be a positive integer"
    default_code = "invalid_bound"
