from group_core.exceptions import GroupTheoryException


class SemistabilityViolated(GroupTheoryException):
    """
    An inertia image at a place of other residue characteristic is not an
    ell-group
    """

    default_detail = "Inertia image is not an ell-group"
    default_code = "semistability_violated"


class NotSurjective(GroupTheoryException):
    default_detail = "Homomorphism is not onto its codomain"
    default_code = "not_surjective"


class InvalidFamily(GroupTheoryException):
    default_detail = "Malformed family of homomorphisms"
    default_code = "invalid_family"
