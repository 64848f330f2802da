from group_core.exceptions import GroupTheoryException


class InvalidRank(GroupTheoryException):
    """
    Rank (or field exponent) outside the canonical range of the series
    """

    default_detail = "Rank outside the canonical range of the series"
    default_code = "invalid_rank"


class InvalidEll(GroupTheoryException):
    """
    Characteristic must be a prime of at least 5
    """

    default_detail = "Characteristic must be a prime >= 5"
    default_code = "invalid_ell"


class SamePrime(GroupTheoryException):
    default_detail = "Disjointness needs two distinct primes"
    default_code = "same_prime"
