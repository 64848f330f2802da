from fractions import Fraction
from math import ceil, isqrt


def sqrt_bracket(m: int, bits: int) -> tuple[Fraction, Fraction]:
    """
    Rationals lo <= sqrt(m) <= hi with hi - lo = 2^-bits.
    """
    root = isqrt(m << (2 * bits))
    scale = 1 << bits
    return Fraction(root, scale), Fraction(root + 1, scale)


def ceil_power_bracket(lo: Fraction, hi: Fraction, exponent: int) -> tuple[int, int]:
    """
    Ceilings of lo^exponent and hi^exponent; equal ones pin the ceiling of
    every value in between.
    """
    return ceil(lo**exponent), ceil(hi**exponent)
