from math import factorial

import pytest

from group_core.services import (normal_closure, normal_subgroups, sylow,
                                 trivial_subgroup)
from group_core.exceptions import InvariantViolated
from jordan.exceptions import (CharacteristicDividesOrder, InvalidBound,
                               NotAMatrixGroup, OutOfRange)
from jordan.services import (bounds, collins_bound, frobenius_bound,
                             jordan_check, jordan_index, theorem3prime_probe)


# jordan_index / jordan_check
@pytest.mark.parametrize(
    "named, index",
    [("cyclic:6", 1), ("symmetric:3", 2), ("alternating:5", 60), ("symmetric:4", 6), ("dihedral:4", 2)],
)
def test_jordan_index(named_group, named, index) -> None:
    """
    Test minimal index over abelian normal subgroups on small groups.
    """
    group = named_group(named)
    value, witness = jordan_index(group)
    assert value == index
    assert witness.index == index
    assert witness.abelian_normal_subgroup.order * index == group.order


def test_jordan_index_needs_an_abelian_normal_subgroup(mocker, named_group) -> None:
    group = named_group("symmetric:3")
    mocker.patch("jordan.services.normal_subgroups", return_value=())
    with pytest.raises(InvariantViolated):
        jordan_index(group)


def test_jordan_check(named_group) -> None:
    assert jordan_check(named_group("symmetric:3"), 2)
    assert not jordan_check(named_group("alternating:5"), 59)
    assert jordan_check(named_group("klein"), 1)


def test_jordan_check_rejects_zero(named_group) -> None:
    with pytest.raises(InvalidBound):
        jordan_check(named_group("cyclic:2"), 0)


# frobenius_bound / collins_bound
@pytest.mark.parametrize("n, value", [(0, 1), (1, 15), (2, 390625)])
def test_frobenius_bound(n, value) -> None:
    assert frobenius_bound(n) == value


def test_frobenius_bound_independent_of_precision() -> None:
    """
    Test that the starting bracket width never changes the answer.
    """
    for n in range(1, 6):
        assert frobenius_bound(n, precision=8) == frobenius_bound(n, precision=256)


def test_frobenius_bound_monotone() -> None:
    values = [frobenius_bound(n) for n in range(9)]
    assert values == sorted(values)


def test_collins_bound() -> None:
    assert collins_bound(71) == factorial(72)
    assert len(str(collins_bound(71))) == 104
    assert collins_bound(100) == factorial(101)
    with pytest.raises(OutOfRange):
        collins_bound(70)


def test_bounds_report() -> None:
    assert bounds(2).collins is None
    assert bounds(71).collins == factorial(72)


# theorem3prime_probe
def test_theorem3prime_abelian_quotient(named_group) -> None:
    """
    Test GL2(5)/SL2(5), a cyclic group of order 4.
    """
    gl = named_group("general_linear:2,5")
    sl = normal_closure(gl, gl.generators[:-1])
    assert sl.order == 120
    result = theorem3prime_probe(gl, sl)
    assert result.group_order == 4
    assert result.jordan_index == 1
    assert result.within_bound


def test_theorem3prime_characteristic_divides_order(named_group) -> None:
    sl = named_group("special_linear:2,5")
    center = next(N for N in normal_subgroups(sl) if N.order == 2)
    with pytest.raises(CharacteristicDividesOrder):
        theorem3prime_probe(sl, center)


def test_theorem3prime_sylow_subgroup(named_group) -> None:
    """
    Test the 2-Sylow of GL2(3) modulo itself.
    """
    gl = named_group("general_linear:2,3")
    P = sylow(gl, 2)
    assert P.order == 16
    assert P.matrix_tag is not None
    assert theorem3prime_probe(P, P).jordan_index == 1
    result = theorem3prime_probe(P, trivial_subgroup(P))
    assert result.group_order == 16
    assert result.jordan_index == 2
    assert result.within_bound


def test_theorem3prime_requires_matrix_group(named_group) -> None:
    s3 = named_group("symmetric:3")
    with pytest.raises(NotAMatrixGroup):
        theorem3prime_probe(s3, s3)
