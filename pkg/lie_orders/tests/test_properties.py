"""
Hypothesis-based tests for the order formulas and catalogues.
"""

from hypothesis import assume, given, settings, strategies as st

from lie_orders.domain import FIXED_RANK, MIN_RANK, LieTypeSpec, Series
from lie_orders.services import (center_order, minimal_order_bound,
                                 order_simple, order_simply_connected,
                                 sigma_catalogue)

Primes = st.sampled_from([5, 7, 11, 13, 17, 19, 23])


@st.composite
def specs(draw, max_rank: int = 8):
    series = draw(st.sampled_from(list(Series)))
    if series in FIXED_RANK:
        rank = FIXED_RANK[series]
    else:
        rank = draw(st.integers(min_value=MIN_RANK[series], max_value=max(max_rank, MIN_RANK[series])))
    ell = draw(Primes)
    f = draw(st.integers(min_value=1, max_value=4))
    assume(ell**f <= 10**4)
    return LieTypeSpec(series, rank, ell, f)


@settings(max_examples=200, deadline=None)
@given(specs())
def test_center_divides_order(spec):
    """
    The centre order divides the simply connected order.
    """
    assert order_simply_connected(spec) % center_order(spec) == 0
    assert order_simple(spec) % spec.ell == 0


@settings(max_examples=100, deadline=None)
@given(specs(max_rank=6))
def test_minimal_bound_is_monotone(spec):
    """
    q^N grows with f and with rank.
    """
    bigger_field = LieTypeSpec(spec.series, spec.rank, spec.ell, spec.f + 1)
    assert minimal_order_bound(bigger_field) > minimal_order_bound(spec)
    assert order_simple(spec) >= minimal_order_bound(spec)
    if spec.series not in FIXED_RANK:
        bigger_rank = LieTypeSpec(spec.series, spec.rank + 1, spec.ell, spec.f)
        assert minimal_order_bound(bigger_rank) > minimal_order_bound(spec)


@settings(max_examples=30, deadline=None)
@given(Primes, st.integers(min_value=1, max_value=10**9))
def test_catalogue_sorted_and_exact(ell, bound):
    """
    Orders strictly increase, stay within the bound and match every witness.
    """
    catalogue = sigma_catalogue(ell, bound)
    orders = catalogue.orders
    assert orders == sorted(set(orders))
    assert all(order <= bound for order in orders)
    assert (ell in orders) == (ell <= bound)
    for entry in catalogue.entries:
        for witness in entry.witnesses:
            if isinstance(witness, LieTypeSpec):
                assert order_simple(witness) == entry.order
