import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from martkit.errors import HorizonMismatchError, UnsupportedOrderError
from martkit.process import (
    Filtration,
    ProcessTable,
    is_adapted,
    is_predictable,
    is_predictable_shifted,
    is_progressive,
    natural_filtration,
    p_add,
    p_compose,
    p_max,
    p_neg,
    p_norm,
    p_partial_sum,
    p_scale,
    p_scale_fn,
    p_sub,
    validate_filtration,
)
from martkit.sigma import Partition, is_measurable_fn, product_time_partition
from martkit.scenarios import COIN_WALK

from properties import process_instance

HALVES = Partition(4, [[0, 1], [2, 3]])
CHAIN = Filtration([Partition.trivial(4), HALVES, Partition.discrete(4)])
WALK = ProcessTable(COIN_WALK)


def test_validate_filtration():
    assert validate_filtration(Filtration.constant(3, HALVES))
    assert validate_filtration(CHAIN)
    bad = Filtration([Partition.discrete(4), Partition.trivial(4)])
    assert not validate_filtration(bad)
    assert bad.first_violation() == (0, 1)


def test_natural_filtration_examples():
    assert natural_filtration(WALK) == CHAIN
    assert natural_filtration(ProcessTable.constant(2, [3, 3, 3])) == Filtration.constant(2, Partition.trivial(3))
    assert natural_filtration(ProcessTable([[1, 2, 3]])) == Filtration([Partition.discrete(3)])


def test_adapted_examples():
    assert is_adapted(WALK, natural_filtration(WALK))
    assert not is_adapted(WALK, Filtration.constant(2, Partition.trivial(4)))
    flat = ProcessTable([[t] * 4 for t in range(3)])
    assert is_adapted(flat, Filtration.constant(2, Partition.trivial(4)))


def test_horizon_mismatch():
    with pytest.raises(HorizonMismatchError):
        is_adapted(WALK, Filtration([HALVES]))


def test_progressive_examples():
    assert is_progressive(WALK, CHAIN)
    # explicit product-partition check at t = 1
    joint = WALK.joint(1)
    assert is_measurable_fn(product_time_partition(1, CHAIN[1]).partition, joint)
    trivial = Filtration.constant(2, Partition.trivial(4))
    assert not is_progressive(WALK, trivial)
    x0 = ProcessTable([[1, 1, 2, 2]])
    for f in (Filtration([HALVES]), Filtration([Partition.trivial(4)])):
        assert is_progressive(x0, f) == is_measurable_fn(f[0], x0[0])


def test_predictable_examples():
    flat = ProcessTable([[t] * 4 for t in range(3)])
    assert is_predictable(flat, CHAIN) and is_predictable_shifted(flat, CHAIN)
    assert not is_predictable(WALK, CHAIN) and not is_predictable_shifted(WALK, CHAIN)
    # X_0 constant, X_{t+1} measurable for F_t
    x = ProcessTable([[5, 5, 5, 5], [1, 1, 1, 1], [2, 2, -3, -3]])
    assert is_predictable(x, CHAIN) and is_predictable_shifted(x, CHAIN)


def test_process_algebra_examples():
    zero = ProcessTable([[0] * 4] * 3)
    assert p_add(WALK, p_neg(WALK)) == zero
    assert p_sub(WALK, WALK) == zero
    ones = ProcessTable.constant(3, [1])
    assert [t[0][0] for t in p_partial_sum(ones).tables] == [1, 2, 3, 4]
    assert p_norm(WALK)[1] == ((1,),) * 4
    assert p_scale(2, WALK)[2] == ((4,), (0,), (0,), (-4,))
    assert p_scale_fn([1, 2, 3], WALK)[2] == ((6,), (0,), (0,), (-6,))
    assert p_scale_fn(lambda t: t, WALK)[1] == ((1,), (1,), (-1,), (-1,))
    assert p_max(WALK, 0)[2] == ((2,), (0,), (0,), (0,))
    assert p_compose(lambda t, v: (v[0], t), WALK)[2][0] == (2, 2)


def test_p_max_needs_scalars():
    with pytest.raises(UnsupportedOrderError):
        p_max(ProcessTable([[(1, 2)]]), 0)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_hierarchy_invariants(seed):
    failed = [k for k, v in process_instance(seed).items() if v is False]
    assert not failed, failed
