"""Worklist closure behaviour and its invariants."""

import random

import pytest

from helpers import random_element, random_network
from spinlie import (
    ClosureCapExceeded,
    EchelonBasis,
    Element,
    close,
    build_controls,
    build_drift,
    gamma_partition,
    spin_network,
    subspace_bracket_contained,
)


def _heisenberg_two(gammas):
    net = spin_network(2, gammas, {(1, 2): "1"})
    controls = build_controls(net)
    return [build_drift(net)] + [controls[a] for a in "xyz"]


def test_single_site_pair_closes_to_three():
    result = close([Element.from_word("X"), Element.from_word("Y")], 1)
    assert result.dimension == 3
    assert result.saturated_early


def test_two_spin_distinct_ratios_saturates():
    result = close(_heisenberg_two(["1", "2"]), 2)
    assert result.dimension == 15
    assert result.saturated_early


def test_two_spin_equal_ratios():
    result = close(_heisenberg_two(["1", "1"]), 2)
    assert result.dimension == 4
    assert not result.saturated_early


def test_closure_is_idempotent():
    first = close(_heisenberg_two(["1", "1"]), 2)
    again = close(list(first.basis.rows), 2)
    assert again.dimension == first.dimension


def test_adding_generators_never_shrinks():
    rng = random.Random(42)
    for _ in range(10):
        gens = [random_element(rng, 2) for _ in range(4)]
        dims = []
        for k in range(1, len(gens) + 1):
            dims.append(close(gens[:k], 2).dimension)
        assert dims == sorted(dims)


def test_result_is_a_subalgebra_containing_generators():
    gens = _heisenberg_two(["1", "1"])
    result = close(gens, 2)
    assert subspace_bracket_contained(result.basis, result.basis, result.basis)
    for g in gens:
        assert result.basis.contains(g)


def test_control_closure_has_three_blocks_per_ratio():
    net = spin_network(3, ["1", "1", "2"], {})
    controls = build_controls(net)
    result = close([controls[a] for a in "xyz"], 3)
    assert result.dimension == 3 * gamma_partition(net).block_count == 6


def test_deterministic_reruns():
    gens = _heisenberg_two(["1", "2"])
    a, b = close(gens, 2), close(gens, 2)
    assert a.bracket_count == b.bracket_count
    assert a.basis.rows == b.basis.rows


def test_cap_exceeded():
    with pytest.raises(ClosureCapExceeded):
        close(_heisenberg_two(["1", "2"]), 2, cap=10)


def test_generator_validation():
    with pytest.raises(ValueError):
        close([], 2)
    with pytest.raises(ValueError):
        close([Element(2)], 2)
    with pytest.raises(ValueError):
        close([Element.from_word("XI"), Element.from_word("X")])


def test_closure_dimension_matches_dense_recomputation():
    from spinlie import materialize, numeric_closure_dim

    rng = random.Random(77)
    for _ in range(5):
        net = random_network(rng, 2)
        controls = build_controls(net)
        gens = [g for g in [build_drift(net)] + list(controls.values()) if g]
        exact = close(gens, 2).dimension
        dense = numeric_closure_dim([materialize(g, 2) for g in gens])
        assert exact == dense
