"""Connectivity and the coupling-signature refinement."""

import random

from helpers import random_network
from spinlie import (
    build_graph,
    connected_components,
    disintegrate,
    spin_network,
)


def test_components_path_graph():
    net = spin_network(3, ["1", "2", "3"], {(1, 2): "1", (2, 3): "1"})
    assert connected_components(build_graph(net)) == [[1, 2, 3]]


def test_components_partial_graph():
    net = spin_network(3, ["1", "2", "3"], {(1, 2): "1"})
    assert connected_components(build_graph(net)) == [[1, 2], [3]]


def test_components_empty_graph():
    net = spin_network(4, ["1", "2", "3", "4"], {})
    assert connected_components(build_graph(net)) == [[1], [2], [3], [4]]


def test_refinement_splits_on_distinct_magnitudes():
    net = spin_network(
        3, ["1", "1", "2"], {(1, 3): "1", (2, 3): "2", (1, 2): "1"}
    )
    result = disintegrate(net)
    assert result.success
    assert result.final_partition == ((1,), (2,), (3,))
    assert len(result.trace) == 1
    step = result.trace[0]
    assert step.block == (1, 2)
    assert step.references == (3,)
    assert step.signatures[1] != step.signatures[2]


def test_refinement_blocked_by_equal_couplings():
    net = spin_network(3, ["1", "1", "2"], {(1, 3): "1", (2, 3): "1"})
    result = disintegrate(net)
    assert not result.success
    assert (1, 2) in result.final_partition
    assert not result.trace


def test_refinement_blocked_by_opposite_couplings():
    # absolute values agree, so the signatures cannot tell 1 from 2
    net = spin_network(3, ["1", "1", "2"], {(1, 3): "1", (2, 3): "-1"})
    assert not disintegrate(net).success


def test_trivial_success_with_distinct_ratios():
    net = spin_network(3, ["1", "2", "3"], {})
    result = disintegrate(net)
    assert result.success
    assert not result.trace


def test_cascading_passes():
    # particle 4 is the only initial singleton; it splits 3 away from {1,2,3},
    # and 3 then splits 1 from 2 in the second pass
    net = spin_network(
        4,
        ["1", "1", "1", "2"],
        {(3, 4): "1", (1, 3): "1", (2, 3): "2", (1, 2): "1"},
    )
    result = disintegrate(net)
    assert result.success
    assert len(result.trace) == 2
    assert result.trace[0].references == (4,)
    assert result.trace[1].references == (3, 4)


def test_at_most_n_passes():
    rng = random.Random(404)
    for _ in range(50):
        net = random_network(rng, rng.randint(1, 5))
        result = disintegrate(net)
        passes = len({step.references for step in result.trace})
        assert passes <= net.n


def test_relabeling_inside_a_block_is_immaterial():
    # swapping particles 1 and 2 (same ratio) permutes the outcome the same way
    couplings = {(1, 3): "1", (2, 3): "2", (1, 2): "1"}
    swapped = {(2, 3): "1", (1, 3): "2", (1, 2): "1"}
    a = disintegrate(spin_network(3, ["1", "1", "2"], couplings))
    b = disintegrate(spin_network(3, ["1", "1", "2"], swapped))
    assert a.success and b.success
    relabel = {1: 2, 2: 1, 3: 3}
    mapped = sorted(
        tuple(sorted(relabel[p] for p in block)) for block in a.final_partition
    )
    assert mapped == sorted(b.final_partition)
