"""Interaction graph connectivity and the coupling-signature refinement.

The refinement procedure (``disintegrate``) tries to split every block of
equal-ratio particles into singletons: particles that couple with
different absolute strengths to some already-singled-out particle are
distinguishable and go their separate ways. Success certifies the
asymmetry that the controllability shortcut needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Mapping

if TYPE_CHECKING:
    from .model import CouplingTriple, SpinNetwork

# signature of one particle against the current singletons: for each
# reference particle, the sorted absolute values of the coupling triple
Signature = tuple[tuple, ...]


@dataclass(frozen=True)
class InteractionGraph:
    """Simple undirected graph of coupled particle pairs.

    Nodes are 1-based particle indices labeled by their gyromagnetic
    ratio; an edge carries the coupling triple of its pair.
    """

    n: int
    node_labels: tuple
    edges: Mapping[tuple[int, int], "CouplingTriple"]


def connected_components(g: InteractionGraph) -> list[list[int]]:
    """Maximal connected node sets, each sorted, ordered by smallest node."""
    parent = list(range(g.n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for k, l in g.edges:
        parent[find(k)] = find(l)

    groups: dict[int, list[int]] = {}
    for node in range(1, g.n + 1):
        groups.setdefault(find(node), []).append(node)
    return sorted(groups.values(), key=lambda c: c[0])


def is_connected(g: InteractionGraph) -> bool:
    return len(connected_components(g)) == 1


@dataclass(frozen=True)
class SplitStep:
    """One productive split: which block broke, against which references."""

    block: tuple[int, ...]
    references: tuple[int, ...]
    signatures: Mapping[int, Signature]


@dataclass
class DisintegrationResult:
    success: bool
    final_partition: tuple[tuple[int, ...], ...]
    trace: list[SplitStep] = field(default_factory=list)


def _signature(net: "SpinNetwork", k: int, references: tuple[int, ...]) -> Signature:
    from .model import ZERO_TRIPLE

    sig = []
    for ref in references:
        pair = (min(k, ref), max(k, ref))
        triple = net.couplings.get(pair, ZERO_TRIPLE)
        sig.append(triple.magnitudes())
    return tuple(sig)


def disintegrate(net: "SpinNetwork") -> DisintegrationResult:
    """Refine the equal-ratio blocks by coupling signatures to singletons.

    Passes run to a fixpoint. Within one pass the reference set (all
    current singletons) is frozen; every surviving block is split by the
    joint signature of its members over the whole reference set, and the
    new singletons only join the references for the next pass. Splitting
    by one reference at a time refines strictly less per step, so both
    rules reach the same fixpoint, but the joint rule does not depend on
    the order references are tried in.

    Succeeds when every particle ends up alone in its block. At most n
    passes run, since every pass that does anything strictly refines the
    partition.
    """
    from .model import gamma_partition

    part = gamma_partition(net)
    singles = sorted(b[0] for b in part.blocks if len(b) == 1)
    work = [b for b in part.blocks if len(b) > 1]
    trace: list[SplitStep] = []

    changed = True
    while work and changed:
        changed = False
        references = tuple(singles)
        next_work: list[tuple[int, ...]] = []
        fresh: list[int] = []
        for block in work:
            sigs = {k: _signature(net, k, references) for k in block}
            groups: dict[Signature, list[int]] = {}
            for k in block:
                groups.setdefault(sigs[k], []).append(k)
            if len(groups) == 1:
                next_work.append(block)
                continue
            changed = True
            trace.append(SplitStep(block, references, sigs))
            for members in groups.values():
                if len(members) == 1:
                    fresh.append(members[0])
                else:
                    next_work.append(tuple(members))
        singles.extend(fresh)
        singles.sort()
        work = next_work

    final = sorted(
        [(s,) for s in singles] + [tuple(b) for b in work], key=lambda b: b[0]
    )
    return DisintegrationResult(
        success=not work, final_partition=tuple(final), trace=trace
    )
