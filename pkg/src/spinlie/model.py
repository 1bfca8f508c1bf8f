"""Spin network description and the operators it generates.

A :class:`SpinNetwork` fixes the number of particles, their gyromagnetic
ratios, the pairwise coupling strengths along the three axes and which
field components are available as controls. From it we build the drift
operator (the internal two-body Hamiltonian times -i), one control
operator per active axis, and the interaction graph whose connectivity
drives the classification shortcuts.

Ratios and couplings are exact rationals throughout: the structural
conditions downstream (equal ratios, equal coupling magnitudes) are
equality tests and must not depend on a tolerance.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .graph import InteractionGraph
from .pauli import AXES, Element, make_word

_ZERO = Fraction(0)


class InvalidNetwork(ValueError):
    """The network description violates a structural invariant."""


@dataclass(frozen=True)
class CouplingTriple:
    """Coupling strengths multiplying the XX, YY and ZZ terms of one pair."""

    xx: Fraction
    yy: Fraction
    zz: Fraction

    def __bool__(self) -> bool:
        return bool(self.xx or self.yy or self.zz)

    def magnitudes(self) -> tuple[Fraction, Fraction, Fraction]:
        """The unordered absolute-value triple, sorted for comparisons."""
        mags = sorted((abs(self.xx), abs(self.yy), abs(self.zz)))
        return (mags[0], mags[1], mags[2])


ZERO_TRIPLE = CouplingTriple(_ZERO, _ZERO, _ZERO)


@dataclass(frozen=True)
class SpinNetwork:
    """Particle count, gyromagnetic ratios, couplings and control axes.

    ``couplings`` maps ordered pairs ``(k, l)`` with ``1 <= k < l <= n`` to
    :class:`CouplingTriple`. Build instances through :func:`spin_network`
    or run :func:`validate` on hand-made ones; both return a normalized
    network with all-zero triples dropped.
    """

    n: int
    gamma: tuple[Fraction, ...]
    couplings: Mapping[tuple[int, int], CouplingTriple]
    control_axes: tuple[str, ...] = ("x", "y", "z")


@dataclass(frozen=True)
class GammaPartition:
    """Particles grouped by equal gyromagnetic ratio, in first-seen order."""

    blocks: tuple[tuple[int, ...], ...]
    ratios: tuple[Fraction, ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def _as_fraction(value, what: str) -> Fraction:
    if isinstance(value, float):
        raise InvalidNetwork(f"{what} must be an exact rational, not a float")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InvalidNetwork(f"bad rational for {what}: {value!r}") from exc


def spin_network(
    n: int,
    gamma: Iterable,
    couplings: Optional[Mapping] = None,
    control_axes: Iterable[str] = AXES,
) -> SpinNetwork:
    """Build and validate a network from loosely typed inputs.

    ``couplings`` maps a pair ``(k, l)`` to a triple ``(xx, yy, zz)`` or,
    as a Heisenberg shorthand, to a single rational applied to all three
    axes. Ratios and couplings may be ints, strings like ``"3"``, ``"1/2"``
    or ``"0.5"``, or :class:`fractions.Fraction`; floats are rejected.
    """
    gam = tuple(_as_fraction(g, "gyromagnetic ratio") for g in gamma)
    trip: dict[tuple[int, int], CouplingTriple] = {}
    for pair, val in (couplings or {}).items():
        k, l = pair
        if isinstance(val, CouplingTriple):
            t = val
        elif isinstance(val, (tuple, list)):
            if len(val) != 3:
                raise InvalidNetwork(f"coupling for {pair} needs three entries")
            t = CouplingTriple(*(_as_fraction(v, f"coupling {pair}") for v in val))
        else:
            j = _as_fraction(val, f"coupling {pair}")
            t = CouplingTriple(j, j, j)
        key = (min(k, l), max(k, l))
        if key in trip:
            raise InvalidNetwork(f"duplicate coupling pair {key}")
        trip[key] = t
    return validate(SpinNetwork(n, gam, trip, tuple(control_axes)))


def validate(net: SpinNetwork) -> SpinNetwork:
    """Check the network invariants; returns a normalized copy.

    All-zero coupling triples are deleted (with a warning): downstream the
    coupled pairs and the graph edges must be the same set.
    """
    if net.n < 1:
        raise InvalidNetwork("need at least one particle")
    if len(net.gamma) != net.n:
        raise InvalidNetwork(
            f"{net.n} particles but {len(net.gamma)} gyromagnetic ratios"
        )
    axes = tuple(net.control_axes)
    if not axes:
        raise InvalidNetwork("at least one control axis is required")
    if len(set(axes)) != len(axes) or any(a not in AXES for a in axes):
        raise InvalidNetwork(f"control axes must be distinct members of x, y, z: {axes}")
    clean: dict[tuple[int, int], CouplingTriple] = {}
    for (k, l), t in net.couplings.items():
        if k == l:
            raise InvalidNetwork(f"particle {k} cannot couple to itself")
        if not (1 <= k <= net.n and 1 <= l <= net.n):
            raise InvalidNetwork(f"coupling pair ({k}, {l}) out of range 1..{net.n}")
        key = (min(k, l), max(k, l))
        if key in clean:
            raise InvalidNetwork(f"duplicate coupling pair {key}")
        if not t:
            warnings.warn(f"dropping all-zero coupling for pair {key}", stacklevel=2)
            continue
        clean[key] = t
    return SpinNetwork(net.n, tuple(net.gamma), clean, axes)


def gamma_partition(net: SpinNetwork) -> GammaPartition:
    """Group particles by equal ratio, blocks ordered by first occurrence."""
    blocks: list[list[int]] = []
    ratios: list[Fraction] = []
    for k, g in enumerate(net.gamma, start=1):
        for i, r in enumerate(ratios):
            if r == g:
                blocks[i].append(k)
                break
        else:
            ratios.append(g)
            blocks.append([k])
    return GammaPartition(tuple(tuple(b) for b in blocks), tuple(ratios))


def build_drift(net: SpinNetwork) -> Element:
    """Drift operator: -i times the internal coupling Hamiltonian.

    Each coupled pair contributes ``-c`` on the word carrying the axis
    symbol at both sites, one term per nonzero axis coupling. Returns the
    zero element for an uncoupled network.
    """
    coords: dict[str, Fraction] = {}
    for (k, l), t in sorted(net.couplings.items()):
        for sym, c in (("X", t.xx), ("Y", t.yy), ("Z", t.zz)):
            if c:
                coords[make_word(net.n, {k: sym, l: sym})] = -c
    return Element(net.n, coords)


def build_controls(net: SpinNetwork) -> dict[str, Element]:
    """One control operator per active axis: ``-i sum_k gamma_k (axis at k)``.

    A control is the zero element when every ratio vanishes; callers are
    expected to flag that degenerate situation rather than silently drop
    the axis.
    """
    out: dict[str, Element] = {}
    for axis in net.control_axes:
        sym = axis.upper()
        coords = {
            make_word(net.n, {k: sym}): -g
            for k, g in enumerate(net.gamma, start=1)
            if g
        }
        out[axis] = Element(net.n, coords)
    return out


def collective_spin(net: SpinNetwork, block: int, axis: str) -> Element:
    """Sum of single-site words over one equal-ratio block (as an i-word sum).

    ``block`` is a 0-based index into the gamma partition's blocks.
    """
    part = gamma_partition(net)
    if not 0 <= block < part.block_count:
        raise ValueError(f"block {block} out of range for {part.block_count} blocks")
    sym = axis.upper()
    coords = {make_word(net.n, {k: sym}): Fraction(1) for k in part.blocks[block]}
    return Element(net.n, coords)


def build_graph(net: SpinNetwork) -> InteractionGraph:
    """Interaction graph: nodes are particles, edges the coupled pairs."""
    return InteractionGraph(
        n=net.n,
        node_labels=tuple(net.gamma),
        edges=dict(net.couplings),
    )
