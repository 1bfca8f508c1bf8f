"""Lie closure: the smallest Lie algebra containing a set of generators."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .echelon import EchelonBasis, bracket
from .pauli import Element


class ClosureCapExceeded(RuntimeError):
    """The closure grew past the requested dimension budget."""

    def __init__(self, dimension: int, cap: int):
        super().__init__(f"closure dimension passed {dimension} with cap {cap}")
        self.dimension = dimension
        self.cap = cap


@dataclass
class ClosureResult:
    basis: EchelonBasis
    dimension: int
    saturated_early: bool
    bracket_count: int


def close(
    generators: Iterable[Element],
    n: Optional[int] = None,
    cap: Optional[int] = None,
) -> ClosureResult:
    """Close a generating set under commutators.

    Worklist algorithm: generators are inserted, every newly independent
    residual is queued (FIFO, with its value frozen at insertion time) and
    later bracketed against every row present when it is dequeued. Queue
    order and the insertion-ordered scan make the resulting basis and the
    bracket count deterministic.

    Stops early once the dimension reaches ``4**n - 1``, the whole of
    su(2^n). Raises :class:`ClosureCapExceeded` when ``cap`` is given and
    the dimension passes it.
    """
    gens = [g for g in generators if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    if n is None:
        n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generator length mismatch")

    full = 4**n - 1
    basis = EchelonBasis(n)
    queue: deque[Element] = deque()
    bracket_count = 0

    def grow(e: Element) -> None:
        if basis.insert(e):
            queue.append(basis.rows[-1])
            if cap is not None and basis.dimension > cap:
                raise ClosureCapExceeded(basis.dimension, cap)

    for g in gens:
        grow(g)
        if basis.dimension == full:
            break

    saturated = basis.dimension == full
    while queue and not saturated:
        item = queue.popleft()
        count = len(basis.rows)
        for j in range(count):
            bracket_count += 1
            c = bracket(item, basis.rows[j])
            if c:
                grow(c)
                if basis.dimension == full:
                    saturated = True
                    break

    return ClosureResult(basis, basis.dimension, saturated, bracket_count)
