"""Exact linear algebra over the i-word basis.

Subspaces of su(2^n) are kept as :class:`EchelonBasis` instances: ordered,
fully reduced row-echelon spanning sets with rational coefficients. Rank
and membership questions are therefore exact equality tests, with no
tolerance anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping

from .pauli import Element, basis_commutator

_ZERO = Fraction(0)


def bracket(a: Element, b: Element) -> Element:
    """Commutator ``[a, b]``, extended bilinearly over the word basis."""
    if a.n != b.n:
        raise ValueError("element length mismatch")
    coords: dict[str, Fraction] = {}
    for wa, ca in a.coords.items():
        for wb, cb in b.coords.items():
            hit = basis_commutator(wa, wb)
            if hit is None:
                continue
            r, w = hit
            nc = coords.get(w, _ZERO) + ca * cb * r
            if nc:
                coords[w] = nc
            else:
                del coords[w]
    return Element(a.n, coords)


class EchelonBasis:
    """Reduced row-echelon spanning set of a subspace of su(2^n).

    Each row's pivot is its lexicographically smallest support word
    (ordering I < X < Y < Z per site, which is plain string order); the
    pivot coefficient is one and the pivot word appears in no other row.
    Rows keep their insertion order, so repeated runs over the same input
    produce identical bases.
    """

    def __init__(self, n: int, elements: Iterable[Element] = ()):
        self.n = n
        self.rows: list[Element] = []
        self._pivot: dict[str, int] = {}
        for e in elements:
            self.insert(e)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def pivots(self) -> dict[str, int]:
        """Pivot word to row index map (a copy)."""
        return dict(self._pivot)

    def reduce(self, e: Element) -> Element:
        """Residual of ``e`` after eliminating every pivot.

        The residual is zero exactly when ``e`` lies in the span. One pass
        suffices: no row's support contains another row's pivot.
        """
        if e.n != self.n:
            raise ValueError("element length mismatch")
        coords = dict(e.coords)
        for w in [w for w in coords if w in self._pivot]:
            c = coords.pop(w)
            for rw, rc in self.rows[self._pivot[w]].coords.items():
                if rw == w:
                    continue
                nc = coords.get(rw, _ZERO) - c * rc
                if nc:
                    coords[rw] = nc
                else:
                    del coords[rw]
        return Element(self.n, coords)

    def contains(self, e: Element) -> bool:
        return not self.reduce(e)

    def insert(self, e: Element) -> bool:
        """Add ``e`` to the span; returns whether the dimension grew.

        The residual is normalized to pivot coefficient one and
        back-substituted into the existing rows, keeping the basis fully
        reduced.
        """
        r = self.reduce(e)
        if not r:
            return False
        pivot = min(r.coords)
        r = r * (1 / r.coords[pivot])
        for i, row in enumerate(self.rows):
            c = row.coords.get(pivot)
            if c:
                self.rows[i] = row - c * r
        self._pivot[pivot] = len(self.rows)
        self.rows.append(r)
        return True

    def __iter__(self):
        return iter(self.rows)

    def __repr__(self) -> str:
        return f"EchelonBasis(n={self.n}, dimension={self.dimension})"


def span_equals(a: EchelonBasis, b: EchelonBasis) -> bool:
    """True when the two bases span the same subspace."""
    if a.n != b.n or a.dimension != b.dimension:
        return False
    return all(b.contains(row) for row in a.rows)


def subspace_bracket_contained(
    u: EchelonBasis, v: EchelonBasis, w: EchelonBasis
) -> bool:
    """True iff every bracket of a U-row with a V-row lies in span(W)."""
    if not (u.n == v.n == w.n):
        raise ValueError("basis length mismatch")
    return all(
        w.contains(bracket(a, b)) for a in u.rows for b in v.rows
    )


def sparse_rank(vectors: Iterable[Mapping]) -> int:
    """Exact rank of sparse rational vectors over any sortable key set.

    Plain Gaussian elimination with smallest-key pivoting; used for kernel
    dimensions where the coordinates are not plain words (or include the
    all-identity word, which :class:`Element` refuses to store).
    """
    pivots: dict = {}
    rank = 0
    for v in vectors:
        row = {k: Fraction(c) for k, c in v.items() if c}
        while row:
            p = min(row)
            prow = pivots.get(p)
            if prow is None:
                c = row[p]
                pivots[p] = {k: cc / c for k, cc in row.items()}
                rank += 1
                break
            c = row.pop(p)
            for kk, cc in prow.items():
                if kk == p:
                    continue
                nc = row.get(kk, _ZERO) - c * cc
                if nc:
                    row[kk] = nc
                else:
                    row.pop(kk, None)
    return rank


def corner_projector(n: int) -> dict[str, Fraction]:
    """Word expansion of i times the top-corner projector diag(1, 0, ..., 0).

    The 2x2 factor diag(1, 0) is half the identity plus the Z matrix, so
    the word with Z exactly on a site subset S carries coefficient
    ``(1/2)**(n - |S|)``. The all-identity word is included (the operator
    has trace), which is why a plain mapping is returned instead of an
    :class:`Element`.
    """
    if n < 1:
        raise ValueError("need at least one site")
    half = Fraction(1, 2)
    out: dict[str, Fraction] = {}
    for picks in product("IZ", repeat=n):
        word = "".join(picks)
        out[word] = half ** (n - word.count("Z"))
    return out


def centralizer_dimension(basis: EchelonBasis, projector: Mapping[str, Fraction]) -> int:
    """Dimension of the subspace of span(basis) commuting with ``projector``.

    Computed as the exact kernel dimension of the linear map sending a
    basis row to its bracket with the projector. The projector's
    all-identity component never contributes to a commutator and is
    dropped.
    """
    if basis.dimension == 0:
        raise ValueError("centralizer of an empty basis is undefined")
    identity = "I" * basis.n
    d = Element(
        basis.n, {w: c for w, c in projector.items() if w != identity}
    )
    images = (bracket(d, row).coords for row in basis.rows)
    return basis.dimension - sparse_rank(images)


def center_dimension(basis: EchelonBasis) -> int:
    """Dimension of the center: elements commuting with the whole span."""
    vectors = []
    for row in basis.rows:
        vec: dict[tuple[int, str], Fraction] = {}
        for j, other in enumerate(basis.rows):
            for w, c in bracket(row, other).coords.items():
                vec[(j, w)] = c
        vectors.append(vec)
    return basis.dimension - sparse_rank(vectors)
