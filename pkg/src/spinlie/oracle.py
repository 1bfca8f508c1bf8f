"""Brute-force numeric cross-checks on explicit 2^n x 2^n matrices.

This module deliberately shares no code with the symbolic product table:
everything is rebuilt from the four explicit 2x2 matrices and numpy
Kronecker products, so a transcription error on either side shows up as a
disagreement. Rank decisions are numeric (SVD with a relative threshold);
the symbolic path stays the authority, this is the independent witness.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .pauli import Element

DENSE_SITE_CAP = 6  # 64 x 64 matrices; beyond this the dense path refuses
DEFAULT_RANK_TOL = 1e-9

_FACTORS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0.0, 0.5], [0.5, 0.0]], dtype=complex),
    "Y": np.array([[0.0, -0.5j], [0.5j, 0.0]], dtype=complex),
    "Z": np.array([[0.5, 0.0], [0.0, -0.5]], dtype=complex),
}


def _check_cap(n: int) -> None:
    if n > DENSE_SITE_CAP:
        raise ValueError(
            f"dense path refuses {n} sites (cap {DENSE_SITE_CAP}: 4**n growth)"
        )


def word_matrix(word: str) -> np.ndarray:
    """Kronecker product of the 2x2 factors named by ``word`` (no i factor)."""
    _check_cap(len(word))
    out = _FACTORS[word[0]]
    for sym in word[1:]:
        out = np.kron(out, _FACTORS[sym])
    return out


def materialize(
    obj: Union[Element, Mapping[str, Fraction], str], n: int | None = None
) -> np.ndarray:
    """Dense matrix of an element, a word-coefficient mapping, or one word.

    Elements and mappings produce ``sum_W c_W * i * word_matrix(W)``; a
    bare word string produces its matrix without the i factor. Mappings
    may include the all-identity word (projector expansions do).
    """
    if isinstance(obj, str):
        return word_matrix(obj)
    coords = obj.coords if isinstance(obj, Element) else obj
    if n is None:
        if not coords:
            raise ValueError("cannot infer the site count of a zero mapping")
        n = len(next(iter(coords)))
    _check_cap(n)
    out = np.zeros((2**n, 2**n), dtype=complex)
    for word, c in coords.items():
        out += float(c) * 1j * word_matrix(word)
    return out


def oracle_commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Entrywise matrix commutator ``ab - ba``."""
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    return a @ b - b @ a


def _flatten(m: np.ndarray) -> np.ndarray:
    # the trace inner product Re tr(a^H b) is the real dot product of
    # these stacked real/imaginary parts
    return np.concatenate([m.real.ravel(), m.imag.ravel()])


def numeric_rank(mats: Sequence[np.ndarray], tol: float = DEFAULT_RANK_TOL) -> int:
    """Rank of a set of matrices under the trace inner product.

    Singular values below ``tol`` times the largest count as zero; any
    singular value within a factor 1e3 of that threshold earns a warning,
    since the rank decision is then borderline.
    """
    if not mats:
        return 0
    stack = np.stack([_flatten(m) for m in mats])
    svals = np.linalg.svd(stack, compute_uv=False)
    cutoff = tol * svals[0]
    if cutoff == 0.0:
        return 0
    borderline = (svals > cutoff / 1e3) & (svals < cutoff * 1e3)
    if borderline.any():
        warnings.warn(
            "numeric rank decision is borderline: singular value within 1e3 "
            f"of the cutoff {cutoff:.3e}",
            stacklevel=2,
        )
    return int((svals > cutoff).sum())


def numeric_closure_dim(
    generators: Iterable[np.ndarray], tol: float = DEFAULT_RANK_TOL
) -> int:
    """Closure dimension computed entirely on dense matrices.

    Same worklist scheme as the symbolic path, but independence is decided
    by numeric rank. Stops early at the full dimension ``N**2 - 1`` of
    traceless skew-Hermitian matrices.
    """
    gens = [np.asarray(g, dtype=complex) for g in generators]
    gens = [g for g in gens if np.abs(g).max() > 0]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    size = gens[0].shape[0]
    _check_cap(int(math.log2(size)))
    full = size * size - 1

    basis: list[np.ndarray] = []
    rank = 0
    queue: list[np.ndarray] = []

    def grow(m: np.ndarray) -> None:
        nonlocal rank
        new_rank = numeric_rank(basis + [m], tol)
        if new_rank > rank:
            basis.append(m)
            queue.append(m)
            rank = new_rank

    for g in gens:
        grow(g)
        if rank == full:
            return rank

    head = 0
    while head < len(queue) and rank < full:
        item = queue[head]
        head += 1
        count = len(basis)
        for j in range(count):
            c = oracle_commutator(item, basis[j])
            if np.abs(c).max() > 0:
                grow(c)
                if rank == full:
                    break
    return rank
