"""Shared generators and subspace builders for the test suite."""

from fractions import Fraction
from itertools import product

import numpy as np

from spinlie import EchelonBasis, Element, make_word, spin_network

# half-normalized 2x2 matrices, written out independently of the package
SIGMA = {
    "I": np.eye(2, dtype=complex),
    "X": 0.5 * np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": 0.5 * np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": 0.5 * np.array([[1, 0], [0, -1]], dtype=complex),
}

NONZERO_RATIONALS = [
    Fraction(a, b) for a in (-3, -2, -1, 1, 2, 3) for b in (1, 2, 3)
]
RATIONALS = [Fraction(0)] + NONZERO_RATIONALS


def dense_word(word):
    """Kronecker product of the literal 2x2 matrices (no i factor)."""
    out = SIGMA[word[0]]
    for sym in word[1:]:
        out = np.kron(out, SIGMA[sym])
    return out


def dense_element(e):
    """Dense matrix of an element, built from the literal matrices."""
    n = e.n
    out = np.zeros((2**n, 2**n), dtype=complex)
    for word, c in e.coords.items():
        out += float(c) * 1j * dense_word(word)
    return out


def all_words(n, include_identity=False):
    words = ["".join(p) for p in product("IXYZ", repeat=n)]
    if not include_identity:
        words = [w for w in words if w != "I" * n]
    return words


def random_element(rng, n, max_terms=3):
    words = rng.sample(all_words(n), k=rng.randint(1, max_terms))
    return Element(n, {w: rng.choice(NONZERO_RATIONALS) for w in words})


def random_network(rng, n, ratio_pool=None, edge_probability=0.7, axes=("x", "y", "z")):
    """Random network with nonzero ratios (repeats allowed) and random couplings."""
    pool = ratio_pool or NONZERO_RATIONALS[:8]
    gamma = [rng.choice(pool) for _ in range(n)]
    couplings = {}
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            if rng.random() < edge_probability:
                triple = tuple(rng.choice(RATIONALS) for _ in range(3))
                if any(triple):
                    couplings[(k, l)] = triple
    return spin_network(n, gamma, couplings, axes)


# ---------------------------------------------------------------------------
# three-site subspaces for the equal-outer-coupling structure checks
# ---------------------------------------------------------------------------

_V = "XYZ"


def _basis(elements):
    return EchelonBasis(3, elements)


def space_collective():
    """Span of i(site1 + site2 along v) and i(site3 along w)."""
    rows = [
        Element(3, {make_word(3, {1: v}): 1, make_word(3, {2: v}): 1}) for v in _V
    ]
    rows += [Element(3, {make_word(3, {3: w}): 1}) for w in _V]
    return _basis(rows)


def space_outer(sign):
    """Span of i(1v.3w + sign * 2v.3w) over all v, w: dimension 9."""
    return _basis(
        [
            Element(
                3,
                {
                    make_word(3, {1: v, 3: w}): 1,
                    make_word(3, {2: v, 3: w}): sign,
                },
            )
            for v in _V
            for w in _V
        ]
    )


def space_symmetric_triples():
    """Span of i(1v.2w.3p + 1w.2v.3p): dimension 18."""
    rows = []
    for v in _V:
        for w in _V:
            for p in _V:
                coords = {}
                for a, b in ((v, w), (w, v)):
                    word = make_word(3, {1: a, 2: b, 3: p})
                    coords[word] = coords.get(word, 0) + 1
                rows.append(Element(3, coords))
    return _basis(rows)


def space_symmetric_pairs():
    """Span of i(1v.2w + 1w.2v) for v != w: dimension 3."""
    rows = []
    for i, v in enumerate(_V):
        for w in _V[i + 1:]:
            rows.append(
                Element(
                    3,
                    {
                        make_word(3, {1: v, 2: w}): 1,
                        make_word(3, {1: w, 2: v}): 1,
                    },
                )
            )
    return _basis(rows)


def space_antisymmetric_pairs():
    """Span of i(1v.2w - 1w.2v) for v != w: dimension 3."""
    rows = []
    for i, v in enumerate(_V):
        for w in _V[i + 1:]:
            rows.append(
                Element(
                    3,
                    {
                        make_word(3, {1: v, 2: w}): 1,
                        make_word(3, {1: w, 2: v}): -1,
                    },
                )
            )
    return _basis(rows)


def space_diagonal_differences():
    """Span of i(1x.2x - 1y.2y) and i(1x.2x - 1z.2z): dimension 2."""
    xx = make_word(3, {1: "X", 2: "X"})
    yy = make_word(3, {1: "Y", 2: "Y"})
    zz = make_word(3, {1: "Z", 2: "Z"})
    return _basis(
        [Element(3, {xx: 1, yy: -1}), Element(3, {xx: 1, zz: -1})]
    )


def join(*bases):
    out = EchelonBasis(3)
    for b in bases:
        for row in b.rows:
            out.insert(row)
    return out


def swap_fixed_pairs():
    """Word mappings spanning the swap-symmetric part of u(4), identity included."""
    syms = "IXYZ"
    vectors = []
    for i, l in enumerate(syms):
        for v in syms[i:]:
            coords = {}
            for a, b in ((l, v), (v, l)):
                coords[a + b] = coords.get(a + b, 0) + 1
            vectors.append(coords)
    return vectors


def bounding_span():
    """Span of (swap-fixed two-site block) x (third site), identity removed."""
    rows = []
    for coords in swap_fixed_pairs():
        for j in "IXYZ":
            shifted = {}
            for pair, c in coords.items():
                shifted[pair + j] = c
            if "III" in shifted:
                if len(shifted) == 1:
                    continue  # the pure identity direction is excluded
                raise AssertionError("identity mixed into a traceless element")
            rows.append(Element(3, shifted))
    return _basis(rows)
