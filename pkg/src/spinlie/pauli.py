"""Exact arithmetic on tensor words of half-normalized spin operators.

An n-site *word* is a string over the alphabet ``IXYZ`` naming a Kronecker
product of 2x2 factors: ``I`` the identity and ``X``, ``Y``, ``Z`` the spin
matrices carrying a factor one half, so that each squares to a quarter of
the identity and ``[X, Y] = iZ`` (cyclically). The i-multiples of the
non-identity words form a basis of su(2^n); an :class:`Element` stores a
real rational combination over that basis, hence represents a traceless
skew-Hermitian operator by construction.

All coefficients are :class:`fractions.Fraction`, so products, commutators
and the swap symmetrization below are exact. Every object in this module is
an immutable value and every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Optional

SYMBOLS = "IXYZ"
AXES = "xyz"

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Single-site product table. Key "ab" maps to (halving, i_power, symbol)
# meaning a.b = 2**-halving * i**i_power * symbol. Equal non-identity
# symbols square to I/4; distinct ones anticommute and produce +-i/2 times
# the third symbol.
_CYCLE = {("X", "Y"): "Z", ("Y", "Z"): "X", ("Z", "X"): "Y"}
_SITE_TABLE: dict[str, tuple[int, int, str]] = {}
for _a in SYMBOLS:
    for _b in SYMBOLS:
        if _a == "I":
            _SITE_TABLE[_a + _b] = (0, 0, _b)
        elif _b == "I":
            _SITE_TABLE[_a + _b] = (0, 0, _a)
        elif _a == _b:
            _SITE_TABLE[_a + _b] = (2, 0, "I")
        elif (_a, _b) in _CYCLE:
            _SITE_TABLE[_a + _b] = (1, 1, _CYCLE[(_a, _b)])
        else:
            _SITE_TABLE[_a + _b] = (1, 3, _CYCLE[(_b, _a)])
del _a, _b


@dataclass(frozen=True)
class PhaseCoefficient:
    """A nonzero scalar ``magnitude * i**i_power`` with exact magnitude.

    Houses the powers of one half and the units +-1, +-i produced by
    products of half-normalized spin matrices.
    """

    magnitude: Fraction
    i_power: int

    def __post_init__(self) -> None:
        if self.magnitude <= 0:
            raise ValueError("phase coefficient magnitude must be positive")
        object.__setattr__(self, "i_power", self.i_power % 4)

    def __mul__(self, other: "PhaseCoefficient") -> "PhaseCoefficient":
        return PhaseCoefficient(
            self.magnitude * other.magnitude, self.i_power + other.i_power
        )

    def as_complex(self) -> complex:
        return float(self.magnitude) * 1j**self.i_power


def is_word(word: str, n: Optional[int] = None) -> bool:
    """True if ``word`` is a site word (of length ``n``, when given)."""
    if not isinstance(word, str) or (n is not None and len(word) != n):
        return False
    return all(s in SYMBOLS for s in word)


def _require_same_length(p: str, q: str) -> None:
    if len(p) != len(q):
        raise ValueError(f"word length mismatch: {len(p)} vs {len(q)}")


def make_word(n: int, sites: Mapping[int, str]) -> str:
    """Word with the given symbols at 1-based ``sites`` and I elsewhere."""
    out = ["I"] * n
    for k, sym in sites.items():
        if not 1 <= k <= n:
            raise ValueError(f"site index {k} out of range 1..{n}")
        if sym not in SYMBOLS:
            raise ValueError(f"unknown site symbol {sym!r}")
        out[k - 1] = sym
    return "".join(out)


def site_product(a: str, b: str) -> tuple[PhaseCoefficient, str]:
    """Product of two single-site factors.

    Returns the unique coefficient and symbol with ``a.b = coef * symbol``;
    the coefficient is one of 1, 1/4, i/2, -i/2.
    """
    try:
        halving, ipow, sym = _SITE_TABLE[a + b]
    except (KeyError, TypeError):
        raise ValueError(f"unknown site symbols {a!r}, {b!r}") from None
    return PhaseCoefficient(Fraction(1, 1 << halving), ipow), sym


def word_product(p: str, q: str) -> tuple[PhaseCoefficient, str]:
    """Sitewise product ``p.q`` of two words of equal length."""
    _require_same_length(p, q)
    halving = 0
    ipow = 0
    out = []
    for a, b in zip(p, q):
        h, k, s = _SITE_TABLE[a + b]
        halving += h
        ipow += k
        out.append(s)
    return PhaseCoefficient(Fraction(1, 1 << halving), ipow), "".join(out)


def basis_commutator(p: str, q: str) -> Optional[tuple[Fraction, str]]:
    """Commutator ``[i.p, i.q]`` of two basis words.

    Returns ``(r, w)`` with ``[i.p, i.q] = r * (i.w)`` and r a real rational,
    or ``None`` when the words commute. Words commute exactly when the
    number of sites carrying distinct non-identity symbols is even; that
    parity equals the parity of the accumulated i power, so a single pass
    over the product table decides both questions.
    """
    _require_same_length(p, q)
    halving = 0
    ipow = 0
    out = []
    for a, b in zip(p, q):
        h, k, s = _SITE_TABLE[a + b]
        halving += h
        ipow += k
        out.append(s)
    if ipow % 2 == 0:
        return None
    # p.q = 2**-halving * i**ipow * w and q.p is its negative, so
    # [p, q] = i*beta*w with beta = +-2**(1 - halving); the stored
    # convention [i.p, i.q] = -[p, q] flips the sign once more.
    if ipow % 4 == 1:
        r = Fraction(-1, 1 << (halving - 1))
    else:
        r = Fraction(1, 1 << (halving - 1))
    return r, "".join(out)


class Element:
    """A real rational combination ``sum_W c_W * (i.W)`` over n-site words.

    ``coords`` maps words to nonzero :class:`fractions.Fraction`
    coefficients. The all-identity word is rejected: it spans the trace
    direction, which no operator represented here possesses. Treat
    instances as immutable; all arithmetic returns new elements.
    """

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: Optional[Mapping[str, Fraction]] = None):
        if n < 1:
            raise ValueError("element needs at least one site")
        identity = "I" * n
        clean: dict[str, Fraction] = {}
        for word, c in (coords or {}).items():
            if len(word) != n or not is_word(word):
                raise ValueError(f"bad word {word!r} for {n} sites")
            c = Fraction(c)
            if not c:
                continue
            if word == identity:
                raise ValueError("the all-identity word is not representable")
            clean[word] = c
        self.n = n
        self.coords = clean

    @classmethod
    def from_word(cls, word: str, coeff: Fraction | int = 1) -> "Element":
        return cls(len(word), {word: Fraction(coeff)})

    def terms(self) -> list[tuple[str, Fraction]]:
        """Coordinate pairs sorted by word (I < X < Y < Z sitewise)."""
        return sorted(self.coords.items())

    def __bool__(self) -> bool:
        return bool(self.coords)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Element)
            and self.n == other.n
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.coords.items())))

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("element length mismatch")
        coords = dict(self.coords)
        for w, c in other.coords.items():
            nc = coords.get(w, _ZERO) + c
            if nc:
                coords[w] = nc
            else:
                coords.pop(w, None)
        return Element(self.n, coords)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.n, {w: -c for w, c in self.coords.items()})

    def __mul__(self, scalar) -> "Element":
        s = Fraction(scalar)
        if not s:
            return Element(self.n)
        return Element(self.n, {w: c * s for w, c in self.coords.items()})

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[tuple[str, Fraction]]:
        return iter(self.terms())

    def __repr__(self) -> str:
        if not self.coords:
            return f"Element({self.n}, 0)"
        body = " + ".join(f"({c})*i[{w}]" for w, c in self.terms())
        return f"Element({self.n}, {body})"


def swap_symmetrize(e: Element) -> Element:
    """Average a two-site element with its site-swapped image.

    The linear extension of ``s1 (x) s2 -> (s1 (x) s2 + s2 (x) s1) / 2``;
    idempotent, and its fixed space is closed under matrix products.
    """
    if e.n != 2:
        raise ValueError("swap symmetrization is defined on two-site elements")
    half = Fraction(1, 2)
    coords: dict[str, Fraction] = {}
    for w, c in e.coords.items():
        for ww in (w, w[::-1]):
            nc = coords.get(ww, _ZERO) + c * half
            if nc:
                coords[ww] = nc
            else:
                coords.pop(ww, None)
    return Element(2, coords)
