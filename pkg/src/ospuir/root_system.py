"""Root data for osp(1|2n, R) in the orthonormal delta basis.

All weights are tuples of Fractions in the coordinates (delta_1, ..., delta_n).
The even positive roots are delta_i +- delta_j (i < j) and 2 delta_i, the odd
positive roots are delta_i, and the restricted set replaces each 2 delta_i by
delta_i, giving a system of type B_n.  The simple roots are
alpha_j = delta_j - delta_{j+1} for j < n and alpha_n = delta_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

Weight = Tuple[Fraction, ...]

MAX_RANK = 16

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class RootVector:
    """A root with its delta-basis coordinates and parity."""

    coords: Weight
    parity: str

    def __post_init__(self) -> None:
        if self.parity not in (EVEN, ODD):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")


@dataclass(frozen=True)
class RootSystemData:
    """Positive roots, simple roots and rho for a fixed rank n."""

    n: int
    positive_even: Tuple[RootVector, ...]
    positive_odd: Tuple[RootVector, ...]
    restricted_positive: Tuple[RootVector, ...]
    simple: Tuple[RootVector, ...]
    rho: Weight


def _unit(n: int, i: int, c: int = 1) -> list:
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def weight(coords: Sequence) -> Weight:
    return tuple(Fraction(c) for c in coords)


def build_root_system(n: int) -> RootSystemData:
    """Construct the full root data for rank n (1 <= n <= 16)."""
    if not isinstance(n, int) or not 1 <= n <= MAX_RANK:
        raise ValueError(f"rank must be an integer in [1, {MAX_RANK}], got {n!r}")

    even = []
    restricted = []
    # long/short even roots first in the fixed order: differences, sums, doubles
    for i in range(n):
        for j in range(i + 1, n):
            v = _unit(n, i)
            v[j] = Fraction(-1)
            even.append(RootVector(tuple(v), EVEN))
            restricted.append(RootVector(tuple(v), EVEN))
    for i in range(n):
        for j in range(i + 1, n):
            v = _unit(n, i)
            v[j] = Fraction(1)
            even.append(RootVector(tuple(v), EVEN))
            restricted.append(RootVector(tuple(v), EVEN))
    odd = []
    for i in range(n):
        even.append(RootVector(tuple(_unit(n, i, 2)), EVEN))
        r = RootVector(tuple(_unit(n, i)), ODD)
        odd.append(r)
        restricted.append(r)

    simple = []
    for j in range(n - 1):
        v = _unit(n, j)
        v[j + 1] = Fraction(-1)
        simple.append(RootVector(tuple(v), EVEN))
    simple.append(RootVector(tuple(_unit(n, n - 1)), ODD))

    rho = tuple(Fraction(2 * (n - i) + 1, 2) for i in range(1, n + 1))
    return RootSystemData(
        n=n,
        positive_even=tuple(even),
        positive_odd=tuple(odd),
        restricted_positive=tuple(restricted),
        simple=tuple(simple),
        rho=rho,
    )


def inner(u: Sequence, v: Sequence) -> Fraction:
    """Euclidean inner product in the delta basis."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def coroot(beta: Sequence) -> Weight:
    """beta-vee = 2 beta / (beta, beta)."""
    bb = inner(beta, beta)
    if bb == 0:
        raise ValueError("coroot of the zero vector is undefined")
    return tuple(Fraction(2) * Fraction(b) / bb for b in beta)


def pairing(lam: Sequence, beta: Sequence) -> Fraction:
    """(lam, beta-vee)."""
    return inner(lam, coroot(beta))


def delta_to_simple(v: Sequence) -> Tuple[Fraction, ...]:
    """Expand a delta-basis vector in the simple-root basis.

    With alpha_j = delta_j - delta_{j+1} and alpha_n = delta_n the expansion
    coefficients are the prefix sums of the delta coordinates.
    """
    coords = [Fraction(c) for c in v]
    out = []
    acc = Fraction(0)
    for c in coords:
        acc += c
        out.append(acc)
    return tuple(out)


def simple_to_delta(coeffs: Sequence) -> Weight:
    """Inverse of delta_to_simple."""
    cs = [Fraction(c) for c in coeffs]
    out = []
    prev = Fraction(0)
    for c in cs:
        out.append(c - prev)
        prev = c
    return tuple(out)


def is_positive(v: Sequence) -> bool:
    """True when the first nonzero delta coordinate is positive.

    Characterises positive roots: every positive root of the system has its
    first nonzero coordinate equal to +1.
    """
    for c in v:
        if c != 0:
            return c > 0
    return False
