"""Lowest-weight signatures, Dynkin labels, and reduction points.

A positive-energy lowest-weight module is fixed by the signature
[d; a_1, ..., a_{n-1}] with d rational and a_k nonnegative integers.  The
lowest weight is Lambda = (lambda_1, ..., lambda_n) with

    lambda_i = d + (a_1 + ... + a_{i-1} - a_i - ... - a_{n-1}) / 2.

Reducibility of the Verma module with respect to a positive root beta is
controlled by m_beta = (rho - Lambda, beta-vee): the module is reducible
exactly when m_beta is a positive integer.  Reduction points are the values
of d where m_beta = 1 for beta in the families delta_i + delta_j, delta_i
and 2 delta_i; the compact family delta_i - delta_j does not move with d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from ospuir.root_system import (
    MAX_RANK,
    RootVector,
    Weight,
    build_root_system,
    pairing,
)


@dataclass(frozen=True)
class Signature:
    """Signature [d; a_1, ..., a_{n-1}] of a lowest-weight module."""

    n: int
    d: Fraction
    a: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_RANK:
            raise ValueError(f"rank must be an integer in [1, {MAX_RANK}]")
        if len(self.a) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} labels a_k, got {len(self.a)}")
        if any((not isinstance(x, int)) or x < 0 for x in self.a):
            raise ValueError("labels a_k must be nonnegative integers")
        object.__setattr__(self, "d", Fraction(self.d))


def signature(n: int, d, a: Sequence[int]) -> Signature:
    return Signature(n=n, d=Fraction(d), a=tuple(a))


def lowest_weight(sig: Signature) -> Weight:
    """Coordinates of Lambda in the delta basis."""
    out = []
    total = sum(sig.a)
    prefix = 0
    for i in range(sig.n):
        out.append(sig.d + Fraction(2 * prefix - total, 2))
        if i < sig.n - 1:
            prefix += sig.a[i]
    return tuple(out)


def dynkin_labels(sig: Signature) -> Tuple[Fraction, ...]:
    """Labels m_k = (rho - Lambda, alpha_k-vee) for the n simple roots."""
    return labels_of_weight(lowest_weight(sig))


def labels_of_weight(lam: Weight) -> Tuple[Fraction, ...]:
    """Labels of an arbitrary weight against the simple coroots."""
    rs = build_root_system(len(lam))
    mu = tuple(r - x for r, x in zip(rs.rho, lam))
    return tuple(pairing(mu, alpha.coords) for alpha in rs.simple)


FAMILY_COMPACT = "delta_i-delta_j"
FAMILY_SUM = "delta_i+delta_j"
FAMILY_ODD = "delta_i"
FAMILY_DOUBLE = "2delta_i"


@dataclass(frozen=True)
class ReducibilityEntry:
    root: RootVector
    family: str
    i: int
    j: Optional[int]
    m_value: Fraction
    satisfied: bool


@dataclass(frozen=True)
class ReducibilityReport:
    sig: Signature
    entries: Tuple[ReducibilityEntry, ...]

    @property
    def reducible(self) -> bool:
        return any(e.satisfied for e in self.entries)

    def satisfied_entries(self) -> Tuple[ReducibilityEntry, ...]:
        return tuple(e for e in self.entries if e.satisfied)


def _is_positive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def reducibility_report(sig: Signature) -> ReducibilityReport:
    """m_beta for every positive root family, with the integrality flag."""
    n = sig.n
    rs = build_root_system(n)
    lam = lowest_weight(sig)
    mu = tuple(r - x for r, x in zip(rs.rho, lam))

    def entry(coords, family, i, j):
        root = _find_root(rs, coords)
        m = pairing(mu, coords)
        return ReducibilityEntry(
            root=root, family=family, i=i, j=j, m_value=m,
            satisfied=_is_positive_integer(m),
        )

    entries = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            coords = _delta_pair(n, i, j, -1)
            entries.append(entry(coords, FAMILY_COMPACT, i, j))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            coords = _delta_pair(n, i, j, +1)
            entries.append(entry(coords, FAMILY_SUM, i, j))
    for i in range(1, n + 1):
        coords = tuple(Fraction(1 if k == i else 0) for k in range(1, n + 1))
        entries.append(entry(coords, FAMILY_ODD, i, None))
    for i in range(1, n + 1):
        coords = tuple(Fraction(2 if k == i else 0) for k in range(1, n + 1))
        entries.append(entry(coords, FAMILY_DOUBLE, i, None))
    return ReducibilityReport(sig=sig, entries=tuple(entries))


def _delta_pair(n: int, i: int, j: int, sign: int) -> Weight:
    v = [Fraction(0)] * n
    v[i - 1] = Fraction(1)
    v[j - 1] = Fraction(sign)
    return tuple(v)


def _find_root(rs, coords: Weight) -> RootVector:
    for r in rs.positive_even + rs.positive_odd:
        if r.coords == coords:
            return r
    raise ValueError(f"not a positive root: {coords}")


@dataclass(frozen=True)
class ReductionPoints:
    """Values of d where m_beta = 1, per noncompact family.

    d_sum[(i, j)] covers delta_i + delta_j, d_odd[i] covers delta_i and
    d_double[i] covers 2 delta_i.  The labels a_k are held fixed.
    """

    n: int
    a: Tuple[int, ...]
    d_sum: Dict[Tuple[int, int], Fraction]
    d_odd: Dict[int, Fraction]
    d_double: Dict[int, Fraction]

    @property
    def first(self) -> Fraction:
        """The largest reduction point, always d_odd[1]."""
        return self.d_odd[1]

    def value(self, i: int, j: Optional[int] = None) -> Fraction:
        """Point for the pair (i, j), for delta_i (j None) or 2 delta_i (j == i)."""
        if j is None:
            return self.d_odd[i]
        if j == i:
            return self.d_double[i]
        return self.d_sum[(i, j)]

    def point_name(self, i: int, j: Optional[int] = None) -> str:
        """Conventional name: d1 for delta_1, d11 for 2 delta_1, d13 for
        delta_1 + delta_3; indices get comma-separated from rank 10 up."""
        if j is None:
            return f"d{i}"
        return f"d{i}{j}" if self.n < 10 else f"d{i},{j}"

    def labels_at(self, value: Fraction) -> str:
        """All point names equal to the given value, joined with '='.

        Single-index names come first; ties inside a group are ordered by
        index.  Returns '' when no point matches.
        """
        names = []
        for i in sorted(self.d_odd):
            if self.d_odd[i] == value:
                names.append(self.point_name(i))
        for i in sorted(self.d_double):
            if self.d_double[i] == value:
                names.append(self.point_name(i, i))
        for (i, j) in sorted(self.d_sum):
            if self.d_sum[(i, j)] == value:
                names.append(self.point_name(i, j))
        return "=".join(names)


def reduction_points(n: int, a: Sequence[int]) -> ReductionPoints:
    """Solve m_beta(d) = 1 for every noncompact positive root."""
    a = tuple(a)
    probe = Signature(n=n, d=Fraction(0), a=a)
    rep = reducibility_report(probe)
    d_sum: Dict[Tuple[int, int], Fraction] = {}
    d_odd: Dict[int, Fraction] = {}
    d_double: Dict[int, Fraction] = {}
    for e in rep.entries:
        # m_beta(d) = m_beta(0) - slope*d with slope = (Lambda-part of beta-vee)
        if e.family == FAMILY_COMPACT:
            continue
        if e.family == FAMILY_SUM:
            slope = Fraction(2)
        elif e.family == FAMILY_ODD:
            slope = Fraction(2)
        else:
            slope = Fraction(1)
        point = (e.m_value - 1) / slope
        if e.family == FAMILY_SUM:
            d_sum[(e.i, e.j)] = point
        elif e.family == FAMILY_ODD:
            d_odd[e.i] = point
        else:
            d_double[e.i] = point
    return ReductionPoints(n=n, a=a, d_sum=d_sum, d_odd=d_odd, d_double=d_double)


def mn_at_reduction(m: Sequence[int], i: int, j: Optional[int] = None) -> Fraction:
    """Last Dynkin label m_n evaluated at a reduction point.

    m holds the first n-1 labels (m_k = 1 + a_k).  The point is d_odd[i]
    when j is None, d_double[i] when j == i, and d_sum[(i, j)] otherwise.
    """
    if any((not isinstance(x, int)) or x < 1 for x in m):
        raise ValueError("labels m_k must be positive integers")
    n = len(m) + 1
    a = tuple(x - 1 for x in m)
    pts = reduction_points(n, a)
    sig = Signature(n=n, d=pts.value(i, j), a=a)
    return dynkin_labels(sig)[n - 1]
