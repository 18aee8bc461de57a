"""Unitarity classification of positive-energy lowest-weight modules.

For a signature [d; a_1, ..., a_{n-1}] let z be the number of leading zero
labels (z = n - 1 when all vanish), kappa = z / 2 and S = sum a_k.  The
module is unitary exactly when

    d > T            (continuous part),   T = n - 1 - kappa + S / 2,
    d = T            (boundary point), or
    d in {T - s/2 : s = 1, ..., 2 kappa}  (isolated points).

With every label zero the lowest isolated point d = 0 is the trivial
module.  Each unitary d at or below the boundary coincides with one or
more reduction points; the verdict records those names.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ospuir.weights import Signature, reduction_points

BRANCH_CONTINUOUS = "continuous"
BRANCH_BOUNDARY = "boundary"
BRANCH_ISOLATED = "isolated"
BRANCH_TRIVIAL = "trivial"
BRANCH_NONUNITARY = "nonunitary"


@dataclass(frozen=True)
class UnitarityVerdict:
    sig: Signature
    unitary: bool
    branch: str
    governing_point: Optional[Tuple[str, Fraction]]
    first_nonzero_label: Optional[int]
    kappa: Fraction
    audit: Dict[str, object]


def _leading_zeros(a: Sequence[int]) -> int:
    z = 0
    for x in a:
        if x != 0:
            break
        z += 1
    return z


def classify(sig: Signature) -> UnitarityVerdict:
    """Decide unitarity of the module with the given signature."""
    n, d, a = sig.n, sig.d, sig.a
    z = _leading_zeros(a)
    kappa = Fraction(z, 2)
    total = sum(a)
    threshold = Fraction(n - 1) - kappa + Fraction(total, 2)
    isolated = [threshold - Fraction(s, 2) for s in range(1, z + 1)]
    first_nonzero = None
    for idx, x in enumerate(a, start=1):
        if x != 0:
            first_nonzero = idx
            break

    pts = reduction_points(n, a)

    def point_of(value: Fraction) -> Tuple[str, Fraction]:
        label = pts.labels_at(value)
        if not label:
            raise AssertionError(f"unitary value {value} matches no reduction point")
        return (label, value)

    if d > threshold:
        unitary, branch = True, BRANCH_CONTINUOUS
        governing: Optional[Tuple[str, Fraction]] = point_of(threshold)
    elif d == threshold:
        unitary, branch = True, BRANCH_BOUNDARY
        governing = point_of(threshold)
    elif d in isolated:
        unitary, branch = True, BRANCH_ISOLATED
        governing = point_of(d)
    else:
        unitary, branch = False, BRANCH_NONUNITARY
        governing = None
    if unitary and d == 0 and first_nonzero is None:
        branch = BRANCH_TRIVIAL

    audit: Dict[str, object] = {
        "leading_zero_count": z,
        "kappa": kappa,
        "threshold": threshold,
        "isolated_points": tuple(isolated),
        "note": (
            "isolated points read as the 2*kappa half-integer steps "
            "directly below the boundary"
        ),
    }
    return UnitarityVerdict(
        sig=sig, unitary=unitary, branch=branch, governing_point=governing,
        first_nonzero_label=first_nonzero, kappa=kappa, audit=audit,
    )


def subsingular_points(n: int, a: Sequence[int]) -> List[Tuple[Fraction, str]]:
    """Values of d carrying a subsingular vector, with coincidence chains.

    Two families, both requiring a long enough run of leading zero labels
    (labels beyond a_{n-1} count as zero):

      * d = n - j + (a_{2j-1} + ... + a_{n-1})/2 for j = 2..n-1 when
        a_1 = ... = a_{2j-2} = 0, named d_j = d_{1,2j-1} = ... ;
      * d = n - j - 1/2 + (a_{2j} + ... + a_{n-1})/2 for j = 2..n-2 when
        a_1 = ... = a_{2j-1} = 0, named d_{j,j+1} = d_{1,2j} = ... .

    Sorted by decreasing d.
    """
    a = tuple(a)
    if len(a) != n - 1:
        raise ValueError(f"expected {n - 1} labels, got {len(a)}")

    def ext(k: int) -> int:
        return a[k - 1] if 1 <= k <= n - 1 else 0

    def run_of_zeros(upto: int) -> bool:
        return all(ext(k) == 0 for k in range(1, upto + 1))

    def sep(i: int, j: int) -> str:
        return f"d{i}{j}" if n < 10 else f"d{i},{j}"

    out: List[Tuple[Fraction, str]] = []
    for j in range(2, n):
        if not run_of_zeros(2 * j - 2):
            continue
        value = Fraction(n - j) + Fraction(sum(ext(k) for k in range(2 * j - 1, n)), 2)
        names = [f"d{j}"]
        for i in range(max(1, 2 * j - n), j):
            names.append(sep(i, 2 * j - i))
        out.append((value, "=".join(names)))
    for j in range(2, n - 1):
        if not run_of_zeros(2 * j - 1):
            continue
        value = (Fraction(n - j) - Fraction(1, 2)
                 + Fraction(sum(ext(k) for k in range(2 * j, n)), 2))
        names = [sep(j, j + 1)]
        for i in range(max(1, 2 * j + 1 - n), j):
            names.append(sep(i, 2 * j + 1 - i))
        out.append((value, "=".join(names)))
    out.sort(key=lambda t: (-t[0], t[1]))
    return out


@dataclass(frozen=True)
class GridRow:
    sig: Signature
    verdict: UnitarityVerdict


def unitarity_grid(
    n: int,
    a_ranges: Sequence[Sequence[int]],
    d_values: Sequence[Fraction],
) -> List[GridRow]:
    """Classify every combination of labels and d, in deterministic order.

    a_ranges gives the candidate values per label slot (length n - 1);
    combinations run in lexicographic order, d ascending inside each.
    """
    if len(a_ranges) != n - 1:
        raise ValueError(f"expected {n - 1} label ranges, got {len(a_ranges)}")
    rows: List[GridRow] = []
    for combo in itertools.product(*a_ranges):
        for d in sorted(Fraction(x) for x in d_values):
            sig = Signature(n=n, d=d, a=tuple(combo))
            rows.append(GridRow(sig=sig, verdict=classify(sig)))
    return rows
