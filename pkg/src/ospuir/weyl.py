"""The hyperoctahedral Weyl group W(B_n) of signed permutations.

An element acts on the delta basis by delta_i -> sign_i * delta_{perm_i}.
Composition is right-to-left: (u * v)(x) = u(v(x)), and a reduced word
[k_1, ..., k_r] denotes s_{k_1} * ... * s_{k_r}, so s_{k_r} acts first.
Each element carries the lexicographically smallest reduced word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ospuir.root_system import (
    Weight,
    build_root_system,
    is_positive,
    pairing,
)

MAX_GROUP_RANK = 8


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation with its length and lex-least reduced word."""

    perm: Tuple[int, ...]           # 0-based images: delta_i -> signs[i]*delta_{perm[i]}
    signs: Tuple[int, ...]
    length: int = field(compare=False, hash=False, default=0)
    reduced_word: Tuple[int, ...] = field(compare=False, hash=False, default=())

    @property
    def n(self) -> int:
        return len(self.perm)


def identity(n: int) -> WeylElement:
    return WeylElement(perm=tuple(range(n)), signs=(1,) * n, length=0, reduced_word=())


def simple_reflection(n: int, k: int) -> WeylElement:
    """s_k for 1 <= k <= n; s_n flips the last coordinate."""
    if not 1 <= k <= n:
        raise ValueError(f"generator index must be in [1, {n}], got {k}")
    perm = list(range(n))
    signs = [1] * n
    if k < n:
        perm[k - 1], perm[k] = perm[k], perm[k - 1]
    else:
        signs[n - 1] = -1
    return WeylElement(perm=tuple(perm), signs=tuple(signs), length=1, reduced_word=(k,))


def apply(w: WeylElement, lam: Sequence) -> Weight:
    """Linear action on delta coordinates."""
    out = [Fraction(0)] * w.n
    for i, x in enumerate(lam):
        out[w.perm[i]] = w.signs[i] * Fraction(x)
    return tuple(out)


def compose(u: WeylElement, v: WeylElement) -> WeylElement:
    """u * v, with v acting first.  Length and word are not filled in."""
    if u.n != v.n:
        raise ValueError("rank mismatch")
    perm = tuple(u.perm[v.perm[i]] for i in range(u.n))
    signs = tuple(v.signs[i] * u.signs[v.perm[i]] for i in range(u.n))
    return WeylElement(perm=perm, signs=signs)


def inverse(w: WeylElement) -> WeylElement:
    perm = [0] * w.n
    signs = [1] * w.n
    for i in range(w.n):
        perm[w.perm[i]] = i
        signs[w.perm[i]] = w.signs[i]
    return WeylElement(perm=tuple(perm), signs=tuple(signs))


def length_by_inversions(w: WeylElement) -> int:
    """Number of restricted positive roots sent to negative roots."""
    rs = build_root_system(w.n)
    return sum(1 for r in rs.restricted_positive if not is_positive(apply(w, r.coords)))


def from_word(n: int, word: Sequence[int]) -> WeylElement:
    w = identity(n)
    for k in word:
        w = compose(w, simple_reflection(n, k))
    return WeylElement(perm=w.perm, signs=w.signs,
                       length=length_by_inversions(w), reduced_word=tuple(word))


def generate(n: int) -> List[WeylElement]:
    """All 2^n n! elements, sorted by (length, reduced word).

    Breadth-first search by right multiplication; the stored word of each
    element is the lexicographically smallest among its reduced words.
    """
    if not 2 <= n <= MAX_GROUP_RANK:
        raise ValueError(f"rank must be in [2, {MAX_GROUP_RANK}] for group generation")
    gens = [simple_reflection(n, k) for k in range(1, n + 1)]
    e = identity(n)
    words: Dict[WeylElement, Tuple[int, ...]] = {e: ()}
    current: Dict[WeylElement, Tuple[int, ...]] = {e: ()}
    while current:
        nxt: Dict[WeylElement, Tuple[int, ...]] = {}
        for w, word in current.items():
            for k in range(1, n + 1):
                w2 = compose(w, gens[k - 1])
                key = WeylElement(perm=w2.perm, signs=w2.signs)
                if key in words:
                    continue
                cand = word + (k,)
                if key not in nxt or cand < nxt[key]:
                    nxt[key] = cand
        words.update(nxt)
        current = nxt
    out = [
        WeylElement(perm=w.perm, signs=w.signs, length=len(word), reduced_word=word)
        for w, word in words.items()
    ]
    out.sort(key=lambda w: (w.length, w.reduced_word))
    return out


def dot_act(w: WeylElement, lam: Sequence) -> Weight:
    """Shifted action w . lam = w(lam - rho) + rho."""
    rs = build_root_system(w.n)
    shifted = tuple(Fraction(x) - r for x, r in zip(lam, rs.rho))
    moved = apply(w, shifted)
    return tuple(m + r for m, r in zip(moved, rs.rho))


def reflect(beta: Sequence, lam: Sequence) -> Weight:
    """Reflection lam - (lam, beta-vee) beta."""
    c = pairing(lam, beta)
    return tuple(Fraction(x) - c * Fraction(b) for x, b in zip(lam, beta))


def find_w_lambda(lam: Weight) -> Tuple[WeylElement, Weight]:
    """Minimal w and dominant Lambda_0 with lam = w . Lambda_0.

    Requires all labels (rho - lam, alpha_k-vee) to be integers.  The word
    attached to w is its lexicographically smallest reduced word; when the
    dominant weight is stabilised by a parabolic subgroup, w is the minimal
    coset representative.
    """
    n = len(lam)
    rs = build_root_system(n)
    mu = [r - Fraction(x) for r, x in zip(rs.rho, lam)]
    for alpha in rs.simple:
        c = pairing(mu, alpha.coords)
        if c.denominator != 1:
            raise ValueError(f"weight is not integral: label {c} for root {alpha.coords}")
    word: List[int] = []
    while True:
        for k, alpha in enumerate(rs.simple, start=1):
            c = pairing(mu, alpha.coords)
            if c < 0:
                mu = [m - c * b for m, b in zip(mu, alpha.coords)]
                word.append(k)
                break
        else:
            break
    w = from_word(n, word)
    lam0 = tuple(r - m for r, m in zip(rs.rho, mu))
    return w, lam0


@dataclass(frozen=True)
class MultipletNode:
    index: int
    weight: Weight
    labels: Tuple[Fraction, ...]
    w: WeylElement


@dataclass(frozen=True)
class Multiplet:
    """Dot orbit of a dominant weight with length-increasing edges."""

    lambda0: Weight
    nodes: Tuple[MultipletNode, ...]
    edges: Tuple[Tuple[int, int, int], ...]   # (source index, target index, generator)


def multiplet_orbit(lam0: Weight) -> Multiplet:
    """Breadth-first dot orbit of lam0 under the simple reflections.

    Nodes are sorted by (length of minimal w, its word); an edge (u, v, k)
    records s_k . weight_u = weight_v with length going up by one.
    """
    n = len(lam0)
    gens = [simple_reflection(n, k) for k in range(1, n + 1)]
    _, canon = find_w_lambda(lam0)
    if canon != lam0:
        raise ValueError("orbit start weight must be dominant-canonical")
    seen = {lam0}
    frontier = [lam0]
    while frontier:
        nxt = []
        for lam in frontier:
            for g in gens:
                lam2 = dot_act(g, lam)
                if lam2 not in seen:
                    seen.add(lam2)
                    nxt.append(lam2)
        frontier = nxt
    reps = {lam: find_w_lambda(lam)[0] for lam in seen}
    ordered = sorted(seen, key=lambda l: (reps[l].length, reps[l].reduced_word))
    index = {lam: i for i, lam in enumerate(ordered)}
    rs = build_root_system(n)
    nodes = []
    for lam in ordered:
        mu = tuple(r - x for r, x in zip(rs.rho, lam))
        labels = tuple(pairing(mu, alpha.coords) for alpha in rs.simple)
        nodes.append(MultipletNode(index=index[lam], weight=lam,
                                   labels=labels, w=reps[lam]))
    edges = []
    for lam in ordered:
        lu = reps[lam].length
        for k, g in enumerate(gens, start=1):
            lam2 = dot_act(g, lam)
            if lam2 != lam and reps[lam2].length == lu + 1:
                edges.append((index[lam], index[lam2], k))
    edges.sort()
    return Multiplet(lambda0=lam0, nodes=tuple(nodes), edges=tuple(edges))


_EDGE_STYLE = {
    1: ("red", "solid"),
    2: ("blue", "dashed"),
    3: ("green", "dotted"),
}
_EXTRA_COLORS = ["purple", "orange", "brown", "cyan", "magenta"]


def multiplet_to_dot(mult: Multiplet) -> str:
    """Graphviz rendering with one colour and line style per generator."""
    lines = ["digraph multiplet {", "  rankdir=TB;"]
    for node in mult.nodes:
        label = "(" + ",".join(str(x) for x in node.labels) + ")"
        lines.append(f'  n{node.index} [label="{label}"];')
    for (u, v, k) in mult.edges:
        if k in _EDGE_STYLE:
            color, style = _EDGE_STYLE[k]
        else:
            color = _EXTRA_COLORS[(k - 4) % len(_EXTRA_COLORS)]
            style = "solid"
        lines.append(f"  n{u} -> n{v} [color={color}, style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
