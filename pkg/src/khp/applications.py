"""
Structural consequences: extensions, dualities, quivers, Koszulity.

A basis diagram (mu under cap(lam)) with mu != lam is primitive when it
cannot be factored through a third weight.  Delta-primitivity asks the
mu-dots to form a Delta-orientation of cap(lam) with at most one dot off
its rightmost slot, avoiding two local cap/dot patterns; nabla-primitivity
asks the lam-dots to form a nabla-orientation of cup(mu) with at most one
dot off-rightmost, avoiding a dot wedged directly inside the left end of an
outermost cup.  Primitivity is equivalent to the factorization criterion,
which ``nonsplittable_oracle`` checks independently by enumerating middle
weights, and both equal the multiplicity of L(mu) in the head of the
radical of P(lam); Ext^1 dimensions are 0/1 accordingly.
"""

from __future__ import annotations

import dataclasses
from collections import Counter
from itertools import combinations
from typing import Sequence

from .algebra import compatible_weights, hom_dim, multiply, star_weight
from .diagrams import (
    Arc,
    CircleDiagram,
    block_signature,
    cap_from_weight,
    check_weight,
    cup_from_weight,
    is_orientable_Kn,
    weight_from_cap,
    weight_from_cup,
)
from .matchings import CrossinglessMatching, upper_reduction
from .modules import build_projective, radical_filtration, socle_filtration
from .orientation import (
    cup_slots,
    is_delta_orientation,
    is_nabla_orientation,
    weight_to_dots,
)

Weight = tuple[int, ...]


def _delta_assignment(dots: frozenset[int], caps: tuple[Arc, ...]) -> dict[Arc, int] | None:
    """Each dot to the innermost cap containing it; None unless bijective."""
    assign: dict[Arc, int] = {}
    for m in dots:
        containing = [a for a in caps if a[0] + 1 <= m <= a[1]]
        if not containing:
            return None
        innermost = min(containing, key=lambda a: a[1] - a[0])
        if innermost in assign:
            return None
        assign[innermost] = m
    return assign if len(assign) == len(caps) else None


def _nabla_assignments(dots: frozenset[int], cups: tuple[Arc, ...]) -> list[dict[Arc, int]]:
    out: list[dict[Arc, int]] = []

    def rec(i: int, used: frozenset[int], acc: dict[Arc, int]) -> None:
        if i == len(cups):
            out.append(dict(acc))
            return
        for s in cup_slots(cups[i]):
            if s in dots and s not in used:
                acc[cups[i]] = s
                rec(i + 1, used | {s}, acc)
                del acc[cups[i]]

    rec(0, frozenset(), {})
    return out


def is_delta_primitive(d: CircleDiagram) -> bool:
    mu = weight_from_cup(d.bottom)
    dots = weight_to_dots(mu)
    caps = d.top.caps
    if not is_delta_orientation(dots, d.top):
        return False
    assign = _delta_assignment(dots, caps)
    if assign is None:
        return False
    # (1) at most one dot off its rightmost slot
    if sum(1 for cap, dot in assign.items() if dot != cap[1]) > 1:
        return False
    for cap, dot in assign.items():
        # caps nested inside this cap and entirely right of its dot
        inner = [c for c in caps if cap[0] < c[0] and c[1] < cap[1] and dot <= c[0]]
        # (2) two disjoint such caps
        for c1 in inner:
            for c2 in inner:
                if c1[1] < c2[0]:
                    return False
        # (3) one such cap plus a cap ending directly left of this cap
        if inner and any(c0[1] == cap[0] - 1 for c0 in caps):
            return False
    return True


def is_nabla_primitive(d: CircleDiagram) -> bool:
    lam = weight_from_cap(d.top)
    dots = weight_to_dots(lam)
    cups = d.bottom.cups
    if not is_nabla_orientation(dots, d.bottom):
        return False
    # (2) a dot wedged directly inside the left end of an outermost cup
    outermost = [
        c for c in cups if not any(o[0] < c[0] and c[1] < o[1] for o in cups)
    ]
    for A, _ in outermost:
        if (A + 1) in dots and any(c[0] == A + 1 for c in cups):
            return False
    # (1) some assignment leaves at most one dot off its rightmost slot
    return any(
        sum(1 for cup, dot in assign.items() if dot != cup[1] + 1) <= 1
        for assign in _nabla_assignments(dots, cups)
    )


def is_primitive(d: CircleDiagram) -> str:
    """'delta', 'nabla', 'both' or 'no'; rejects equal cup and cap weights."""
    mu = weight_from_cup(d.bottom)
    lam = weight_from_cap(d.top)
    if mu == lam:
        raise ValueError("primitivity is defined for distinct weights only")
    dp = is_delta_primitive(d)
    np_ = is_nabla_primitive(d)
    if dp and np_:
        return "both"
    if dp:
        return "delta"
    if np_:
        return "nabla"
    return "no"


def nonsplittable_oracle(d: CircleDiagram) -> bool:
    """No factorization d = (mu under kappa) * (kappa under lam) with kappa
    different from both weights; enumerates kappa over the finite window."""
    mu = weight_from_cup(d.bottom)
    lam = weight_from_cap(d.top)
    if mu == lam:
        raise ValueError("factorization criterion needs distinct weights")
    for kappa in compatible_weights(lam):
        if kappa in (mu, lam):
            continue
        if hom_dim(mu, kappa) != 1:
            continue
        a = CircleDiagram(d.bottom, cap_from_weight(kappa))
        b = CircleDiagram(cup_from_weight(kappa), d.top)
        if multiply(a, b, "Kn") == d:
            return False
    return True


def ext1_dim(lam: Sequence[int], mu: Sequence[int]) -> int:
    """dim Ext^1(L(lam), L(mu)): 1 iff (mu under cap(lam)) is primitive."""
    lam = check_weight(lam)
    mu = check_weight(mu)
    if lam == mu:
        return 0
    d = CircleDiagram(cup_from_weight(mu), cap_from_weight(lam))
    if not is_orientable_Kn(d):
        return 0
    return 1 if is_primitive(d) != "no" else 0


# ---------------------------------------------------------------------------
# Duality on simples.


def simple_dual_rotation(w: Sequence[int]) -> Weight:
    """Rotate the cap diagram of w around 1/2 and read the cup weight."""
    return star_weight(w)


def simple_dual_iterative(w: Sequence[int]) -> Weight:
    """Bump the pairs (i, j) in lexicographic order whenever both entries
    have a gap larger than 1 to the entry above them, then reflect all
    entries at (n - 1) / 2.  The first entry always has room above."""
    lam = list(check_weight(w))
    n = len(lam)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            ok = all(
                k == 1 or abs(lam[k - 1] - lam[k - 2]) > 1 for k in (i, j)
            )
            if ok:
                lam[i - 1] += 1
                lam[j - 1] += 1
    return tuple(sorted(((n - 1) - x for x in lam), reverse=True))


def simple_dual(w: Sequence[int]) -> Weight:
    a = simple_dual_rotation(w)
    b = simple_dual_iterative(w)
    if a != b:
        raise AssertionError(f"duality algorithms disagree on {w}: {a} vs {b}")
    return a


# ---------------------------------------------------------------------------
# Irreducible summands of tensor space.


def irreducible_summand_weights(n: int) -> list[Weight]:
    """The n weights (n-1, ..., k, k-2, k-4, ..., -k) for k = 0, ..., n-1."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    out = []
    for k in range(n):
        head = tuple(range(n - 1, k - 1, -1))
        tail = tuple(range(k - 2, -k - 1, -2))
        out.append(head + tail)
    return out


def _staircase_matching(k: int) -> CrossinglessMatching:
    """k nested lower arcs, innermost at codes (0, 1), with k adjacent upper
    arcs filling the same window."""
    bottom = tuple((-j, j + 1) for j in range(k))
    top = tuple((1 - k + 2 * i, 2 - k + 2 * i) for i in range(k))
    return CrossinglessMatching(bottom, top)


def irreducible_summand_weights_by_matchings(n: int) -> list[Weight]:
    """For each nested family depth k there is a unique weight whose cap
    diagram reduces to the trivial one through the staircase matching."""
    trivial = cap_from_weight(tuple(range(n - 1, -1, -1)))
    pts = {p for arc in trivial.caps for p in arc} | {0, 1}
    out = []
    for k in range(n):
        t = _staircase_matching(k)
        lo = min(pts) - 2 * n - 2
        hi = max(pts) + 2 * n + 2
        hits = []
        for rights in combinations(range(lo, hi + 1), n):
            mu = tuple(sorted((r - 1 for r in rights), reverse=True))
            res = upper_reduction(t, cap_from_weight(mu))
            if res.circles or res.top_lines:
                continue
            if res.cap == trivial:
                hits.append(mu)
        if len(hits) != 1:
            raise AssertionError(f"expected one weight for depth {k}, got {hits}")
        out.append(hits[0])
    return out


# ---------------------------------------------------------------------------
# Quivers and Koszulity.


@dataclasses.dataclass
class Quiver:
    nodes: list[Weight]
    arrows: list[tuple[Weight, Weight]]
    # (lam, mu, nu) -> composite basis diagram of the two radical arrows, or None
    relations: dict[tuple[Weight, Weight, Weight], CircleDiagram | None]

    def zero_relations(self) -> list[tuple[Weight, Weight, Weight]]:
        return sorted(p for p, c in self.relations.items() if c is None)

    def equal_composites(self) -> list[list[tuple[Weight, Weight, Weight]]]:
        """Groups of distinct length-2 paths with the same endpoints and the
        same nonzero composite."""
        buckets: dict[tuple[Weight, Weight, CircleDiagram], list] = {}
        for (lam, mu, nu), comp in self.relations.items():
            if comp is not None:
                buckets.setdefault((lam, nu, comp), []).append((lam, mu, nu))
        return sorted(
            (sorted(paths) for paths in buckets.values() if len(paths) > 1),
            key=str,
        )


def weights_in_window(n: int, lo: int, hi: int) -> list[Weight]:
    return [tuple(sorted(c, reverse=True)) for c in combinations(range(lo, hi + 1), n)]


def build_quiver(n: int, lo: int, hi: int, block: int | None = None) -> Quiver:
    """Ext-quiver on the weights in [lo, hi]^n, optionally one block only."""
    nodes = [
        w
        for w in weights_in_window(n, lo, hi)
        if block is None or block_signature(w) == block
    ]
    node_set = set(nodes)
    arrows = [
        (lam, mu)
        for lam in nodes
        for mu in compatible_weights(lam)
        if mu in node_set and mu != lam and ext1_dim(lam, mu) == 1
    ]
    # arrows out of lam correspond to radical basis diagrams (mu under cap(lam))
    out_of: dict[Weight, list[Weight]] = {}
    for lam, mu in arrows:
        out_of.setdefault(lam, []).append(mu)
    relations: dict[tuple[Weight, Weight, Weight], CircleDiagram | None] = {}
    for lam, mu in arrows:
        for nu in out_of.get(mu, ()):
            first = CircleDiagram(cup_from_weight(mu), cap_from_weight(lam))
            second = CircleDiagram(cup_from_weight(nu), cap_from_weight(mu))
            relations[(lam, mu, nu)] = multiply(second, first, "Kn")
    return Quiver(nodes, sorted(arrows), relations)


def koszulity_report(w: Sequence[int]) -> dict:
    """Radical and socle layer tables of P(w) (both top-down) and whether
    they agree; disagreement rules out a Koszul grading."""
    P = build_projective(w)
    rad = radical_filtration(P)
    soc = list(reversed(socle_filtration(P)))
    return {
        "weight": check_weight(w),
        "radical_layers": rad,
        "socle_layers": soc,
        "agree": rad == soc,
    }
