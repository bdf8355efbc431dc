"""
Orientations of arc diagrams by integer dots.

Dots are stored as plain integers sitting at their real position m (between
the half-integer codes m-1 and m).  A dot set {k_1 > ... > k_n} encodes the
weight (k_1 - 1, ..., k_n - 1), so the idempotent diagram of a weight w is
oriented by the dot set w + 1.

A Delta-orientation of a cap diagram places one dot strictly under each cap
such that any other cap containing the dot contains the whole cap; the
admissible slots of a cap are therefore the integers directly below it and
not below any nested cap.  A nabla-orientation of a cup diagram places one
dot per cup, immediately left of its left end or immediately right of its
right end (cup (l, r) in codes has slots l and r + 1).  Dots are pairwise
distinct in both cases.

An orientable circle diagram without non-propagating lines admits exactly
one dot set that is simultaneously a Delta-orientation of its top and a
nabla-orientation of its bottom.  ``orientation_of`` computes it by peeling
caps innermost first (the dot of a small cap (x, x+1) is forced to x + 1
and must serve the cup ending at x or the one starting at x + 1, branching
when both exist); ``orientation_oracle`` recomputes it by brute-force
intersection and is kept as an independent check.
"""

from __future__ import annotations

import dataclasses
from itertools import product
from typing import Iterator, Sequence

from .diagrams import (
    Arc,
    CapDiagram,
    CircleDiagram,
    CupDiagram,
    cap_from_weight,
    check_weight,
    cup_from_weight,
    e_diagram,
    is_orientable_Kn,
    weight_from_cup,
    weight_from_cap,
)

DotSet = frozenset[int]


def weight_to_dots(w: Sequence[int]) -> DotSet:
    return frozenset(x + 1 for x in check_weight(w))


def dots_to_weight(dots: frozenset[int] | set[int]) -> tuple[int, ...]:
    return tuple(sorted((d - 1 for d in dots), reverse=True))


def cap_slots(c: CapDiagram, arc: Arc) -> tuple[int, ...]:
    """Integers directly under the given cap (inside it, outside nested caps)."""
    l, r = arc
    slots = []
    for m in range(l + 1, r + 1):
        # The dot at real m lies strictly inside (a, b) iff a < m < b as reals,
        # i.e. l + 1 <= m <= r in codes.
        inside_nested = any(
            l2 + 1 <= m <= r2 for l2, r2 in c.caps if l < l2 and r2 < r
        )
        if not inside_nested:
            slots.append(m)
    return tuple(slots)


def cup_slots(arc: Arc) -> tuple[int, int]:
    """The two slots adjacent to a cup (l, r): left l, right r + 1."""
    l, r = arc
    return (l, r + 1)


def rightmost_cap_slot(arc: Arc) -> int:
    """The maximal slot under a cap (l, r): always the integer r."""
    return arc[1]


def rightmost_cup_slot(arc: Arc) -> int:
    return arc[1] + 1


def delta_orientations(c: CapDiagram) -> set[DotSet]:
    """All Delta-orientations of a cap diagram.

    Slot regions of distinct caps are disjoint, so the orientations are the
    products of per-cap slot choices.
    """
    choices = [cap_slots(c, arc) for arc in c.caps]
    return {frozenset(pick) for pick in product(*choices)}


def nabla_orientations(c: CupDiagram) -> set[DotSet]:
    """All nabla-orientations of a cup diagram (distinct one-per-cup slots)."""
    result: set[DotSet] = set()

    def rec(i: int, used: frozenset[int]) -> None:
        if i == len(c.cups):
            result.add(used)
            return
        for slot in cup_slots(c.cups[i]):
            if slot not in used:
                rec(i + 1, used | {slot})

    rec(0, frozenset())
    return result


def is_delta_orientation(dots: DotSet, c: CapDiagram) -> bool:
    if len(dots) != len(c.caps):
        return False
    remaining = set(dots)
    for arc in c.caps:
        hits = set(cap_slots(c, arc)) & remaining
        if len(hits) != 1:
            return False
        remaining -= hits
    return not remaining


def is_nabla_orientation(dots: DotSet, c: CupDiagram) -> bool:
    if len(dots) != len(c.cups):
        return False
    cups = list(c.cups)

    def rec(i: int, used: frozenset[int]) -> bool:
        if i == len(cups):
            return True
        return any(
            rec(i + 1, used | {s})
            for s in cup_slots(cups[i])
            if s in dots and s not in used
        )

    return rec(0, frozenset())


def orientation_oracle(d: CircleDiagram) -> tuple[int, ...] | None:
    """Brute-force intersection of Delta- and nabla-orientations."""
    common = {
        dots
        for dots in delta_orientations(d.top)
        if is_nabla_orientation(dots, d.bottom)
    }
    if len(common) > 1:
        raise AssertionError(f"orientation not unique for {d!r}")
    if not common:
        return None
    return dots_to_weight(next(iter(common)))


def orientation_of(d: CircleDiagram) -> tuple[int, ...] | None:
    """The unique orientation weight of d, or None if none exists.

    Caps are peeled innermost first.  A small cap (x, x+1) forces the dot
    x + 1, which must serve the cup ending at x or the cup starting at
    x + 1; wider caps are reached only after their nested caps are gone and
    offer at most a few slots.  Removing a cap never changes the slot sets
    of the survivors, so the search runs entirely in original coordinates.
    """
    if len(d.bottom.cups) != len(d.top.caps):
        return None
    # Innermost first: deeper nesting = more caps strictly containing it.
    caps = sorted(
        d.top.caps,
        key=lambda a: (-sum(1 for b in d.top.caps if b[0] < a[0] and a[1] < b[1]), a),
    )
    caps.sort(key=lambda a: a[1] - a[0])
    slot_table = {arc: cap_slots(d.top, arc) for arc in d.top.caps}
    cups = list(d.bottom.cups)

    def rec(i: int, used: frozenset[int], free_cups: frozenset[Arc]) -> set[frozenset[int]]:
        if i == len(caps):
            return {used} if not free_cups else set()
        found: set[frozenset[int]] = set()
        for dot in slot_table[caps[i]]:
            if dot in used:
                continue
            for cup in free_cups:
                if dot in cup_slots(cup):
                    found |= rec(i + 1, used | {dot}, free_cups - {cup})
        return found

    solutions = rec(0, frozenset(), frozenset(cups))
    if len(solutions) > 1:
        raise AssertionError(f"orientation not unique for {d!r}")
    if not solutions:
        return None
    return dots_to_weight(next(iter(solutions)))


# ---------------------------------------------------------------------------
# Oriented diagrams and the triangular basis data.


@dataclasses.dataclass(frozen=True, order=True)
class OrientedCircleDiagram:
    diagram: CircleDiagram
    orientation: tuple[int, ...]

    def __post_init__(self):
        dots = weight_to_dots(self.orientation)
        if not is_delta_orientation(dots, self.diagram.top):
            raise ValueError("orientation is not a Delta-orientation of the top")
        if not is_nabla_orientation(dots, self.diagram.bottom):
            raise ValueError("orientation is not a nabla-orientation of the bottom")


def oriented(d: CircleDiagram) -> OrientedCircleDiagram:
    w = orientation_of(d)
    if w is None:
        raise ValueError(f"{d!r} admits no orientation")
    return OrientedCircleDiagram(d, w)


def nabla_preimages(dots: DotSet, max_cups: int | None = None) -> list[CupDiagram]:
    """All cup diagrams for which the given dot set is a nabla-orientation.

    Each cup is adjacent to its own dot, so cup right endpoints lie within
    2n of the dots; candidates are enumerated as right-endpoint sets.
    """
    if not dots:
        return [CupDiagram(())]
    n = len(dots)
    lo, hi = min(dots) - 2 * n - 1, max(dots) + 2 * n + 1
    out = []
    for rights in _subsets(range(lo, hi + 1), n):
        w = tuple(sorted(rights, reverse=True))
        cup = cup_from_weight(w)
        if is_nabla_orientation(dots, cup):
            out.append(cup)
    return out


def delta_preimages(dots: DotSet) -> list[CapDiagram]:
    """All cap diagrams for which the given dot set is a Delta-orientation."""
    if not dots:
        return [CapDiagram(())]
    n = len(dots)
    lo, hi = min(dots) - 2 * n - 1, max(dots) + 2 * n + 1
    out = []
    for rights in _subsets(range(lo, hi + 1), n):
        w = tuple(sorted((r - 1 for r in rights), reverse=True))
        cap = cap_from_weight(w)
        if is_delta_orientation(dots, cap):
            out.append(cap)
    return out


def _subsets(pool: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    from itertools import combinations

    return combinations(pool, k)


def Y_set(w: Sequence[int]) -> list[OrientedCircleDiagram]:
    """All diagrams (mu under cap of w) admitting w as orientation."""
    w = check_weight(w)
    cap = cap_from_weight(w)
    dots = weight_to_dots(w)
    out = []
    for cup in nabla_preimages(dots):
        if len(cup.cups) == len(cap.caps):
            out.append(OrientedCircleDiagram(CircleDiagram(cup, cap), w))
    return sorted(out)


def X_set(w: Sequence[int]) -> list[OrientedCircleDiagram]:
    """All diagrams (cup of w under cap of mu) admitting w as orientation."""
    w = check_weight(w)
    cup = cup_from_weight(w)
    dots = weight_to_dots(w)
    out = []
    for cap in delta_preimages(dots):
        if len(cap.caps) == len(cup.cups):
            out.append(OrientedCircleDiagram(CircleDiagram(cup, cap), w))
    return sorted(out)


def triangular_factor(d: CircleDiagram) -> tuple[CircleDiagram, CircleDiagram]:
    """Split d through its orientation: d = (bottom under nu-cap) * (nu-cup under top)."""
    nu = orientation_of(d)
    if nu is None:
        raise ValueError(f"{d!r} is not orientable in the quotient sense")
    y = CircleDiagram(d.bottom, cap_from_weight(nu))
    x = CircleDiagram(cup_from_weight(nu), d.top)
    return (y, x)
