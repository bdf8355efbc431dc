"""
Crossingless matchings, reductions and stacked diagrams.

A crossingless matching is a strip between two horizontal boundaries: arcs
with both ends on the lower boundary (drawn as caps arcing up), arcs with
both ends on the upper boundary (cups arcing down), and through strands
joining the remaining positions by the unique order-preserving bijection
that is the identity outside a finite window.  Equal arc counts on the two
boundaries make that bijection exist; planarity then holds automatically
because arc interiors contain no free positions.

The special matching t^i has one lower arc and one upper arc at codes
(i-1, i) (reals i -/+ 1/2).  Three transforms act on matchings: ddagger
(horizontal mirror shifted one right, swapping the boundaries), dagger
(vertical reflection at 0) and star (180-degree rotation around 1/2).

reduce composes a stack of matchings into a single layer, counting closed
circles.  ured glues a cap diagram on top of a matching and reads the
resulting cap diagram off the lower boundary; lred is the mirror image for
a cup diagram glued underneath.  Stacked diagrams (cup diagram, layers,
cap diagram) are traced the same way; orientability demands no circles,
top lines straddling 0 and bottom lines straddling -1 at redrawn slots.
"""

from __future__ import annotations

import dataclasses
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .diagrams import (
    Arc,
    CapDiagram,
    CircleDiagram,
    CupDiagram,
    _validate_arcs,
    cap_from_weight,
    check_weight,
    cup_from_weight,
    is_orientable_K,
    redraw_cap_rays,
    redraw_cup_rays,
    weight_from_cap,
    weight_from_cup,
)
from .orientation import (
    cup_slots,
    delta_orientations,
    is_delta_orientation,
    is_nabla_orientation,
    nabla_orientations,
    weight_to_dots,
)


@dataclasses.dataclass(frozen=True, order=True)
class CrossinglessMatching:
    bottom_arcs: tuple[Arc, ...]
    top_arcs: tuple[Arc, ...]

    def __init__(self, bottom_arcs: Iterable[Arc], top_arcs: Iterable[Arc]):
        bottom = _validate_arcs(bottom_arcs, "bottom arc")
        top = _validate_arcs(top_arcs, "top arc")
        if len(bottom) != len(top):
            raise ValueError("matching needs equally many bottom and top arcs")
        object.__setattr__(self, "bottom_arcs", bottom)
        object.__setattr__(self, "top_arcs", top)

    @property
    def bottom_points(self) -> set[int]:
        return {p for arc in self.bottom_arcs for p in arc}

    @property
    def top_points(self) -> set[int]:
        return {p for arc in self.top_arcs for p in arc}

    def window(self) -> tuple[int, int]:
        pts = self.bottom_points | self.top_points
        if not pts:
            return (0, -1)
        return (min(pts) - 1, max(pts) + 1)

    def throughs(self, lo: int, hi: int) -> dict[int, int]:
        """Bottom-to-top map of through strands with positions in [lo, hi]."""
        bottom = [p for p in range(lo, hi + 1) if p not in self.bottom_points]
        top = [p for p in range(lo, hi + 1) if p not in self.top_points]
        assert len(bottom) == len(top)
        return dict(zip(bottom, top))

    def bottom_arc_at(self, p: int) -> Arc | None:
        for arc in self.bottom_arcs:
            if p in arc:
                return arc
        return None

    def top_arc_at(self, p: int) -> Arc | None:
        for arc in self.top_arcs:
            if p in arc:
                return arc
        return None


def identity_matching() -> CrossinglessMatching:
    return CrossinglessMatching((), ())


def special_matching(i: int) -> CrossinglessMatching:
    """t^i: one lower and one upper arc at codes (i-1, i)."""
    return CrossinglessMatching(((i - 1, i),), ((i - 1, i),))


def ddagger(t: CrossinglessMatching) -> CrossinglessMatching:
    """Horizontal mirror shifted one to the right; swaps the boundaries."""
    return CrossinglessMatching(
        tuple((l + 1, r + 1) for l, r in t.top_arcs),
        tuple((l + 1, r + 1) for l, r in t.bottom_arcs),
    )


def dagger(t: CrossinglessMatching) -> CrossinglessMatching:
    """Vertical reflection at 0 (code c maps to -c - 1, arcs swap ends)."""
    return CrossinglessMatching(
        tuple((-r - 1, -l - 1) for l, r in t.bottom_arcs),
        tuple((-r - 1, -l - 1) for l, r in t.top_arcs),
    )


def star(t: CrossinglessMatching) -> CrossinglessMatching:
    """Rotation by 180 degrees around the real point 1/2 (code c to -c)."""
    return CrossinglessMatching(
        tuple((-r, -l) for l, r in t.top_arcs),
        tuple((-r, -l) for l, r in t.bottom_arcs),
    )


# ---------------------------------------------------------------------------
# Generic multi-line tracing.
#
# A stacked picture is a list of horizontal lines; every active node
# (line, position) has a "down" and an "up" attachment, each an arc partner
# node, a boundary marker ("ray" for a boundary ray, "free" for an open
# boundary used by the reductions), and through strands are arcs between
# adjacent lines.


class _Picture:
    def __init__(self):
        self.down: dict[tuple[int, int], object] = {}
        self.up: dict[tuple[int, int], object] = {}

    def add_arc_pair(self, side: str, line: int, arc: Arc) -> None:
        l, r = arc
        table = self.down if side == "down" else self.up
        table[(line, l)] = (line, r)
        table[(line, r)] = (line, l)

    def connect(self, lower: tuple[int, int], upper: tuple[int, int]) -> None:
        self.up[lower] = upper
        self.down[upper] = lower

    def mark(self, node: tuple[int, int], side: str, marker: str) -> None:
        (self.down if side == "down" else self.up)[node] = marker

    def components(self):
        """(circles, lines); each line is a pair of (marker, line, pos) ends."""
        circles = 0
        lines = []
        seen: set[tuple[tuple[int, int], bool]] = set()

        def walk(node, go_up):
            start = (node, go_up)
            while True:
                seen.add((node, go_up))
                nxt = self.up[node] if go_up else self.down[node]
                if isinstance(nxt, str):
                    return (nxt, node[0], node[1])
                if nxt[0] == node[0]:
                    node, go_up = nxt, not go_up
                else:
                    node, go_up = nxt, go_up
                seen.add((node, not go_up))
                if (node, go_up) == start:
                    return None

        for node in list(self.up):
            for go_up in (True, False):
                if (node, go_up) in seen:
                    continue
                end1 = walk(node, go_up)
                if end1 is None:
                    circles += 1
                    continue
                end2 = walk(node, not go_up)
                assert end2 is not None
                lines.append((end1, end2))
        return circles, lines


def _layer_into_picture(
    pic: _Picture, t: CrossinglessMatching, lower: int, upper: int, lo: int, hi: int
) -> None:
    for arc in t.bottom_arcs:
        pic.add_arc_pair("up", lower, arc)
    for arc in t.top_arcs:
        pic.add_arc_pair("down", upper, arc)
    for p, q in t.throughs(lo, hi).items():
        pic.connect((lower, p), (upper, q))


@dataclasses.dataclass(frozen=True)
class StackedDiagram:
    """A cup diagram under a stack of matchings under a cap diagram.

    layers are ordered bottom to top; in the multiplication-word convention
    a t_k ... t_1 b the rightmost matching t_1 is the top layer.
    """

    bottom: CupDiagram
    layers: tuple[CrossinglessMatching, ...]
    top: CapDiagram

    def window(self) -> tuple[int, int]:
        pts = set(self.bottom.endpoints) | set(self.top.endpoints)
        for t in self.layers:
            pts |= t.bottom_points | t.top_points
        if not pts:
            return (0, -1)
        return (min(pts) - 1, max(pts) + 1)

    def picture(self) -> _Picture:
        lo, hi = self.window()
        m = len(self.layers)
        pic = _Picture()
        for i, t in enumerate(self.layers):
            _layer_into_picture(pic, t, i, i + 1, lo, hi)
        for p in range(lo, hi + 1):
            arc = self.bottom.arc_at(p)
            if arc is not None:
                pic.add_arc_pair("down", 0, arc)
            else:
                pic.mark((0, p), "down", "bottom")
            arc = self.top.arc_at(p)
            if arc is not None:
                pic.add_arc_pair("up", m, arc)
            else:
                pic.mark((m, p), "up", "top")
        return pic


def stack_from_sequence(seq: Sequence[int],
                        bottom: CupDiagram | None = None,
                        top: CapDiagram | None = None) -> StackedDiagram:
    """The stacked diagram of t^{i_k} ... t^{i_1} for seq = (i_1, ..., i_k)."""
    layers = tuple(special_matching(i) for i in reversed(seq))
    return StackedDiagram(bottom or CupDiagram(()), layers, top or CapDiagram(()))


def stacked_components(s: StackedDiagram):
    return s.picture().components()


def stacked_orientable(s: StackedDiagram, mode: str = "K") -> bool:
    """No circles; non-propagating lines straddle 0 (top) / -1 (bottom).

    Side conditions are evaluated at redrawn ray slots of the outer cup and
    cap diagrams (the redraw is the identity for empty boundaries).  In
    'Kn' mode non-propagating lines are forbidden outright.
    """
    circles, lines = stacked_components(s)
    if circles:
        return False
    cup_redraw = redraw_cup_rays(s.bottom)
    cap_redraw = redraw_cap_rays(s.top)
    for (m1, _, p1), (m2, _, p2) in lines:
        if m1 != m2:
            continue
        if mode == "Kn":
            return False
        redraw = cap_redraw if m1 == "top" else cup_redraw
        center = 0.0 if m1 == "top" else -1.0
        q1 = redraw.get(p1, p1) + 0.5
        q2 = redraw.get(p2, p2) + 0.5
        if not (q1 - center) * (q2 - center) < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Reductions.


def compose(
    lower: CrossinglessMatching, upper: CrossinglessMatching
) -> tuple[CrossinglessMatching, int]:
    """Glue upper on top of lower; return the reduced matching and the number
    of circles that formed in the middle."""
    pts = (lower.bottom_points | lower.top_points
           | upper.bottom_points | upper.top_points)
    lo = min(pts) - 1 if pts else 0
    hi = max(pts) + 1 if pts else -1
    pic = _Picture()
    _layer_into_picture(pic, lower, 0, 1, lo, hi)
    _layer_into_picture(pic, upper, 1, 2, lo, hi)
    for p in range(lo, hi + 1):
        if lower.bottom_arc_at(p) is None:
            pic.mark((0, p), "down", "bottom")
        if upper.top_arc_at(p) is None:
            pic.mark((2, p), "up", "top")
    # line-0 nodes on bottom arcs still need their open lower side marked
    for p in lower.bottom_points:
        pic.mark((0, p), "down", "bottom")
    for p in upper.top_points:
        pic.mark((2, p), "up", "top")
    circles, lines = pic.components()
    bottom_arcs = []
    top_arcs = []
    for (m1, l1, p1), (m2, l2, p2) in lines:
        if m1 == "bottom" and m2 == "bottom":
            bottom_arcs.append((min(p1, p2), max(p1, p2)))
        elif m1 == "top" and m2 == "top":
            top_arcs.append((min(p1, p2), max(p1, p2)))
    return CrossinglessMatching(bottom_arcs, top_arcs), circles


def reduce_layers(
    layers: Sequence[CrossinglessMatching],
) -> tuple[CrossinglessMatching, int]:
    """Reduce a bottom-to-top stack of matchings to one layer plus circles."""
    result = identity_matching()
    circles = 0
    for layer in layers:
        result, c = compose(result, layer)
        circles += c
    return result, circles


def red_word(seq: Sequence[int]) -> tuple[CrossinglessMatching, int]:
    """Reduction of the word t^{i_k} ... t^{i_1} for seq = (i_1, ..., i_k)."""
    return reduce_layers([special_matching(i) for i in reversed(seq)])


@dataclasses.dataclass(frozen=True)
class UpperReduction:
    cap: CapDiagram
    circles: int
    top_lines: tuple[tuple[int, int], ...]  # raw ray positions on the cap line


@dataclasses.dataclass(frozen=True)
class LowerReduction:
    cup: CupDiagram
    circles: int
    bottom_lines: tuple[tuple[int, int], ...]


def upper_reduction(t: CrossinglessMatching, b: CapDiagram) -> UpperReduction:
    """Glue cap diagram b on top of t and read a cap diagram off t's lower
    boundary; to-infinity components through b's rays are reported as
    top_lines, closed loops as circles."""
    pts = t.bottom_points | t.top_points | b.endpoints
    lo = min(pts) - 1 if pts else 0
    hi = max(pts) + 1 if pts else -1
    pic = _Picture()
    _layer_into_picture(pic, t, 0, 1, lo, hi)
    for p in range(lo, hi + 1):
        pic.mark((0, p), "down", "free")
        arc = b.arc_at(p)
        if arc is not None:
            pic.add_arc_pair("up", 1, arc)
        else:
            pic.mark((1, p), "up", "top")
    circles, lines = pic.components()
    caps = []
    top_lines = []
    for (m1, l1, p1), (m2, l2, p2) in lines:
        if m1 == "free" and m2 == "free":
            caps.append((min(p1, p2), max(p1, p2)))
        elif m1 == "top" and m2 == "top":
            top_lines.append((min(p1, p2), max(p1, p2)))
    return UpperReduction(CapDiagram(caps), circles, tuple(sorted(top_lines)))


def lower_reduction(a: CupDiagram, t: CrossinglessMatching) -> LowerReduction:
    """Glue cup diagram a underneath t and read a cup diagram off t's upper
    boundary."""
    pts = t.bottom_points | t.top_points | a.endpoints
    lo = min(pts) - 1 if pts else 0
    hi = max(pts) + 1 if pts else -1
    pic = _Picture()
    _layer_into_picture(pic, t, 0, 1, lo, hi)
    for p in range(lo, hi + 1):
        pic.mark((1, p), "up", "free")
        arc = a.arc_at(p)
        if arc is not None:
            pic.add_arc_pair("down", 0, arc)
        else:
            pic.mark((0, p), "down", "bottom")
    circles, lines = pic.components()
    cups = []
    bottom_lines = []
    for (m1, l1, p1), (m2, l2, p2) in lines:
        if m1 == "free" and m2 == "free":
            cups.append((min(p1, p2), max(p1, p2)))
        elif m1 == "bottom" and m2 == "bottom":
            bottom_lines.append((min(p1, p2), max(p1, p2)))
    return LowerReduction(CupDiagram(cups), circles, tuple(sorted(bottom_lines)))


def ured(t: CrossinglessMatching, b: CapDiagram) -> CapDiagram | None:
    """Upper reduction; None if a circle forms."""
    res = upper_reduction(t, b)
    return None if res.circles else res.cap


def lred(a: CupDiagram, t: CrossinglessMatching) -> CupDiagram | None:
    res = lower_reduction(a, t)
    return None if res.circles else res.cup


# ---------------------------------------------------------------------------
# Orientations of matchings and stacks.


def _region_index(throughs: list[tuple[int, int]], dot: int, side: str) -> int:
    idx = 0 if side == "bottom" else 1
    return sum(1 for th in throughs if th[idx] < dot)


def matching_oriented(
    t: CrossinglessMatching, lower_dots: frozenset[int], upper_dots: frozenset[int]
) -> bool:
    """The single-layer oriented condition: one lower dot directly under each
    bottom arc, one upper dot adjacent to each top arc, and the leftover dots
    paired between the boundaries inside regions cut out by through strands."""
    # Bottom arcs: map each dot inside arcs to the innermost containing arc.
    assignment: dict[Arc, int] = {}
    leftover_lower = []
    for m in sorted(lower_dots):
        containing = [arc for arc in t.bottom_arcs if arc[0] + 1 <= m <= arc[1]]
        if not containing:
            leftover_lower.append(m)
            continue
        innermost = min(containing, key=lambda a: a[1] - a[0])
        if innermost in assignment:
            return False
        assignment[innermost] = m
    if len(assignment) != len(t.bottom_arcs):
        return False

    lo, hi = t.window()
    all_dots = lower_dots | upper_dots
    if all_dots:
        lo = min(lo, min(all_dots) - 1)
        hi = max(hi, max(all_dots) + 1)
    throughs = sorted(t.throughs(lo, hi).items())

    def pockets_free(dot: int) -> bool:
        return not any(arc[0] + 1 <= dot <= arc[1] for arc in t.top_arcs)

    # Top arcs: try every system of distinct adjacent dots; the leftovers must
    # then pair region-wise with the lower leftovers.
    cups = list(t.top_arcs)

    def rec(i: int, used: frozenset[int]) -> bool:
        if i == len(cups):
            leftover_upper = [m for m in sorted(upper_dots) if m not in used]
            if len(leftover_upper) != len(leftover_lower):
                return False
            if not all(pockets_free(m) for m in leftover_upper):
                return False
            lower_regions = sorted(
                _region_index(throughs, m, "bottom") for m in leftover_lower
            )
            upper_regions = sorted(
                _region_index(throughs, m, "top") for m in leftover_upper
            )
            return lower_regions == upper_regions
        for s in cup_slots(cups[i]):
            if s in upper_dots and s not in used:
                if rec(i + 1, used | {s}):
                    return True
        return False

    return rec(0, frozenset())


def oriented_middle_weights(
    t: CrossinglessMatching, gamma: Sequence[int], *, costandard: bool = False
) -> list[tuple[int, ...]]:
    """All mu with (mu t gamma) oriented, ordered bigger-first (standard
    filtration order); with costandard=True uses (gamma t^ddagger mu) and
    reverses the order."""
    gamma = check_weight(gamma)
    gdots = weight_to_dots(gamma) if gamma else frozenset()
    n = len(gamma)
    if costandard:
        tt = ddagger(t)
        pts = tt.bottom_points | tt.top_points | set(gdots)
    else:
        pts = t.bottom_points | t.top_points | set(gdots)
    lo = (min(pts) if pts else 0) - 2 * n - 2
    hi = (max(pts) if pts else 0) + 2 * n + 2
    out = []
    for dots in combinations(range(lo, hi + 1), n):
        mdots = frozenset(dots)
        ok = (
            matching_oriented(ddagger(t), gdots, mdots)
            if costandard
            else matching_oriented(t, mdots, gdots)
        )
        if ok:
            out.append(tuple(sorted((d - 1 for d in mdots), reverse=True)))
    # Bigger weights have componentwise smaller entries; ascending
    # lexicographic order is a linear extension putting bigger weights first.
    out.sort()
    if costandard:
        out.reverse()
    return out


def stacked_orientation(s: StackedDiagram) -> tuple[tuple[int, ...], ...] | None:
    """The unique orientation of a stacked diagram as weights per level,
    bottom to top, or None; brute force over window dot placements."""
    n = len(s.bottom.cups)
    if len(s.top.caps) != n:
        return None
    lo, hi = s.window()
    levels = [frozenset(d) for d in nabla_orientations(s.bottom)]
    chains: list[tuple[frozenset[int], ...]] = [(lev,) for lev in levels]
    for t in s.layers:
        new_chains = []
        for chain in chains:
            for dots in combinations(range(lo, hi + 2), n):
                upper = frozenset(dots)
                if matching_oriented(t, chain[-1], upper):
                    new_chains.append(chain + (upper,))
        chains = new_chains
    final = [
        chain
        for chain in chains
        if is_delta_orientation(chain[-1], s.top)
    ]
    if len(final) > 1:
        raise AssertionError(f"orientation of stack not unique: {final!r}")
    if not final:
        return None
    return tuple(
        tuple(sorted((d - 1 for d in level), reverse=True)) for level in final[0]
    )


# ---------------------------------------------------------------------------
# Bimodule maps as stack rewrites.


def eta(i: int, s: StackedDiagram, at: int = 0) -> StackedDiagram | None:
    """Collapse adjacent layers (t^{i+1}, t^i) at position at; zero (None) if
    the result is not orientable."""
    layers = s.layers
    if layers[at] != special_matching(i + 1) or layers[at + 1] != special_matching(i):
        raise ValueError("eta expects layers (t^{i+1}, t^i)")
    out = StackedDiagram(s.bottom, layers[:at] + layers[at + 2 :], s.top)
    return out if stacked_orientable(out) else None


def eps(i: int, s: StackedDiagram, at: int = 0) -> StackedDiagram | None:
    """Insert layers (t^{i-1}, t^i) at position at; zero if not orientable."""
    ins = (special_matching(i - 1), special_matching(i))
    out = StackedDiagram(s.bottom, s.layers[:at] + ins + s.layers[at:], s.top)
    return out if stacked_orientable(out) else None


def psi(i: int, j: int, s: StackedDiagram, at: int = 0) -> StackedDiagram | None:
    """Swap adjacent layers (t^i, t^j) at position at.

    Distant labels always survive; j = i + 1 is filtered by orientability of
    the swapped diagram; the remaining degenerate labels give zero.
    """
    layers = s.layers
    if layers[at] != special_matching(i) or layers[at + 1] != special_matching(j):
        raise ValueError("psi expects layers (t^i, t^j)")
    swapped = StackedDiagram(
        s.bottom,
        layers[:at] + (layers[at + 1], layers[at]) + layers[at + 2 :],
        s.top,
    )
    if abs(i - j) > 1:
        return swapped
    if j == i + 1:
        return swapped if stacked_orientable(swapped) else None
    return None
