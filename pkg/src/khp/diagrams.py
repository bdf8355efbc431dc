"""
Cup, cap and circle diagrams on the half-integer line.

All positions live on Z + 1/2 and are stored as integer *codes*: the code k
stands for the real position k + 1/2.  With this convention a strictly
decreasing integer weight (l_1 > ... > l_n) is exactly the list of
right-endpoint codes of its cup diagram (real right endpoints l_i + 1/2),
and the associated cap diagram is the cup diagram shifted by +1 in code
(real right endpoints l_i + 3/2).

A cup diagram is a finite crossingless set of arcs below the line, a cap
diagram the same above the line; every position not covered by an arc
carries an implicit ray (downward for cups, upward for caps).  Arcs have no
free positions in their interior: the span of any arc is fully occupied by
nested arc endpoints.

A circle diagram glues a cup diagram under a cap diagram along the common
line.  Its components are circles, propagating lines (one endpoint on each
boundary) and non-propagating lines.  Orientability in the sense of the
full algebra K demands that there are no circles and that, after redrawing
rays (see ``redraw_cup_rays``/``redraw_cap_rays``), every non-propagating
line ending at the top straddles 0 and every one ending at the bottom
straddles -1.  Orientability for the quotient K_n forbids non-propagating
lines altogether.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Iterator, Sequence

# A half-integer position, stored as its integer code (real position = code + 1/2).
HalfPos = int

Arc = tuple[HalfPos, HalfPos]


def is_weight(entries: Sequence[int]) -> bool:
    """True if entries form a strictly decreasing integer sequence."""
    return all(a > b for a, b in zip(entries, entries[1:]))


def check_weight(entries: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in entries)
    if not is_weight(w):
        raise ValueError(f"not strictly decreasing: {entries!r}")
    return w


def _validate_arcs(arcs: Iterable[Arc], kind: str) -> tuple[Arc, ...]:
    arcs = tuple(sorted((int(l), int(r)) for l, r in arcs))
    seen: set[int] = set()
    for l, r in arcs:
        if l >= r:
            raise ValueError(f"{kind} ({l},{r}) must have left < right")
        for p in (l, r):
            if p in seen:
                raise ValueError(f"duplicate endpoint {p} in {kind}s")
            seen.add(p)
    # Crossingless and no free position inside an arc: every position strictly
    # between the ends of an arc must be an endpoint of a nested arc.
    for l, r in arcs:
        for p in range(l + 1, r):
            if p not in seen:
                raise ValueError(f"free position {p} inside {kind} ({l},{r})")
        for l2, r2 in arcs:
            if l < l2 < r < r2:
                raise ValueError(f"{kind}s ({l},{r}) and ({l2},{r2}) cross")
    return arcs


@dataclasses.dataclass(frozen=True, order=True)
class CupDiagram:
    cups: tuple[Arc, ...]

    def __init__(self, cups: Iterable[Arc]):
        object.__setattr__(self, "cups", _validate_arcs(cups, "cup"))

    @property
    def endpoints(self) -> set[int]:
        return {p for arc in self.cups for p in arc}

    def arc_at(self, p: int) -> Arc | None:
        for arc in self.cups:
            if p in arc:
                return arc
        return None

    def __repr__(self) -> str:
        return f"CupDiagram({list(self.cups)})"


@dataclasses.dataclass(frozen=True, order=True)
class CapDiagram:
    caps: tuple[Arc, ...]

    def __init__(self, caps: Iterable[Arc]):
        object.__setattr__(self, "caps", _validate_arcs(caps, "cap"))

    @property
    def endpoints(self) -> set[int]:
        return {p for arc in self.caps for p in arc}

    def arc_at(self, p: int) -> Arc | None:
        for arc in self.caps:
            if p in arc:
                return arc
        return None

    def __repr__(self) -> str:
        return f"CapDiagram({list(self.caps)})"


@dataclasses.dataclass(frozen=True, order=True)
class CircleDiagram:
    """A cup diagram glued under a cap diagram along the common line."""

    bottom: CupDiagram
    top: CapDiagram

    def __repr__(self) -> str:
        return f"CircleDiagram({self.bottom!r}, {self.top!r})"


def cup_from_weight(w: Sequence[int]) -> CupDiagram:
    """The unique cup diagram whose cup right-endpoint codes are the entries of w.

    Right endpoints are processed in increasing order; each is matched to the
    largest position strictly to its left not used by any endpoint so far.
    """
    entries = check_weight(w)
    used: set[int] = set(entries)
    cups: list[Arc] = []
    for r in sorted(entries):
        l = r - 1
        while l in used:
            l -= 1
        used.add(l)
        cups.append((l, r))
    return CupDiagram(cups)


def cap_from_weight(w: Sequence[int]) -> CapDiagram:
    """Cap arcs are the cup arcs of w shifted by +1 in code (real shift +1)."""
    cup = cup_from_weight(w)
    return CapDiagram(tuple((l + 1, r + 1) for l, r in cup.cups))


def weight_from_cup(c: CupDiagram) -> tuple[int, ...]:
    return tuple(sorted((r for _, r in c.cups), reverse=True))


def weight_from_cap(c: CapDiagram) -> tuple[int, ...]:
    return tuple(sorted((r - 1 for _, r in c.caps), reverse=True))


def e_diagram(w: Sequence[int]) -> CircleDiagram:
    """The idempotent diagram of w: its cup diagram under its cap diagram."""
    return CircleDiagram(cup_from_weight(w), cap_from_weight(w))


def compare_weights(a: Sequence[int], b: Sequence[int]) -> str:
    """Partial order on weights: 'lt', 'eq', 'gt' or 'incomparable'.

    a <= b iff a has more entries (cups) than b, or the same number and
    a_i >= b_i for all i (componentwise larger right endpoints are smaller
    in the order).
    """
    a = check_weight(a)
    b = check_weight(b)
    if a == b:
        return "eq"

    def leq(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
        if len(x) > len(y):
            return True
        if len(x) != len(y):
            return False
        return all(xi >= yi for xi, yi in zip(x, y))

    if leq(a, b):
        return "lt"
    if leq(b, a):
        return "gt"
    return "incomparable"


def weight_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return compare_weights(a, b) in ("lt", "eq")


def block_signature(w: Sequence[int]) -> int:
    """Number of odd entries; constant on blocks."""
    return sum(1 for x in check_weight(w) if x % 2 != 0)


# ---------------------------------------------------------------------------
# Ray redrawing.
#
# A cup diagram with k cups is redrawn so that no bottom ray endpoint lands
# on the 2k codes -k-1 .. k-2 (reals -k-1/2 .. k-3/2, centered at -1); a cap
# diagram with k caps avoids the 2k codes -k .. k-1 (reals -k+1/2 .. k-1/2,
# centered at 0).  The redraw is the unique order-preserving bijection
# between the cofinite set of ray positions and the cofinite set of allowed
# slots that is the identity far to both sides.


def _redraw(ray_excluded: set[int], slot_excluded: set[int]) -> dict[int, int]:
    if not ray_excluded and not slot_excluded:
        return {}
    hi = max(ray_excluded | slot_excluded) + 1
    lo = min(ray_excluded | slot_excluded) - 1
    rays = [p for p in range(lo, hi + 1) if p not in ray_excluded]
    slots = [p for p in range(lo, hi + 1) if p not in slot_excluded]
    # Equal-size complements inside [lo, hi], so pairing descending from the
    # common top element is the identity at both ends.
    assert len(rays) == len(slots)
    return {r: s for r, s in zip(rays, slots) if r != s}


def redraw_cup_rays(c: CupDiagram) -> dict[int, int]:
    """Map raw ray code -> redrawn slot code (identity entries omitted)."""
    k = len(c.cups)
    forbidden = set(range(-k - 1, k - 1))
    return _redraw(c.endpoints, forbidden)


def redraw_cap_rays(c: CapDiagram) -> dict[int, int]:
    k = len(c.caps)
    forbidden = set(range(-k, k))
    return _redraw(c.endpoints, forbidden)


# ---------------------------------------------------------------------------
# Component tracing.

Endpoint = tuple[str, int, int]  # (side 'top'|'bottom', raw code, redrawn code)


@dataclasses.dataclass(frozen=True)
class Line:
    ends: tuple[Endpoint, Endpoint]

    @property
    def propagating(self) -> bool:
        return self.ends[0][0] != self.ends[1][0]


@dataclasses.dataclass(frozen=True)
class ComponentReport:
    circles: int
    lines: tuple[Line, ...]


def _window(d: CircleDiagram) -> range:
    pts = d.bottom.endpoints | d.top.endpoints
    if not pts:
        return range(0, 0)
    return range(min(pts), max(pts) + 1)


def trace_components(d: CircleDiagram) -> ComponentReport:
    """Partition the active positions of a circle diagram into circles and lines."""
    cup_redraw = redraw_cup_rays(d.bottom)
    cap_redraw = redraw_cap_rays(d.top)
    positions = sorted(d.bottom.endpoints | d.top.endpoints)
    below = {p: d.bottom.arc_at(p) for p in positions}
    above = {p: d.top.arc_at(p) for p in positions}
    seen: set[int] = set()
    circles = 0
    lines: list[Line] = []

    def ray_end(side: str, p: int) -> Endpoint:
        redraw = cup_redraw if side == "bottom" else cap_redraw
        return (side, p, redraw.get(p, p))

    for start in positions:
        if start in seen:
            continue
        # Walk the component through alternating cup/cap arcs.  Each visited
        # position has a below-object (cup arc or downward ray) and an
        # above-object (cap arc or upward ray).
        ends: list[Endpoint] = []
        p, going_up = start, True
        is_circle = True
        # First walk in one direction until a ray or back to start.
        path = []
        while True:
            path.append(p)
            arc = above[p] if going_up else below[p]
            if arc is None:
                ends.append(ray_end("top" if going_up else "bottom", p))
                is_circle = False
                break
            p = arc[0] if arc[1] == p else arc[1]
            path.append(p)
            going_up = not going_up
            if p == start and going_up:
                break
        if is_circle:
            seen.update(path)
            circles += 1
            continue
        # Walk the other way from start.
        p, going_up = start, False
        while True:
            path.append(p)
            arc = above[p] if going_up else below[p]
            if arc is None:
                ends.append(ray_end("top" if going_up else "bottom", p))
                break
            p = arc[0] if arc[1] == p else arc[1]
            path.append(p)
            going_up = not going_up
        seen.update(path)
        lines.append(Line((ends[0], ends[1])))
    return ComponentReport(circles, tuple(lines))


def _line_sides_ok(line: Line) -> bool:
    (s1, _, q1), (s2, _, q2) = line.ends
    assert s1 == s2
    center = 0 if s1 == "top" else -1
    r1, r2 = q1 + 0.5, q2 + 0.5
    return (r1 - center) * (r2 - center) < 0


def is_orientable_K(d: CircleDiagram) -> bool:
    """No circles; every non-propagating line straddles 0 (top) or -1 (bottom)."""
    report = trace_components(d)
    if report.circles:
        return False
    return all(line.propagating or _line_sides_ok(line) for line in report.lines)


def is_orientable_Kn(d: CircleDiagram) -> bool:
    """No circles and no non-propagating lines at all."""
    report = trace_components(d)
    return report.circles == 0 and all(line.propagating for line in report.lines)


def all_cup_diagrams(n_cups: int, lo: int, hi: int) -> Iterator[CupDiagram]:
    """All cup diagrams with n cups and endpoints in [lo, hi].

    The support of a cup diagram is a union of even-length runs of
    consecutive positions; within a run the arcs form an arbitrary
    crossingless full matching.
    """

    def matchings(run: tuple[int, ...]) -> Iterator[tuple[Arc, ...]]:
        if not run:
            yield ()
            return
        first = run[0]
        for i in range(1, len(run), 2):
            partner = run[i]
            inner = run[1:i]
            outer = run[i + 1 :]
            for m1 in matchings(inner):
                for m2 in matchings(outer):
                    yield ((first, partner),) + m1 + m2

    def supports(start: int, remaining: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if remaining == 0:
            yield ()
            return
        for s in range(start, hi - 2 * remaining + 2):
            for size in range(1, remaining + 1):
                if s + 2 * size - 1 > hi:
                    break
                run = tuple(range(s, s + 2 * size))
                for rest in supports(s + 2 * size + 1, remaining - size):
                    yield (run,) + rest

    for runs in supports(lo, n_cups):
        arc_sets: list[tuple[Arc, ...]] = [()]
        for run in runs:
            arc_sets = [acc + m for acc in arc_sets for m in matchings(run)]
        for arcs in arc_sets:
            yield CupDiagram(arcs)
