"""
The diagram algebras K (full) and K_n (quotient) with surgery multiplication.

A product (lower diagram) * (upper diagram) is computed by stacking the
first circle diagram under the second, connecting the middle rays by the
unique order-preserving, eventually-identity bijection between the middle
cap diagram's rays and the middle cup diagram's rays, and removing the
middle section one surgery at a time.  A surgery site consists of a middle
cup (a, b) on the upper line, the middle cap (a+1, b+1) on the lower line,
and the strand currently ending at lower position a; the surgery rewires
the three strands to lower-a/upper-a, lower-(a+1)/upper-b and
lower-(b+1)/upper-f, where f is the upper end of the strand.  Middle cups
are processed left to right; by commutation of surgeries any admissible
order yields the same result, which tests exercise with random orders.

After the initial stacking and after every surgery the state is checked:
in full-K mode circles are forbidden and non-propagating lines must
straddle 0 (top) or -1 (bottom) at redrawn ray slots; in K_n mode any
circle or non-propagating line kills the product.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from random import Random
from typing import Iterable, Literal, Sequence

from .diagrams import (
    Arc,
    CapDiagram,
    CircleDiagram,
    CupDiagram,
    cap_from_weight,
    check_weight,
    cup_from_weight,
    e_diagram,
    is_orientable_K,
    is_orientable_Kn,
    redraw_cap_rays,
    redraw_cup_rays,
    weight_from_cap,
    weight_from_cup,
)
from .orientation import delta_orientations, is_nabla_orientation, nabla_preimages

Mode = Literal["K", "Kn"]


def orientable(d: CircleDiagram, mode: Mode) -> bool:
    return is_orientable_Kn(d) if mode == "Kn" else is_orientable_K(d)


def middle_connectors(
    cap: CapDiagram, cup: CupDiagram, lo: int | None = None, hi: int | None = None
) -> dict[int, int]:
    """Order-preserving, eventually-identity bijection cap rays -> cup rays.

    Equivalently the paper-style local rule: a ray directly left of a middle
    cap connects to the first free position right of the corresponding cup.
    """
    cap_pts = cap.endpoints
    cup_pts = cup.endpoints
    all_pts = cap_pts | cup_pts
    if lo is None:
        lo = min(all_pts) - 1 if all_pts else 0
    if hi is None:
        hi = max(all_pts) + 1 if all_pts else -1
    lower = [p for p in range(lo, hi + 1) if p not in cap_pts]
    upper = [p for p in range(lo, hi + 1) if p not in cup_pts]
    assert len(lower) == len(upper)
    return dict(zip(lower, upper))


@dataclasses.dataclass(frozen=True)
class SurgerySite:
    cup: Arc        # middle cup, on the upper line
    cap: Arc        # middle cap (the cup shifted by +1), on the lower line
    line_top: int   # upper-line position of the strand ending at lower cup[0]


Node = tuple[int, int]  # (line 1|2, position)


class StackedState:
    """Two-line state of a multiplication in progress.

    Every active node has an *outer* attachment (a cup of the bottom diagram
    or a downward ray on line 1; a cap of the top diagram or an upward ray
    on line 2) and a *middle* attachment (a middle arc on the same line, or
    a connector to the other line).
    """

    def __init__(self, a: CircleDiagram, b: CircleDiagram):
        self.bottom = a.bottom
        self.top = b.top
        all_pts = (a.bottom.endpoints | a.top.endpoints
                   | b.bottom.endpoints | b.top.endpoints)
        lo = min(all_pts) - 1 if all_pts else 0
        hi = max(all_pts) + 1 if all_pts else -1
        conn = middle_connectors(a.top, b.bottom, lo, hi)
        self.outer: dict[Node, Arc | None] = {}
        # middle: Node -> Node (the other end of the middle attachment)
        self.middle: dict[Node, Node] = {}
        pts1 = a.bottom.endpoints | a.top.endpoints | set(conn)
        pts2 = b.bottom.endpoints | b.top.endpoints | set(conn.values())
        for p in pts1:
            self.outer[(1, p)] = a.bottom.arc_at(p)
        for p in pts2:
            self.outer[(2, p)] = b.top.arc_at(p)
        for l, r in a.top.caps:
            self.middle[(1, l)] = (1, r)
            self.middle[(1, r)] = (1, l)
        for l, r in b.bottom.cups:
            self.middle[(2, l)] = (2, r)
            self.middle[(2, r)] = (2, l)
        for p, q in conn.items():
            self.middle[(1, p)] = (2, q)
            self.middle[(2, q)] = (1, p)
        self.pending: list[Arc] = sorted(b.bottom.cups)

    def copy(self) -> "StackedState":
        new = object.__new__(StackedState)
        new.bottom = self.bottom
        new.top = self.top
        new.outer = dict(self.outer)
        new.middle = dict(self.middle)
        new.pending = list(self.pending)
        return new

    def available_sites(self) -> list[SurgerySite]:
        sites = []
        for cup in self.pending:
            a = cup[0]
            other = self.middle.get((1, a))
            if other is not None and other[0] == 2:
                sites.append(SurgerySite(cup, (a + 1, cup[1] + 1), other[1]))
        return sites

    def do_surgery(self, site: SurgerySite) -> None:
        a, b = site.cup
        f = site.line_top
        for lower, upper in ((a, a), (a + 1, b), (b + 1, f)):
            self.middle[(1, lower)] = (2, upper)
            self.middle[(2, upper)] = (1, lower)
        self.pending.remove(site.cup)

    # -- component analysis --------------------------------------------------

    def components(self):
        """Return (circles, lines, comp_of) where lines hold raw endpoints
        (side, position) and comp_of maps each node to a component index."""
        circles = 0
        lines: list[tuple[tuple[str, int], tuple[str, int]]] = []
        comp_of: dict[Node, int] = {}
        comp = 0

        def follow(node: Node, via_middle: bool):
            """Walk from node leaving through the given attachment; return the
            boundary endpoint or None if we loop back to the start."""
            start = (node, via_middle)
            while True:
                if via_middle:
                    node = self.middle[node]
                    comp_of[node] = comp
                    via_middle = False
                else:
                    arc = self.outer[node]
                    if arc is None:
                        side = "bottom" if node[0] == 1 else "top"
                        return (side, node[1])
                    l, r = arc
                    node = (node[0], l if node[1] == r else r)
                    comp_of[node] = comp
                    via_middle = True
                if (node, via_middle) == start:
                    return None

        for node in self.outer:
            if node in comp_of:
                continue
            comp_of[node] = comp
            end1 = follow(node, True)
            if end1 is None:
                circles += 1
            else:
                end2 = follow(node, False)
                assert end2 is not None
                lines.append((end1, end2))
            comp += 1
        return circles, lines, comp_of

    def ok(self, mode: Mode) -> bool:
        circles, lines, _ = self.components()
        if circles:
            return False
        cup_redraw = redraw_cup_rays(self.bottom)
        cap_redraw = redraw_cap_rays(self.top)
        for (s1, p1), (s2, p2) in lines:
            if s1 != s2:
                continue
            if mode == "Kn":
                return False
            redraw = cap_redraw if s1 == "top" else cup_redraw
            center = 0.0 if s1 == "top" else -1.0
            q1 = redraw.get(p1, p1) + 0.5
            q2 = redraw.get(p2, p2) + 0.5
            if not (q1 - center) * (q2 - center) < 0:
                return False
        return True

    def snapshot(self) -> dict:
        """Plain data for rendering a partially multiplied state."""
        caps1 = sorted({tuple(sorted((n[1], m[1]))) for n, m in self.middle.items()
                        if n[0] == 1 and m[0] == 1})
        cups2 = sorted({tuple(sorted((n[1], m[1]))) for n, m in self.middle.items()
                        if n[0] == 2 and m[0] == 2})
        conns = sorted((n[1], m[1]) for n, m in self.middle.items()
                       if n[0] == 1 and m[0] == 2)
        return {
            "bottom_cups": list(self.bottom.cups),
            "top_caps": list(self.top.caps),
            "middle_caps": caps1,
            "middle_cups": cups2,
            "connectors": conns,
        }


def classify_surgery(state: StackedState, site: SurgerySite) -> str:
    """Classify a pending surgery as 'straighten', 'split' or 'reconnect'.

    Split: the surgery closes off a circle.  Straighten: at least two of the
    three site strands (cup, cap, connector) already belong to one component.
    Reconnect: three distinct components, rewired without creating a circle.
    """
    before_circles, _, comp_of = state.components()
    a, b = site.cup
    trial = state.copy()
    trial.do_surgery(site)
    after_circles, _, _ = trial.components()
    if after_circles > before_circles:
        return "split"
    comps = {comp_of[(2, a)], comp_of[(1, a + 1)], comp_of[(1, a)]}
    return "straighten" if len(comps) < 3 else "reconnect"


def multiply(
    a: CircleDiagram,
    b: CircleDiagram,
    mode: Mode = "Kn",
    order: str = "leftmost",
    rng: Random | None = None,
    trace: list | None = None,
) -> CircleDiagram | None:
    """Product of two basis diagrams; None encodes zero.

    order='leftmost' processes middle cups by ascending left endpoint;
    order='random' picks any available site each step (needs rng).
    """
    if weight_from_cap(a.top) != weight_from_cup(b.bottom):
        return None
    state = StackedState(a, b)
    if trace is not None:
        trace.append(state.snapshot())
    if not state.ok(mode):
        return None
    while state.pending:
        sites = state.available_sites()
        assert sites, "no admissible surgery although middle cups remain"
        if order == "random":
            site = (rng or Random()).choice(sites)
        else:
            site = min(sites, key=lambda s: s.cup)
        state.do_surgery(site)
        if trace is not None:
            trace.append(state.snapshot())
        if not state.ok(mode):
            return None
    return CircleDiagram(state.bottom, state.top)


def involution_star(d: CircleDiagram) -> CircleDiagram:
    """Rotate a circle diagram by 180 degrees around the real point 1/2.

    Real position p maps to 1 - p (code c to -c), cups become caps and vice
    versa; this is an anti-automorphism of both algebras.
    """
    new_cups = [(-r, -l) for l, r in d.top.caps]
    new_caps = [(-r, -l) for l, r in d.bottom.cups]
    return CircleDiagram(CupDiagram(new_cups), CapDiagram(new_caps))


def star_weight(w: Sequence[int]) -> tuple[int, ...]:
    """The weight of the rotated idempotent: e_w* = involution_star(e_w)."""
    return weight_from_cup(CupDiagram([(-r, -l) for l, r in cap_from_weight(w).caps]))


def hom_dim(lam: Sequence[int], mu: Sequence[int], mode: Mode = "Kn") -> int:
    """dim e_lam K e_mu: 1 iff the circle diagram lam-under-mu is orientable."""
    d = CircleDiagram(cup_from_weight(lam), cap_from_weight(mu))
    return 1 if orientable(d, mode) else 0


def compatible_weights(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """All mu whose cup diagram glues orientably (K_n sense) under cap(lam).

    Every such diagram carries a unique orientation nu, which is a
    Delta-orientation of cap(lam); enumerating nabla-preimages of those
    orientations is exhaustive.
    """
    lam = check_weight(lam)
    cap = cap_from_weight(lam)
    found: set[tuple[int, ...]] = set()
    for dots in delta_orientations(cap):
        for cup in nabla_preimages(dots):
            d = CircleDiagram(cup, cap)
            if is_orientable_Kn(d):
                found.add(weight_from_cup(cup))
    return sorted(found)


# ---------------------------------------------------------------------------
# Linear combinations.


@dataclasses.dataclass
class AlgebraElement:
    """Exact-rational linear combination of orientable basis diagrams."""

    terms: dict[CircleDiagram, Fraction]
    mode: Mode = "Kn"

    def __post_init__(self):
        clean: dict[CircleDiagram, Fraction] = {}
        for diag, coeff in self.terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if not orientable(diag, self.mode):
                raise ValueError(f"{diag!r} is not a basis diagram ({self.mode})")
            clean[diag] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, mode: Mode = "Kn") -> "AlgebraElement":
        return cls({}, mode)

    @classmethod
    def basis(cls, d: CircleDiagram, mode: Mode = "Kn") -> "AlgebraElement":
        return cls({d: Fraction(1)}, mode)

    @classmethod
    def idempotent(cls, w: Sequence[int], mode: Mode = "Kn") -> "AlgebraElement":
        return cls.basis(e_diagram(w), mode)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        assert self.mode == other.mode
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, Fraction(0)) + c
        return AlgebraElement(terms, self.mode)

    def __rmul__(self, scalar) -> "AlgebraElement":
        return AlgebraElement(
            {d: Fraction(scalar) * c for d, c in self.terms.items()}, self.mode
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (Fraction(-1) * other)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        assert self.mode == other.mode
        terms: dict[CircleDiagram, Fraction] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                prod = multiply(d1, d2, self.mode)
                if prod is not None:
                    terms[prod] = terms.get(prod, Fraction(0)) + c1 * c2
        return AlgebraElement(terms, self.mode)

    def is_zero(self) -> bool:
        return not self.terms
