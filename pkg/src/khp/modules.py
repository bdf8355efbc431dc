"""
Finite-dimensional module realizations over exact rationals.

A realization carries a labelled basis (one weight tag per vector), the
action-closed window of weights involved, and one 0/1 action matrix per
algebra basis diagram supported on the window.  Projective modules P(w)
have all orientable diagrams (mu under cap(w)) as basis; standard modules
keep only products staying in the top orientation layer; costandard
modules are duals of the right-hand analogue twisted through transposition;
simples are one-dimensional.

Translation functors act on these classes by weight-level rules: upper/
lower reduction for projectives and simples, oriented middle weights for
standard and costandard filtrations.  Radical and socle filtrations are
computed from the action matrices, using that the radical of the algebra
restricted to a window is spanned by the non-idempotent basis diagrams.
"""

from __future__ import annotations

import dataclasses
from collections import Counter
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import compatible_weights, multiply
from .diagrams import (
    CapDiagram,
    CircleDiagram,
    CupDiagram,
    cap_from_weight,
    check_weight,
    cup_from_weight,
    e_diagram,
    redraw_cap_rays,
    weight_from_cap,
    weight_from_cup,
)
from .matchings import (
    CrossinglessMatching,
    compose,
    ddagger,
    lower_reduction,
    oriented_middle_weights,
    upper_reduction,
)
from .orientation import (
    X_set,
    Y_set,
    cap_slots,
    cup_slots,
    delta_orientations,
    dots_to_weight,
    orientation_of,
    weight_to_dots,
)

Weight = tuple[int, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


# ---------------------------------------------------------------------------
# Exact linear algebra (dense, tiny matrices).


def rref(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        pv = m[pivot_row][col]
        m[pivot_row] = [x / pv for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return [r for r in m if any(x != 0 for x in r)]


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows))


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    red = rref(rows)
    pivots = []
    for r in red:
        pivots.append(next(i for i, x in enumerate(r) if x != 0))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in zip(red, pivots):
            v[pc] = -r[fc]
        basis.append(v)
    return basis


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in m]


# ---------------------------------------------------------------------------
# Realizations.


@dataclasses.dataclass
class ModuleRealization:
    name: str
    basis: tuple[Weight, ...]                      # weight tag per basis vector
    window: tuple[Weight, ...]
    action: dict[CircleDiagram, Matrix]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def weight_dims(self, vectors: Sequence[Sequence[Fraction]]) -> Counter:
        """Per-tag dimensions of the span of the given vectors."""
        out: Counter = Counter()
        for w in set(self.basis):
            cols = [j for j, tag in enumerate(self.basis) if tag == w]
            restricted = [[v[j] for j in cols] for v in vectors]
            r = rank(restricted)
            if r:
                out[w] = r
        return out

    def composition_factors(self) -> Counter:
        return Counter(self.basis)


def _window_diagrams(window: Sequence[Weight]) -> list[CircleDiagram]:
    out = []
    for kappa in window:
        for nu in window:
            d = CircleDiagram(cup_from_weight(kappa), cap_from_weight(nu))
            from .diagrams import is_orientable_Kn

            if is_orientable_Kn(d):
                out.append(d)
    return out


def _matrix_from_map(images: dict[int, int | None], dim: int) -> Matrix:
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for j, i in images.items():
        if i is not None:
            rows[i][j] = Fraction(1)
    return tuple(tuple(r) for r in rows)


def build_projective(w: Sequence[int]) -> ModuleRealization:
    w = check_weight(w)
    cap = cap_from_weight(w)
    window = tuple(compatible_weights(w))
    basis_diagrams = sorted(
        CircleDiagram(cup_from_weight(mu), cap) for mu in window
    )
    tags = tuple(weight_from_cup(d.bottom) for d in basis_diagrams)
    index = {d: i for i, d in enumerate(basis_diagrams)}
    action = {}
    for a in _window_diagrams(window):
        images = {}
        for j, d in enumerate(basis_diagrams):
            prod = multiply(a, d, "Kn")
            images[j] = index[prod] if prod is not None else None
        action[a] = _matrix_from_map(images, len(basis_diagrams))
    return ModuleRealization(f"P{w}", tags, window, action)


def build_standard(w: Sequence[int]) -> ModuleRealization:
    w = check_weight(w)
    ys = Y_set(w)
    basis_diagrams = sorted(y.diagram for y in ys)
    tags = tuple(weight_from_cup(d.bottom) for d in basis_diagrams)
    window = tuple(sorted({*tags, *compatible_weights(w)}))
    index = {d: i for i, d in enumerate(basis_diagrams)}

    def act(a: CircleDiagram, d: CircleDiagram) -> int | None:
        prod = multiply(a, d, "Kn")
        if prod is None or orientation_of(prod) != w:
            return None
        return index[prod]

    action = {}
    for a in _window_diagrams(window):
        images = {j: act(a, d) for j, d in enumerate(basis_diagrams)}
        action[a] = _matrix_from_map(images, len(basis_diagrams))
    return ModuleRealization(f"Delta{w}", tags, window, action)


def build_costandard(w: Sequence[int]) -> ModuleRealization:
    """Dual of the right module spanned by X(w), action transposed."""
    w = check_weight(w)
    xs = X_set(w)
    basis_diagrams = sorted(x.diagram for x in xs)
    tags = tuple(weight_from_cap(d.top) for d in basis_diagrams)
    window = tuple(sorted({*tags, *compatible_weights(w)}))
    index = {d: i for i, d in enumerate(basis_diagrams)}

    def act_right(d: CircleDiagram, a: CircleDiagram) -> int | None:
        prod = multiply(d, a, "Kn")
        if prod is None or orientation_of(prod) != w:
            return None
        return index[prod]

    action = {}
    for a in _window_diagrams(window):
        rows = [[Fraction(0)] * len(basis_diagrams) for _ in basis_diagrams]
        for j, d in enumerate(basis_diagrams):
            i = act_right(d, a)
            if i is not None:
                # right action matrix transposed: (a . f)(m) = f(m . a)
                rows[j][i] = Fraction(1)
        action[a] = tuple(tuple(r) for r in rows)
    return ModuleRealization(f"Nabla{w}", tags, window, action)


def build_simple(w: Sequence[int]) -> ModuleRealization:
    w = check_weight(w)
    window = tuple(compatible_weights(w))
    e = e_diagram(w)
    action = {}
    for a in _window_diagrams(window):
        val = Fraction(1) if a == e else Fraction(0)
        action[a] = ((val,),)
    return ModuleRealization(f"L{w}", (w,), window, action)


def delta_flag(w: Sequence[int]) -> list[Weight]:
    """Weights of the standard filtration of P(w), larger weights first."""
    w = check_weight(w)
    cap = cap_from_weight(w)
    flag = sorted(dots_to_weight(d) for d in delta_orientations(cap))
    return flag


# ---------------------------------------------------------------------------
# Translation functors on the four classes.


def theta_on_projective(
    t: CrossinglessMatching, gamma: Sequence[int]
) -> Weight | None:
    """P(gamma) maps to P(ured(t cap(gamma))) or to zero."""
    gamma = check_weight(gamma)
    res = upper_reduction(t, cap_from_weight(gamma))
    if res.circles or res.top_lines or len(res.cap.caps) != len(gamma):
        return None
    return weight_from_cap(res.cap)


def theta_on_cap_K(t: CrossinglessMatching, cap: CapDiagram) -> CapDiagram | None:
    """Full-K variant: to-infinity lines survive iff they straddle 0 at the
    redrawn ray slots of the cap diagram."""
    res = upper_reduction(t, cap)
    if res.circles:
        return None
    redraw = redraw_cap_rays(cap)
    for p1, p2 in res.top_lines:
        q1 = redraw.get(p1, p1) + 0.5
        q2 = redraw.get(p2, p2) + 0.5
        if not q1 * q2 < 0:
            return None
    return res.cap


def theta_chain_cap(seq: Sequence[int], start: CapDiagram | None = None) -> CapDiagram | None:
    """Iterate theta_on_cap_K over t^(i) for i in seq, starting from start."""
    from .matchings import special_matching

    cap = start if start is not None else CapDiagram(())
    for i in seq:
        nxt = theta_on_cap_K(special_matching(i), cap)
        if nxt is None:
            return None
        cap = nxt
    return cap


def standard_nonzero_criterion(t: CrossinglessMatching, gamma: Sequence[int]) -> bool:
    """No cup of (t with gamma-dots on top) holds more dots than nested cups,
    and the cups admit a system of distinct adjacent dots."""
    gamma = check_weight(gamma)
    dots = weight_to_dots(gamma)
    for l, r in t.top_arcs:
        inside_dots = sum(1 for m in dots if l + 1 <= m <= r)
        inside_cups = sum(1 for l2, r2 in t.top_arcs if l < l2 and r2 < r)
        if inside_dots > inside_cups:
            return False
    cups = list(t.top_arcs)

    def rec(i: int, used: frozenset[int]) -> bool:
        if i == len(cups):
            return True
        return any(
            rec(i + 1, used | {s})
            for s in cup_slots(cups[i])
            if s in dots and s not in used
        )

    return rec(0, frozenset())


def theta_on_standard(
    t: CrossinglessMatching, gamma: Sequence[int]
) -> tuple[list[Weight], Weight | None]:
    """(standard filtration weights, head weight or None)."""
    flag = oriented_middle_weights(t, gamma)
    head = theta_on_projective(t, gamma) if flag else None
    return flag, head


def theta_on_costandard(
    t: CrossinglessMatching, gamma: Sequence[int]
) -> tuple[list[Weight], Weight | None]:
    """(costandard filtration weights, socle weight or None)."""
    flag = oriented_middle_weights(t, gamma, costandard=True)
    socle = None
    if flag:
        gamma = check_weight(gamma)
        res = lower_reduction(cup_from_weight(gamma), ddagger(t))
        if not res.circles and not res.bottom_lines and len(res.cup.cups) == len(gamma):
            socle = weight_from_cup(res.cup)
    return flag, socle


def candidate_weights_near(
    t: CrossinglessMatching, w: Sequence[int]
) -> list[Weight]:
    pts = set(t.bottom_points) | set(t.top_points)
    pts |= set(x + 1 for x in w) | set(x for x in w)
    n = len(w)
    if not pts:
        return [()]
    lo, hi = min(pts) - 2 * n - 2, max(pts) + 2 * n + 2
    return [tuple(sorted(c, reverse=True)) for c in combinations(range(lo, hi + 1), n)]


def theta_on_simple(
    t: CrossinglessMatching, lam: Sequence[int]
) -> tuple[Counter, bool, Weight | None, Weight | None]:
    """(Grothendieck class, nonzero?, head weight, socle weight)."""
    lam = check_weight(lam)
    n = len(lam)
    cap_lam = cap_from_weight(lam)
    tdd = ddagger(t)
    cls: Counter = Counter()
    for mu in candidate_weights_near(t, lam):
        res = upper_reduction(tdd, cap_from_weight(mu))
        if res.circles or res.top_lines:
            continue
        if res.cap == cap_lam:
            cls[mu] += 1
    res_t = upper_reduction(t, cap_lam)
    clean = not res_t.circles and not res_t.top_lines and len(res_t.cap.caps) == n
    nonzero = False
    head = socle = None
    if clean:
        m, c = compose(tdd, t)
        if c == 0:
            back = upper_reduction(m, cap_lam)
            nonzero = back.circles == 0 and back.cap == cap_lam
    if nonzero:
        head = weight_from_cap(res_t.cap)
        res_s = lower_reduction(cup_from_weight(lam), tdd)
        if not res_s.circles and not res_s.bottom_lines and len(res_s.cup.cups) == n:
            socle = weight_from_cup(res_s.cup)
    return cls, nonzero, head, socle


# ---------------------------------------------------------------------------
# Radical and socle filtrations.


def _radical_generators(m: ModuleRealization) -> list[Matrix]:
    return [
        mat
        for diag, mat in m.action.items()
        if weight_from_cup(diag.bottom) != weight_from_cap(diag.top)
    ]


def radical_filtration(m: ModuleRealization) -> list[Counter]:
    """Layers rad^k M / rad^{k+1} M as weight multisets, top layer first."""
    dim = m.dim
    gens = _radical_generators(m)
    layers = []
    current = [[Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
    while True:
        nxt = rref(
            [mat_vec(g, v) for g in gens for v in current]
        )
        upper = m.weight_dims(current)
        lower = m.weight_dims(nxt)
        layer = Counter({w: upper[w] - lower.get(w, 0) for w in upper})
        layer = Counter({w: c for w, c in layer.items() if c > 0})
        layers.append(layer)
        if not nxt:
            break
        if len(nxt) >= len(rref(current)):
            raise RuntimeError("radical series does not terminate")
        current = nxt
    return layers


def socle_filtration(m: ModuleRealization) -> list[Counter]:
    """Layers soc_k / soc_{k-1}, socle first; soc_k annihilates rad^k."""
    dim = m.dim
    gens = _radical_generators(m)
    # Radical power generators as matrix products of window basis elements.
    powers: list[list[Matrix]] = [gens]
    layers: list[Counter] = []
    prev: list[list[Fraction]] = []
    while True:
        stacked = [row for g in powers[-1] for row in g]
        kern = nullspace(stacked, dim) if stacked else [
            [Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)
        ]
        upper = m.weight_dims(kern)
        lower = m.weight_dims(prev)
        layer = Counter({w: upper[w] - lower.get(w, 0) for w in upper})
        layer = Counter({w: c for w, c in layer.items() if c > 0})
        layers.append(layer)
        if len(kern) == dim:
            break
        prev = kern
        powers.append(
            [
                _mat_mul(g, h)
                for g in gens
                for h in powers[-1]
                if any(any(x != 0 for x in row) for row in _mat_mul(g, h))
            ]
        )
    return layers


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0))
            for j in range(n)
        )
        for i in range(n)
    )
