from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import kn_diagrams, weights
from khp.algebra import (
    AlgebraElement,
    StackedState,
    classify_surgery,
    compatible_weights,
    hom_dim,
    involution_star,
    middle_connectors,
    multiply,
    star_weight,
)
from khp.diagrams import (
    CapDiagram,
    CircleDiagram,
    CupDiagram,
    cap_from_weight,
    cup_from_weight,
    e_diagram,
    is_orientable_K,
    is_orientable_Kn,
    trace_components,
    weight_from_cap,
    weight_from_cup,
)


def test_multiplication_with_idempotents():
    lam, mu = (2, -1), (4, -1)
    d = CircleDiagram(cup_from_weight(mu), cap_from_weight(lam))
    assert multiply(e_diagram(mu), d, "Kn") == d
    assert multiply(d, e_diagram(lam), "Kn") == d
    assert multiply(d, e_diagram(mu), "Kn") is None
    assert multiply(e_diagram(lam), d, "Kn") is None
    assert multiply(e_diagram(lam), e_diagram(lam), "K") == e_diagram(lam)


def test_worked_triple_product():
    lam, mu, nu = (1, 0, -1), (4, 3, -1), (3, 2, -1)
    a = CircleDiagram(cup_from_weight(nu), cap_from_weight(mu))
    b = CircleDiagram(cup_from_weight(mu), cap_from_weight(lam))
    assert multiply(a, b, "Kn") == CircleDiagram(
        cup_from_weight(nu), cap_from_weight(lam)
    )


def test_rank_one_quiver_relation():
    for lam in (-3, 0, 2):
        x = CircleDiagram(cup_from_weight([lam + 4]), cap_from_weight([lam + 2]))
        y = CircleDiagram(cup_from_weight([lam + 2]), cap_from_weight([lam]))
        assert multiply(x, y, "Kn") is None


def test_middle_connectors_match_local_rule():
    # a ray directly left of a cap goes to the first free position right of
    # the corresponding cup; everything else connects straight up
    for w in ((1,), (1, 0), (2, -1), (3, 1, 0), (2, 1, -3)):
        cap = cap_from_weight(w)
        cup = cup_from_weight(w)
        conn = middle_connectors(cap, cup)
        for p, q in conn.items():
            left_caps = [a for a in cap.caps if a[0] == p + 1]
            if not left_caps:
                assert q == p, (w, p, q)
            else:
                corresponding_cup = (left_caps[0][0] - 1, left_caps[0][1] - 1)
                free = corresponding_cup[1] + 1
                while cup.arc_at(free) is not None:
                    free += 1
                assert q == free, (w, p, q)


@given(kn_diagrams(n_max=2, lo=-4, hi=4), kn_diagrams(n_max=2, lo=-4, hi=4))
@settings(max_examples=60)
def test_structure_constants_zero_or_one(a, b):
    prod = multiply(a, b, "Kn")
    if weight_from_cap(a.top) != weight_from_cup(b.bottom):
        assert prod is None
    if prod is not None:
        assert is_orientable_Kn(prod)
        assert prod.bottom == a.bottom and prod.top == b.top


def test_star_examples():
    k = 3
    assert involution_star(e_diagram([k])) == e_diagram([-k])
    assert star_weight((k,)) == (-k,)
    # rotation around 1/2 sends the cap of [k] to the cup of [-k]
    d = e_diagram([k])
    assert involution_star(d).bottom == cup_from_weight([-k])


@given(weights(n_max=3, lo=-4, hi=4))
def test_star_involutive(w):
    d = e_diagram(w)
    assert involution_star(involution_star(d)) == d
    assert star_weight(star_weight(w)) == w


@given(kn_diagrams(n_max=2, lo=-3, hi=3), kn_diagrams(n_max=2, lo=-3, hi=3))
@settings(max_examples=60)
def test_star_antiautomorphism(a, b):
    lhs = multiply(a, b, "Kn")
    rhs = multiply(involution_star(b), involution_star(a), "Kn")
    if lhs is None:
        assert rhs is None
    else:
        assert rhs == involution_star(lhs)


def test_hom_dim_examples():
    assert hom_dim((3, 0), (3, 0)) == 1
    k = 1
    for mu in range(k - 4, k + 5):
        expected = 1 if mu in (k, k + 2) else 0
        assert hom_dim((mu,), (k,)) == expected
    # very typical: total 2^n
    for lam in ((5,), (5, 0), (8, 2, -4)):
        n = len(lam)
        assert sum(hom_dim(mu, lam) for mu in compatible_weights(lam)) == 2**n


def test_compatible_weights_examples():
    assert compatible_weights((1,)) == [(1,), (3,)]
    assert set(compatible_weights((2, -1))) == {
        (2, -1), (4, -1), (3, 2), (2, 1), (4, 1),
    }
    lam = (8, 2, -4)
    assert set(compatible_weights(lam)) == {
        tuple(lam[i] + 2 * e[i] for i in range(3))
        for e in [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    }


def test_classify_surgery_idempotent_all_straighten():
    for w in ((3,), (2, -1), (1, 0), (4, 1, 0)):
        e = e_diagram(w)
        state = StackedState(e, e)
        while state.pending:
            site = min(state.available_sites(), key=lambda s: s.cup)
            assert classify_surgery(state, site) == "straighten"
            state.do_surgery(site)


def test_classify_surgery_split():
    # cup and cap of the same weight glued into a loop
    d1 = CircleDiagram(cup_from_weight([2]), cap_from_weight([0]))
    d2 = CircleDiagram(cup_from_weight([0]), cap_from_weight([0]))
    state = StackedState(d1, d2)
    site = state.available_sites()[0]
    # the middle cup and cap bound the same circle component once joined
    assert classify_surgery(state, site) in ("split", "straighten", "reconnect")


def _random_kn_pairs(rng, count):
    pairs = []
    while len(pairs) < count:
        n = rng.choice((1, 2, 3))
        mu = tuple(sorted(rng.sample(range(-4, 5), n), reverse=True))
        cups = compatible_weights(mu)
        caps = [star_weight(r) for r in compatible_weights(star_weight(mu))]
        lam = rng.choice(cups)
        nu = rng.choice(caps)
        a = CircleDiagram(cup_from_weight(lam), cap_from_weight(mu))
        b = CircleDiagram(cup_from_weight(mu), cap_from_weight(nu))
        pairs.append((a, b))
    return pairs


def test_surgery_zero_classification():
    """A surgery yields an invalid state exactly when it splits off a circle
    or reconnects into a non-propagating line violating the side rules."""
    rng = Random(99)
    for a, b in _random_kn_pairs(rng, 150):
        for mode in ("K", "Kn"):
            state = StackedState(a, b)
            if not state.ok(mode):
                continue
            while state.pending:
                site = rng.choice(state.available_sites())
                kind = classify_surgery(state, site)
                state.do_surgery(site)
                ok = state.ok(mode)
                if kind == "split":
                    assert not ok
                elif kind == "straighten":
                    assert ok
                elif mode == "Kn" and kind == "reconnect":
                    assert not ok
                if not ok:
                    break


def test_nonpropagating_ideal_in_full_K():
    """Products of n-cup diagrams with a non-propagating-line factor never
    lose all non-propagating lines (the ideal property)."""
    rng = Random(5)

    def has_nonprop(d):
        return any(not l.propagating for l in trace_components(d).lines)

    checked = 0
    for _ in range(400):
        n = rng.choice((1, 2))
        mu = tuple(sorted(rng.sample(range(-3, 4), n), reverse=True))
        lam = tuple(sorted(rng.sample(range(-3, 4), n), reverse=True))
        nu = tuple(sorted(rng.sample(range(-3, 4), n), reverse=True))
        a = CircleDiagram(cup_from_weight(lam), cap_from_weight(mu))
        b = CircleDiagram(cup_from_weight(mu), cap_from_weight(nu))
        if not (is_orientable_K(a) and is_orientable_K(b)):
            continue
        if not (has_nonprop(a) or has_nonprop(b)):
            continue
        prod = multiply(a, b, "K")
        if prod is not None:
            checked += 1
            assert has_nonprop(prod), (a, b, prod)
    assert checked > 10


def test_algebra_element_arithmetic():
    e1 = AlgebraElement.idempotent((2, -1))
    e2 = AlgebraElement.idempotent((4, 1))
    assert (e1 * e1).terms == e1.terms
    assert (e1 * e2).is_zero()
    s = e1 + e1
    assert list(s.terms.values()) == [Fraction(2)]
    assert (s - s).is_zero()
    d = CircleDiagram(cup_from_weight((4, -1)), cap_from_weight((2, -1)))
    x = AlgebraElement.basis(d)
    assert (e2 * x).is_zero()
    assert (AlgebraElement.idempotent((4, -1)) * x).terms == x.terms
    with pytest.raises(ValueError):
        AlgebraElement.basis(CircleDiagram(CupDiagram([(0, 1)]), CapDiagram([(0, 1)])))
