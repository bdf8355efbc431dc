import pytest
from hypothesis import given

from conftest import kn_diagrams, weights
from khp.algebra import compatible_weights, multiply
from khp.diagrams import (
    CapDiagram,
    CircleDiagram,
    CupDiagram,
    cap_from_weight,
    cup_from_weight,
    e_diagram,
    is_orientable_K,
    is_orientable_Kn,
)
from khp.orientation import (
    X_set,
    Y_set,
    cap_slots,
    cup_slots,
    delta_orientations,
    is_delta_orientation,
    is_nabla_orientation,
    nabla_orientations,
    orientation_of,
    orientation_oracle,
    rightmost_cap_slot,
    rightmost_cup_slot,
    triangular_factor,
    weight_to_dots,
)


def test_delta_orientation_counts():
    # typical cap diagram: exactly one orientation
    assert delta_orientations(cap_from_weight([4, 0, -4])) == {frozenset({5, 1, -3})}
    # single small cap (k, k+1): only the interior integer
    assert delta_orientations(CapDiagram([(3, 4)])) == {frozenset({4})}
    # nested pair: two orientations, found by brute force
    assert len(delta_orientations(cap_from_weight([1, 0]))) == 2


def test_nabla_orientation_examples():
    lam = 2
    assert nabla_orientations(CupDiagram([(lam, lam + 1)])) == {
        frozenset({lam}),
        frozenset({lam + 2}),
    }
    assert nabla_orientations(CupDiagram(())) == {frozenset()}
    assert len(nabla_orientations(cup_from_weight([1, 0]))) == 4


def test_slots():
    assert cup_slots((3, 6)) == (3, 7)
    assert rightmost_cup_slot((3, 6)) == 7
    assert rightmost_cap_slot((3, 6)) == 6
    cap = cap_from_weight([1, 0])  # caps (0,1) nested in (-1,2)
    assert cap_slots(cap, (0, 1)) == (1,)
    assert set(cap_slots(cap, (-1, 2))) == {0, 2}


def test_orientation_examples():
    for lam in ((4, 1, -2), (0,), ()):
        assert orientation_of(e_diagram(lam)) == lam
    lam = -1
    d = CircleDiagram(cup_from_weight([lam + 2]), cap_from_weight([lam]))
    assert orientation_of(d) == (lam,)
    # non-orientable: circle
    d2 = CircleDiagram(CupDiagram([(0, 1)]), CapDiagram([(0, 1)]))
    assert orientation_of(d2) is None
    # K-orientable with non-propagating lines still has no orientation
    d3 = CircleDiagram(CupDiagram([(-1, 0)]), CapDiagram(()))
    assert is_orientable_K(d3)
    assert orientation_of(d3) is None


@given(kn_diagrams(n_max=3, lo=-4, hi=4))
def test_orientation_matches_oracle(d):
    assert orientation_of(d) == orientation_oracle(d)
    assert orientation_of(d) is not None


@given(weights(n_max=2, lo=-4, hi=4), weights(n_max=2, lo=-4, hi=4))
def test_converse_orientation_implies_orientable(lam, mu):
    d = CircleDiagram(cup_from_weight(lam), cap_from_weight(mu))
    for dots in delta_orientations(d.top):
        if is_nabla_orientation(dots, d.bottom):
            assert is_orientable_K(d)
            assert is_orientable_Kn(d)


def test_xy_sets():
    for lam in ((3,), (2, -1), (1, 0)):
        ys = Y_set(lam)
        xs = X_set(lam)
        e = e_diagram(lam)
        assert sum(1 for y in ys if y.diagram == e) == 1
        assert sum(1 for x in xs if x.diagram == e) == 1
        for y in ys:
            assert y.orientation == lam
            assert is_orientable_Kn(y.diagram)
        for x in xs:
            assert x.orientation == lam


def test_y_set_n1():
    k = 3
    cups = {y.diagram.bottom for y in Y_set((k,))}
    assert cups == {cup_from_weight((k,)), cup_from_weight((k + 2,))}


def test_xy_order_property():
    from khp.diagrams import weight_from_cup, weight_from_cap, compare_weights

    lam = (2, -1)
    for y in Y_set(lam):
        mu = weight_from_cup(y.diagram.bottom)
        assert compare_weights(mu, lam) in ("lt", "eq")
    for x in X_set(lam):
        mu = weight_from_cap(x.diagram.top)
        assert compare_weights(mu, lam) in ("lt", "eq")


@given(kn_diagrams(n_max=2, lo=-4, hi=4))
def test_triangular_factor_multiplies_back(d):
    y, x = triangular_factor(d)
    assert multiply(y, x, "Kn") == d
    nu = orientation_of(d)
    assert y.top == cap_from_weight(nu)
    assert x.bottom == cup_from_weight(nu)


def test_triangular_factor_examples():
    e = e_diagram((5,))
    assert triangular_factor(e) == (e, e)
    lam = 1
    d = CircleDiagram(cup_from_weight([lam + 2]), cap_from_weight([lam]))
    y, x = triangular_factor(d)
    assert y == d and x == e_diagram((lam,))
