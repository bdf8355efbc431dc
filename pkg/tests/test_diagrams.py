import pytest
from hypothesis import given

from conftest import weights
from khp.diagrams import (
    CapDiagram,
    CircleDiagram,
    CupDiagram,
    all_cup_diagrams,
    block_signature,
    cap_from_weight,
    compare_weights,
    cup_from_weight,
    e_diagram,
    is_orientable_K,
    is_orientable_Kn,
    redraw_cap_rays,
    redraw_cup_rays,
    trace_components,
    weight_from_cap,
    weight_from_cup,
)


def test_cup_from_weight_examples():
    assert cup_from_weight([3, 0, -2]).cups == ((-3, -2), (-1, 0), (2, 3))
    assert cup_from_weight([]).cups == ()
    assert cup_from_weight([1, 0, -1]).cups == ((-4, 1), (-3, 0), (-2, -1))


def test_cap_from_weight_examples():
    # n fully nested caps with right endpoint codes n, n-1, ..., 1
    for n in (1, 2, 4):
        w = tuple(range(n - 1, -1, -1))
        caps = cap_from_weight(w).caps
        assert sorted(r for _, r in caps) == list(range(1, n + 1))
        outer = max(caps, key=lambda a: a[1] - a[0])
        assert all(outer[0] <= l and r <= outer[1] for l, r in caps)
    assert cap_from_weight([5]).caps == ((5, 6),)
    assert cap_from_weight([]).caps == ()


def test_weight_from_cup_inverse_examples():
    assert weight_from_cup(CupDiagram([(-3, -2), (-1, 0), (2, 3)])) == (3, 0, -2)
    assert weight_from_cup(CupDiagram([(4, 5)])) == (5,)
    assert weight_from_cup(CupDiagram(())) == ()


@given(weights())
def test_weight_roundtrip(w):
    assert weight_from_cup(cup_from_weight(w)) == w
    assert weight_from_cap(cap_from_weight(w)) == w


def test_invalid_weight_rejected():
    with pytest.raises(ValueError):
        cup_from_weight([1, 1])
    with pytest.raises(ValueError):
        cup_from_weight([0, 2])


def test_invalid_arcs_rejected():
    with pytest.raises(ValueError):
        CupDiagram([(0, 2)])  # free position inside
    with pytest.raises(ValueError):
        CupDiagram([(0, 3), (1, 4)])  # crossing
    with pytest.raises(ValueError):
        CupDiagram([(2, 1)])


def test_compare_weights_examples():
    assert compare_weights([3, 0, -2], [3, -1, -2]) == "lt"
    assert compare_weights([3, 0, -2], [3, 0, -2]) == "eq"
    assert compare_weights([2, 0], [3, -1]) == "incomparable"
    # more cups = smaller
    assert compare_weights([5, 4, 3], [0]) == "lt"


@given(weights(n_max=3, lo=-4, hi=4), weights(n_max=3, lo=-4, hi=4))
def test_compare_weights_matches_definition(a, b):
    def leq(x, y):
        return len(x) > len(y) or (
            len(x) == len(y) and all(p >= q for p, q in zip(x, y))
        )

    got = compare_weights(a, b)
    if a == b:
        assert got == "eq"
    elif leq(a, b):
        assert got == "lt"
    elif leq(b, a):
        assert got == "gt"
    else:
        assert got == "incomparable"


def test_block_signature():
    assert block_signature([2, -1]) == 1
    assert block_signature([]) == 0
    assert block_signature([3, 1]) == 2
    assert block_signature([-3]) == 1


def test_trace_components_examples():
    k = 4
    # idempotent-style gluing: one propagating line through both arcs
    d = CircleDiagram(CupDiagram([(k - 1, k)]), CapDiagram([(k, k + 1)]))
    rep = trace_components(d)
    assert rep.circles == 0
    assert len(rep.lines) >= 1
    main = [l for l in rep.lines if l.propagating]
    assert main
    # identical arcs glue to a circle
    d2 = CircleDiagram(CupDiagram([(k - 1, k)]), CapDiagram([(k - 1, k)]))
    assert trace_components(d2).circles == 1
    # radical element of rank one: still a single propagating line
    d3 = CircleDiagram(CupDiagram([(k + 1, k + 2)]), CapDiagram([(k, k + 1)]))
    rep3 = trace_components(d3)
    assert rep3.circles == 0 and all(l.propagating for l in rep3.lines)


@given(weights(n_max=3, lo=-4, hi=4))
def test_trace_ray_accounting(w):
    # endpoints of lines on a given side are exactly the ray positions there
    d = e_diagram(w)
    rep = trace_components(d)
    bottom_ends = sorted(p for l in rep.lines for s, p, _ in l.ends if s == "bottom")
    top_ends = sorted(p for l in rep.lines for s, p, _ in l.ends if s == "top")
    active = d.bottom.endpoints | d.top.endpoints
    assert bottom_ends == sorted(p for p in active if d.bottom.arc_at(p) is None)
    assert top_ends == sorted(p for p in active if d.top.arc_at(p) is None)


@given(weights(n_max=3, lo=-4, hi=4))
def test_idempotent_orientable(w):
    assert is_orientable_Kn(e_diagram(w))
    assert is_orientable_K(e_diagram(w))


def test_orientability_examples():
    lam = 2
    assert is_orientable_Kn(
        CircleDiagram(cup_from_weight([lam + 2]), cap_from_weight([lam]))
    )
    d = CircleDiagram(cup_from_weight([lam - 2]), cap_from_weight([lam]))
    assert not is_orientable_Kn(d)
    assert not is_orientable_K(d)  # both lines fail the side conditions


@given(weights(n_max=3, lo=-4, hi=4), weights(n_max=3, lo=-4, hi=4))
def test_kn_implies_k(a, b):
    d = CircleDiagram(cup_from_weight(a), cap_from_weight(b))
    if is_orientable_Kn(d):
        assert is_orientable_K(d)


def test_redraw_windows():
    # cup diagram with k cups avoids codes -k-1 .. k-2 after redraw
    c = cup_from_weight([3, -1])
    redraw = redraw_cup_rays(c)
    forbidden = set(range(-3, 1))
    slots = {redraw.get(p, p) for p in range(-8, 9) if c.arc_at(p) is None}
    assert not (slots & forbidden)
    cap = cap_from_weight([3, -1])
    redraw2 = redraw_cap_rays(cap)
    forbidden2 = set(range(-2, 2))
    slots2 = {redraw2.get(p, p) for p in range(-8, 9) if cap.arc_at(p) is None}
    assert not (slots2 & forbidden2)


def test_all_cup_diagrams_counts():
    # four consecutive positions carry the two crossingless pairings
    ds = list(all_cup_diagrams(2, 0, 3))
    assert len(ds) == 2
    assert {d.cups for d in ds} == {((0, 1), (2, 3)), ((0, 3), (1, 2))}
    assert len(list(all_cup_diagrams(1, 0, 3))) == 3
