"""
The acceptance suite: fourteen checks reproducing the structural results
at desk scale.  Each check returns (name, passed, detail); ``run`` executes
a selection and reports one line per check.  All randomized checks take an
explicit seed and are deterministic for a fixed one.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from random import Random
from typing import Callable, Iterable

from .algebra import (
    compatible_weights,
    hom_dim,
    involution_star,
    multiply,
    star_weight,
)
from .applications import (
    ext1_dim,
    irreducible_summand_weights,
    irreducible_summand_weights_by_matchings,
    is_primitive,
    koszulity_report,
    nonsplittable_oracle,
    simple_dual,
    simple_dual_iterative,
    simple_dual_rotation,
    weights_in_window,
)
from .diagrams import (
    CircleDiagram,
    block_signature,
    cap_from_weight,
    cup_from_weight,
    e_diagram,
    is_orientable_K,
    is_orientable_Kn,
)
from .matchings import special_matching, stack_from_sequence, stacked_orientable
from .modules import (
    build_projective,
    radical_filtration,
    socle_filtration,
    theta_chain_cap,
    theta_on_projective,
)
from .orientation import (
    delta_orientations,
    is_nabla_orientation,
    nabla_orientations,
    orientation_of,
    orientation_oracle,
    weight_to_dots,
)
from .tableaux import (
    UpDownTableau,
    delta_partition,
    enumerate_udt,
    enumerate_up_tableaux,
    residue_seq,
    seq_realizable_empty_shape,
    tableaux_with_residues,
)

Check = tuple[str, bool, str]


def _basis_over(weights: list[tuple[int, ...]]) -> list[CircleDiagram]:
    out = []
    for lam in weights:
        cap = cap_from_weight(lam)
        for mu in compatible_weights(lam):
            out.append(CircleDiagram(cup_from_weight(mu), cap))
    return out


def _cap_compatible(mu: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All nu with (mu under cap(nu)) orientable, via rotation symmetry."""
    return sorted(star_weight(rho) for rho in compatible_weights(star_weight(mu)))


def check_associativity() -> Check:
    failures = 0
    triples = 0
    for n, window in ((1, range(-4, 6)), (2, range(-4, 6))):
        weights = weights_in_window(n, min(window), max(window))
        compat = {w: compatible_weights(w) for w in weights}
        wset = set(weights)
        cache: dict = {}

        def mul(x, y):
            key = (x, y)
            if key not in cache:
                cache[key] = multiply(x, y, "Kn")
            return cache[key]

        for mu in weights:
            cap_mu = cap_from_weight(mu)
            for nu in compat[mu]:
                if nu not in wset:
                    continue
                # b runs over basis diagrams nu under cap(mu)
                b = CircleDiagram(cup_from_weight(nu), cap_mu)
                for lam in compat[nu]:
                    if lam not in wset:
                        continue
                    a = CircleDiagram(cup_from_weight(lam), cap_from_weight(nu))
                    for kappa in _cap_compatible(mu):
                        if kappa not in wset:
                            continue
                        c = CircleDiagram(cup_from_weight(mu), cap_from_weight(kappa))
                        triples += 1
                        ab = mul(a, b)
                        bc = mul(b, c)
                        left = mul(ab, c) if ab is not None else None
                        right = mul(a, bc) if bc is not None else None
                        if left != right:
                            failures += 1
    return (
        "associativity",
        failures == 0,
        f"{triples} composable triples, {failures} failures",
    )


def check_surgery_commutation(seed: int = 2024, trials: int = 10_000) -> Check:
    rng = Random(seed)
    failures = 0
    pool: list[tuple[CircleDiagram, CircleDiagram]] = []
    weights = []
    for n in (1, 2, 3):
        base = range(-4, 5)
        for _ in range(40):
            w = tuple(sorted(rng.sample(list(base), n), reverse=True))
            weights.append(w)
    for mu in weights:
        cups = compatible_weights(mu)
        caps = _cap_compatible(mu)
        cap_mu = cap_from_weight(mu)
        for lam in cups:
            a = CircleDiagram(cup_from_weight(lam), cap_mu)
            for nu in caps:
                b = CircleDiagram(cup_from_weight(mu), cap_from_weight(nu))
                pool.append((a, b))
    done = 0
    while done < trials:
        a, b = pool[rng.randrange(len(pool))]
        reference = multiply(a, b, "Kn")
        for _ in range(20):
            alt = multiply(a, b, "Kn", order="random", rng=rng)
            if alt != reference:
                failures += 1
        done += 1
    return (
        "surgery-commutation",
        failures == 0,
        f"{done} products x 20 random orders, {failures} failures",
    )


def check_unique_orientation() -> Check:
    failures = 0
    count = 0
    for n, window in ((1, range(-4, 5)), (2, range(-4, 6))):
        weights = weights_in_window(n, min(window), max(window))
        for lam in weights:
            cap = cap_from_weight(lam)
            for mu in compatible_weights(lam):
                d = CircleDiagram(cup_from_weight(mu), cap)
                count += 1
                brute = [
                    dots
                    for dots in delta_orientations(d.top)
                    if is_nabla_orientation(dots, d.bottom)
                ]
                if len(brute) != 1:
                    failures += 1
                    continue
                if orientation_of(d) != orientation_oracle(d):
                    failures += 1
            # converse: matching orientations force orientability
            for dots in delta_orientations(cap):
                for cup in _nabla_preimages_cached(dots):
                    d = CircleDiagram(cup, cap)
                    if not is_orientable_K(d) or not is_orientable_Kn(d):
                        failures += 1
    return (
        "unique-orientation",
        failures == 0,
        f"{count} diagrams, brute-force count == 1 == recursive output; converse holds",
    )


def _nabla_preimages_cached(dots):
    from .orientation import nabla_preimages

    return nabla_preimages(dots)


def check_triangular_basis() -> Check:
    from .orientation import X_set, Y_set, triangular_factor

    failures = 0
    pairs = 0
    for n, window in ((1, range(-3, 4)), (2, range(-3, 5))):
        weights = weights_in_window(n, min(window), max(window))
        by_orientation: dict[tuple, set[CircleDiagram]] = {}
        for lam in weights:
            cap = cap_from_weight(lam)
            for mu in compatible_weights(lam):
                d = CircleDiagram(cup_from_weight(mu), cap)
                nu = orientation_of(d)
                by_orientation.setdefault(nu, set()).add(d)
        for nu, diagrams in by_orientation.items():
            ys = Y_set(nu)
            xs = X_set(nu)
            produced: dict[CircleDiagram, int] = {}
            for y in ys:
                for x in xs:
                    p = multiply(y.diagram, x.diagram, "Kn")
                    if p is None:
                        failures += 1
                        continue
                    produced[p] = produced.get(p, 0) + 1
                    pairs += 1
            # injectivity and factorization
            if any(v != 1 for v in produced.values()):
                failures += 1
            if not diagrams <= set(produced):
                failures += 1
            for d in diagrams:
                y, x = triangular_factor(d)
                if multiply(y, x, "Kn") != d:
                    failures += 1
    return (
        "triangular-basis",
        failures == 0,
        f"{pairs} (y,x) pairs, bijection and factorization verified",
    )


def check_p1_structure() -> Check:
    failures = []
    for k in range(-9, 11):
        P = build_projective((k,))
        rad = radical_filtration(P)
        soc = socle_filtration(P)
        if P.dim != 2:
            failures.append(f"dim P({k}) = {P.dim}")
        if rad != [Counter({(k,): 1}), Counter({(k + 2,): 1})]:
            failures.append(f"radical of P({k})")
        if soc != [Counter({(k + 2,): 1}), Counter({(k,): 1})]:
            failures.append(f"socle of P({k})")
        for mu in range(k - 5, k + 6):
            expected = 1 if mu in (k, k + 2) else 0
            if hom_dim((mu,), (k,)) != expected:
                failures.append(f"cartan({mu},{k})")
        # length-2 quiver composite vanishes
        x = CircleDiagram(cup_from_weight((k + 4,)), cap_from_weight((k + 2,)))
        y = CircleDiagram(cup_from_weight((k + 2,)), cap_from_weight((k,)))
        if multiply(x, y, "Kn") is not None:
            failures.append(f"composite through {k} nonzero")
    return ("p1-structure", not failures, "; ".join(failures) or "20 weights checked")


def check_p2_structure() -> Check:
    failures = []
    P = build_projective((2, -1))
    if P.dim != 5:
        failures.append(f"dim = {P.dim}")
    factors = P.composition_factors()
    expected = Counter({(2, -1): 1, (4, -1): 1, (3, 2): 1, (2, 1): 1, (4, 1): 1})
    if factors != expected:
        failures.append(f"factors = {factors}")
    rep = koszulity_report((2, -1))
    exp_rad = [
        Counter({(2, -1): 1}),
        Counter({(4, -1): 1, (3, 2): 1}),
        Counter({(2, 1): 1}),
        Counter({(4, 1): 1}),
    ]
    exp_soc = [
        Counter({(2, -1): 1}),
        Counter({(3, 2): 1}),
        Counter({(4, -1): 1, (2, 1): 1}),
        Counter({(4, 1): 1}),
    ]
    if rep["radical_layers"] != exp_rad:
        failures.append(f"radical {rep['radical_layers']}")
    if rep["socle_layers"] != exp_soc:
        failures.append(f"socle {rep['socle_layers']}")
    if rep["agree"]:
        failures.append("filtrations unexpectedly agree")
    return ("p2-structure", not failures, "; ".join(failures) or "P(2,-1) as displayed")


def check_typical_count(seed: int = 7) -> Check:
    rng = Random(seed)
    failures = []
    for n in (1, 2, 3):
        for _ in range(10):
            start = rng.randrange(-8, 9)
            gaps = [rng.randrange(4, 7) for _ in range(n - 1)]
            w = [start]
            for g in gaps:
                w.append(w[-1] - g)
            w = tuple(w)
            compat = set(compatible_weights(w))
            expected = {
                tuple(w[i] + 2 * e[i] for i in range(n))
                for e in itertools.product((0, 1), repeat=n)
            }
            if compat != expected or len(compat) != 2**n:
                failures.append(f"{w}: {sorted(compat)}")
    return ("typical-count", not failures, "; ".join(failures) or "2^n shifts at 30 weights")


def check_translation_chain() -> Check:
    failures = []
    total = 0
    for n in (1, 2, 3):
        target = cap_from_weight(tuple(range(n - 2, -n - 1, -2)))
        seqs = {
            residue_seq(t, "target") for t in enumerate_up_tableaux(delta_partition(n))
        }
        for seq in sorted(seqs):
            total += 1
            got = theta_chain_cap(seq)
            if got != target:
                failures.append(f"n={n} {seq}: {got}")
    return (
        "translation-chain",
        not failures,
        "; ".join(failures) or f"{total} staircase residue sequences (all of them)",
    )


def check_adjunction() -> Check:
    failures = 0
    checked = 0
    for n, window in ((1, range(-3, 4)), (2, range(-3, 5))):
        weights = weights_in_window(n, min(window), max(window))
        for i in range(-5, 6):
            up = special_matching(i + 1)
            down = special_matching(i)
            for lam in weights:
                left_img = theta_on_projective(up, lam)
                for mu in weights:
                    right_img = theta_on_projective(down, mu)
                    lhs = hom_dim(left_img, mu) if left_img is not None else 0
                    rhs = hom_dim(lam, right_img) if right_img is not None else 0
                    checked += 1
                    if lhs != rhs:
                        failures += 1
    return ("adjunction", failures == 0, f"{checked} (lambda, mu, i) triples")


def check_tableau_bridge(max_len: int = 6) -> Check:
    failures = 0
    count = 0
    for L in range(0, max_len + 1):
        for seq in itertools.product(range(-3, 4), repeat=L):
            count += 1
            a = seq_realizable_empty_shape(seq)
            b = stacked_orientable(stack_from_sequence(seq))
            if a != b:
                failures += 1
    return ("tableau-bridge", failures == 0, f"{count} sequences, {failures} mismatches")


def check_ext_criterion(seed: int = 11, n3_target: int = 1000) -> Check:
    failures = 0
    checked = 0

    def verify(lam, mu, radhead):
        nonlocal failures, checked
        checked += 1
        d = CircleDiagram(cup_from_weight(mu), cap_from_weight(lam))
        prim = is_primitive(d) != "no"
        oracle = nonsplittable_oracle(d)
        head_mult = radhead.get(mu, 0)
        if not (prim == oracle == (head_mult == 1)):
            failures += 1

    for n, window in ((1, range(-4, 5)), (2, range(-3, 5))):
        for lam in weights_in_window(n, min(window), max(window)):
            rad = radical_filtration(build_projective(lam))
            radhead = rad[1] if len(rad) > 1 else Counter()
            for mu in compatible_weights(lam):
                if mu != lam:
                    verify(lam, mu, radhead)
    rng = Random(seed)
    n3 = 0
    while n3 < n3_target:
        lam = tuple(sorted(rng.sample(range(-6, 7), 3), reverse=True))
        rad = radical_filtration(build_projective(lam))
        radhead = rad[1] if len(rad) > 1 else Counter()
        for mu in compatible_weights(lam):
            if mu != lam:
                verify(lam, mu, radhead)
                n3 += 1
    return (
        "ext-criterion",
        failures == 0,
        f"{checked} diagrams (exhaustive n<=2, {n3} sampled n=3), {failures} mismatches",
    )


def check_duality() -> Check:
    failures = []
    for k in range(-6, 7):
        if simple_dual((k,)) != (-k,):
            failures.append(f"({k})")
    windows = {1: range(-5, 6), 2: range(-4, 5), 3: range(-3, 4)}
    for n, window in windows.items():
        for w in weights_in_window(n, min(window), max(window)):
            a = simple_dual_rotation(w)
            b = simple_dual_iterative(w)
            if a != b:
                failures.append(f"{w}: {a} != {b}")
                continue
            if simple_dual_rotation(a) != w:
                failures.append(f"{w}: not involutive")
    return ("duality", not failures, "; ".join(failures[:5]) or "rotation == iterative, involutive")


def check_irreducible_summands() -> Check:
    failures = []
    for n in range(1, 6):
        ws = irreducible_summand_weights(n)
        if len(ws) != n:
            failures.append(f"n={n}: {len(ws)} weights")
        sigs = [block_signature(w) for w in ws]
        if len(set(sigs)) != n:
            failures.append(f"n={n}: signatures {sigs}")
    for n in (1, 2, 3):
        if irreducible_summand_weights_by_matchings(n) != irreducible_summand_weights(n):
            failures.append(f"n={n}: matching enumeration disagrees")
    return ("irreducible-summands", not failures, "; ".join(failures) or "n <= 5 closed form, n <= 3 re-derived")


def check_counting_oracle(max_total: int = 8) -> Check:
    failures = []
    by_len: dict[int, list[UpDownTableau]] = {}
    shapes: dict[int, set] = {}
    max_len = max_total - 1
    for L in range(0, max_len + 1):
        tabs = []
        seen_shapes = set()
        # enumerate all up-down-tableaux of length L
        def rec(p, moves):
            from .tableaux import addable_boxes, apply_move, removable_boxes

            if len(moves) == L:
                tabs.append(UpDownTableau(tuple(moves)))
                seen_shapes.add(p)
                return
            for r, c in addable_boxes(p):
                rec(apply_move(p, (1, r, c)), moves + [(1, r, c)])
            for r, c in removable_boxes(p):
                rec(apply_move(p, (-1, r, c)), moves + [(-1, r, c)])

        rec((), [])
        by_len[L] = tabs
        shapes[L] = seen_shapes

    def pair_total(n: int, m: int) -> int:
        count_n = Counter(t.shape for t in by_len[n])
        count_m = Counter(t.shape for t in by_len[m])
        return sum(count_n[s] * count_m[s] for s in count_n)

    for n in range(0, max_total + 1):
        for m in range(0, max_total + 1 - n):
            if n > max_len or m > max_len:
                continue
            if pair_total(n, m) != pair_total(m, n):
                failures.append(f"asymmetric ({n},{m})")
    # individual hom dimensions are 0/1 and their total matches the counts
    for n in range(0, max_len + 1):
        for m in range(0, max_total + 1 - n):
            if m > max_len:
                continue
            left = Counter()
            for t in by_len[n]:
                left[(t.shape, residue_seq(t, "source"))] += 1
            right = Counter()
            for s in by_len[m]:
                right[(s.shape, residue_seq(s, "target"))] += 1
            dims: Counter = Counter()
            for (shape_l, i), cl in left.items():
                for (shape_r, j), cr in right.items():
                    if shape_l == shape_r:
                        dims[(i, j)] += cl * cr
            if dims and max(dims.values()) > 1:
                failures.append(f"hom dim > 1 at lengths ({n},{m})")
            if sum(dims.values()) != pair_total(n, m):
                failures.append(f"total mismatch at ({n},{m})")
    return ("counting-oracle", not failures, "; ".join(failures[:4]) or f"lengths up to {max_len}")


ALL_CHECKS: list[Callable[[], Check]] = [
    check_associativity,
    check_surgery_commutation,
    check_unique_orientation,
    check_triangular_basis,
    check_p1_structure,
    check_p2_structure,
    check_typical_count,
    check_translation_chain,
    check_adjunction,
    check_tableau_bridge,
    check_ext_criterion,
    check_duality,
    check_irreducible_summands,
    check_counting_oracle,
]


def run(quick: bool = False, seed: int = 2024) -> list[Check]:
    results = []
    for fn in ALL_CHECKS:
        kwargs = {}
        if fn is check_surgery_commutation:
            kwargs = {"seed": seed, "trials": 500 if quick else 10_000}
        elif fn is check_tableau_bridge and quick:
            kwargs = {"max_len": 4}
        elif fn is check_ext_criterion:
            kwargs = {"seed": seed, "n3_target": 100 if quick else 1000}
        elif fn is check_counting_oracle and quick:
            kwargs = {"max_total": 6}
        t0 = time.time()
        name, ok, detail = fn(**kwargs)
        dt = time.time() - t0
        results.append((name, ok, f"{detail} [{dt:.1f}s]"))
    return results
