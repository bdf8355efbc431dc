"""
Command-line interface.

Subcommands: mult, orient, weight2cup, theta, hom, cartan, ext, dual,
quiver, proj-structure, koszulity, tableaux, residues, selftest.  Output is
deterministic for fixed arguments and seed; randomized checks take an
explicit --seed.  Exit codes: 0 success, 1 usage error, 2 invariant
violation (with a diagnostic rendering where a diagram is at fault).

The default enumeration window may be set through the environment variable
KHP_WINDOW (e.g. "-4..6"); all other parameters are flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter

from . import algebra, applications, diagrams, matchings, modules, render, tableaux
from .diagrams import cap_from_weight, cup_from_weight, e_diagram


class UsageError(Exception):
    pass


def _parse_weight(text: str) -> tuple[int, ...]:
    if text.strip() in ("", "[]"):
        return ()
    return tuple(int(x) for x in text.split(","))


def _parse_window(text: str) -> tuple[int, int]:
    lo, hi = text.split("..")
    return int(lo), int(hi)


def _default_window() -> tuple[int, int]:
    return _parse_window(os.environ.get("KHP_WINDOW", "-4..6"))


def _emit_diagram(d, fmt: str, dots=None) -> None:
    if fmt == "json":
        print(json.dumps(render.circle_to_json(d, dots), sort_keys=True))
    elif fmt == "tikz":
        print(render.render_circle_tikz(d, dots))
    else:
        print(render.render_circle_ascii(d, dots))


def cmd_weight2cup(args) -> int:
    w = _parse_weight(args.weight)
    cup = cup_from_weight(w)
    if args.format == "json":
        print(json.dumps(render.cup_to_json(cup), sort_keys=True))
    elif args.format == "tikz":
        d = diagrams.CircleDiagram(cup, diagrams.CapDiagram(()))
        print(render.render_circle_tikz(d))
    else:
        d = diagrams.CircleDiagram(cup, diagrams.CapDiagram(()))
        print(render.render_circle_ascii(d))
    return 0


def cmd_mult(args) -> int:
    a = render.load_diagram(args.a)
    b = render.load_diagram(args.b)
    mode = "Kn" if args.mode.lower() == "kn" else "K"
    if args.n is not None and mode == "Kn":
        for d in (a, b):
            if len(d.bottom.cups) != args.n:
                raise UsageError(f"diagram has {len(d.bottom.cups)} cups, expected {args.n}")
    trace: list | None = [] if args.trace else None
    prod = algebra.multiply(a, b, mode, trace=trace)
    if trace is not None:
        for i, snap in enumerate(trace):
            print(f"-- state {i} --")
            print(render.render_state_ascii(snap))
    if prod is None:
        print("0")
    else:
        _emit_diagram(prod, args.format)
    return 0


def cmd_orient(args) -> int:
    d = render.load_diagram(args.diagram)
    w = __import__("khp.orientation", fromlist=["orientation_of"]).orientation_of(d)
    if w is None:
        print("none")
    else:
        print(",".join(map(str, w)))
    return 0


def cmd_theta(args) -> int:
    seq = _parse_weight(args.seq)
    if args.on is not None:
        gamma = _parse_weight(args.on)
        if args.n is not None and len(gamma) != args.n:
            raise UsageError("weight length does not match -n")
        current = gamma
        for i in seq:
            nxt = modules.theta_on_projective(matchings.special_matching(i), current)
            if nxt is None:
                print("0")
                return 0
            current = nxt
        print(",".join(map(str, current)))
        return 0
    cap = modules.theta_chain_cap(seq)
    if cap is None:
        print("0")
    else:
        w = diagrams.weight_from_cap(cap)
        print(",".join(map(str, w)) if w else "()")
    return 0


def cmd_hom(args) -> int:
    lam = _parse_weight(args.left)
    mu = _parse_weight(args.right)
    mode = "Kn" if args.mode.lower() == "kn" else "K"
    print(algebra.hom_dim(lam, mu, mode))
    return 0


def cmd_cartan(args) -> int:
    lo, hi = _parse_window(args.window) if args.window else _default_window()
    weights = applications.weights_in_window(args.n, lo, hi)
    print("# rows/cols: " + " ".join(",".join(map(str, w)) for w in weights))
    for lam in weights:
        print(" ".join(str(algebra.hom_dim(mu, lam)) for mu in weights))
    return 0


def cmd_ext(args) -> int:
    lo, hi = _parse_window(args.window) if args.window else _default_window()
    weights = applications.weights_in_window(args.n, lo, hi)
    wset = set(weights)
    for lam in weights:
        for mu in algebra.compatible_weights(lam):
            if mu in wset and mu != lam and applications.ext1_dim(lam, mu):
                print(f"{','.join(map(str, lam))} -> {','.join(map(str, mu))}")
    return 0


def cmd_dual(args) -> int:
    w = _parse_weight(args.weight)
    if args.n is not None and len(w) != args.n:
        raise UsageError("weight length does not match -n")
    print(",".join(map(str, applications.simple_dual(w))))
    return 0


def cmd_quiver(args) -> int:
    lo, hi = _parse_window(args.window) if args.window else _default_window()
    q = applications.build_quiver(args.n, lo, hi, block=args.block)
    if args.format == "dot":
        print(render.render_quiver_dot(q.nodes, q.arrows))
    elif args.format == "tikz":
        print(render.render_quiver_tikz(q.nodes, q.arrows))
    else:
        for a, b in q.arrows:
            print(f"{','.join(map(str, a))} -> {','.join(map(str, b))}")
        print(f"# zero length-2 composites: {len(q.zero_relations())}")
        for group in q.equal_composites():
            paths = " = ".join("->".join(str(w) for w in p) for p in group)
            print(f"# equal composites: {paths}")
    return 0


def _layers_json(layers: list[Counter]) -> list[list[str]]:
    return [
        sorted(",".join(map(str, w)) for w, c in layer.items() for _ in range(c))
        for layer in layers
    ]


def cmd_proj_structure(args) -> int:
    w = _parse_weight(args.weight)
    if args.n is not None and len(w) != args.n:
        raise UsageError("weight length does not match -n")
    P = modules.build_projective(w)
    out = {}
    if args.filtration in ("radical", "both"):
        out["radical"] = _layers_json(modules.radical_filtration(P))
    if args.filtration in ("socle", "both"):
        out["socle"] = _layers_json(list(reversed(modules.socle_filtration(P))))
    out["dim"] = P.dim
    print(json.dumps(out, sort_keys=True))
    return 0


def cmd_koszulity(args) -> int:
    w = _parse_weight(args.weight)
    rep = applications.koszulity_report(w)
    print(
        json.dumps(
            {
                "weight": list(rep["weight"]),
                "radical_layers": _layers_json(rep["radical_layers"]),
                "socle_layers": _layers_json(rep["socle_layers"]),
                "agree": rep["agree"],
            },
            sort_keys=True,
        )
    )
    return 0


def cmd_tableaux(args) -> int:
    if args.action != "enumerate":
        raise UsageError("supported action: enumerate")
    shape = _parse_weight(args.shape) if args.shape else ()
    tabs = tableaux.enumerate_udt(args.n, shape)
    for t in tabs:
        moves = " ".join(
            ("+" if s > 0 else "-") + f"({r},{c})" for s, r, c in t.moves
        )
        tgt = ",".join(map(str, tableaux.residue_seq(t, "target")))
        src = ",".join(map(str, tableaux.residue_seq(t, "source")))
        print(f"{moves} | source {src} | target {tgt}")
    print(f"# {len(tabs)} tableaux")
    return 0


def cmd_residues(args) -> int:
    seq = _parse_weight(args.seq)
    if args.check_empty_shape:
        print("yes" if tableaux.seq_realizable_empty_shape(seq) else "no")
        return 0
    if args.reduce:
        red = tableaux.reduce_residue_seq(seq)
        print(",".join(map(str, red)))
        return 0
    print("realizable" if tableaux.seq_realizable(seq) else "not-realizable")
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run

    results = run(quick=args.quick, seed=args.seed)
    ok_all = True
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        ok_all = ok_all and ok
    return 0 if ok_all else 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="khp", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    w2c = sub.add_parser("weight2cup", help="render the cup diagram of a weight")
    w2c.add_argument("--weight", required=True)
    w2c.add_argument("--format", choices=("ascii", "json", "tikz"), default="ascii")
    w2c.set_defaults(fn=cmd_weight2cup)

    mult = sub.add_parser("mult", help="multiply two circle diagrams from JSON files")
    mult.add_argument("a")
    mult.add_argument("b")
    mult.add_argument("--mode", choices=("kn", "k"), default="kn")
    mult.add_argument("-n", type=int, default=None)
    mult.add_argument("--trace", action="store_true")
    mult.add_argument("--format", choices=("ascii", "json", "tikz"), default="ascii")
    mult.set_defaults(fn=cmd_mult)

    orient = sub.add_parser("orient", help="orientation weight of a circle diagram")
    orient.add_argument("diagram")
    orient.set_defaults(fn=cmd_orient)

    theta = sub.add_parser("theta", help="apply a translation-functor chain")
    theta.add_argument("-n", type=int, default=None)
    theta.add_argument("--seq", required=True, help="comma separated labels i1,i2,...")
    theta.add_argument("--on", default=None, help="weight of the starting projective")
    theta.set_defaults(fn=cmd_theta)

    hom = sub.add_parser("hom", help="hom space dimension between weights")
    hom.add_argument("--left", required=True)
    hom.add_argument("--right", required=True)
    hom.add_argument("--mode", choices=("kn", "k"), default="kn")
    hom.set_defaults(fn=cmd_hom)

    cartan = sub.add_parser("cartan", help="Cartan matrix over a weight window")
    cartan.add_argument("-n", type=int, required=True)
    cartan.add_argument("--window")
    cartan.set_defaults(fn=cmd_cartan)

    ext = sub.add_parser("ext", help="Ext^1 arrows over a weight window")
    ext.add_argument("-n", type=int, required=True)
    ext.add_argument("--window")
    ext.set_defaults(fn=cmd_ext)

    dual = sub.add_parser("dual", help="dual of a simple module's weight")
    dual.add_argument("-n", type=int, default=None)
    dual.add_argument("--weight", required=True)
    dual.set_defaults(fn=cmd_dual)

    quiver = sub.add_parser("quiver", help="Ext quiver with relation report")
    quiver.add_argument("-n", type=int, required=True)
    quiver.add_argument("--block", type=int, default=None)
    quiver.add_argument("--window")
    quiver.add_argument("--format", choices=("text", "dot", "tikz"), default="text")
    quiver.set_defaults(fn=cmd_quiver)

    proj = sub.add_parser("proj-structure", help="filtration layers of a projective")
    proj.add_argument("-n", type=int, default=None)
    proj.add_argument("--weight", required=True)
    proj.add_argument("--filtration", choices=("radical", "socle", "both"), default="both")
    proj.set_defaults(fn=cmd_proj_structure)

    kos = sub.add_parser("koszulity", help="radical vs socle layers of P(weight)")
    kos.add_argument("-n", type=int, default=None)
    kos.add_argument("--weight", required=True)
    kos.set_defaults(fn=cmd_koszulity)

    tab = sub.add_parser("tableaux", help="up-down-tableaux enumeration")
    tab.add_argument("action", choices=("enumerate",))
    tab.add_argument("-n", type=int, required=True, help="length")
    tab.add_argument("--shape", default="")
    tab.set_defaults(fn=cmd_tableaux)

    res = sub.add_parser("residues", help="residue sequence utilities")
    res.add_argument("--seq", required=True)
    res.add_argument("--check-empty-shape", action="store_true")
    res.add_argument("--reduce", action="store_true")
    res.set_defaults(fn=cmd_residues)

    st = sub.add_parser("selftest", help="run the acceptance suite")
    st.add_argument("--quick", action="store_true")
    st.add_argument("--seed", type=int, default=2024)
    st.set_defaults(fn=cmd_selftest)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (UsageError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, AssertionError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
