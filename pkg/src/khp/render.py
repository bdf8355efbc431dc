"""
JSON, ASCII and TikZ views of diagrams.

ASCII pictures carry a header line "% codes LO..HI" anchoring columns to
absolute positions: the position with code c occupies column 2*(c - LO),
and the dot at integer m sits between two positions at column
2*(m - 1 - LO) + 1.  Caps are drawn above the base line with '.' corners,
cups below with "'" corners, rays as '|'; nesting is drawn inside out, so
the pictures parse back unambiguously.

TikZ output follows the usual drawing conventions: cups below the line,
caps above, dots as bullets, rays leaving the picture vertically.
"""

from __future__ import annotations

import json
from typing import Sequence

from .diagrams import Arc, CapDiagram, CircleDiagram, CupDiagram
from .matchings import CrossinglessMatching, StackedDiagram


# ---------------------------------------------------------------------------
# JSON.


def weight_to_json(w: Sequence[int]) -> list[int]:
    return list(w)


def cup_to_json(c: CupDiagram) -> dict:
    return {"cups": [list(a) for a in c.cups]}


def cap_to_json(c: CapDiagram) -> dict:
    return {"caps": [list(a) for a in c.caps]}


def circle_to_json(d: CircleDiagram, dots: Sequence[int] | None = None) -> dict:
    out = {**cup_to_json(d.bottom), **cap_to_json(d.top)}
    if dots is not None:
        out["dots"] = sorted(dots)
    return out


def matching_to_json(t: CrossinglessMatching) -> dict:
    lo, hi = t.window()
    return {
        "bottom_arcs": [list(a) for a in t.bottom_arcs],
        "top_arcs": [list(a) for a in t.top_arcs],
        "window": [lo, hi],
    }


def stack_to_json(s: StackedDiagram) -> dict:
    return {
        "bottom": cup_to_json(s.bottom),
        "layers": [matching_to_json(t) for t in s.layers],
        "top": cap_to_json(s.top),
    }


def diagram_from_json(data: dict):
    """Sniff the kind of a parsed JSON object and build it."""
    if "layers" in data:
        return StackedDiagram(
            diagram_from_json(data["bottom"]),
            tuple(diagram_from_json(t) for t in data["layers"]),
            diagram_from_json(data["top"]),
        )
    if "bottom_arcs" in data:
        return CrossinglessMatching(
            [tuple(a) for a in data["bottom_arcs"]],
            [tuple(a) for a in data["top_arcs"]],
        )
    has_cups = "cups" in data
    has_caps = "caps" in data
    if has_cups and has_caps:
        return CircleDiagram(
            CupDiagram([tuple(a) for a in data["cups"]]),
            CapDiagram([tuple(a) for a in data["caps"]]),
        )
    if has_cups:
        return CupDiagram([tuple(a) for a in data["cups"]])
    if has_caps:
        return CapDiagram([tuple(a) for a in data["caps"]])
    raise ValueError(f"unrecognised diagram JSON: {data!r}")


def load_diagram(path: str):
    with open(path) as fh:
        return diagram_from_json(json.load(fh))


# ---------------------------------------------------------------------------
# ASCII.


def _depth(arc: Arc, arcs: Sequence[Arc]) -> int:
    return sum(1 for o in arcs if o[0] < arc[0] and arc[1] < o[1])


def _arc_rows(arcs: Sequence[Arc], rays: Sequence[int], lo: int, width: int,
              corner: str, above: bool) -> list[str]:
    if not arcs and not rays:
        return []
    depth_of = {a: _depth(a, arcs) for a in arcs}
    nrows = (max(depth_of.values()) + 1) if arcs else 1
    grid = [[" "] * width for _ in range(nrows)]
    # outermost arcs (depth 0) sit farthest from the base line
    for a, d in depth_of.items():
        row = d
        c1, c2 = 2 * (a[0] - lo), 2 * (a[1] - lo)
        grid[row][c1] = corner
        grid[row][c2] = corner
        for c in range(c1 + 1, c2):
            grid[row][c] = "-"
        for r in range(row + 1, nrows):
            grid[r][c1] = "|"
            grid[r][c2] = "|"
    for p in rays:
        c = 2 * (p - lo)
        for r in range(nrows):
            grid[r][c] = "|"
    rows = ["".join(r).rstrip() for r in grid]
    return rows if above else rows[::-1]


def render_circle_ascii(d: CircleDiagram, dots: Sequence[int] | None = None) -> str:
    pts = d.bottom.endpoints | d.top.endpoints | {
        m - 1 for m in (dots or ())} | {m for m in (dots or ())}
    lo = min(pts, default=0) - 1
    hi = max(pts, default=0) + 1
    width = 2 * (hi - lo) + 1
    cap_rays = sorted(p for p in range(lo, hi + 1) if d.top.arc_at(p) is None)
    cup_rays = sorted(p for p in range(lo, hi + 1) if d.bottom.arc_at(p) is None)
    top = _arc_rows(d.top.caps, cap_rays, lo, width, ".", above=True)
    bottom = _arc_rows(d.bottom.cups, cup_rays, lo, width, "'", above=False)
    line = []
    for c in range(width):
        line.append("+" if c % 2 == 0 else "-")
    for m in sorted(dots or ()):
        line[2 * (m - 1 - lo) + 1] = "*"
    header = f"% codes {lo}..{hi}"
    return "\n".join([header, *top, "".join(line), *bottom])


def parse_circle_ascii(text: str) -> tuple[CircleDiagram, tuple[int, ...]]:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("% codes "):
        raise ValueError("missing '% codes LO..HI' header")
    lo = int(lines[0].removeprefix("% codes ").split("..")[0])
    body = lines[1:]
    line_idx = next(
        i for i, row in enumerate(body) if row and set(row) <= set("+-*")
    )

    def arcs_from(rows: Sequence[str], corner: str) -> list[Arc]:
        arcs = []
        for row in rows:
            open_col = None
            for col, ch in enumerate(row):
                if ch == corner:
                    if open_col is None:
                        open_col = col
                    else:
                        arcs.append((lo + open_col // 2, lo + col // 2))
                        open_col = None
        return arcs

    caps = arcs_from(body[:line_idx], ".")
    cups = arcs_from(body[line_idx + 1 :], "'")
    dots = tuple(
        lo + (col - 1) // 2 + 1
        for col, ch in enumerate(body[line_idx])
        if ch == "*"
    )
    return CircleDiagram(CupDiagram(cups), CapDiagram(caps)), dots


def render_matching_ascii(t: CrossinglessMatching) -> str:
    lo, hi = t.window()
    if hi < lo:
        lo, hi = -1, 1
    width = 2 * (hi - lo) + 1
    thr = t.throughs(lo, hi)
    top_rays = sorted(q for q in range(lo, hi + 1) if t.top_arc_at(q) is None)
    bot_rays = sorted(p for p in range(lo, hi + 1) if t.bottom_arc_at(p) is None)
    top_line = "".join("+" if c % 2 == 0 else "-" for c in range(width))
    bot_line = top_line
    cups = _arc_rows(t.top_arcs, [], lo, width, "'", above=False)
    caps = _arc_rows(t.bottom_arcs, [], lo, width, ".", above=True)
    middle = []
    for p, q in sorted(thr.items()):
        if p == q:
            continue
        c1, c2 = sorted((2 * (p - lo), 2 * (q - lo)))
        row = [" "] * width
        row[c1] = "+"
        row[c2] = "+"
        for c in range(c1 + 1, c2):
            row[c] = "-"
        middle.append("".join(row).rstrip() + f"   ({p}->{q})")
    verticals = [" "] * width
    for p, q in sorted(thr.items()):
        if p == q:
            verticals[2 * (p - lo)] = "|"
    header = f"% codes {lo}..{hi}"
    rows = [header, top_line, *cups, *middle,
            "".join(verticals).rstrip(), *caps, bot_line]
    return "\n".join(r for r in rows if r.strip() or r.startswith("%"))


def render_state_ascii(snapshot: dict) -> str:
    """Render a multiplication snapshot (two lines plus middle section)."""
    pts = set()
    for key in ("bottom_cups", "top_caps", "middle_caps", "middle_cups"):
        pts |= {p for arc in snapshot[key] for p in arc}
    pts |= {p for conn in snapshot["connectors"] for p in conn}
    lo, hi = min(pts, default=0) - 1, max(pts, default=0) + 1
    width = 2 * (hi - lo) + 1
    line = "".join("+" if c % 2 == 0 else "-" for c in range(width))
    top_caps = _arc_rows([tuple(a) for a in snapshot["top_caps"]], [], lo, width, ".", True)
    mid_cups = _arc_rows([tuple(a) for a in snapshot["middle_cups"]], [], lo, width, "'", False)
    mid_caps = _arc_rows([tuple(a) for a in snapshot["middle_caps"]], [], lo, width, ".", True)
    bot_cups = _arc_rows([tuple(a) for a in snapshot["bottom_cups"]], [], lo, width, "'", False)
    conns = []
    for p, q in sorted(snapshot["connectors"]):
        c1, c2 = sorted((2 * (p - lo), 2 * (q - lo)))
        row = [" "] * width
        row[c1] = "+"
        row[c2] = "+"
        for c in range(c1 + 1, c2):
            row[c] = "-"
        conns.append("".join(row).rstrip() + f"   ({p}^{q})")
    return "\n".join(
        [f"% codes {lo}..{hi}", *top_caps, line, *mid_cups, *conns, *mid_caps,
         line, *bot_cups]
    )


# ---------------------------------------------------------------------------
# TikZ.


def _tikz_arc(l: int, r: int, up: bool) -> str:
    x1, x2 = l + 0.5, r + 0.5
    h = 0.4 + 0.25 * (r - l)
    sign = "+" if up else "-"
    return (
        f"\\draw ({x1},0) .. controls ({x1},{sign}{h:.2f}) and "
        f"({x2},{sign}{h:.2f}) .. ({x2},0);"
    )


def render_circle_tikz(d: CircleDiagram, dots: Sequence[int] | None = None) -> str:
    pts = d.bottom.endpoints | d.top.endpoints
    lo = min(pts, default=0) - 1
    hi = max(pts, default=0) + 1
    out = ["\\begin{tikzpicture}[scale=0.5]"]
    for p in range(lo, hi + 1):
        if d.top.arc_at(p) is None:
            out.append(f"\\draw ({p + 0.5},0) -- ({p + 0.5},1.2);")
        if d.bottom.arc_at(p) is None:
            out.append(f"\\draw ({p + 0.5},0) -- ({p + 0.5},-1.2);")
    for l, r in d.top.caps:
        out.append(_tikz_arc(l, r, up=True))
    for l, r in d.bottom.cups:
        out.append(_tikz_arc(l, r, up=False))
    for m in sorted(dots or ()):
        out.append(f"\\node at ({m},0) {{$\\bullet$}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out)


def render_quiver_dot(nodes, arrows) -> str:
    def name(w):
        return '"' + ",".join(map(str, w)) + '"'

    lines = ["digraph ext {"]
    for w in nodes:
        lines.append(f"  {name(w)};")
    for a, b in arrows:
        lines.append(f"  {name(a)} -> {name(b)};")
    lines.append("}")
    return "\n".join(lines)


def render_quiver_tikz(nodes, arrows) -> str:
    pos = {w: i for i, w in enumerate(nodes)}
    lines = ["\\begin{tikzpicture}"]
    for w, i in pos.items():
        label = ",".join(map(str, w))
        lines.append(f"\\node (n{i}) at ({i},0) {{{label}}};")
    for a, b in arrows:
        lines.append(f"\\draw[->] (n{pos[a]}) -- (n{pos[b]});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines)
