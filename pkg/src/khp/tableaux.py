"""
Partitions, up-down-tableaux and residue combinatorics.

An up-down-tableau is a walk on Young diagrams starting at the empty
partition, adding or removing one box per step.  It is stored as its move
list: (+1, r, c) adds the box in row r, column c (1-based), (-1, r, c)
removes it.  The source residue of a move is c - r for additions and
c - r + 1 for removals; the target residue is c - r for additions and
c - r - 1 for removals.

The staircase delta_k = (k, k-1, ..., 1) governs vanishing (delta_{n+1}
contained in the shape) and projectivity (delta_n contained) of the
associated tensor-space summands.
"""

from __future__ import annotations

import dataclasses
from functools import lru_cache
from typing import Iterable, Iterator, Literal, Sequence

Partition = tuple[int, ...]
Move = tuple[int, int, int]  # (+1 | -1, row, col)


def check_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts if x != 0)
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {parts!r}")
    return p


def addable_boxes(p: Partition) -> list[tuple[int, int]]:
    boxes = [(1, p[0] + 1)] if p else [(1, 1)]
    for i in range(1, len(p)):
        if p[i] < p[i - 1]:
            boxes.append((i + 1, p[i] + 1))
    if p:
        boxes.append((len(p) + 1, 1))
    return boxes


def removable_boxes(p: Partition) -> list[tuple[int, int]]:
    boxes = []
    for i in range(len(p)):
        if i + 1 == len(p) or p[i] > p[i + 1]:
            boxes.append((i + 1, p[i]))
    return boxes


def apply_move(p: Partition, move: Move) -> Partition:
    sign, r, c = move
    rows = list(p)
    if sign > 0:
        if (r, c) not in addable_boxes(p):
            raise ValueError(f"cannot add box {(r, c)} to {p}")
        if r == len(rows) + 1:
            rows.append(1)
        else:
            rows[r - 1] += 1
    else:
        if (r, c) not in removable_boxes(p):
            raise ValueError(f"cannot remove box {(r, c)} from {p}")
        rows[r - 1] -= 1
        if rows[-1] == 0:
            rows.pop()
    return tuple(rows)


def contains_partition(inner: Partition, outer: Partition) -> bool:
    return len(inner) <= len(outer) and all(
        outer[i] >= inner[i] for i in range(len(inner))
    )


def delta_partition(k: int) -> Partition:
    return tuple(range(k, 0, -1))


def contains_delta(p: Sequence[int], k: int) -> bool:
    return contains_partition(delta_partition(k), check_partition(p))


def is_zero_for(p: Sequence[int], n: int) -> bool:
    """The summand of shape p dies for rank n iff delta_{n+1} fits inside p."""
    return contains_delta(p, n + 1)


def is_projective_for(p: Sequence[int], n: int) -> bool:
    return contains_delta(p, n)


@dataclasses.dataclass(frozen=True, order=True)
class UpDownTableau:
    moves: tuple[Move, ...]

    def __post_init__(self):
        p: Partition = ()
        for move in self.moves:
            p = apply_move(p, move)

    def shapes(self) -> list[Partition]:
        out = [()]
        p: Partition = ()
        for move in self.moves:
            p = apply_move(p, move)
            out.append(p)
        return out

    @property
    def shape(self) -> Partition:
        return self.shapes()[-1]

    def __len__(self) -> int:
        return len(self.moves)


ResidueFlavor = Literal["source", "target"]


def move_residue(move: Move, flavor: ResidueFlavor) -> int:
    sign, r, c = move
    if sign > 0:
        return c - r
    return c - r + 1 if flavor == "source" else c - r - 1


def residue_seq(t: UpDownTableau, flavor: ResidueFlavor) -> tuple[int, ...]:
    return tuple(move_residue(m, flavor) for m in t.moves)


def up_tableau_from_shape(shape: Sequence[int]) -> UpDownTableau:
    """The row-by-row filling: all boxes of row 1, then row 2, and so on."""
    shape = check_partition(shape)
    moves = [(1, r + 1, c + 1) for r, width in enumerate(shape) for c in range(width)]
    return UpDownTableau(tuple(moves))


def enumerate_udt(length: int, shape: Sequence[int]) -> list[UpDownTableau]:
    """All up-down-tableaux of the given length ending at the given shape."""
    shape = check_partition(shape)
    if (length - sum(shape)) % 2 != 0 or sum(shape) > length:
        return []
    out: list[UpDownTableau] = []

    def rec(p: Partition, moves: tuple[Move, ...]) -> None:
        steps_left = length - len(moves)
        if steps_left == 0:
            if p == shape:
                out.append(UpDownTableau(moves))
            return
        # prune: must be able to reach the target shape in the steps left
        diff = sum(shape) - sum(p)
        if abs(diff) > steps_left or (steps_left - diff) % 2 != 0:
            return
        for r, c in addable_boxes(p):
            rec(apply_move(p, (1, r, c)), moves + ((1, r, c),))
        for r, c in removable_boxes(p):
            rec(apply_move(p, (-1, r, c)), moves + ((-1, r, c),))

    rec((), ())
    return out


def enumerate_up_tableaux(shape: Sequence[int]) -> list[UpDownTableau]:
    """All strictly increasing (no removal) tableaux of the given shape."""
    shape = check_partition(shape)
    out: list[UpDownTableau] = []

    def rec(p: Partition, moves: tuple[Move, ...]) -> None:
        if p == shape:
            out.append(UpDownTableau(moves))
            return
        for r, c in addable_boxes(p):
            if r <= len(shape) and c <= shape[r - 1]:
                rec(apply_move(p, (1, r, c)), moves + ((1, r, c),))

    rec((), ())
    return out


def tableaux_with_residues(
    seq: Sequence[int], flavor: ResidueFlavor
) -> Iterator[UpDownTableau]:
    """All up-down-tableaux whose residue sequence of the given flavor is seq."""

    def rec(p: Partition, i: int, moves: tuple[Move, ...]) -> Iterator[tuple[Move, ...]]:
        if i == len(seq):
            yield moves
            return
        v = seq[i]
        for r, c in addable_boxes(p):
            if c - r == v:
                yield from rec(apply_move(p, (1, r, c)), i + 1, moves + ((1, r, c),))
        removal_content = v - 1 if flavor == "source" else v + 1
        for r, c in removable_boxes(p):
            if c - r == removal_content:
                yield from rec(apply_move(p, (-1, r, c)), i + 1, moves + ((-1, r, c),))

    for moves in rec((), 0, ()):
        yield UpDownTableau(moves)


def seq_realizable_empty_shape(seq: Sequence[int]) -> bool:
    """Is seq the target residue sequence of an up-down-tableau of shape ()?"""
    states: set[Partition] = {()}
    for v in seq:
        nxt: set[Partition] = set()
        for p in states:
            for r, c in addable_boxes(p):
                if c - r == v:
                    nxt.add(apply_move(p, (1, r, c)))
            for r, c in removable_boxes(p):
                if c - r == v + 1:
                    nxt.add(apply_move(p, (-1, r, c)))
        states = nxt
        if not states:
            return False
    return () in states


def seq_realizable(seq: Sequence[int], flavor: ResidueFlavor = "target") -> bool:
    """Is seq a residue sequence of any up-down-tableau?"""
    states: set[Partition] = {()}
    for v in seq:
        nxt: set[Partition] = set()
        removal_content = v - 1 if flavor == "source" else v + 1
        for p in states:
            for r, c in addable_boxes(p):
                if c - r == v:
                    nxt.add(apply_move(p, (1, r, c)))
            for r, c in removable_boxes(p):
                if c - r == removal_content:
                    nxt.add(apply_move(p, (-1, r, c)))
        states = nxt
        if not states:
            return False
    return True


def reduce_residue_seq(seq: Sequence[int]) -> tuple[int, ...]:
    """Repeatedly replace a pattern (a, a+-1, a) by (a).

    The pattern may be spread out as long as every entry strictly between
    its first and last position is distant from a (|x - a| > 1), which is
    exactly when distant commutations make the triple consecutive.
    """
    seq = tuple(int(x) for x in seq)
    if not seq_realizable(seq, "target"):
        raise ValueError(f"{seq!r} is not a target residue sequence of a tableau")

    def find() -> tuple[int, int, int] | None:
        n = len(seq)
        for p in range(n):
            a = seq[p]
            for q in range(p + 1, n):
                if abs(seq[q] - a) != 1:
                    continue
                for r in range(q + 1, n):
                    if seq[r] != a:
                        continue
                    if all(abs(seq[m] - a) > 1 for m in range(p + 1, r) if m != q):
                        return (p, q, r)
        return None

    while True:
        hit = find()
        if hit is None:
            return seq
        p, q, r = hit
        seq = seq[:r] + seq[r + 1 :]
        seq = seq[:q] + seq[q + 1 :]


def sg_hom_dim(i: Sequence[int], j: Sequence[int]) -> int:
    """Number of pairs (t, s) of equal shape with source residues i and
    target residues j; the diagrammatic hom spaces have this dimension."""
    by_shape: dict[Partition, int] = {}
    for t in tableaux_with_residues(i, "source"):
        by_shape[t.shape] = by_shape.get(t.shape, 0) + 1
    total = 0
    for s in tableaux_with_residues(j, "target"):
        total += by_shape.get(s.shape, 0)
    return total


# ---------------------------------------------------------------------------
# Grading functions.


def sgn(x: int) -> int:
    if x == 0:
        raise ValueError("sgn(0) undefined")
    return 1 if x > 0 else -1


def grading_function(k: int, window: Sequence[int]) -> dict[tuple[int, int], int]:
    """Tabulate f(a, b) = sgn(b - a)(-1)^(a + b) k over a window."""
    table = {}
    for a in window:
        for b in window:
            if b in (a, a + 1):
                continue
            table[(a, b)] = sgn(b - a) * (-1) ** (a + b) * k
    return table


def is_grading_function(table: dict[tuple[int, int], int], window: Sequence[int]) -> bool:
    """Check f(a,b) = -f(b,a) for |a-b| > 1 and f(a,b) = f(b, a+1)."""
    for a in window:
        for b in window:
            if b in (a, a + 1):
                continue
            f = table[(a, b)]
            if abs(a - b) > 1 and (a, b) in table and (b, a) in table:
                if f != -table[(b, a)]:
                    return False
            if (b, a + 1) in table and f != table[(b, a + 1)]:
                return False
    return True
