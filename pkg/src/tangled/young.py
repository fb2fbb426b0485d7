"""Shapes, standard Young tableaux over the primed alphabet, and row insertion.

Labels are ordered ``1 < 1' < 2 < 2' < ...``.  A :class:`Label` is a named
tuple ``(index, primed)`` so that plain tuple comparison gives that order.
Shapes are plain tuples of row lengths, top row first; ``()`` is the empty
shape.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import NamedTuple, Sequence

Shape = tuple[int, ...]


class Label(NamedTuple):
    index: int
    primed: bool = False

    def __str__(self) -> str:
        return f"{self.index}'" if self.primed else str(self.index)

    def __repr__(self) -> str:
        return f"Label({self})"

    @classmethod
    def parse(cls, text: str | int) -> "Label":
        if isinstance(text, int):
            return cls(text)
        text = text.strip()
        primed = text.endswith("'")
        body = text[:-1] if primed else text
        if not body.isdigit() or int(body) < 1:
            raise ValueError(f"not a label: {text!r}")
        return cls(int(body), primed)


def label(spec: str | int | Label) -> Label:
    """Coerce ``3``, ``"3"`` or ``"3'"`` to a :class:`Label`."""
    if isinstance(spec, Label):
        return spec
    return Label.parse(spec)


def check_shape(rows: Sequence[int]) -> Shape:
    rows = tuple(rows)
    for r in rows:
        if not isinstance(r, int) or r < 1:
            raise ValueError(f"shape rows must be positive integers: {rows}")
    for a, b in zip(rows, rows[1:]):
        if b > a:
            raise ValueError(f"shape {rows} is not weakly decreasing")
    return rows


def size(shape: Shape) -> int:
    return sum(shape)


def shape_corners(shape: Shape) -> list[tuple[int, Shape]]:
    """All ``(row, mu)`` with ``mu`` obtained by deleting the last square of
    ``row`` (1-based), top row first."""
    out = []
    for i, r in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < r:
            mu = shape[:i] + (r - 1,) + shape[i + 1:] if r > 1 else shape[:i]
            out.append((i + 1, mu))
    return out


def shape_cocorners(shape: Shape) -> list[tuple[int, Shape]]:
    """All ``(row, nu)`` with ``nu`` obtained by adding one square to ``row``."""
    out = []
    for i in range(len(shape) + 1):
        if i == len(shape):
            out.append((i + 1, shape + (1,)))
        elif i == 0 or shape[i - 1] > shape[i]:
            out.append((i + 1, shape[:i] + (shape[i] + 1,) + shape[i + 1:]))
    return out


def one_square_diff(small: Shape, big: Shape) -> int | None:
    """Row index (1-based) of the single square in ``big`` minus ``small``,
    or ``None`` if the shapes do not differ by exactly one corner."""
    if len(big) < len(small) or len(big) > len(small) + 1:
        return None
    padded = small + (0,) * (len(big) - len(small))
    diff = [i for i, (a, b) in enumerate(zip(padded, big)) if a != b]
    if len(diff) != 1 or big[diff[0]] != padded[diff[0]] + 1:
        return None
    return diff[0] + 1


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[Label, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(label(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        check_shape(tuple(len(r) for r in rows))
        seen = set()
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x in seen:
                    raise ValueError(f"duplicate entry {x}")
                seen.add(x)
                if j and not row[j - 1] < x:
                    raise ValueError(f"row {i + 1} is not increasing: {self}")
                if i and not rows[i - 1][j] < x:
                    raise ValueError(f"column {j + 1} is not increasing: {self}")

    @property
    def shape(self) -> Shape:
        return tuple(len(r) for r in self.rows)

    def entries(self) -> set[Label]:
        return {x for row in self.rows for x in row}

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    def __contains__(self, x) -> bool:
        return any(label(x) in row for row in self.rows)

    def __str__(self) -> str:
        return str(self.to_json())

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, rows) -> "StandardTableau":
        return cls(tuple(tuple(label(x) for x in row) for row in rows))


EMPTY = StandardTableau()


def rsk_insert(t: StandardTableau, x: Label) -> StandardTableau:
    x = label(x)
    if x in t:
        raise ValueError(f"{x} is already an entry of {t}")
    rows = [list(r) for r in t.rows]
    for row in rows:
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            break
        row[pos], x = x, row[pos]
    else:
        rows.append([x])
    return StandardTableau(tuple(map(tuple, rows)))


def rsk_extract(t: StandardTableau, target: Shape) -> tuple[StandardTableau, Label]:
    """Undo one row insertion: empty the square ``shape(t) - target`` and
    bump its entry back up, returning ``(t', j)`` with
    ``rsk_insert(t', j) == t``."""
    ell = one_square_diff(tuple(target), t.shape)
    if ell is None:
        raise ValueError(f"{tuple(target)} is not a one-square sub-shape of {t.shape}")
    rows = [list(r) for r in t.rows]
    x = rows[ell - 1].pop()
    if not rows[ell - 1]:
        rows.pop()
    for r in range(ell - 2, -1, -1):
        row = rows[r]
        pos = bisect_left(row, x) - 1
        row[pos], x = x, row[pos]
    return StandardTableau(tuple(map(tuple, rows))), x


def tableau_place(t: StandardTableau, x: Label, at: Shape) -> StandardTableau:
    """Put ``x`` into the one new square of ``at``."""
    x = label(x)
    ell = one_square_diff(t.shape, tuple(at))
    if ell is None:
        raise ValueError(f"{tuple(at)} does not add one square to {t.shape}")
    rows = [list(r) for r in t.rows]
    if ell > len(rows):
        rows.append([])
    rows[ell - 1].append(x)
    # StandardTableau validates row/column increase and distinctness
    return StandardTableau(tuple(map(tuple, rows)))


def tableau_remove(t: StandardTableau, x: Label) -> StandardTableau:
    x = label(x)
    for i, row in enumerate(t.rows):
        if x in row:
            j = row.index(x)
            below = len(t.rows[i + 1]) if i + 1 < len(t.rows) else 0
            if j != len(row) - 1 or below > j:
                raise ValueError(f"{x} does not occupy a corner of {t}")
            rows = list(t.rows)
            rows[i] = row[:-1]
            if not rows[i]:
                rows.pop(i)
            return StandardTableau(tuple(rows))
    raise ValueError(f"{x} is not an entry of {t}")
