"""Vacillating tableaux and their bijection with tangled diagrams.

A vacillating tableau of length ``2n`` is a walk ``∅ = λ^0, ..., λ^{2n} = ∅``
in Young's lattice taken two half-steps at a time; each pair of half-steps is
one of seven :class:`Move` values.  :func:`phi` reads such a walk left to
right, placing labels when a square appears and extracting a label by reverse
row insertion when one disappears.  :func:`psi` reads an inflated diagram
right to left and rebuilds the walk.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from tangled.tangle import (
    InvalidMatching,
    PartialMatching,
    TangledDiagram,
    check_matching,
    deflate,
    inflate,
)
from tangled.young import (
    EMPTY,
    Label,
    Shape,
    StandardTableau,
    check_shape,
    one_square_diff,
    rsk_extract,
    rsk_insert,
    tableau_place,
    tableau_remove,
)


class Move(str, enum.Enum):
    """Elementary move; the code reads odd half then even half
    (``N`` nothing, ``A`` add a square, ``R`` remove a square)."""

    NN = "NN"
    RN = "RN"
    NA = "NA"
    AA = "AA"
    AR = "AR"
    RA = "RA"
    RR = "RR"

    @property
    def odd(self) -> str:
        return self.value[0]

    @property
    def even(self) -> str:
        return self.value[1]

    @property
    def two_squares(self) -> bool:
        return "N" not in self.value

    def __str__(self) -> str:
        return self.value


ALL_MOVES = frozenset(Move)


class InvalidTableau(ValueError):
    pass


def half_step(before: Shape, after: Shape) -> str | None:
    if before == after:
        return "N"
    if one_square_diff(before, after) is not None:
        return "A"
    if one_square_diff(after, before) is not None:
        return "R"
    return None


@dataclass(frozen=True)
class VacillatingTableau:
    n: int
    shapes: tuple[Shape, ...]

    def __post_init__(self):
        object.__setattr__(self, "shapes", tuple(tuple(s) for s in self.shapes))

    def max_rows(self) -> int:
        return max(len(s) for s in self.shapes)

    def max_columns(self) -> int:
        return max((s[0] for s in self.shapes if s), default=0)

    def to_json(self) -> dict:
        return {"n": self.n, "shapes": [list(s) for s in self.shapes]}

    @classmethod
    def from_json(cls, obj) -> "VacillatingTableau":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            n = obj["n"]
            shapes = tuple(check_shape(s) for s in obj["shapes"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidTableau(f"malformed vacillating tableau JSON: {exc}") from exc
        return cls(n, shapes)


def validate_vt(v: VacillatingTableau) -> str | None:
    if not isinstance(v.n, int) or v.n < 0:
        return f"n must be a nonnegative integer, got {v.n!r}"
    if len(v.shapes) != 2 * v.n + 1:
        return f"expected {2 * v.n + 1} shapes for n={v.n}, got {len(v.shapes)}"
    for s in v.shapes:
        try:
            check_shape(s)
        except ValueError as exc:
            return str(exc)
    if v.shapes[0] != () or v.shapes[-1] != ():
        return "first and last shapes must be empty"
    try:
        moves_of(v)
    except InvalidTableau as exc:
        return str(exc)
    return None


def check_vt(v: VacillatingTableau) -> VacillatingTableau:
    problem = validate_vt(v)
    if problem is not None:
        raise InvalidTableau(problem)
    return v


def moves_of(v: VacillatingTableau) -> list[Move]:
    out = []
    for j in range(1, v.n + 1):
        a, b, c = v.shapes[2 * j - 2: 2 * j + 1]
        code = (half_step(a, b) or "?") + (half_step(b, c) or "?")
        try:
            out.append(Move(code))
        except ValueError:
            raise InvalidTableau(f"step {j}: {a} -> {b} -> {c} is not an elementary move") from None
    return out


def phi(v: VacillatingTableau) -> PartialMatching:
    """Walk the shapes left to right and collect the arcs of an inflation."""
    check_vt(v)
    tab: StandardTableau = EMPTY
    pairs: list[tuple[Label, Label]] = []
    ground: list[Label] = []
    for j, move in enumerate(moves_of(v), start=1):
        labels = (Label(j), Label(j, True) if move.two_squares else Label(j))
        halves = (move.odd, move.even)
        for h in range(2):
            target = v.shapes[2 * j - 1 + h]
            if halves[h] == "A":
                tab = tableau_place(tab, labels[h], target)
            elif halves[h] == "R":
                tab, i = rsk_extract(tab, target)
                pairs.append((i, labels[h]))
        ground.append(Label(j))
        if move.two_squares:
            ground.append(Label(j, True))
    if len(tab):
        raise AssertionError(f"non-empty final tableau {tab}")
    return PartialMatching(tuple(ground), tuple(pairs))


def psi(m: PartialMatching) -> VacillatingTableau:
    """Rebuild the walk from an inflation, reading vertices ``n`` down to 1."""
    check_matching(m)
    deflate(m)  # rejects ground sets that are not inflations
    split = {x.index for x in m.ground if x.primed}
    n = max((x.index for x in m.ground), default=0)
    partner = m.partner()
    shapes: list[Shape] = [()] * (2 * n + 1)
    tab: StandardTableau = EMPTY
    for j in range(n, 0, -1):
        lo, hi = Label(j), Label(j, True)
        p = partner.get(lo)
        if j not in split:
            if p is None:  # isolated
                mid = tab
            elif p < lo:  # right end of (p, j)
                mid = tab
                tab = rsk_insert(mid, p)
            else:  # left end of (j, p)
                mid = tableau_remove(tab, lo)
                tab = mid
        else:
            q = partner[hi]
            if p == hi:  # loop
                mid = rsk_insert(tab, lo)
                tab = tableau_remove(mid, lo)
            elif p < lo and q > hi:  # (p, j), (j', q), noncrossing transit
                mid = tableau_remove(tab, hi)
                tab = rsk_insert(mid, p)
            elif p < lo and q < hi:  # two arcs ending at j
                mid = rsk_insert(tab, q)
                tab = rsk_insert(mid, p)
            elif p > lo and q > hi:  # two arcs starting at j
                mid = tableau_remove(tab, hi)
                tab = tableau_remove(mid, lo)
            else:  # (j, p), (q, j'), crossing transit
                mid = rsk_insert(tab, q)
                tab = tableau_remove(mid, lo)
        shapes[2 * j - 1] = mid.shape
        shapes[2 * j - 2] = tab.shape
    if len(tab):
        raise InvalidMatching(f"matching does not close up: leftover tableau {tab}")
    return VacillatingTableau(n, tuple(shapes))


def beta(v: VacillatingTableau) -> TangledDiagram:
    return deflate(phi(v))


def beta_inv(d: TangledDiagram) -> VacillatingTableau:
    return psi(inflate(d))


_ALLOWED = {
    "matching": frozenset({Move.RN, Move.NA}),
    "partition": frozenset({Move.RN, Move.NA, Move.NN, Move.RA}),
    "braid": frozenset({Move.RN, Move.NA, Move.NN, Move.AR}),
}


def allowed_moves(cls: str) -> frozenset[Move]:
    """Move set whose tableaux correspond to matchings, partitions or braids."""
    try:
        return _ALLOWED[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}; expected one of {sorted(_ALLOWED)}") from None
