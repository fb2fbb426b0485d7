"""Exhaustive generators and exact counters.

Generators stream objects in a fixed canonical order and refuse sizes above a
configurable bound.  Counters use Python integers throughout.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Iterator

from tangled.bijection import ALL_MOVES, Move, VacillatingTableau
from tangled.tangle import CROSSING, NESTING, TangledDiagram, crossing_number, validate
from tangled.young import Shape, shape_cocorners, shape_corners

DEFAULT_DIAGRAM_BOUND = 6
DEFAULT_VT_BOUND = 6


class BoundExceeded(ValueError):
    pass


def _check_bound(n: int, bound: int, what: str):
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise BoundExceeded(f"{what} is limited to n <= {bound} (got n={n})")


def _arc_multisets(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    candidates = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    deg = [0] * (n + 1)
    chosen: list[tuple[int, int]] = []

    def walk(start: int):
        yield tuple(chosen)
        for idx in range(start, len(candidates)):
            a, b = candidates[idx]
            need = 2 if a == b else 1
            if deg[a] + need > 2 or deg[b] + need > 2:
                continue
            deg[a] += 1
            deg[b] += 1
            chosen.append((a, b))
            # same index again allows a double arc
            yield from walk(idx)
            chosen.pop()
            deg[a] -= 1
            deg[b] -= 1

    yield from walk(0)


def gen_tangled(n: int, bound: int = DEFAULT_DIAGRAM_BOUND) -> Iterator[TangledDiagram]:
    """Every tangled diagram on ``[n]`` once: arc multisets in lexicographic
    order, then resolution assignments in lexicographic order."""
    _check_bound(n, bound, "diagram enumeration")
    for arcs in _arc_multisets(n):
        deg = Counter(v for arc in arcs for v in arc)
        loops = {a for a, b in arcs if a == b}
        slots = sorted(v for v, k in deg.items() if k == 2 and v not in loops)
        for choice in product((CROSSING, NESTING), repeat=len(slots)):
            d = TangledDiagram(n, arcs, dict(zip(slots, choice)))
            if validate(d) is None:
                yield d


def gen_vt(
    n: int,
    max_rows: int | None = None,
    moves: Iterable[Move] = ALL_MOVES,
    bound: int = DEFAULT_VT_BOUND,
) -> Iterator[VacillatingTableau]:
    """Every ∅-to-∅ vacillating tableau of length ``2n`` whose shapes have at
    most ``max_rows`` rows and whose moves lie in ``moves``."""
    _check_bound(n, bound, "vacillating tableau enumeration")
    moves = [m for m in Move if m in set(moves)]
    rows_ok = (lambda s: True) if max_rows is None else (lambda s: len(s) <= max_rows)
    shapes: list[Shape] = [()]

    def half(s: Shape, kind: str) -> list[Shape]:
        if kind == "N":
            return [s]
        if kind == "A":
            return [t for _, t in shape_cocorners(s) if rows_ok(t)]
        return [t for _, t in shape_corners(s)]

    def walk(j: int):
        cur = shapes[-1]
        if j == n:
            if cur == ():
                yield VacillatingTableau(n, tuple(shapes))
            return
        for m in moves:
            for mid in half(cur, m.odd):
                for end in half(mid, m.even):
                    if sum(end) > 2 * (n - j - 1):
                        continue
                    shapes.extend((mid, end))
                    yield from walk(j + 1)
                    del shapes[-2:]

    yield from walk(0)


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    c = 1
    for i in range(m):
        # C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


_HALF_WALKS: dict[int | None, list[dict[Shape, int]]] = {}


def _half_walks(max_rows: int | None, h: int) -> dict[Shape, int]:
    """Walks of ``h`` half-steps from ∅ (add or remove one square each),
    counted by end shape."""
    levels = _HALF_WALKS.setdefault(max_rows, [{(): 1}])
    while len(levels) <= h:
        out: Counter[Shape] = Counter()
        for s, c in levels[-1].items():
            for t in _successors(s, max_rows, None):
                out[t] += c
        levels.append(dict(out))
    return levels[h]


@lru_cache(maxsize=None)
def _successors(s: Shape, max_rows: int | None, moves: frozenset[Move] | None) -> Counter:
    def grow(x):
        return [t for _, t in shape_cocorners(x) if max_rows is None or len(t) <= max_rows]

    def shrink(x):
        return [t for _, t in shape_corners(x)]

    if moves is None:
        return Counter(grow(s) + shrink(s))
    step = {"N": lambda x: [x], "A": grow, "R": shrink}
    out: Counter[Shape] = Counter()
    for m in sorted(moves):
        for mid in step[m.odd](s):
            for end in step[m.even](mid):
                out[end] += 1
    return out


def count_matchings(k: int, m: int) -> int:
    """Perfect matchings on ``m`` points with no ``k`` mutually crossing arcs,
    counted as closed walks of length ``m`` through shapes with ``< k`` rows."""
    if k < 2 or m < 0:
        raise ValueError(f"need k >= 2 and m >= 0, got k={k}, m={m}")
    if m % 2:
        return 0
    # a closed walk splits at its midpoint into two walks from ∅ to the same shape
    return sum(c * c for c in _half_walks(k - 1, m // 2).values())


def f3_closed_form(m: int) -> int:
    if m < 0 or m % 2:
        raise ValueError(f"closed form needs an even nonnegative m, got {m}")
    h = m // 2
    return catalan(h) * catalan(h + 2) - catalan(h + 1) ** 2


def count_no_isolated(k: int, n: int) -> int:
    """k-noncrossing tangled diagrams on ``[n]`` without isolated vertices:
    choose the ``ℓ`` degree-one vertices, match the remaining ``2n-ℓ`` points."""
    if k < 2 or n < 0:
        raise ValueError(f"need k >= 2 and n >= 0, got k={k}, n={n}")
    return sum(comb(n, ell) * count_matchings(k, 2 * n - ell) for ell in range(n + 1))


def count_all(k: int, n: int) -> int:
    if k < 2 or n < 0:
        raise ValueError(f"need k >= 2 and n >= 0, got k={k}, n={n}")
    return sum(comb(n, i) * count_no_isolated(k, n - i) for i in range(n + 1))


@lru_cache(maxsize=None)
def _count_vt(max_rows: int | None, n: int, moves: frozenset[Move]) -> int:
    states: dict[Shape, int] = {(): 1}
    for step in range(n):
        room = 2 * (n - step - 1)
        out: Counter[Shape] = Counter()
        for s, c in states.items():
            for t, mult in _successors(s, max_rows, moves).items():
                if sum(t) <= room:
                    out[t] += c * mult
        states = out
    return states.get((), 0)


def count_by_vt(k: int | None, n: int, moves: Iterable[Move] = ALL_MOVES) -> int:
    """Vacillating tableaux of length ``2n`` with all shapes below ``k`` rows
    (``k=None``: no row limit), by dynamic programming over shapes."""
    if n < 0 or (k is not None and k < 2):
        raise ValueError(f"need k >= 2 and n >= 0, got k={k}, n={n}")
    max_rows = None if k is None else k - 1
    return _count_vt(max_rows, n, frozenset(moves))


def count_brute(k: int | None, n: int, no_isolated: bool = False,
                bound: int = DEFAULT_DIAGRAM_BOUND) -> int:
    total = 0
    for d in gen_tangled(n, bound):
        if no_isolated and 0 in d.degrees()[1:]:
            continue
        if k is None or crossing_number(d) < k:
            total += 1
    return total


@dataclass(frozen=True)
class SequenceTable:
    name: str
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        idx = [n for n, _ in self.terms]
        if idx and idx != list(range(idx[0], idx[0] + len(idx))):
            raise ValueError("terms must be indexed contiguously")

    def __getitem__(self, n: int) -> int:
        return dict(self.terms)[n]

    def values(self) -> list[int]:
        return [c for _, c in self.terms]

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.terms)
        return buf.getvalue()

    def to_json(self) -> str:
        obj = {"name": self.name, "terms": [[n, c] for n, c in self.terms]}
        return json.dumps(obj, sort_keys=True) + "\n"


def sequence_table(k: int, max_n: int, start: int = 1, no_isolated: bool = False) -> SequenceTable:
    f = count_no_isolated if no_isolated else count_all
    name = f"D~_{{2,{k}}}" if no_isolated else f"D_{{2,{k}}}"
    return SequenceTable(name, tuple((n, f(k, n)) for n in range(start, max_n + 1)))


def d23_table() -> SequenceTable:
    """3-noncrossing tangled diagrams on [n] for n = 1..10."""
    return sequence_table(3, 10)


def golden_table(name: str, version: str = "v1") -> SequenceTable:
    """Load a frozen ``n,count`` table shipped under ``data/<version>/``."""
    from importlib.resources import files

    text = files("tangled").joinpath("data", version, f"{name}.csv").read_text()
    rows = csv.reader(io.StringIO(text))
    return SequenceTable(name, tuple((int(n), int(c)) for n, c in rows))
