"""Exhaustive verification suites behind ``tangled verify``.

Each suite returns a list of :class:`Check` results; a failing check carries
the first counterexample as JSON-ready data.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import prod
from typing import Callable, Iterator

from tangled.bijection import (
    ALL_MOVES,
    Move,
    allowed_moves,
    beta,
    beta_inv,
    moves_of,
)
from tangled.enumeration import (
    count_all,
    count_brute,
    count_by_vt,
    count_no_isolated,
    gen_tangled,
    gen_vt,
)
from tangled.tangle import CLASSES, classify, crossing_number, nesting_number

SUITE_BOUND = 6


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    counterexample: dict | None = field(default=None)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def set_partitions(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length ``n``, one per set partition."""
    if n == 0:
        yield []
        return

    def walk(prefix, top):
        if len(prefix) == n:
            yield list(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from walk(prefix, max(top, b))
            prefix.pop()

    yield from walk([0], 0)


def perfect_matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    if len(points) % 2:
        return
    first, rest = points[0], points[1:]
    for i, p in enumerate(rest):
        for m in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, p)] + m


def _first_failure(items, predicate: Callable, to_json: Callable):
    n_checked = 0
    for item in items:
        n_checked += 1
        if not predicate(item):
            return n_checked, to_json(item)
    return n_checked, None


def suite_roundtrip(n: int) -> list[Check]:
    checks = []
    for m in range(n + 1):
        count, bad = _first_failure(gen_tangled(m), lambda d: beta(beta_inv(d)) == d,
                                    lambda d: d.to_json())
        checks.append(Check(f"beta(beta_inv(d)) == d, n={m}", bad is None,
                            f"{count} diagrams", bad))
        count_v, bad = _first_failure(gen_vt(m), lambda v: beta_inv(beta(v)) == v,
                                      lambda v: v.to_json())
        checks.append(Check(f"beta_inv(beta(v)) == v, n={m}", bad is None,
                            f"{count_v} tableaux", bad))
        checks.append(Check(f"|diagrams| == |tableaux|, n={m}", count == count_v,
                            f"{count} vs {count_v}"))
    return checks


def suite_rows_vs_crossings(n: int) -> list[Check]:
    checks = []
    for m in range(n + 1):
        diagrams = list(gen_tangled(m))
        count, bad = _first_failure(
            diagrams, lambda d: beta_inv(d).max_rows() == crossing_number(d), lambda d: d.to_json())
        checks.append(Check(f"max rows == crossing number, n={m}", bad is None,
                            f"{count} diagrams", bad))
        count, bad = _first_failure(
            diagrams, lambda d: beta_inv(d).max_columns() == nesting_number(d),
            lambda d: d.to_json())
        checks.append(Check(f"max columns == nesting number, n={m}", bad is None,
                            f"{count} diagrams", bad))
    return checks


def suite_duality(n: int) -> list[Check]:
    checks = []
    for m in range(n + 1):
        cr, ne = Counter(), Counter()
        for d in gen_tangled(m):
            cr[crossing_number(d)] += 1
            ne[nesting_number(d)] += 1
        top = max(list(cr) + list(ne)) + 2
        for k in range(2, top + 1):
            a = sum(c for x, c in cr.items() if x < k)
            b = sum(c for x, c in ne.items() if x < k)
            checks.append(Check(f"#{k}-noncrossing == #{k}-nonnesting, n={m}", a == b,
                                f"{a} vs {b}"))
    return checks


def _double_factorial_odd(m: int) -> int:
    return prod(range(m - 1, 0, -2)) if m % 2 == 0 else 0


def suite_restricted_moves(n: int) -> list[Check]:
    checks = []
    for m in range(n + 1):
        diagrams = list(gen_tangled(m))
        for cls in CLASSES:
            moves = allowed_moves(cls)
            tabs = list(gen_vt(m, moves=moves, bound=max(SUITE_BOUND, 8)))
            _, bad = _first_failure(tabs, lambda v: getattr(classify(beta(v)), cls),
                                    lambda v: v.to_json())
            checks.append(Check(f"beta maps {cls} moves into {cls}s, n={m}", bad is None,
                                f"{len(tabs)} tableaux", bad))
            members = [d for d in diagrams if getattr(classify(d), cls)]
            _, bad = _first_failure(members, lambda d: set(moves_of(beta_inv(d))) <= moves,
                                    lambda d: d.to_json())
            checks.append(Check(f"beta_inv of {cls}s uses only {cls} moves, n={m}",
                                bad is None, f"{len(members)} diagrams", bad))
            checks.append(Check(f"|{cls} tableaux| == |{cls}s|, n={m}",
                                len(tabs) == len(members), f"{len(tabs)} vs {len(members)}"))
        bell = sum(1 for _ in set_partitions(m))
        parts = count_by_vt(None, m, allowed_moves("partition"))
        checks.append(Check(f"partition tableaux == Bell({m})", parts == bell,
                            f"{parts} vs {bell}"))
        pm = sum(1 for _ in perfect_matchings(list(range(1, m + 1))))
        mt = count_by_vt(None, m, allowed_moves("matching"))
        checks.append(Check(f"matching tableaux == ({m}-1)!!", mt == pm == _double_factorial_odd(m),
                            f"{mt} vs {pm}"))
    return checks


def suite_counts(n: int) -> list[Check]:
    checks = []
    for m in range(n + 1):
        for k in (2, 3, 4):
            f, v, b = count_all(k, m), count_by_vt(k, m), count_brute(k, m)
            checks.append(Check(f"D_{{2,{k}}}({m}): formula == vt-dp == brute",
                                f == v == b, f"{f}, {v}, {b}"))
            f = count_no_isolated(k, m)
            v = count_by_vt(k, m, ALL_MOVES - {Move.NN})
            b = count_brute(k, m, no_isolated=True)
            checks.append(Check(f"D~_{{2,{k}}}({m}): formula == vt-dp == brute",
                                f == v == b, f"{f}, {v}, {b}"))
    return checks


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "roundtrip": suite_roundtrip,
    "theorem2": suite_rows_vs_crossings,
    "duality": suite_duality,
    "corollary": suite_restricted_moves,
    "counts": suite_counts,
}


def run_suite(name: str, n: int) -> list[Check]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}")
    if not 0 <= n <= SUITE_BOUND:
        raise ValueError(f"verification suites accept 0 <= n <= {SUITE_BOUND}, got {n}")
    return SUITES[name](n)
