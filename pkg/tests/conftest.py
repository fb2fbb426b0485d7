"""Brute-force oracles shared by the test modules.

None of these call into the code paths they are used to check.
"""

from itertools import combinations

import pytest

from tangled.young import Label


def primed_alphabet(n):
    return [Label(i, p) for i in range(1, n + 1) for p in (False, True)]


def _key(x):
    # Label order 1 < 1' < 2 < 2' computed without relying on Label.__lt__
    return 2 * x.index + (1 if x.primed else 0)


def brute_cross(a, b):
    (a1, a2), (b1, b2) = sorted([sorted(a, key=_key), sorted(b, key=_key)], key=lambda p: _key(p[0]))
    return _key(a1) < _key(b1) < _key(a2) < _key(b2)


def brute_nest(a, b):
    (a1, a2), (b1, b2) = sorted([sorted(a, key=_key), sorted(b, key=_key)], key=lambda p: _key(p[0]))
    return _key(a1) < _key(b1) < _key(b2) < _key(a2)


def brute_max_mutual(pairs, relation):
    pairs = list(pairs)
    for size in range(len(pairs), 0, -1):
        for sub in combinations(pairs, size):
            if all(relation(x, y) for x, y in combinations(sub, 2)):
                return size
    return 0


def perfect_matchings(points):
    points = list(points)
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, p in enumerate(rest):
        for m in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, p)] + m


def set_partition_count(n):
    """Bell numbers from explicit enumeration of block assignments."""
    def walk(i, blocks):
        if i == n:
            return 1
        return sum(walk(i + 1, blocks) for _ in range(blocks)) + walk(i + 1, blocks + 1)
    return walk(0, 0)


def partitions_of(total, cap=None):
    cap = total if cap is None else cap
    if total == 0:
        yield ()
        return
    for first in range(min(total, cap), 0, -1):
        for rest in partitions_of(total - first, first):
            yield (first,) + rest


def standard_fillings(shape):
    """All standard fillings of ``shape`` with 0..size-1, as lists of rows,
    built by placing the largest value in every outer corner recursively."""
    total = sum(shape)
    if total == 0:
        yield []
        return
    for i, r in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < r:
            smaller = list(shape)
            smaller[i] -= 1
            smaller = [x for x in smaller if x]
            for rows in standard_fillings(tuple(smaller)):
                rows = [list(x) for x in rows]
                if i == len(rows):
                    rows.append([])
                rows[i].append(total - 1)
                yield rows


def all_tableaux(max_entries, alphabet):
    """Every SYT with at most ``max_entries`` entries drawn from ``alphabet``
    (a sorted list), as lists of rows of Labels."""
    for size in range(max_entries + 1):
        for shape in partitions_of(size):
            fillings = list(standard_fillings(shape))
            for subset in combinations(alphabet, size):
                for rows in fillings:
                    yield [[subset[v] for v in row] for row in rows]


@pytest.fixture(scope="session")
def oracle():
    import types
    return types.SimpleNamespace(
        cross=brute_cross,
        nest=brute_nest,
        max_mutual=brute_max_mutual,
        perfect_matchings=perfect_matchings,
        bell=set_partition_count,
        tableaux=all_tableaux,
        alphabet=primed_alphabet,
    )
