"""Tangled diagrams, their inflation to partial matchings, and crossings.

A tangled diagram on ``[n]`` is a multigraph of maximum degree two drawn on
a line.  Loops are allowed (a loop uses both degree slots of its vertex) and
so are double arcs.  Wherever two arc ends meet at a vertex the drawing is
ambiguous, so each such vertex carries a :class:`Resolution`.

Inflation splits every degree-two vertex ``i`` into ``i < i'`` and turns the
diagram into a partial matching on the primed alphabet; crossing and
nesting numbers are read off that matching.
"""

from __future__ import annotations

import enum
import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from tangled.young import Label, label


class Resolution(str, enum.Enum):
    CROSSING = "crossing"
    NESTING = "nesting"

    def __str__(self) -> str:
        return self.value


CROSSING = Resolution.CROSSING
NESTING = Resolution.NESTING


class InvalidDiagram(ValueError):
    pass


class InvalidMatching(ValueError):
    pass


Arc = tuple[int, int]
Pair = tuple[Label, Label]


@dataclass(frozen=True)
class TangledDiagram:
    """Immutable diagram value.

    ``arcs`` is kept as a sorted tuple and ``resolutions`` as a sorted tuple
    of ``(vertex, Resolution)`` items so that equal diagrams compare and hash
    equal.  Construction only normalizes; use :func:`validate` to check.
    """

    n: int
    arcs: tuple[Arc, ...] = ()
    resolutions: tuple[tuple[int, Resolution], ...] = field(default=())

    def __post_init__(self):
        arcs = tuple(sorted((int(a), int(b)) for a, b in self.arcs))
        res = self.resolutions
        items = res.items() if isinstance(res, Mapping) else res
        res = tuple(sorted((int(v), Resolution(r)) for v, r in items))
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "resolutions", res)

    @property
    def resolution(self) -> dict[int, Resolution]:
        return dict(self.resolutions)

    def degrees(self) -> list[int]:
        """Degree of each vertex, index 0 unused."""
        deg = [0] * (self.n + 1)
        for a, b in self.arcs:
            if 1 <= a <= self.n:
                deg[a] += 1
            if 1 <= b <= self.n:
                deg[b] += 1
        return deg

    def loop_vertices(self) -> set[int]:
        return {a for a, b in self.arcs if a == b}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "arcs": [[a, b] for a, b in self.arcs],
            "resolutions": {str(v): r.value for v, r in self.resolutions},
        }

    @classmethod
    def from_json(cls, obj) -> "TangledDiagram":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            n = obj["n"]
            arcs = [tuple(a) for a in obj.get("arcs", [])]
            res = {int(v): r for v, r in obj.get("resolutions", {}).items()}
        except (KeyError, TypeError, AttributeError) as exc:
            raise InvalidDiagram(f"malformed diagram JSON: {exc}") from exc
        if not isinstance(n, int) or n < 0:
            raise InvalidDiagram(f"n must be a nonnegative integer, got {n!r}")
        if any(len(a) != 2 or not all(isinstance(x, int) for x in a) for a in arcs):
            raise InvalidDiagram("arcs must be pairs of integers")
        try:
            return cls(n, tuple(arcs), res)
        except ValueError as exc:
            raise InvalidDiagram(str(exc)) from exc


def diagram(n: int, arcs: Iterable[Arc] = (), resolutions: Mapping | None = None) -> TangledDiagram:
    return TangledDiagram(n, tuple(arcs), dict(resolutions or {}))


def validate(d: TangledDiagram) -> str | None:
    """Return ``None`` for a valid diagram, else a description of the first
    violated invariant."""
    if d.n < 0:
        return f"n must be nonnegative, got {d.n}"
    for a, b in d.arcs:
        if not 1 <= a <= b <= d.n:
            return f"arc ({a},{b}) must satisfy 1 <= left <= right <= {d.n}"
    deg = d.degrees()
    for v in range(1, d.n + 1):
        if deg[v] > 2:
            return f"vertex {v} has degree {deg[v]} > 2"
    loops = d.loop_vertices()
    need = {v for v in range(1, d.n + 1) if deg[v] == 2 and v not in loops}
    have = set(d.resolution)
    if have != need:
        extra = sorted(have - need)
        missing = sorted(need - have)
        if missing:
            return f"vertex {missing[0]} has degree 2 but no resolution"
        return f"vertex {extra[0]} carries a resolution but is not a non-loop degree-2 vertex"
    res = d.resolution
    for (a, b), mult in Counter(d.arcs).items():
        if mult == 2 and a != b and res[a] != res[b]:
            return f"double arc ({a},{b}) has unequal resolutions at its endpoints"
    return None


def check(d: TangledDiagram) -> TangledDiagram:
    problem = validate(d)
    if problem is not None:
        raise InvalidDiagram(problem)
    return d


@dataclass(frozen=True)
class PartialMatching:
    ground: tuple[Label, ...]
    pairs: tuple[Pair, ...] = ()

    def __post_init__(self):
        ground = tuple(sorted(label(x) for x in self.ground))
        pairs = []
        for p in self.pairs:
            x, y = (label(z) for z in p)
            pairs.append((x, y) if x < y else (y, x))
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "pairs", tuple(sorted(pairs)))

    def partner(self) -> dict[Label, Label]:
        out = {}
        for x, y in self.pairs:
            out[x] = y
            out[y] = x
        return out

    def to_json(self) -> dict:
        return {
            "ground": [str(x) for x in self.ground],
            "pairs": [[str(x), str(y)] for x, y in self.pairs],
        }

    @classmethod
    def from_json(cls, obj) -> "PartialMatching":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(tuple(obj["ground"]), tuple(tuple(p) for p in obj.get("pairs", [])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidMatching(f"malformed matching JSON: {exc}") from exc


def matching(ground: Iterable, pairs: Iterable = ()) -> PartialMatching:
    return PartialMatching(tuple(ground), tuple(tuple(p) for p in pairs))


def check_matching(m: PartialMatching) -> PartialMatching:
    if len(set(m.ground)) != len(m.ground):
        raise InvalidMatching("ground set has repeated labels")
    ground = set(m.ground)
    used = set()
    for x, y in m.pairs:
        if x == y:
            raise InvalidMatching(f"pair ({x},{y}) is degenerate")
        for z in (x, y):
            if z not in ground:
                raise InvalidMatching(f"{z} is paired but not in the ground set")
            if z in used:
                raise InvalidMatching(f"{z} occurs in more than one pair")
            used.add(z)
    return m


def inflate(d: TangledDiagram) -> PartialMatching:
    check(d)
    res = d.resolution
    ends = [[Label(a), Label(b)] for a, b in d.arcs]
    incident: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for k, (a, b) in enumerate(d.arcs):
        if a == b:
            ends[k][1] = Label(a, True)
            continue
        incident[a].append((k, 0))
        incident[b].append((k, 1))

    done = set()
    counts = Counter(d.arcs)
    for (a, b), mult in counts.items():
        if mult == 2 and a != b:
            k1 = d.arcs.index((a, b))
            k2 = k1 + 1
            ends[k2][0] = Label(a, True)
            if res[a] is CROSSING:
                ends[k2][1] = Label(b, True)
            else:
                ends[k1][1] = Label(b, True)
            done.update((a, b))

    for v, inc in incident.items():
        if len(inc) < 2 or v in done:
            continue
        (k1, s1), (k2, s2) = inc
        other1, other2 = d.arcs[k1][1 - s1], d.arcs[k2][1 - s2]
        if s1 == s2:
            # common left or right endpoint: k1 has the smaller far end
            if other1 > other2:
                (k1, s1), (k2, s2) = (k2, s2), (k1, s1)
            # crossing: k1 keeps v; nesting: k1 takes v'
            if res[v] is CROSSING:
                ends[k2][s2] = Label(v, True)
            else:
                ends[k1][s1] = Label(v, True)
        else:
            # transit vertex: (i,v) arrives, (v,h) leaves
            if s1 == 0:
                (k1, s1), (k2, s2) = (k2, s2), (k1, s1)
            if res[v] is CROSSING:
                ends[k1][s1] = Label(v, True)
            else:
                ends[k2][s2] = Label(v, True)

    deg = d.degrees()
    ground = []
    for v in range(1, d.n + 1):
        ground.append(Label(v))
        if deg[v] == 2:
            ground.append(Label(v, True))
    return PartialMatching(tuple(ground), tuple(tuple(e) for e in ends))


def deflate(m: PartialMatching) -> TangledDiagram:
    """Inverse of :func:`inflate`: identify each ``i'`` with ``i``."""
    check_matching(m)
    indices = [x.index for x in m.ground if not x.primed]
    n = max(indices, default=0)
    if indices != list(range(1, n + 1)):
        raise InvalidMatching("unprimed ground labels must be exactly 1..n")
    split = [x.index for x in m.ground if x.primed]
    for v in split:
        if not 1 <= v <= n:
            raise InvalidMatching(f"{Label(v, True)} has no unprimed partner in the ground set")
    partner = m.partner()
    res = {}
    for v in split:
        lo, hi = Label(v), Label(v, True)
        if lo not in partner or hi not in partner:
            raise InvalidMatching(f"split vertex {v} must have both {lo} and {hi} paired")
        p, q = partner[lo], partner[hi]
        if p == hi:
            continue
        if (p < lo) != (q < hi):
            res[v] = NESTING if p < lo else CROSSING
        else:
            res[v] = CROSSING if p < q else NESTING
    arcs = [(x.index, y.index) for x, y in m.pairs]
    return TangledDiagram(n, tuple(arcs), res)


def _ordered(p) -> Pair:
    x, y = label(p[0]), label(p[1])
    if x == y:
        raise ValueError(f"degenerate pair ({x},{y})")
    return (x, y) if x < y else (y, x)


def _interleave(a, b) -> tuple[Pair, Pair]:
    a, b = _ordered(a), _ordered(b)
    if set(a) & set(b):
        raise ValueError(f"pairs {a} and {b} share a label")
    return (a, b) if a[0] < b[0] else (b, a)


def arcs_cross(a, b) -> bool:
    a, b = _interleave(a, b)
    return a[0] < b[0] < a[1] < b[1]


def arcs_nest(a, b) -> bool:
    a, b = _interleave(a, b)
    return a[0] < b[0] < b[1] < a[1]


def _max_clique(n: int, adj: list[set[int]]) -> int:
    best = 0

    def grow(size: int, candidates: set[int]):
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        if size + len(candidates) <= best:
            return
        for v in sorted(candidates):
            if size + len(candidates) <= best:
                return
            candidates = candidates - {v}
            grow(size + 1, candidates & adj[v])

    grow(0, set(range(n)))
    return best


def _max_pairwise(pairs, relation) -> int:
    pairs = [_ordered(p) for p in pairs]
    adj = [set() for _ in pairs]
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if relation(pairs[i], pairs[j]):
                adj[i].add(j)
                adj[j].add(i)
    return _max_clique(len(pairs), adj)


def max_crossing(m: PartialMatching | Iterable) -> int:
    """Size of the largest set of mutually crossing pairs."""
    pairs = m.pairs if isinstance(m, PartialMatching) else m
    return _max_pairwise(pairs, arcs_cross)


def max_nesting(m: PartialMatching | Iterable) -> int:
    pairs = m.pairs if isinstance(m, PartialMatching) else m
    return _max_pairwise(pairs, arcs_nest)


def crossing_number(d: TangledDiagram) -> int:
    return max_crossing(inflate(d))


def nesting_number(d: TangledDiagram) -> int:
    return max_nesting(inflate(d))


def is_k_noncrossing(d: TangledDiagram, k: int) -> bool:
    return crossing_number(d) < k


@dataclass(frozen=True)
class Classification:
    matching: bool
    partition: bool
    braid: bool

    def __contains__(self, name: str) -> bool:
        return getattr(self, name)


def classify(d: TangledDiagram) -> Classification:
    check(d)
    deg = d.degrees()
    loops = d.loop_vertices()
    res = d.resolution
    doubled = {v for (a, b), m in Counter(d.arcs).items() if m == 2 for v in (a, b)}
    lefts = Counter(a for a, b in d.arcs if a != b)
    transit = {v for v in res if lefts[v] == 1}

    two = [v for v in range(1, d.n + 1) if deg[v] == 2]
    perfect = all(deg[v] == 1 for v in range(1, d.n + 1))
    partition = not loops and not doubled and all(
        v in transit and res[v] is NESTING for v in two
    )
    braid = all(v in loops or (v in transit and res[v] is CROSSING) for v in two)
    return Classification(perfect, partition, braid)


CLASSES = ("matching", "partition", "braid")
