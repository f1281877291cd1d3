"""Interlaced graphs on strictly increasing integer tuples and their exact metric.

The arity-k interlaced graph has all strictly increasing k-tuples of positive
integers as vertices.  Two distinct tuples n, m are adjacent when their entries
alternate, i.e. n_1 <= m_1 <= n_2 <= ... <= n_k <= m_k (or with the roles
swapped).  The shortest-path distance of this graph admits a closed form: with

    F(i) = sum_{j<=i} [j in n] - [j in m]        (the walk profile, F(0)=0)

the distance equals max(F) - min(F), which is also the largest discrepancy
||n ∩ S| - |m ∩ S|| over integer intervals S.  This module computes the metric
three ways (profile formula, breadth-first oracle, explicit geodesics) so each
can certify the others.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidInput

__all__ = [
    "InterlacedTuple",
    "WalkProfile",
    "is_adjacent",
    "walk_profile",
    "dist",
    "dist_oracle_bfs",
    "geodesic_step",
    "geodesic_path",
    "enumerate_tuples",
]


@dataclass(frozen=True, order=True)
class InterlacedTuple:
    """A vertex of the arity-k graph: a strictly increasing tuple of positive ints."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        ent = tuple(int(v) for v in self.entries)
        if len(ent) == 0:
            raise InvalidInput("tuple must have at least one entry")
        if any(v < 1 for v in ent):
            raise InvalidInput(f"entries must be positive integers: {ent}")
        if any(a >= b for a, b in zip(ent, ent[1:])):
            # duplicates are rejected rather than deduplicated: fail fast on bad input
            raise InvalidInput(f"entries must be strictly increasing: {ent}")
        object.__setattr__(self, "entries", ent)

    @property
    def arity(self) -> int:
        return len(self.entries)

    @property
    def top(self) -> int:
        return self.entries[-1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __repr__(self) -> str:
        return f"({','.join(str(v) for v in self.entries)})"


def itup(*values: int) -> InterlacedTuple:
    """Shorthand constructor, e.g. itup(1, 3, 4)."""
    return InterlacedTuple(tuple(values))


@dataclass(frozen=True)
class WalkProfile:
    """Partial sums F(0..L) of the membership difference of two equal-arity tuples."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if not vals or vals[0] != 0:
            raise InvalidInput("profile must start at F(0)=0")
        if any(abs(b - a) > 1 for a, b in zip(vals, vals[1:])):
            raise InvalidInput("profile steps must be -1, 0 or +1")
        if vals[-1] != 0:
            raise InvalidInput("profile must end at 0 (equal arities)")
        object.__setattr__(self, "values", vals)

    @property
    def max(self) -> int:
        return max(self.values)

    @property
    def min(self) -> int:
        return min(self.values)

    @property
    def range(self) -> int:
        return self.max - self.min


def _check_same_arity(n: InterlacedTuple, m: InterlacedTuple) -> None:
    if n.arity != m.arity:
        raise InvalidInput(f"arity mismatch: {n.arity} vs {m.arity}")


def is_adjacent(n: InterlacedTuple, m: InterlacedTuple) -> bool:
    """True iff n != m and the entries interlace in one of the two orders."""
    _check_same_arity(n, m)
    if n.entries == m.entries:
        return False

    def chain(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        k = len(a)
        return all(a[i] <= b[i] for i in range(k)) and all(
            b[i] <= a[i + 1] for i in range(k - 1)
        )

    return chain(n.entries, m.entries) or chain(m.entries, n.entries)


def walk_profile(n: InterlacedTuple, m: InterlacedTuple) -> WalkProfile:
    """F(i) for i = 0..max(n_k, m_k); F counts membership surplus of n over m."""
    _check_same_arity(n, m)
    top = max(n.top, m.top)
    sn, sm = set(n.entries), set(m.entries)
    vals = [0]
    for j in range(1, top + 1):
        vals.append(vals[-1] + (j in sn) - (j in sm))
    return WalkProfile(tuple(vals))


def dist(n: InterlacedTuple, m: InterlacedTuple) -> int:
    """Graph distance via the profile formula max(F) - min(F)."""
    return walk_profile(n, m).range


def dist_oracle_bfs(n: InterlacedTuple, m: InterlacedTuple) -> int:
    """Breadth-first shortest path, independent of the profile formula.

    The search runs in the finite graph on all arity-k tuples drawn from
    entries(n) ∪ entries(m).  This universe is exact: geodesics exist whose
    every step only exchanges elements of n\\m for elements of m\\n, so a
    shortest path never needs values outside the two tuples.
    """
    _check_same_arity(n, m)
    if n.entries == m.entries:
        return 0
    universe = sorted(set(n.entries) | set(m.entries))
    k = n.arity
    verts = [InterlacedTuple(c) for c in itertools.combinations(universe, k)]
    seen = {n.entries: 0}
    queue = deque([n])
    while queue:
        v = queue.popleft()
        for w in verts:
            if w.entries not in seen and is_adjacent(v, w):
                seen[w.entries] = seen[v.entries] + 1
                if w.entries == m.entries:
                    return seen[w.entries]
                queue.append(w)
    raise AssertionError("BFS exhausted the universe without reaching the target")


def _forward_step(n: InterlacedTuple, m: InterlacedTuple) -> InterlacedTuple:
    """One geodesic step away from n, assuming max F_{n,m} > 0.

    Selects interlaced extremal indices of the profile: a_1 = min argmax(F),
    then alternately the first argmin after the last a and the first argmax
    after the last b.  The a's lie in n\\m, the b's in m\\n, and swapping them
    lowers every fresh maximum of the profile by one.  When the selection ends
    with one more a than b, the closing point r is the first strict descent of
    F after the *last* argmax: the correction window [a_p, r) must cover every
    argmax, otherwise the profile re-attains its old maximum beyond r and the
    distance does not decrease (e.g. n=(2,3,5), m=(1,4,6)).
    """
    F = walk_profile(n, m).values
    mx, mn = max(F), min(F)
    if mx <= 0:
        raise AssertionError("forward step requires a positive profile maximum")
    argmax = [i for i, v in enumerate(F) if v == mx]
    argmin = [i for i, v in enumerate(F) if v == mn]
    a = [argmax[0]]
    b: list[int] = []
    while True:
        nxt_b = next((i for i in argmin if i > a[-1]), None)
        if nxt_b is None:
            break
        b.append(nxt_b)
        nxt_a = next((i for i in argmax if i > b[-1]), None)
        if nxt_a is None:
            break
        a.append(nxt_a)
    if len(a) == len(b) + 1:
        r = next(i for i in range(argmax[-1] + 1, len(F)) if F[i - 1] > F[i])
        b.append(r)
    step = tuple(sorted((set(n.entries) - set(a)) | set(b)))
    return InterlacedTuple(step)


def geodesic_path(n: InterlacedTuple, m: InterlacedTuple) -> list[InterlacedTuple]:
    """A shortest path n = v_0, v_1, ..., v_d = m with consecutive vertices adjacent.

    The path is assembled from both ends: each round advances whichever
    endpoint currently has the positive profile bump (the construction assumes
    max F > 0, so when max F_{left,right} <= 0 the step is taken from the right
    endpoint instead).  Each step lowers the remaining distance by exactly one.
    """
    _check_same_arity(n, m)
    d = dist(n, m)
    left, right = [n], [m]
    for _ in range(d + 1):
        a, b = left[-1], right[0]
        if a.entries == b.entries:
            return left + right[1:]
        if dist(a, b) == 1:
            return left + right
        if walk_profile(a, b).max > 0:
            left.append(_forward_step(a, b))
        else:
            right.insert(0, _forward_step(b, a))
    raise AssertionError("geodesic assembly did not converge")


def geodesic_step(n: InterlacedTuple, m: InterlacedTuple) -> InterlacedTuple:
    """The first vertex after n on a geodesic to m; requires dist(n, m) >= 2.

    Guarantees dist(n, result) = 1 and dist(result, m) = dist(n, m) - 1.
    """
    _check_same_arity(n, m)
    if dist(n, m) < 2:
        raise InvalidInput("geodesic_step requires dist(n, m) >= 2")
    return geodesic_path(n, m)[1]


def enumerate_tuples(universe: Iterable[int], k: int) -> list[InterlacedTuple]:
    """All C(|universe|, k) arity-k tuples over the universe, in lexicographic order."""
    uni = sorted(set(int(v) for v in universe))
    if k < 1:
        raise InvalidInput("arity must be >= 1")
    if len(uni) < k:
        raise InvalidInput(f"universe of size {len(uni)} cannot host arity {k}")
    return [InterlacedTuple(c) for c in itertools.combinations(uni, k)]
