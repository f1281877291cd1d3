"""The dyadic tree, the James-tree norm as segment optimization, and tree embeddings.

Nodes of the dyadic tree are finite 0/1 strings ("" is the root); s <= t when t
extends s.  A segment is the vertical chain between two comparable nodes.  For
a finitely supported x: T -> R the James-tree norm is

    ||x||_JT = sup ( sum_i (sum_{s in S_i} x(s))^2 )^(1/2)

over families of pairwise node-disjoint segments S_1, ..., S_n.  Two exact
solvers are provided and certify each other:

* exhaustive mode (support depth <= 3): depth-first enumeration over per-node
  choices -- skip the node, start a new segment, or extend the segment open at
  the parent into exactly one child -- scoring (sum)^2 at segment closure.
  Values of segment-free subtrees are cached; caching only avoids re-walking
  independent subtrees and does not change what is enumerated.
* spider mode (support inside at most two root branches, any depth): segments
  meeting both legs would have to share the fork node, so at most one segment
  crosses the fork and it continues into at most one leg.  Every family thus
  splits into a family on stem+leg_a plus a family on leg_b (or vice versa),
  and each path instance is solved by interval dynamic programming
  best(i) = max(best(i-1), max_j best(j-1) + (sum_{j..i})^2).

Inputs outside both modes are rejected rather than silently approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import InvalidInput, UnsupportedInstance
from .graphs import InterlacedTuple, is_adjacent

__all__ = [
    "Segment",
    "TreeVec",
    "Branch",
    "segment_nodes",
    "segment_functional",
    "jt_family_value",
    "jt_norm_exact",
    "pair",
    "g_embed",
    "f_embed",
    "f_separation",
    "g_separation",
    "f_difference_segments",
    "DEFAULT_DEPTH_CAP",
    "EXHAUSTIVE_DEPTH_CAP",
]

DEFAULT_DEPTH_CAP = 8
EXHAUSTIVE_DEPTH_CAP = 3


def _check_bits(s: str) -> str:
    if not isinstance(s, str) or any(c not in "01" for c in s):
        raise InvalidInput(f"tree nodes are 0/1 strings, got {s!r}")
    return s


@dataclass(frozen=True)
class Segment:
    """Vertical chain between two comparable nodes: all prefixes of hi above lo."""

    lo: str
    hi: str

    def __post_init__(self) -> None:
        _check_bits(self.lo)
        _check_bits(self.hi)
        if not self.hi.startswith(self.lo):
            raise InvalidInput(f"{self.lo!r} is not a prefix of {self.hi!r}")

    def nodes(self) -> list[str]:
        return [self.hi[:j] for j in range(len(self.lo), len(self.hi) + 1)]


def segment_nodes(seg: Segment) -> list[str]:
    """The chain lo, ..., hi (|hi| - |lo| + 1 nodes)."""
    return seg.nodes()


@dataclass(frozen=True)
class TreeVec:
    """Finitely supported function on the dyadic tree; zero entries are dropped."""

    entries: Mapping[str, float]
    depth_cap: int = field(default=DEFAULT_DEPTH_CAP, compare=False)

    def __post_init__(self) -> None:
        clean = {}
        for key, val in self.entries.items():
            _check_bits(key)
            v = float(val)
            if v != 0.0:
                clean[key] = v
        cap = max(self.depth_cap, max((len(k) for k in clean), default=0))
        object.__setattr__(self, "entries", clean)
        object.__setattr__(self, "depth_cap", cap)

    def value(self, node: str) -> float:
        return self.entries.get(node, 0.0)

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(sorted(self.entries, key=lambda s: (len(s), s)))

    @property
    def depth(self) -> int:
        return max((len(k) for k in self.entries), default=0)

    def __add__(self, other: "TreeVec") -> "TreeVec":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0.0) + v
        return TreeVec(out)

    def __neg__(self) -> "TreeVec":
        return TreeVec({k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "TreeVec") -> "TreeVec":
        return self + (-other)

    def __mul__(self, scalar: float) -> "TreeVec":
        s = float(scalar)
        return TreeVec({k: s * v for k, v in self.entries.items()})

    __rmul__ = __mul__

    def to_json_dict(self) -> dict[str, float]:
        return {k: self.entries[k] for k in self.support}

    @staticmethod
    def from_json_dict(obj: Mapping[str, float], depth_cap: int = DEFAULT_DEPTH_CAP) -> "TreeVec":
        if not isinstance(obj, Mapping):
            raise InvalidInput("tree vectors are JSON objects mapping bit-strings to numbers")
        for key in obj:
            _check_bits(key)
            if len(key) > depth_cap:
                raise InvalidInput(
                    f"node {key!r} exceeds the depth cap {depth_cap}"
                )
        return TreeVec(dict(obj), depth_cap=depth_cap)


@dataclass(frozen=True)
class Branch:
    """A finite 0/1 prefix standing in for an infinite branch of the tree."""

    bits: str

    def __post_init__(self) -> None:
        _check_bits(self.bits)

    def prefix(self, n: int) -> str:
        if n > len(self.bits):
            raise InvalidInput(
                f"branch of length {len(self.bits)} is too short for depth {n}"
            )
        return self.bits[:n]


def segment_functional(seg: Segment) -> TreeVec:
    """Coefficient vector of the functional x -> sum of x over the segment."""
    return TreeVec({node: 1.0 for node in seg.nodes()})


def jt_family_value(x: TreeVec, family: Sequence[Segment]) -> float:
    """( sum_i (segment sum)^2 )^(1/2); the family must be pairwise node-disjoint."""
    seen: set[str] = set()
    total = 0.0
    for seg in family:
        nodes = seg.nodes()
        for node in nodes:
            if node in seen:
                raise InvalidInput(f"segments overlap at node {node!r}")
            seen.add(node)
        s = sum(x.value(node) for node in nodes)
        total += s * s
    return math.sqrt(total)


def _witness_sorted(segs: Sequence[Segment]) -> list[Segment]:
    return sorted(segs, key=lambda s: (len(s.lo), s.lo, len(s.hi), s.hi))


def _exhaustive_solver(x: TreeVec) -> tuple[float, list[Segment]]:
    supp = x.support
    if not supp:
        return 0.0, []
    closure: set[str] = set()
    for s in supp:
        for j in range(len(s) + 1):
            closure.add(s[:j])
    children = {
        v: [w for w in (v + "0", v + "1") if w in closure] for v in closure
    }
    free_memo: dict[str, tuple[float, tuple[Segment, ...]]] = {}

    def free(v: str) -> tuple[float, tuple[Segment, ...]]:
        # best families in the subtree at v with no segment entering v
        cached = free_memo.get(v)
        if cached is not None:
            return cached
        best_val = 0.0
        best_wit: tuple[Segment, ...] = ()
        for c in children[v]:
            cv, cw = free(c)
            best_val += cv
            best_wit += cw
        sv, sw = started(v, 0.0, v)
        if sv > best_val:
            best_val, best_wit = sv, sw
        free_memo[v] = (best_val, best_wit)
        return free_memo[v]

    def started(v: str, carry: float, lo: str) -> tuple[float, tuple[Segment, ...]]:
        # a segment beginning at lo is open and has been extended into v
        s = carry + x.value(v)
        best_val = s * s
        best_wit: tuple[Segment, ...] = (Segment(lo, v),) if s != 0.0 else ()
        for c in children[v]:
            cv, cw = free(c)
            best_val += cv
            best_wit += cw
        for c in children[v]:  # extend into exactly one child
            ev, ew = started(c, s, lo)
            for other in children[v]:
                if other != c:
                    fv, fw = free(other)
                    ev += fv
                    ew += fw
            if ev > best_val:
                best_val, best_wit = ev, ew
        return best_val, best_wit

    val, wit = free("")
    return math.sqrt(val), _witness_sorted(wit)


def _path_dp(nodes: Sequence[str], x: TreeVec) -> tuple[float, list[Segment]]:
    """Max sum of squared interval sums over disjoint intervals of a descending path."""
    vals = [x.value(v) for v in nodes]
    L = len(vals)
    prefix = [0.0]
    for v in vals:
        prefix.append(prefix[-1] + v)
    best = [0.0] * (L + 1)
    cut: list[int | None] = [None] * (L + 1)
    for i in range(1, L + 1):
        best[i] = best[i - 1]
        cut[i] = None
        for j in range(1, i + 1):
            s = prefix[i] - prefix[j - 1]
            cand = best[j - 1] + s * s
            if cand > best[i]:
                best[i] = cand
                cut[i] = j
    segs: list[Segment] = []
    i = L
    while i > 0:
        j = cut[i]
        if j is None:
            i -= 1
        else:
            if prefix[i] - prefix[j - 1] != 0.0:
                segs.append(Segment(nodes[j - 1], nodes[i - 1]))
            i = j - 1
    return best[L], segs


def _maximal_support(x: TreeVec) -> list[str]:
    supp = x.support
    return [s for s in supp if not any(t != s and t.startswith(s) for t in supp)]


def _spider_solver(x: TreeVec) -> tuple[float, list[Segment]]:
    supp = x.support
    if not supp:
        return 0.0, []
    maximal = _maximal_support(x)
    if len(maximal) > 2:
        raise UnsupportedInstance(
            "spider mode needs support inside at most two root branches"
        )
    if len(maximal) == 1:
        top = maximal[0]
        val, segs = _path_dp(Segment("", top).nodes(), x)
        return math.sqrt(val), _witness_sorted(segs)
    a, b = sorted(maximal)
    fork = 0
    while fork < min(len(a), len(b)) and a[fork] == b[fork]:
        fork += 1
    # at most one segment contains the fork node and it descends into one leg,
    # so an optimal family lives on (root..a) + (leg of b), or the mirror image
    va, wa = _path_dp(Segment("", a).nodes(), x)
    vb, wb = _path_dp(Segment(b[: fork + 1], b).nodes(), x)
    vc, wc = _path_dp(Segment("", b).nodes(), x)
    vd, wd = _path_dp(Segment(a[: fork + 1], a).nodes(), x)
    if va + vb >= vc + vd:
        return math.sqrt(va + vb), _witness_sorted(wa + wb)
    return math.sqrt(vc + vd), _witness_sorted(wc + wd)


def jt_norm_exact(x: TreeVec, mode: str = "auto") -> tuple[float, list[Segment]]:
    """Exact James-tree norm and a maximizing disjoint segment family.

    mode="exhaustive" needs support depth <= 3; mode="spider" needs support
    inside at most two root branches; "auto" tries spider first, then
    exhaustive, and rejects anything else.
    """
    if mode == "exhaustive":
        if x.depth > EXHAUSTIVE_DEPTH_CAP:
            raise UnsupportedInstance(
                f"exhaustive mode handles support depth <= {EXHAUSTIVE_DEPTH_CAP}"
            )
        return _exhaustive_solver(x)
    if mode == "spider":
        return _spider_solver(x)
    if mode == "auto":
        if len(_maximal_support(x)) <= 2:
            return _spider_solver(x)
        if x.depth <= EXHAUSTIVE_DEPTH_CAP:
            return _exhaustive_solver(x)
        raise UnsupportedInstance(
            "input is outside both exact modes: need support depth <= "
            f"{EXHAUSTIVE_DEPTH_CAP} or support within two root branches"
        )
    raise InvalidInput(f"unknown mode {mode!r}")


def pair(u: TreeVec, x: TreeVec) -> float:
    """Duality pairing sum_s u(s) x(s) of a coefficient vector against a tree vector."""
    if len(u.entries) > len(x.entries):
        u, x = x, u
    return sum(v * x.value(k) for k, v in u.entries.items())


def g_embed(sigma: Branch, k: int, n: InterlacedTuple) -> TreeVec:
    """(2k)^(-1/2) times the sum of unit vectors at sigma restricted to each n_i."""
    if n.arity != k:
        raise InvalidInput(f"tuple arity {n.arity} does not match k={k}")
    c = 1.0 / math.sqrt(2 * k)
    out: dict[str, float] = {}
    for ni in n:
        key = sigma.prefix(ni)
        out[key] = out.get(key, 0.0) + c
    return TreeVec(out)


def f_embed(sigma: Branch, k: int, n: InterlacedTuple) -> TreeVec:
    """Dual-side image: coefficient of s is k^(-1/2) |{i : s <= sigma|n_i}|.

    The root is included among the prefixes; this shifts every image by the
    same multiple of the root functional and cancels in all differences.
    """
    if n.arity != k:
        raise InvalidInput(f"tuple arity {n.arity} does not match k={k}")
    sigma.prefix(n.top)  # raises if the branch is too short
    c = 1.0 / math.sqrt(k)
    out: dict[str, float] = {}
    for j in range(0, n.top + 1):
        count = sum(1 for ni in n if ni >= j)
        if count:
            out[sigma.prefix(j)] = c * count
    return TreeVec(out)


def _first_disagreement(sigma: Branch, tau: Branch, needed: int) -> int | None:
    """1-based index of the first differing stored bit; None for the same branch.

    Both prefixes must cover depth `needed`.  Prefixes that agree on their
    common length but have different lengths leave the disagreement point
    undetermined, which is rejected rather than guessed.
    """
    sigma.prefix(needed)
    tau.prefix(needed)
    common = min(len(sigma.bits), len(tau.bits))
    for i in range(common):
        if sigma.bits[i] != tau.bits[i]:
            return i + 1
    if len(sigma.bits) != len(tau.bits):
        raise InvalidInput(
            "branches agree on their common prefix but differ in length; "
            "extend the prefixes to locate the first disagreement"
        )
    return None


def f_separation(sigma: Branch, tau: Branch, k: int, n: InterlacedTuple) -> float:
    """Pair f(sigma) - f(tau) against the unit vector at sigma|n_1; equals sqrt(k).

    Requires the branches to disagree at some index r <= n_1 (identical
    branches return 0).  The witness vector has James-tree norm 1, which makes
    the pairing a lower bound for the dual-side separation.
    """
    if n.arity != k:
        raise InvalidInput(f"tuple arity {n.arity} does not match k={k}")
    r = _first_disagreement(sigma, tau, n.top)
    if r is None:
        return 0.0
    if r > n.entries[0]:
        raise InvalidInput(
            f"branches first disagree at {r}, after n_1 = {n.entries[0]}"
        )
    witness = TreeVec({sigma.prefix(n.entries[0]): 1.0})
    norm, _ = jt_norm_exact(witness, mode="spider")
    if abs(norm - 1.0) > 1e-12:
        raise AssertionError("unit witness vector must have norm 1")
    diff = f_embed(sigma, k, n) - f_embed(tau, k, n)
    return pair(diff, witness)


def g_separation(sigma: Branch, tau: Branch, k: int, n: InterlacedTuple) -> float:
    """Pair g(sigma) - g(tau) against the segment functional between sigma|n_1
    and sigma|n_k; equals sqrt(k/2) when the branches disagree before n_1.

    Cross-checks that the exact spider norm of the difference dominates the
    returned pairing (the functional lies in the dual unit ball).
    """
    if n.arity != k:
        raise InvalidInput(f"tuple arity {n.arity} does not match k={k}")
    r = _first_disagreement(sigma, tau, n.top)
    if r is None:
        return 0.0
    if r > n.entries[0]:
        raise InvalidInput(
            f"branches first disagree at {r}, after n_1 = {n.entries[0]}"
        )
    seg = Segment(sigma.prefix(n.entries[0]), sigma.prefix(n.top))
    functional = segment_functional(seg)
    diff = g_embed(sigma, k, n) - g_embed(tau, k, n)
    value = pair(diff, functional)
    norm, _ = jt_norm_exact(diff, mode="spider")
    if norm < value - 1e-12:
        raise AssertionError("spider norm fell below the functional lower bound")
    return value


def f_difference_segments(
    sigma: Branch, k: int, n: InterlacedTuple, m: InterlacedTuple
) -> list[Segment]:
    """Decompose f(m) - f(n) for an interlaced-adjacent pair into disjoint segments.

    With n_1 <= m_1 <= ... <= n_k <= m_k the difference has coefficient
    k^(-1/2) exactly on the chains sigma|(n_i + 1) .. sigma|m_i (empty when
    n_i = m_i), which are pairwise disjoint by the interlacing.  The identity
    is verified coefficient by coefficient before returning; the roles of n
    and m are swapped when m leads.
    """
    if not is_adjacent(n, m):
        raise InvalidInput("the decomposition applies to adjacent pairs only")

    def leads(a: InterlacedTuple, b: InterlacedTuple) -> bool:
        return all(x <= y for x, y in zip(a, b))

    lo, hi = (n, m) if leads(n, m) else (m, n)
    segs = [
        Segment(sigma.prefix(a + 1), sigma.prefix(b))
        for a, b in zip(lo, hi)
        if b > a
    ]
    expect = TreeVec({})
    c = 1.0 / math.sqrt(k)
    for seg in segs:
        expect = expect + c * segment_functional(seg)
    actual = f_embed(sigma, k, hi) - f_embed(sigma, k, lo)
    keys = set(expect.entries) | set(actual.entries)
    for key in keys:
        if abs(expect.value(key) - actual.value(key)) > 1e-12:
            raise AssertionError(f"decomposition mismatch at node {key!r}")
    return _witness_sorted(segs)
