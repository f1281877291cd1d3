"""James-tree norm solvers, witnesses, and the branch embeddings."""

import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interlace import (
    Branch,
    InvalidInput,
    Segment,
    TreeVec,
    UnsupportedInstance,
    enumerate_tuples,
    f_difference_segments,
    f_embed,
    f_separation,
    g_embed,
    g_separation,
    is_adjacent,
    itup,
    jt_family_value,
    jt_norm_exact,
    pair,
    segment_functional,
    segment_nodes,
)

SQ2 = math.sqrt(2)


def two_branch_vecs():
    bits = st.text(alphabet="01", min_size=3, max_size=3)
    vals = st.sampled_from([-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5])

    def build(a, b, draws):
        nodes = sorted({n[:j] for n in (a, b) for j in range(4)}, key=lambda s: (len(s), s))
        return TreeVec({v: draws[i % len(draws)] for i, v in enumerate(nodes)})

    return st.builds(build, bits, bits, st.lists(vals, min_size=7, max_size=7))


class TestSegments:
    def test_root_singleton(self):
        assert segment_nodes(Segment("", "")) == [""]

    def test_two_node_chain(self):
        assert segment_nodes(Segment("0", "00")) == ["0", "00"]

    def test_root_to_depth_three(self):
        assert segment_nodes(Segment("", "101")) == ["", "1", "10", "101"]

    def test_rejects_non_prefix(self):
        with pytest.raises(InvalidInput):
            Segment("1", "01")

    def test_rejects_bad_bits(self):
        with pytest.raises(InvalidInput):
            Segment("2", "20")


class TestTreeVec:
    def test_drops_zeros(self):
        assert TreeVec({"0": 0.0, "1": 2.0}).support == ("1",)

    def test_arithmetic(self):
        x, y = TreeVec({"0": 1.0}), TreeVec({"0": -1.0, "11": 0.5})
        assert (x + y).support == ("11",)
        assert (2.0 * x).value("0") == 2.0

    def test_json_round_trip(self):
        x = TreeVec({"": 1.0, "01": -0.5})
        assert TreeVec.from_json_dict(x.to_json_dict()) == x

    def test_equality_ignores_the_depth_cap(self):
        assert TreeVec({"0": 1.0}, depth_cap=8) == TreeVec({"0": 1.0}, depth_cap=12)

    def test_depth_cap_enforced_on_load(self):
        with pytest.raises(InvalidInput):
            TreeVec.from_json_dict({"0" * 9: 1.0}, depth_cap=8)

    def test_rejects_bad_keys(self):
        with pytest.raises(InvalidInput):
            TreeVec({"ab": 1.0})


class TestBranch:
    def test_prefix(self):
        assert Branch("0110").prefix(0) == ""
        assert Branch("0110").prefix(3) == "011"

    def test_too_short(self):
        with pytest.raises(InvalidInput):
            Branch("01").prefix(3)


class TestJTNorm:
    def test_unit_vector_at_root(self):
        norm, witness = jt_norm_exact(TreeVec({"": 1.0}))
        assert norm == 1.0
        assert jt_family_value(TreeVec({"": 1.0}), witness) == 1.0

    def test_incomparable_pair(self):
        norm, _ = jt_norm_exact(TreeVec({"0": 1.0, "1": 1.0}))
        assert abs(norm - SQ2) < 1e-12

    def test_single_segment_beats_split(self):
        norm, _ = jt_norm_exact(TreeVec({"0": 0.5, "00": 0.5}))
        assert abs(norm - 1.0) < 1e-12

    def test_zero_vector(self):
        norm, witness = jt_norm_exact(TreeVec({}))
        assert norm == 0.0 and witness == []

    def test_family_value_empty(self):
        assert jt_family_value(TreeVec({"0": 1.0}), []) == 0.0

    def test_family_value_rejects_overlap(self):
        x = TreeVec({"0": 1.0})
        with pytest.raises(InvalidInput):
            jt_family_value(x, [Segment("", "0"), Segment("0", "00")])

    def test_family_value_full_branch_segment_on_g_image(self):
        for k in (2, 8):
            sigma = Branch("0" * k)
            image = g_embed(sigma, k, itup(*range(1, k + 1)))
            seg = Segment(sigma.prefix(1), sigma.prefix(k))
            got = jt_family_value(image, [seg])  # segment sum is k / sqrt(2k)
            assert abs(got - math.sqrt(k / 2.0)) < 1e-12

    def test_cancellation_forces_split(self):
        # signs flip along the chain: two short segments beat one long one
        x = TreeVec({"": 1.0, "0": -1.0, "00": 1.0})
        norm, witness = jt_norm_exact(x, mode="exhaustive")
        assert abs(norm - math.sqrt(3)) < 1e-12
        assert abs(jt_family_value(x, witness) - norm) < 1e-12

    def test_modes_reject_out_of_scope_inputs(self):
        deep = TreeVec({"0000": 1.0})
        with pytest.raises(UnsupportedInstance):
            jt_norm_exact(deep, mode="exhaustive")
        three_branches = TreeVec({"00": 1.0, "01": 1.0, "10": 1.0})
        with pytest.raises(UnsupportedInstance):
            jt_norm_exact(three_branches, mode="spider")
        deep_bush = TreeVec({"0000": 1.0, "0100": 1.0, "1000": 1.0, "1100": 1.0})
        with pytest.raises(UnsupportedInstance):
            jt_norm_exact(deep_bush, mode="auto")
        with pytest.raises(InvalidInput):
            jt_norm_exact(deep, mode="magic")

    def test_spider_handles_depth_beyond_exhaustive(self):
        x = TreeVec({"0" * j: 1.0 if j % 2 == 0 else -1.0 for j in range(7)})
        norm, witness = jt_norm_exact(x, mode="spider")
        assert abs(jt_family_value(x, witness) - norm) < 1e-12
        assert abs(norm - math.sqrt(7)) < 1e-12  # alternating signs: 7 singletons

    @settings(max_examples=80, deadline=None)
    @given(two_branch_vecs())
    def test_solver_equivalence(self, x):
        ve, we = jt_norm_exact(x, mode="exhaustive")
        vs, ws = jt_norm_exact(x, mode="spider")
        assert abs(ve - vs) <= 1e-12 * max(1.0, ve)
        assert abs(jt_family_value(x, we) - ve) <= 1e-12 * max(1.0, ve)
        assert abs(jt_family_value(x, ws) - vs) <= 1e-12 * max(1.0, vs)

    @settings(max_examples=50, deadline=None)
    @given(two_branch_vecs(), two_branch_vecs(), st.sampled_from([0.25, 0.5, 2.0]))
    def test_norm_axioms(self, x, y, lam):
        nx, _ = jt_norm_exact(x, mode="exhaustive")
        ny, _ = jt_norm_exact(y, mode="exhaustive")
        nxy, _ = jt_norm_exact(x + y, mode="exhaustive")
        assert nxy <= nx + ny + 1e-9
        nlx, _ = jt_norm_exact(lam * x, mode="exhaustive")
        assert abs(nlx - lam * nx) <= 1e-12 * max(1.0, nlx)

    @settings(max_examples=40, deadline=None)
    @given(two_branch_vecs())
    def test_segment_functionals_lie_in_the_dual_ball(self, x):
        norm, _ = jt_norm_exact(x, mode="exhaustive")
        for hi in ("", "0", "01", "111"):
            for j in range(len(hi) + 1):
                seg = Segment(hi[:j], hi)
                assert pair(segment_functional(seg), x) <= norm + 1e-12


class TestPair:
    def test_biorthogonal(self):
        assert pair(TreeVec({"01": 1.0}), TreeVec({"01": 1.0})) == 1.0
        assert pair(TreeVec({"01": 1.0}), TreeVec({"1": 1.0})) == 0.0

    def test_segment_functional_sums(self):
        x = TreeVec({"": 1.0, "0": 2.0, "00": -3.0, "1": 7.0})
        assert pair(segment_functional(Segment("", "00")), x) == 0.0


class TestGEmbedding:
    def test_basic_image(self):
        sigma = Branch("000")
        vec = g_embed(sigma, 2, itup(1, 2))
        assert vec == TreeVec({"0": 0.5, "00": 0.5})
        assert abs(jt_norm_exact(vec)[0] - 1.0) < 1e-12

    def test_singleton_norm(self):
        vec = g_embed(Branch("0000"), 1, itup(3))
        assert abs(jt_norm_exact(vec)[0] - 1 / SQ2) < 1e-12

    def test_adjacent_pairs_are_one_lipschitz(self):
        sigma = Branch("0" * 7)
        for k in (1, 2, 3):
            verts = enumerate_tuples(range(1, 7), k)
            for n, m in itertools.combinations(verts, 2):
                if not is_adjacent(n, m):
                    continue
                diff = g_embed(sigma, k, n) - g_embed(sigma, k, m)
                norm, _ = jt_norm_exact(diff, mode="spider")
                assert norm <= 1.0 + 1e-9

    def test_branch_too_short(self):
        with pytest.raises(InvalidInput):
            g_embed(Branch("0"), 1, itup(5))

    def test_arity_mismatch(self):
        with pytest.raises(InvalidInput):
            g_embed(Branch("000"), 2, itup(1, 2, 3))


class TestFEmbedding:
    def test_depth_one(self):
        vec = f_embed(Branch("0"), 1, itup(1))
        assert vec == TreeVec({"": 1.0, "0": 1.0})

    def test_depth_two_counts_prefixes(self):
        vec = f_embed(Branch("00"), 2, itup(1, 2))
        want = {"": 2 / SQ2, "0": 2 / SQ2, "00": 1 / SQ2}
        assert set(vec.entries) == set(want)
        for key, val in want.items():
            assert abs(vec.value(key) - val) < 1e-12

    def test_difference_decomposition(self):
        sigma = Branch("0" * 8)
        for k in (1, 2, 3):
            verts = enumerate_tuples(range(1, 7), k)
            for n, m in itertools.combinations(verts, 2):
                if not is_adjacent(n, m):
                    continue
                segs = f_difference_segments(sigma, k, n, m)  # identity checked inside
                assert len(segs) <= k
                nodes = [node for seg in segs for node in seg.nodes()]
                assert len(nodes) == len(set(nodes))

    def test_difference_requires_adjacency(self):
        with pytest.raises(InvalidInput):
            f_difference_segments(Branch("0" * 8), 2, itup(1, 2), itup(5, 6))

    def test_root_shift_cancels_in_differences(self):
        # the common root multiple is invisible to every certificate
        sigma = Branch("0" * 6)
        diff = f_embed(sigma, 2, itup(2, 4)) - f_embed(sigma, 2, itup(3, 5))
        assert "" not in diff.entries


class TestSeparations:
    def test_f_separation_examples(self):
        s0, s1 = Branch("0" * 9), Branch("1" * 9)
        assert abs(f_separation(s0, s1, 1, itup(1)) - 1.0) < 1e-12
        got = f_separation(s0, s1, 4, itup(1, 2, 3, 4))
        assert got >= 2.0 - 1e-12

    def test_f_separation_equal_branches(self):
        s0 = Branch("0101")
        assert f_separation(s0, Branch("0101"), 2, itup(1, 2)) == 0.0

    def test_f_separation_precondition(self):
        s0, s1 = Branch("0011"), Branch("0010")
        with pytest.raises(InvalidInput):
            f_separation(s0, s1, 1, itup(2))  # first disagreement at 4 > 2

    def test_g_separation_examples(self):
        s0, s1 = Branch("0" * 9), Branch("1" * 9)
        got = g_separation(s0, s1, 2, itup(1, 2))
        assert abs(got - 1.0) < 1e-12  # sqrt(2/2)
        got = g_separation(s0, s1, 8, itup(1, 2, 3, 4, 5, 6, 7, 8))
        assert abs(got - 2.0) < 1e-12  # sqrt(8/2)

    def test_g_separation_matches_exact_norm_lower_bound(self):
        s0, s1 = Branch("0" * 6, ), Branch("1" * 6)
        for k, n in ((1, itup(2)), (2, itup(1, 3)), (3, itup(1, 2, 5))):
            val = g_separation(s0, s1, k, n)
            diff = g_embed(s0, k, n) - g_embed(s1, k, n)
            norm, _ = jt_norm_exact(diff, mode="spider")
            assert norm >= val - 1e-12
            assert abs(val - math.sqrt(k / 2.0)) < 1e-12

    def test_g_separation_equal_branches(self):
        assert g_separation(Branch("00"), Branch("00"), 1, itup(2)) == 0.0


def test_random_spider_instances_match_bruteforce_families():
    """Independent third check: enumerate disjoint families over raw segments."""

    def brute(x: TreeVec) -> float:
        nodes = [""] + ["".join(p) for d in (1, 2, 3) for p in itertools.product("01", repeat=d)]
        segs = []
        for hi in nodes:
            for j in range(len(hi) + 1):
                segs.append(frozenset(Segment(hi[:j], hi).nodes()))
        seg_list = [(s, sum(x.value(v) for v in s)) for s in segs]
        best = 0.0

        def rec(i: int, used: frozenset, acc: float) -> None:
            nonlocal best
            if acc > best:
                best = acc
            if i == len(seg_list):
                return
            rec(i + 1, used, acc)
            nodes_i, total = seg_list[i]
            if not (nodes_i & used):
                rec(i + 1, used | nodes_i, acc + total * total)

        rec(0, frozenset(), 0.0)
        return math.sqrt(best)

    rng = random.Random(77)
    for _ in range(15):
        a = "".join(rng.choice("01") for _ in range(3))
        b = "".join(rng.choice("01") for _ in range(3))
        entries = {
            nd[:j]: rng.choice([-1.0, -0.5, 0.0, 0.5, 1.0])
            for nd in (a, b)
            for j in range(4)
        }
        x = TreeVec(entries)
        got, _ = jt_norm_exact(x, mode="exhaustive")
        assert abs(got - brute(x)) < 1e-12
