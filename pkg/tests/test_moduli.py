"""Empirical moduli, Lipschitz constants, probes, and the equicoarse table."""

import math

import pytest

from interlace import (
    FinSeq,
    InvalidInput,
    MapSample,
    compute_moduli,
    concentration_probe,
    equicoarse_report,
    itup,
    lipschitz_constant,
    sup_norm,
)
from interlace.errors import ResourceLimit
from interlace.moduli import (
    constant_map_sample,
    g_map_sample,
    identity_map_sample,
    summing_map_sample,
)


class TestComputeModuli:
    def test_identity_map_moduli_sit_on_the_diagonal(self):
        report = compute_moduli(identity_map_sample(2, 5))
        for t, rho, omega in report.rows():
            assert rho >= t
            assert omega <= t

    def test_constant_map(self):
        report = compute_moduli(constant_map_sample(2, 5))
        assert all(r == 0.0 for r in report.rho_hat)
        assert all(w == 0.0 for w in report.omega_hat)

    def test_summing_sample_respects_distortion(self):
        report = compute_moduli(summing_map_sample(3, 8), thresholds=[1.0, 2.0, 3.0])
        for t, rho, omega in report.rows():
            assert rho >= t / 2
            assert omega <= t

    def test_bracketing(self):
        sample = summing_map_sample(2, 6)
        report = compute_moduli(sample)
        lookup = dict(zip(report.thresholds, zip(report.rho_hat, report.omega_hat)))
        for ds, dt in sample.pair_distances():
            rho, omega = lookup[ds]
            assert rho <= dt <= omega

    def test_monotone_in_threshold(self):
        report = compute_moduli(summing_map_sample(2, 6))
        assert list(report.rho_hat) == sorted(report.rho_hat)
        assert list(report.omega_hat) == sorted(report.omega_hat)

    def test_empty_constraint_conventions(self):
        sample = identity_map_sample(1, 3)
        report = compute_moduli(sample, thresholds=[50.0])
        assert report.rho_hat == (math.inf,)  # no pair is that far apart
        assert report.omega_hat[0] >= 0.0

    def test_rejects_tiny_samples(self):
        with pytest.raises(InvalidInput):
            MapSample([itup(1)], lambda a, b: 0.0, [0.0], lambda a, b: 0.0)

    def test_rejects_negative_thresholds(self):
        with pytest.raises(InvalidInput):
            compute_moduli(identity_map_sample(1, 3), thresholds=[-1.0])


class TestLipschitz:
    def test_summing_embedding_constant_is_one(self):
        assert lipschitz_constant(summing_map_sample(2, 6)) == 1.0
        assert lipschitz_constant(summing_map_sample(3, 7)) == 1.0

    def test_branch_embedding_is_one_lipschitz(self):
        assert lipschitz_constant(g_map_sample(2, 6)) <= 1.0 + 1e-9

    def test_constant_map(self):
        assert lipschitz_constant(constant_map_sample(2, 5)) == 0.0

    def test_rejects_non_graph_source(self):
        sample = MapSample(
            [1, 2], lambda a, b: 0.5 * abs(a - b), [1.0, 2.0], lambda a, b: abs(a - b)
        )
        with pytest.raises(InvalidInput):
            lipschitz_constant(sample)


def _image_table(sample):
    return dict(zip(sample.points, sample.images))


class TestConcentrationProbe:
    def test_constant_map_concentrates(self):
        sample = constant_map_sample(2, 6)
        table = _image_table(sample)
        res = concentration_probe(
            lambda t: table[t], sample.d_target, range(1, 7), 2, c=0.0
        )
        assert res.diameter == 0.0
        assert res.concentrated

    def test_summing_map_does_not_concentrate(self):
        sample = summing_map_sample(3, 10)
        table = _image_table(sample)
        for mode in ("greedy", "exhaustive"):
            res = concentration_probe(
                lambda t: table[t],
                sample.d_target,
                range(1, 11),
                3,
                c=1.0,
                mode=mode,
            )
            assert res.omega_1 == 1.0
            assert res.diameter >= 2.0  # any 4-point sub-universe keeps diameter >= 2
            assert not res.concentrated

    def test_greedy_removes_an_outlier(self):
        def f(t):
            return FinSeq((100.0,)) if t.entries == (6,) else FinSeq()

        res = concentration_probe(
            f, lambda x, y: sup_norm(x - y), range(1, 7), 1, c=1.0
        )
        assert 6 not in res.subset
        assert res.diameter == 0.0
        assert res.concentrated

    def test_exhaustive_small_subsets_are_degenerate(self):
        # over k + 1 elements every pair of tuples is adjacent, so the flag
        # holds trivially; the default subset size 2k avoids this
        sample = summing_map_sample(3, 10)
        table = _image_table(sample)
        res = concentration_probe(
            lambda t: table[t],
            sample.d_target,
            range(1, 11),
            3,
            c=1.0,
            mode="exhaustive",
            subset_size=4,
        )
        assert res.diameter == 1.0
        assert res.concentrated

    def test_exhaustive_cap(self):
        sample = summing_map_sample(1, 14)
        table = _image_table(sample)
        with pytest.raises(ResourceLimit):
            concentration_probe(
                lambda t: table[t],
                sample.d_target,
                range(1, 15),
                1,
                c=1.0,
                mode="exhaustive",
            )

    def test_universe_too_small(self):
        with pytest.raises(InvalidInput):
            concentration_probe(
                lambda t: FinSeq(), lambda x, y: 0.0, range(1, 3), 2, c=1.0
            )


class TestEquicoarse:
    def test_summing_family_signature(self):
        rows = equicoarse_report(
            [(k, summing_map_sample(k, 2 * k)) for k in (1, 2, 3, 4)]
        )
        for row in rows:
            assert row.omega_at_1 == 1.0
            assert row.ratio >= row.k / 2

    def test_constant_family(self):
        rows = equicoarse_report([(k, constant_map_sample(k, 2 * k)) for k in (1, 2)])
        assert all(row.ratio == 0.0 for row in rows)

    def test_branch_family(self):
        rows = equicoarse_report([(k, g_map_sample(k, 2 * k)) for k in (1, 2, 4)])
        for row in rows:
            assert row.omega_at_1 <= 1.0 + 1e-9
            assert row.rho_at_k > 0.0
