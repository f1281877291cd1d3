"""Acceptance gate: every quantitative criterion at its stated tolerance.

Each test prints one PASS/FAIL line (visible with `pytest -s` or on failure).
The literal log(1+t) N-norm sandwich is a documented spec defect: the fixture
is concave with slope limit 0, so the sandwich provably fails; that test is a
strict expected-failure and the suite alerts if it ever passes.
"""

import pytest

from interlace import acceptance


def _report(res, budget=None):
    status = "PASS" if res.passed else "FAIL"
    print(f"[{status}] criterion {res.cid}: {res.name} ({res.seconds:.2f}s) - {res.detail}")
    assert res.passed, f"criterion {res.cid} failed: {res.detail}"
    if budget is not None:
        assert res.seconds < budget, f"criterion {res.cid} exceeded {budget}s budget"


def test_criterion_01_distance_formula_oracle():
    _report(acceptance.criterion_01(), budget=30)


def test_criterion_02_geodesic_soundness():
    _report(acceptance.criterion_02(), budget=30)


def test_criterion_03_diameter():
    _report(acceptance.criterion_03())


def test_criterion_04_c0_distortion():
    _report(acceptance.criterion_04(), budget=60)


def test_criterion_05_james_oracle_equivalence():
    _report(acceptance.criterion_05(), budget=60)


def test_criterion_06_james_norm_axioms():
    _report(acceptance.criterion_06())


def test_criterion_07_orlicz_lp_specialization():
    _report(acceptance.criterion_07())


def test_criterion_08_nnorm_sandwich():
    _report(acceptance.criterion_08())


@pytest.mark.xfail(
    strict=True,
    reason="log(1+t) is concave with slope limit 0; the [1/2, e] sandwich "
    "provably fails for it (documented spec defect, see the N-norm tests)",
)
def test_criterion_08_literal_log1p_sandwich():
    _report(acceptance.criterion_08_literal_log1p())


def test_criterion_09_nnorm_lattice_monotonicity():
    _report(acceptance.criterion_09())


def test_criterion_10_delta_transform_sandwich():
    _report(acceptance.criterion_10())


def test_criterion_11_jt_solver_equivalence():
    _report(acceptance.criterion_11(), budget=120)


def test_criterion_12_g_embedding_certificates():
    _report(acceptance.criterion_12())


def test_criterion_13_f_embedding_certificates():
    _report(acceptance.criterion_13())


def test_criterion_14_moduli_bracket():
    _report(acceptance.criterion_14())


def test_criterion_15_non_concentration_signature():
    _report(acceptance.criterion_15())


def test_criteria_registry_and_defect_bookkeeping():
    assert len(acceptance.CRITERIA) == 16  # 15 criteria + the documented defect entry
    literal = acceptance.criterion_08_literal_log1p()
    assert literal.expected_defect
    assert not literal.passed  # the defect must keep failing
    assert literal.in_order
    ok = acceptance.criterion_03()
    assert ok.in_order and not ok.expected_defect


def test_criteria_are_deterministic():
    for fn in (acceptance.criterion_03, acceptance.criterion_10, acceptance.criterion_15):
        a, b = fn(), fn()
        assert (a.cid, a.passed, a.detail) == (b.cid, b.passed, b.detail)
