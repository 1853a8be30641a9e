"""Smoke tests for the monohull Python module (built extension on
PYTHONPATH via ctest)."""

from fractions import Fraction

import pytest

import monohull as mh


@pytest.fixture
def inst():
    return mh.Instance(3, 1, [1, 1, 2])


def test_instance_basics(inst):
    assert inst.n == 3
    assert inst.an == Fraction(1)
    assert inst.b == [Fraction(1), Fraction(1), Fraction(2)]
    assert inst.pi == Fraction(1)
    assert not inst.degenerate
    with pytest.raises(ValueError):
        mh.Instance(1, 0, [1])
    with pytest.raises(ValueError):
        mh.Instance(2, 5, [2, 3])


def test_rational_inputs_accept_str_int_fraction():
    a = mh.Instance(2, "1/2", [2, 3])
    b = mh.Instance(2, Fraction(1, 2), ["2", "3.0"])
    assert a.an == b.an == Fraction(1, 2)
    assert a.b == b.b


def test_vertices(inst):
    verts = mh.vertices(inst)
    assert len(verts) == 8
    nonzero = [v for v in verts if v.y != 0]
    assert len(nonzero) == 2
    assert nonzero[1].x == [Fraction(1), Fraction(1), Fraction(2)]
    assert nonzero[1].y == Fraction(2)
    assert nonzero[1].T == [1, 2]
    assert nonzero[1].xn == "upper"


def test_facet_systems(inst):
    sys_full = mh.facet_system_cn1(inst)
    assert len(sys_full) == 3 * 3 + 2
    assert sys_full.kind == "cn1"
    first = sys_full.rows[0]
    assert first.family == "under_a"
    assert first.coef_y == Fraction(1)
    assert first.coef_x == [Fraction(-1), Fraction(-1), Fraction(0)]
    assert first.rhs == Fraction(-1)
    assert "under_a" in sys_full.to_text()

    assert len(mh.facet_system_cn0(inst)) == 2 * 3 + 2
    assert len(mh.facet_system_mccormick([0, 0], [1, 1])) == 4


def test_membership_and_evaluate(inst):
    sys_full = mh.facet_system_cn1(inst)
    verdict, violated = mh.membership(sys_full, [1, 1, 2], 2)
    assert verdict == "boundary" and violated == []
    verdict, violated = mh.membership(sys_full, [1, 1, 1], 2)
    assert verdict == "outside" and violated
    slacks = mh.evaluate(sys_full, [1, 1, 2], 2)
    assert len(slacks) == 11
    assert all(s >= 0 for s in slacks)


def test_optimize_pipeline(inst):
    result = mh.primal_solve(inst, -1, [1, -1, 0])
    assert result.z_star == Fraction(1)
    assert result.winner == "zero_b"
    assert result.vertex.x == [Fraction(1), Fraction(0), Fraction(2)]

    brute = mh.brute_force_optimize(inst, -1, [1, -1, 0])
    assert brute.z_star == result.z_star

    cert = mh.build_certificate(inst, -1, [1, -1, 0], result)
    assert cert.case_tag == "B3"
    report = mh.verify_certificate(inst, -1, [1, -1, 0], cert, result)
    assert report.all_pass
    assert all(residual == 0 for _, _, residual in report.checks)
    assert mh.dual_objective(inst, cert) == result.z_star


def test_classify_and_candidates(inst):
    sets = mh.classify(inst, 0, [1, -2, 5])
    assert sets["case"] == "B"
    assert sets["plus"] == [1] and sets["minus"] == [2]
    cand = mh.candidate_values(mh.Instance(2, 1, [2, 3]), 1, [1, 1])
    assert cand["z_pi_b"] == Fraction(11)


def test_certificate_refuses_degenerate():
    degenerate = mh.Instance(3, 0, [1, 1, 2])
    result = mh.primal_solve(degenerate, 1, [0, 0, 0])
    with pytest.raises(mh.UnsupportedError):
        mh.build_certificate(degenerate, 1, [0, 0, 0], result)


def test_volumes(inst):
    assert mh.volume_cn1(inst) == Fraction(3, 8)
    assert mh.volume_cn0(2, [2, 3]) == Fraction(6)
    assert mh.volume_mccormick([0, 1], [2, 3]) == Fraction(8, 3)
    decomp = mh.volume_by_decomposition(inst)
    assert decomp["total"] == Fraction(3, 8)
    assert decomp["vol_Q"] == Fraction(1, 8)


def test_separation_and_lifted_facets(inst):
    table = mh.separation_check_v2(inst)
    assert len(table) == 2 * 3 + 2
    assert sum(1 for _, _, separates in table if separates) == 3
    assert len(mh.lifted_Q_facets(inst)) == 2 * 3 + 2


def test_monte_carlo(inst):
    a = mh.monte_carlo_volume(inst, 20000, seed=7)
    b = mh.monte_carlo_volume(inst, 20000, seed=7)
    assert a == b
    assert abs(a["estimate"] - 0.375) <= 4 * a["std_error"] + 1e-12

    report = mh.volume_report(inst, mc_samples=5000, seed=3)
    assert report["closed_form"] == Fraction(3, 8)
    assert report["monte_carlo"]["samples"] == 5000


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
