import math

import pytest

import holecap


@pytest.fixture(scope="module")
def disks():
    return holecap.HoleSetting(holecap.ClosedCurve.circle(1.0), holecap.ClosedCurve.circle(1.0), 128)


def test_concentric_capacity(disks):
    one = holecap.AnalyticGerm.from_terms([(0, 0, 1.0)])
    for eps in (1e-1, 1e-2, 1e-3):
        direct = holecap.direct_capacity(disks, one, one, eps)
        assert direct == pytest.approx(2 * math.pi / abs(math.log(eps)), rel=1e-6)
        assert holecap.concentric_capacity(eps) == pytest.approx(direct, rel=1e-6)


def test_series_leading_coefficients(disks):
    a = holecap.AnalyticGerm.from_terms([(0, 0, 0.8), (1, 0, 0.3)], 4)
    b = holecap.AnalyticGerm.from_terms([(0, 0, -0.5), (0, 1, 0.2)], 4)
    ex = holecap.expansion(disks, a, b, order=3)
    c = {(t["n"], t["l"]): t["c"] for t in ex["coefficients"]}
    assert abs(c[(0, 0)]) < 1e-10
    assert c[(0, 1)] == pytest.approx(0.4, abs=1e-9)


def test_energy_form_on_disk(disks):
    x2 = holecap.AnalyticGerm.from_terms([(0, 1, 1.0)])
    assert holecap.q_form(disks, x2, x2) == pytest.approx(2 * math.pi, rel=1e-9)


def test_spectra():
    disk = holecap.disk_eigenvalues(3)
    assert disk[0] == pytest.approx(5.783185962946784, rel=1e-12)
    assert disk[1] == disk[2]
    ann = holecap.concentric_eigenvalues(0.2, 3)
    ecc = holecap.eccentric_eigenvalues(0.2, [0.0, 0.0], 3)
    assert ecc == pytest.approx(ann, rel=1e-8)


def test_predict_off_centre():
    rep = holecap.predict(2, x0=(0.3, 0.2), eps=[1e-3], nodes=128)
    assert [g["k"] for g in rep["groups"]] == [1, 0]


def test_bad_input_raises():
    with pytest.raises(ValueError):
        holecap.HoleSetting(holecap.ClosedCurve.circle(1.0), holecap.ClosedCurve.circle(1.0, [3.0, 0.0]), 64)


def test_elliptic_criterion_passes():
    summary = holecap.validate([5])
    assert summary["pass"]
