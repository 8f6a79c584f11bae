import numpy as np
import pytest

from surftrace import (analyze_intersection, classify_curve_data, jet2,
                       make_fixture, make_sphere)
from surftrace.errors import (PreimageMismatchError, TangencyError,
                              UnknownFixtureError)
from surftrace.intersect import SharedCurve


def test_unknown_fixture():
    with pytest.raises(UnknownFixtureError):
        make_fixture("torus_torus")


def test_sphere_plane_geometry():
    fx = make_fixture("sphere_plane", h=0.5)
    radii = np.linalg.norm(fx.curve.spatial[:, :2], axis=1)
    assert np.max(np.abs(radii - np.sqrt(3.0) / 2.0)) < 1e-12
    assert np.all(fx.curve.spatial[:, 2] == 0.5)
    assert len(fx.curve.s) >= 64


def test_preimages_reproduce_curve():
    for name, params in (("sphere_plane", {"h": 0.5}),
                         ("sphere_sphere", {"d": 1.0}),
                         ("cylinder_plane", {"tilt": np.pi / 6})):
        fx = make_fixture(name, **params)
        for surf, uv in ((fx.m, fx.curve.uv_m), (fx.mbar, fx.curve.uv_mbar)):
            for i in range(0, len(fx.curve.s), 37):
                pos = jet2(surf, *uv[i], check_domain=False).position
                assert np.linalg.norm(pos - fx.curve.spatial[i]) < 1e-9


def test_preimage_vel_acc_match_finite_differences():
    from surftrace.numdiff import diff2_uniform, diff_uniform
    fx = make_fixture("sphere_sphere", d=1.0)
    h = fx.curve.s[1] - fx.curve.s[0]
    for uv, vel, acc in ((fx.curve.uv_m, fx.curve.uv_m_vel, fx.curve.uv_m_acc),
                         (fx.curve.uv_mbar, fx.curve.uv_mbar_vel,
                          fx.curve.uv_mbar_acc)):
        fd_vel = diff_uniform(uv, h, edge_order=4)
        fd_acc = diff2_uniform(uv, h)
        assert np.max(np.abs(fd_vel - vel)) < 1e-8
        assert np.max(np.abs(fd_acc - acc)[2:-2]) < 1e-6


def test_sphere_plane_constant_angle(fixture_reports):
    rep = fixture_reports["sphere_plane"]
    assert rep.constant_angle.is_constant
    # inward sphere normal vs +z plane normal at height 1/2: angle 2pi/3
    assert abs(rep.constant_angle.mean - 2 * np.pi / 3) < 1e-12
    assert rep.angle_residual < 1e-6
    assert rep.relation_residual < 1e-6
    assert not rep.ambiguous_eps


def test_sphere_sphere_angle_is_pi_over_3(fixture_reports):
    rep = fixture_reports["sphere_sphere"]
    assert rep.constant_angle.is_constant
    assert abs(rep.constant_angle.mean - np.pi / 3) < 1e-10
    assert rep.angle_residual < 1e-6
    assert rep.relation_residual < 1e-6


def test_cylinder_plane_tilted_not_constant(fixture_reports):
    rep = fixture_reports["cylinder_plane"]
    assert not rep.constant_angle.is_constant
    assert rep.constant_angle.max_dev > 0.05
    assert rep.angle_residual < 1e-6
    assert rep.relation_residual < 1e-6


def test_cylinder_plane_untilted_is_right_angle():
    fx = make_fixture("cylinder_plane", tilt=0.0)
    rep = analyze_intersection(fx.m, fx.mbar, fx.curve)
    assert rep.constant_angle.is_constant
    assert abs(rep.constant_angle.mean - np.pi / 2) < 1e-12


def test_constant_angle_transfers_pseudogeodesic(fixture_reports):
    # pseudo-geodesic on one side + constant angle -> pseudo-geodesic on
    # the other; and pseudo-geodesic on both sides -> constant angle
    for name, rep in fixture_reports.items():
        pg_m = classify_curve_data(rep.curve_m).pseudo_geodesic.is_constant
        pg_b = classify_curve_data(rep.curve_mbar).pseudo_geodesic.is_constant
        if pg_m and rep.constant_angle.is_constant:
            assert pg_b, name
        if pg_m and pg_b:
            assert rep.constant_angle.is_constant, name
        if pg_m and not rep.constant_angle.is_constant:
            assert not pg_b, name


def test_preimage_mismatch_detected():
    fx = make_fixture("sphere_plane", h=0.5)
    bad_uv = fx.curve.uv_m.copy()
    bad_uv[:, 0] += 0.01
    bad = SharedCurve(fx.curve.s, fx.curve.spatial, bad_uv,
                      fx.curve.uv_m_vel, fx.curve.uv_m_acc,
                      fx.curve.uv_mbar, fx.curve.uv_mbar_vel,
                      fx.curve.uv_mbar_acc)
    with pytest.raises(PreimageMismatchError):
        analyze_intersection(fx.m, fx.mbar, bad)


def test_tangency_detected():
    # the same sphere twice: normals coincide along any shared curve
    fx = make_fixture("sphere_plane", h=0.0)
    sph = make_sphere(1.0)
    same = SharedCurve(fx.curve.s, fx.curve.spatial,
                       fx.curve.uv_m, fx.curve.uv_m_vel, fx.curve.uv_m_acc,
                       fx.curve.uv_m, fx.curve.uv_m_vel, fx.curve.uv_m_acc)
    with pytest.raises(TangencyError):
        analyze_intersection(sph, sph, same)
