"""Curves shared by two surfaces: the normal-angle relation.

Along a curve on both M and Mbar, the intersection angle xi satisfies
xi = eps (theta_bar - theta) with eps = +-1, and xi' = eps (taug -
taug_bar).  A pseudo-geodesic on one side is a pseudo-geodesic on the
other exactly when the surfaces meet at constant angle.
"""
import numpy as np

from surftrace import analyze_intersection, classify_curve_data, make_fixture

for name, params in (("sphere_plane", {"h": 0.5}),
                     ("sphere_sphere", {"d": 1.0}),
                     ("cylinder_plane", {"tilt": np.pi / 6})):
    fx = make_fixture(name, **params)
    rep = analyze_intersection(fx.m, fx.mbar, fx.curve)
    pg_m = classify_curve_data(rep.curve_m).pseudo_geodesic.is_constant
    pg_b = classify_curve_data(rep.curve_mbar).pseudo_geodesic.is_constant
    print(f"{name} {params}")
    print(f"  xi: mean {np.mean(rep.xi):.6f} rad, spread {np.ptp(rep.xi):.2e}"
          f" -> {'constant' if rep.constant_angle.is_constant else 'varies'}")
    print(f"  angle relation residual     {rep.angle_residual:.2e}")
    print(f"  torsion-difference residual {rep.relation_residual:.2e}")
    print(f"  pseudo-geodesic in M: {pg_m},  in Mbar: {pg_b}")
    print()
