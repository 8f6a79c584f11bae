"""Pointwise surface geometry: chart 2-jets, fundamental forms, shape data.

Conventions fixed once and used everywhere downstream:

* Gauss map ``N = X_t x X_z / |X_t x X_z|`` (chart orientation).
* Principal curvatures ordered ``kappa1 <= kappa2``.
* ``{E1, E2, N}`` right-handed, i.e. ``E2 = N x E1``.
* E1 sign: aligned with a caller-supplied hint when given (curve
  continuity), otherwise ``<E1, X_t> >= 0`` with ``<E1, X_z> >= 0`` as the
  tie-break when E1 is orthogonal to X_t.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, TYPE_CHECKING

import numpy as np

from .errors import OutOfDomainError, SingularJetError

if TYPE_CHECKING:  # pragma: no cover
    from .gallery import GalleryOracle

Vec3 = np.ndarray

#: relative step for finite-difference jets
FD_STEP = 1e-5

#: umbilic threshold scale: |k1 - k2| < UMBILIC_EPS * max(1, |k1| + |k2|)
UMBILIC_EPS = 1e-9


@dataclass(frozen=True)
class SurfaceJet2:
    """Second-order jet of a chart X(t, z): position and partials."""

    position: Vec3
    d_t: Vec3
    d_z: Vec3
    d_tt: Vec3
    d_tz: Vec3
    d_zz: Vec3


@dataclass(frozen=True)
class Domain:
    """Rectangular parameter domain [t_min, t_max] x [z_min, z_max]."""

    t_min: float
    t_max: float
    z_min: float
    z_max: float

    def contains(self, t: float, z: float, pad: float = 0.0) -> bool:
        return (self.t_min - pad <= t <= self.t_max + pad
                and self.z_min - pad <= z <= self.z_max + pad)

    def inset(self, frac: float) -> "Domain":
        """Domain shrunk by `frac` of each span on every side."""
        dt = (self.t_max - self.t_min) * frac
        dz = (self.z_max - self.z_min) * frac
        return Domain(self.t_min + dt, self.t_max - dt,
                      self.z_min + dz, self.z_max - dz)


@dataclass(frozen=True)
class SurfaceDef:
    """A parametrized surface: chart callables plus metadata.

    ``jet`` returns the exact analytic 2-jet; when it is None the jet is
    built by central finite differences of ``position``.
    """

    name: str
    domain: Domain
    position: Callable[[float, float], Vec3]
    jet: Optional[Callable[[float, float], SurfaceJet2]] = None
    orthogonal: bool = False
    totally_umbilic: bool = False
    params: Mapping[str, float] = field(default_factory=dict)
    oracle: "GalleryOracle | None" = None


@dataclass(frozen=True)
class FundamentalForms:
    """First (E, F, G) and second (e, f, g) form coefficients plus the unit normal."""

    E: float
    F: float
    G: float
    e: float
    f: float
    g: float
    normal: Vec3


@dataclass(frozen=True)
class ChristoffelSymbols:
    """The six symbols of the chart metric, upper index first."""

    c1_tt: float
    c1_tz: float
    c1_zz: float
    c2_tt: float
    c2_tz: float
    c2_zz: float


@dataclass(frozen=True)
class TangentDecomp:
    """Coefficients of X_t = f1 E1 + f2 E2 and X_z = g1 E1 + g2 E2."""

    f1: float
    f2: float
    g1: float
    g2: float


@dataclass(frozen=True)
class ShapeData:
    """Full pointwise shape data derived from one jet."""

    normal: Vec3
    kappa1: float
    kappa2: float
    e1: Vec3
    e2: Vec3
    K: float
    H: float
    christoffel: ChristoffelSymbols
    decomp: TangentDecomp
    umbilic: bool


def _fd_jet(position: Callable[[float, float], Vec3], t: float, z: float) -> SurfaceJet2:
    """Central second-order finite-difference jet of the position map."""
    h = FD_STEP * max(1.0, abs(t), abs(z))
    p = np.asarray(position(t, z), dtype=float)
    p_t1 = np.asarray(position(t + h, z), dtype=float)
    p_t0 = np.asarray(position(t - h, z), dtype=float)
    p_z1 = np.asarray(position(t, z + h), dtype=float)
    p_z0 = np.asarray(position(t, z - h), dtype=float)
    p_pp = np.asarray(position(t + h, z + h), dtype=float)
    p_pm = np.asarray(position(t + h, z - h), dtype=float)
    p_mp = np.asarray(position(t - h, z + h), dtype=float)
    p_mm = np.asarray(position(t - h, z - h), dtype=float)
    d_t = (p_t1 - p_t0) / (2 * h)
    d_z = (p_z1 - p_z0) / (2 * h)
    d_tt = (p_t1 - 2 * p + p_t0) / (h * h)
    d_zz = (p_z1 - 2 * p + p_z0) / (h * h)
    d_tz = (p_pp - p_pm - p_mp + p_mm) / (4 * h * h)
    return SurfaceJet2(p, d_t, d_z, d_tt, d_tz, d_zz)


def jet2(surface: SurfaceDef, t: float, z: float, *, check_domain: bool = True) -> SurfaceJet2:
    """Evaluate the 2-jet of a surface at parameter point (t, z).

    Raises OutOfDomainError outside the domain and SingularJetError where
    the chart is not regular.
    """
    if check_domain and not surface.domain.contains(t, z):
        raise OutOfDomainError(
            f"({t:g}, {z:g}) outside domain of surface '{surface.name}'")
    if surface.jet is not None:
        jet = surface.jet(t, z)
    else:
        jet = _fd_jet(surface.position, t, z)
    cr = np.cross(jet.d_t, jet.d_z)
    if np.linalg.norm(cr) < 1e-14 * np.linalg.norm(jet.d_t) * np.linalg.norm(jet.d_z):
        raise SingularJetError(
            f"chart of '{surface.name}' singular at ({t:g}, {z:g})")
    return jet


def fundamental_forms(jet: SurfaceJet2) -> FundamentalForms:
    """First and second fundamental form coefficients of a regular jet."""
    E = float(jet.d_t @ jet.d_t)
    F = float(jet.d_t @ jet.d_z)
    G = float(jet.d_z @ jet.d_z)
    cr = np.cross(jet.d_t, jet.d_z)
    nrm = np.linalg.norm(cr)
    if nrm < 1e-14 * np.sqrt(E * G):
        raise SingularJetError("jet is singular; normal undefined")
    normal = cr / nrm
    e = float(jet.d_tt @ normal)
    f = float(jet.d_tz @ normal)
    g = float(jet.d_zz @ normal)
    return FundamentalForms(E, F, G, e, f, g, normal)


def christoffel_symbols(jet: SurfaceJet2, forms: FundamentalForms) -> ChristoffelSymbols:
    """Christoffel symbols from the tangential part of the second partials.

    Solves [E F; F G] (c1, c2) = (<X_.., X_t>, <X_.., X_z>) for each second
    partial; algebraically identical to the metric-derivative formulas.
    """
    E, F, G = forms.E, forms.F, forms.G
    W = E * G - F * F
    out = []
    for d2 in (jet.d_tt, jet.d_tz, jet.d_zz):
        bt = float(d2 @ jet.d_t)
        bz = float(d2 @ jet.d_z)
        out.append(((G * bt - F * bz) / W, (E * bz - F * bt) / W))
    (c1_tt, c2_tt), (c1_tz, c2_tz), (c1_zz, c2_zz) = out
    return ChristoffelSymbols(c1_tt, c1_tz, c1_zz, c2_tt, c2_tz, c2_zz)


def shape_data(jet: SurfaceJet2,
               forms: FundamentalForms | None = None,
               e1_hint: Vec3 | None = None) -> ShapeData:
    """Solve the 2x2 shape-operator eigenproblem and assemble shape data.

    The eigenproblem is formed in an orthonormal tangent basis so the
    operator is symmetric; eigenvalues are ordered kappa1 <= kappa2.  At
    umbilic points the principal directions are an arbitrary orthonormal
    pair and the ``umbilic`` flag is set.
    """
    if forms is None:
        forms = fundamental_forms(jet)
    E, F, G = forms.E, forms.F, forms.G
    e, f, g = forms.e, forms.f, forms.g
    normal = forms.normal
    W = E * G - F * F

    # orthonormal tangent basis u1 = X_t/|X_t|, u2 = Gram-Schmidt of X_z
    sqE = np.sqrt(E)
    u1 = jet.d_t / sqE
    w = jet.d_z - (F / E) * jet.d_t
    wn = np.linalg.norm(w)
    u2 = w / wn
    # chart-basis components of u1, u2
    a1, b1 = 1.0 / sqE, 0.0
    a2, b2 = -F / (E * wn), 1.0 / wn

    def second_form(p, q, r, s):
        return p * r * e + (p * s + q * r) * f + q * s * g

    m00 = second_form(a1, b1, a1, b1)
    m01 = second_form(a1, b1, a2, b2)
    m11 = second_form(a2, b2, a2, b2)

    mean = 0.5 * (m00 + m11)
    disc = float(np.hypot(0.5 * (m00 - m11), m01))
    kappa1 = mean - disc
    kappa2 = mean + disc
    umbilic = (kappa2 - kappa1) < UMBILIC_EPS * max(1.0, abs(kappa1) + abs(kappa2))

    v = np.array([m01, kappa1 - m00])
    alt = np.array([kappa1 - m11, m01])
    if np.linalg.norm(alt) > np.linalg.norm(v):
        v = alt
    if np.linalg.norm(v) < 1e-14:
        v = np.array([1.0, 0.0])  # umbilic: arbitrary direction
    e1 = v[0] * u1 + v[1] * u2
    e1 = e1 / np.linalg.norm(e1)

    if e1_hint is not None:
        if float(e1 @ e1_hint) < 0.0:
            e1 = -e1
    else:
        s = float(e1 @ jet.d_t)
        if abs(s) > 1e-9 * sqE:
            if s < 0.0:
                e1 = -e1
        elif float(e1 @ jet.d_z) < 0.0:
            e1 = -e1
    e2 = np.cross(normal, e1)

    K = (e * g - f * f) / W
    H = mean
    christoffel = christoffel_symbols(jet, forms)
    decomp = TangentDecomp(float(jet.d_t @ e1), float(jet.d_t @ e2),
                           float(jet.d_z @ e1), float(jet.d_z @ e2))
    return ShapeData(normal, kappa1, kappa2, e1, e2, K, H,
                     christoffel, decomp, umbilic)


def point_shape(surface: SurfaceDef, t: float, z: float,
                e1_hint: Vec3 | None = None, *, check_domain: bool = True):
    """Convenience: (jet, forms, shape_data) at one parameter point."""
    jet = jet2(surface, t, z, check_domain=check_domain)
    forms = fundamental_forms(jet)
    return jet, forms, shape_data(jet, forms, e1_hint)
