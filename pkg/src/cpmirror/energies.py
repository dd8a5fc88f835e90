"""Closed-form interaction energies.

Two-body atom-atom and atom-plate energies plus the plate-induced three-
and four-scattering corrections, all in the static (fully retarded) limit
where atoms are described by their zero-frequency polarizability.  Each
atom scatters once, so every term is bilinear in the two tensors.

The special-case formulas (equal heights, purely axial or purely
transverse response) are coded independently of the general kernel on
purpose: agreement between the two routes is the library's main defense
against transcription slips, and is enforced by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import GeometryError
from .geometry import (
    MIRROR,
    SystemConfig,
    as_tensor,
    as_vector,
    check_symmetric,
    derive_geometry,
)

FOUR_PI = 4.0 * math.pi
EIGHT_PI = 8.0 * math.pi


@dataclass(frozen=True)
class KernelCoefficients:
    """Dimensionless weights of the four tensor contractions in the kernel.

    All four reduce to integers at equal leg lengths: A -> 13, both B -> 28,
    C -> 63.  A and C are symmetric under swapping the legs; the two B's
    map into each other.
    """

    A: float
    B_xy: float
    B_yx: float
    C: float


def kernel_coefficients(x, y) -> KernelCoefficients:
    """Coefficients for leg lengths x and y.

    Pure arithmetic, so exact number types (fractions.Fraction) pass
    through without rounding.
    """
    if x <= 0 or y <= 0:
        raise GeometryError("kernel coefficients need positive leg lengths")
    s4 = (x + y) ** 4
    a = 8 * (x**4 + 5 * x**3 * y + 14 * x**2 * y**2 + 5 * x * y**3 + y**4) / s4
    b_xy = 8 * (3 * x**4 + 15 * x**3 * y + 26 * x**2 * y**2 + 10 * x * y**3 + 2 * y**4) / s4
    b_yx = 8 * (3 * y**4 + 15 * y**3 * x + 26 * y**2 * x**2 + 10 * y * x**3 + 2 * x**4) / s4
    c = 48 * (x**4 + 5 * x**3 * y + 9 * x**2 * y**2 + 5 * x * y**3 + y**4) / s4
    return KernelCoefficients(a, b_xy, b_yx, c)


def energy_kernel(xvec, yvec, alpha, beta) -> float:
    """Pairing of two propagator legs with two atomic tensors.

    With leg lengths x, y and unit vectors xhat, yhat,

        [ A tr(alpha.beta) - B(x,y) (yhat.beta.alpha.yhat)
          - B(y,x) (xhat.alpha.beta.xhat)
          + C (xhat.alpha.yhat)(yhat.beta.xhat) ] / (4 pi x^3 y^3 (x + y))

    beta may be non-symmetric (mirror-reflected tensors are), in which
    case the contraction order above matters.  Swapping the two
    (leg, tensor) pairs leaves the value unchanged.
    """
    xvec = as_vector(xvec, "xvec")
    yvec = as_vector(yvec, "yvec")
    x = float(np.linalg.norm(xvec))
    y = float(np.linalg.norm(yvec))
    if x == 0.0 or y == 0.0:
        raise GeometryError("energy kernel needs two nonzero legs")
    alpha = as_tensor(alpha, "alpha")
    beta = as_tensor(beta, "beta")
    xh = xvec / x
    yh = yvec / y
    co = kernel_coefficients(x, y)
    num = (
        co.A * float(np.trace(alpha @ beta))
        - co.B_xy * float(yh @ beta @ alpha @ yh)
        - co.B_yx * float(xh @ alpha @ beta @ xh)
        + co.C * float(xh @ alpha @ yh) * float(yh @ beta @ xh)
    )
    return num / (FOUR_PI * x**3 * y**3 * (x + y))


def e12(cfg: SystemConfig) -> float:
    """Two-atom energy ignoring the plate.

    -[13 tr(a1.a2) - 56 rhat.a1.a2.rhat
      + 63 (rhat.a1.rhat)(rhat.a2.rhat)] / (8 pi r^7)

    For isotropic scalars this is -23 a1 a2 / (4 pi r^7).
    """
    d = derive_geometry(cfg)
    rhat = d.r12 / d.r
    a1 = cfg.atom1.alpha
    a2 = cfg.atom2.alpha
    num = (
        13.0 * float(np.trace(a1 @ a2))
        - 56.0 * float(rhat @ a1 @ a2 @ rhat)
        + 63.0 * float(rhat @ a1 @ rhat) * float(rhat @ a2 @ rhat)
    )
    return -num / (EIGHT_PI * d.r**7)


def e_cp(alpha, z) -> float:
    """Atom-plate energy -tr(alpha) / (8 pi z^4) at height z > 0."""
    if z <= 0:
        raise GeometryError(f"atom-plate energy needs z > 0, got {z}")
    alpha = check_symmetric(alpha, "alpha")
    return -float(np.trace(alpha)) / (EIGHT_PI * float(z) ** 4)


class ThreeBodyTerms(NamedTuple):
    e123: float
    e213: float
    e1323: float


def three_body_terms(cfg: SystemConfig) -> ThreeBodyTerms:
    """Plate-induced corrections, labelled by scattering order.

    e123 and e213 pick up one reflection off the plate (atom-atom-plate
    paths), e1323 two.  Each is a single kernel evaluation on the
    appropriate atom/image legs with the lower atom index's tensor
    mirror-reflected once per plate bounce.
    """
    d = derive_geometry(cfg)
    a1 = cfg.atom1.alpha
    a2 = cfg.atom2.alpha
    b1 = MIRROR @ a1
    b2 = MIRROR @ a2
    t123 = energy_kernel(d.r12, d.r2_img1, a2, b1)
    t213 = energy_kernel(d.r21, d.r1_img2, a1, b2)
    t1323 = -energy_kernel(d.r2_img1, d.r1_img2, b1, b2)
    return ThreeBodyTerms(t123, t213, t1323)


@dataclass(frozen=True)
class EnergyBreakdown:
    """All interaction terms for one configuration, units 1/length.

    e_cp1/e_cp2 are None for an atom sitting on the plate, where the
    atom-plate energy diverges; it is excluded rather than reported.
    """

    e12: float
    e123: float
    e213: float
    e1323: float
    delta_e3: float
    e_cp1: float | None
    e_cp2: float | None

    @property
    def total(self) -> float:
        """Atom-atom interaction including the plate-induced correction."""
        return self.e12 + self.delta_e3

    def to_dict(self) -> dict:
        return {
            "e12": self.e12,
            "e123": self.e123,
            "e213": self.e213,
            "e1323": self.e1323,
            "delta_e3": self.delta_e3,
            "total": self.total,
            "e_cp1": self.e_cp1,
            "e_cp2": self.e_cp2,
        }


def energy_breakdown(cfg: SystemConfig) -> EnergyBreakdown:
    """Evaluate every term for one configuration."""
    pair = e12(cfg)
    terms = three_body_terms(cfg)
    z1, z2 = cfg.atom1.z, cfg.atom2.z
    return EnergyBreakdown(
        e12=pair,
        e123=terms.e123,
        e213=terms.e213,
        e1323=terms.e1323,
        delta_e3=terms.e123 + terms.e213 + terms.e1323,
        e_cp1=e_cp(cfg.atom1.alpha, z1) if z1 > 0 else None,
        e_cp2=e_cp(cfg.atom2.alpha, z2) if z2 > 0 else None,
    )


def g_iso(gamma) -> float:
    """Equal-height isotropic correction ratio delta_e3 / e12.

        g(gamma) = -64 (1 + 4 gamma) / (23 gamma^3 (1 + gamma)^4) + gamma^-7

    with gamma = sqrt(1 + 4 Z^2 / a^2) >= 1.  The last term is the
    four-scattering contribution.  g(1) = 3/23 and g falls off like
    gamma^-6 far from the plate.
    """
    gamma = float(gamma)
    if gamma < 1.0:
        raise GeometryError(f"gamma = R/r cannot be below 1, got {gamma}")
    return -64.0 * (1.0 + 4.0 * gamma) / (23.0 * gamma**3 * (1.0 + gamma) ** 4) + gamma**-7.0


def equidistant_terms(alpha_perp1, alpha_z1, alpha_perp2, alpha_z2, a, z):
    """Closed forms for diagonal atoms diag(ap, ap, az) at equal height z.

    Returns (e123_single, e1323) where e123_single is one of the two equal
    single-reflection terms.  z = 0 is the on-plate limit, finite here.
    """
    if a <= 0:
        raise GeometryError(f"horizontal separation must be positive, got {a}")
    if z < 0:
        raise GeometryError(f"height must be nonnegative, got {z}")
    g = math.sqrt(1.0 + 4.0 * z * z / (a * a))
    poly_z = -3.0 - 15.0 * g - 24.0 * g**2 + 10.0 * g**4 + 5.0 * g**5 + g**6
    poly_p = 3.0 + 15.0 * g + 28.0 * g**2 + 20.0 * g**3 + 6.0 * g**4 - 5.0 * g**5 - g**6
    zz = alpha_z1 * alpha_z2
    pp = alpha_perp1 * alpha_perp2
    e123_single = 2.0 / (math.pi * a**7 * g**5 * (1.0 + g) ** 5) * (zz * poly_z + pp * poly_p)
    e1323 = -(
        zz * (63.0 - 70.0 * g**2 + 20.0 * g**4)
        + pp * (63.0 - 56.0 * g**2 + 26.0 * g**4)
        + (alpha_perp1 * alpha_z2 + alpha_z1 * alpha_perp2) * 63.0 * (g**2 - 1.0)
    ) / (EIGHT_PI * a**7 * g**11)
    return e123_single, e1323


def _check_ratio_inputs(a, r, big_gamma):
    if not 0 < a <= r:
        raise GeometryError(f"need 0 < a <= r, got a = {a}, r = {r}")
    if big_gamma < 1.0:
        raise GeometryError(f"Gamma = R/r cannot be below 1, got {big_gamma}")


def zonly_unequal(alpha_z1, alpha_z2, a, r, big_gamma):
    """Closed forms for atoms polarizable along z only, any heights.

    Parameterized by horizontal separation a, atom-atom distance r and
    Gamma = R/r.  Returns (e12, e123_single, e1323) with e213 equal to
    e123_single.  At Gamma = 1 all three coincide, so the summed energy is
    four times the two-atom value there.
    """
    _check_ratio_inputs(a, r, big_gamma)
    t = (a * a) / (r * r)
    pair = alpha_z1 * alpha_z2
    G = big_gamma
    e12_val = -pair / (EIGHT_PI * r**7) * (20.0 - 70.0 * t + 63.0 * t * t)
    e123_single = -2.0 * pair / (math.pi * r**7 * G**5 * (1.0 + G) ** 5) * (
        2.0 * G**2 * (1.0 + G) ** 2 * (1.0 + 3.0 * G + G**2)
        - t * (1.0 + G) ** 2 * (3.0 + 9.0 * G + 11.0 * G**2 + 9.0 * G**3 + 3.0 * G**4)
        + 6.0 * t * t * (1.0 + 5.0 * G + 9.0 * G**2 + 5.0 * G**3 + G**4)
    )
    e1323 = -pair / (EIGHT_PI * r**7 * G**7) * (
        20.0 - 70.0 * t / G**2 + 63.0 * t * t / G**4
    )
    return e12_val, e123_single, e1323


def perp_unequal(alpha_perp1, alpha_perp2, a, r, big_gamma):
    """Closed forms for atoms polarizable transversely only, any heights.

    Same parameterization and return shape as zonly_unequal.  At Gamma = 1
    the single-reflection term cancels the two-atom energy and the
    four-scattering term restores it, so the summed energy vanishes.
    """
    _check_ratio_inputs(a, r, big_gamma)
    t = (a * a) / (r * r)
    pair = alpha_perp1 * alpha_perp2
    G = big_gamma
    e12_val = -pair / (EIGHT_PI * r**7) * (26.0 - 56.0 * t + 63.0 * t * t)
    e123_single = 2.0 * pair / (math.pi * r**7 * G**5 * (1.0 + G) ** 5) * (
        2.0 * G**2 * (1.0 + 5.0 * G + 14.0 * G**2 + 5.0 * G**3 + G**4)
        - t * (3.0 + 15.0 * G + 28.0 * G**2 + 20.0 * G**3 + 28.0 * G**4 + 15.0 * G**5 + 3.0 * G**6)
        + 6.0 * t * t * (1.0 + 5.0 * G + 9.0 * G**2 + 5.0 * G**3 + G**4)
    )
    e1323 = -pair / (EIGHT_PI * r**7 * G**7) * (
        26.0 - 56.0 * t / G**2 + 63.0 * t * t / G**4
    )
    return e12_val, e123_single, e1323


def e12_over_ecp(alpha2, r, z) -> float:
    """Atom-atom energy relative to the atom-plate energy, isotropic atoms.

        (alpha2 / r^3) * (46/3) * (z / r)^4

    Tiny for realistic polarizabilities and separations, which is why the
    three-body corrections matter only conceptually near the plate.
    """
    if r <= 0 or z <= 0:
        raise GeometryError(f"need positive lengths, got r = {r}, z = {z}")
    return (alpha2 / r**3) * (46.0 / 3.0) * (z / r) ** 4
