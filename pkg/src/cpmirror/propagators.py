"""Imaginary-frequency dyadic propagators.

Everything is evaluated at imaginary frequency zeta, enters through
|zeta| only, and decays exponentially with zeta times the separation, so
frequency integrals over the whole real axis fold onto the half line.
Propagator values carry units 1/length^3.
"""

from __future__ import annotations

import numpy as np

from .errors import GeometryError
from .geometry import MIRROR, as_vector, image_point


def propagator_polynomials(x):
    """Return (u, v) = (1 + x + x^2, 3 + 3x + x^2) for x = zeta * R >= 0.

    Scalar or array input is accepted and passed through elementwise.
    """
    u = 1.0 + x + x * x
    v = 3.0 + 3.0 * x + x * x
    return u, v


def free_propagator(rvec, zeta) -> np.ndarray:
    """Vacuum dyadic Green function at imaginary frequency.

    For a separation vector rvec of length R and unit vector rhat,

        -exp(-|zeta| R) / (4 pi R^3) * [1 u(|zeta| R) - rhat rhat v(|zeta| R)]

    which reduces to the static dipole dyadic -(1 - 3 rhat rhat)/(4 pi R^3)
    at zeta = 0 and is symmetric and even in both zeta and rvec.

    Parameters
    ----------
    rvec : array_like, shape (3,)
        separation between observation point and source; must be nonzero
    zeta : float or ndarray
        imaginary frequency, used through its absolute value

    Returns
    -------
    ndarray
        shape (3, 3) for scalar zeta, (n, 3, 3) for an n-vector of zetas
    """
    rvec = as_vector(rvec, "rvec")
    big_r = float(np.linalg.norm(rvec))
    if big_r == 0.0:
        raise GeometryError("free propagator is singular at zero separation")
    rhat = rvec / big_r
    x = np.abs(np.asarray(zeta, dtype=float)) * big_r
    u, v = propagator_polynomials(x)
    pref = -np.exp(-x) / (4.0 * np.pi * big_r**3)
    eye = np.eye(3)
    proj = np.outer(rhat, rhat)
    if x.ndim == 0:
        return pref * (eye * u - proj * v)
    return pref[:, None, None] * (eye[None, :, :] * u[:, None, None]
                                  - proj[None, :, :] * v[:, None, None])


def image_propagator(robs, rsrc, zeta) -> np.ndarray:
    """Plate-induced part of the Green function, by the image construction.

    Equals the free propagator evaluated from the mirror image of the
    source point, right-multiplied by diag(1, 1, -1).  Swapping the two
    arguments conjugates the result with the mirror matrix.

    Parameters
    ----------
    robs, rsrc : array_like, shape (3,)
        observation and source points; robs must not coincide with the
        image of rsrc
    zeta : float or ndarray
        imaginary frequency, used through its absolute value

    Returns
    -------
    ndarray
        shape (3, 3) or (n, 3, 3), matching free_propagator
    """
    robs = as_vector(robs, "robs")
    rsrc = as_vector(rsrc, "rsrc")
    sep = robs - image_point(rsrc)
    if float(np.linalg.norm(sep)) == 0.0:
        raise GeometryError("observation point coincides with the source image")
    return free_propagator(sep, zeta) @ MIRROR
