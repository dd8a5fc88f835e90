"""Positions, mirror images, reflected tensors and derived geometry.

The plate occupies the z=0 plane with normal along +z; callers with a
different plate orientation must rotate their coordinates into this frame
first.  A single global length unit is used throughout and energies come
out in inverse lengths (hbar = c = 1), so polarizabilities carry units of
length cubed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import GeometryError, InputError

# Reflection through the plate: flips the z component of vectors, and the
# z row of tensors it is applied to from the left.
MIRROR = np.diag([1.0, 1.0, -1.0])
MIRROR.flags.writeable = False

SYMMETRY_RTOL = 1e-12
EQUAL_HEIGHT_RTOL = 1e-12


def as_vector(v, name="vector") -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise InputError(f"{name}: expected 3 components, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name}: components must be finite")
    return arr


def as_tensor(m, name="tensor") -> np.ndarray:
    arr = np.asarray(m, dtype=float)
    if arr.shape != (3, 3):
        raise InputError(f"{name}: expected a 3x3 matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name}: entries must be finite")
    return arr


def check_symmetric(m, name="tensor") -> np.ndarray:
    """Validate that m is a finite 3x3 matrix, symmetric to 1e-12 relative."""
    arr = as_tensor(m, name)
    scale = float(np.abs(arr).max())
    if scale > 0.0 and float(np.abs(arr - arr.T).max()) > SYMMETRY_RTOL * scale:
        raise InputError(f"{name}: matrix is not symmetric to {SYMMETRY_RTOL:g} relative")
    return arr


def validate_polarizability(alpha, name="alpha") -> np.ndarray:
    """Symmetry is required; positive semidefiniteness only draws a warning.

    Indefinite tensors are unphysical for real atoms but useful in sign
    experiments, so they are allowed through.
    """
    arr = check_symmetric(alpha, name)
    eigs = np.linalg.eigvalsh(arr)
    scale = max(float(np.abs(eigs).max()), 1.0)
    if eigs[0] < -1e-12 * scale:
        warnings.warn(
            f"{name}: tensor is not positive semidefinite (min eigenvalue {eigs[0]:.3g})",
            stacklevel=2,
        )
    return arr


def image_point(p) -> np.ndarray:
    """Mirror a point through the plate: (x, y, z) -> (x, y, -z)."""
    return as_vector(p, "point") * MIRROR.diagonal()


def reflect_tensor(alpha) -> np.ndarray:
    """Left-multiply a symmetric polarizability by the mirror matrix.

    The z row is negated, so the result is in general no longer symmetric;
    applying the reflection twice restores the input.
    """
    return MIRROR @ check_symmetric(alpha, "alpha")


def isotropic_tensor(scale) -> np.ndarray:
    return float(scale) * np.eye(3)


def diagonal_tensor(alpha_perp, alpha_z) -> np.ndarray:
    """diag(alpha_perp, alpha_perp, alpha_z): transverse plus axial response."""
    return np.diag([float(alpha_perp), float(alpha_perp), float(alpha_z)])


@dataclass(frozen=True)
class AtomSpec:
    """A point atom: static polarizability tensor plus a position above the plate."""

    position: np.ndarray
    alpha: np.ndarray

    def __post_init__(self):
        pos = as_vector(self.position, "position")
        if pos[2] < 0:
            raise GeometryError(f"atom must not sit below the plate, got z = {pos[2]}")
        alp = validate_polarizability(self.alpha, "alpha")
        pos.flags.writeable = False
        alp.flags.writeable = False
        object.__setattr__(self, "position", pos)
        object.__setattr__(self, "alpha", alp)

    @property
    def z(self) -> float:
        return float(self.position[2])


@dataclass(frozen=True)
class SystemConfig:
    """Two atoms above the plate at z = 0.

    Placing an atom exactly on the plate is allowed only with
    allow_contact=True: the three-body terms stay finite there, but the
    two-body atom-plate energy diverges and is excluded from totals.
    """

    atom1: AtomSpec
    atom2: AtomSpec
    allow_contact: bool = False

    def __post_init__(self):
        for label, atom in (("atom1", self.atom1), ("atom2", self.atom2)):
            if atom.z == 0.0 and not self.allow_contact:
                raise GeometryError(
                    f"{label} sits on the plate; pass allow_contact=True to study that point"
                )
        if float(np.linalg.norm(self.atom1.position - self.atom2.position)) == 0.0:
            raise GeometryError("atoms are coincident")

    def swapped(self) -> "SystemConfig":
        """The same system with the atom labels exchanged."""
        return SystemConfig(self.atom2, self.atom1, self.allow_contact)


@dataclass(frozen=True)
class GeometryDerived:
    """Scalars and relative vectors consumed by every energy formula.

    r is the atom-atom distance and R the distance between either atom and
    the image of the other (both atom-image distances are equal), so
    Gamma = R/r >= 1 with equality exactly when one atom touches the plate.
    gamma is the equal-height value of the same ratio, sqrt(1 + 4Z^2/a^2);
    it is None when the heights differ measurably.
    """

    a: float
    dz: float
    r: float
    R: float
    Gamma: float
    gamma: float | None
    r12: np.ndarray
    r21: np.ndarray
    r2_img1: np.ndarray
    r1_img2: np.ndarray


def derive_geometry(cfg: SystemConfig) -> GeometryDerived:
    """Relative vectors, image vectors and distance ratios for a config."""
    p1, p2 = cfg.atom1.position, cfg.atom2.position
    r12 = p1 - p2
    r21 = -r12
    r2_img1 = p2 - image_point(p1)
    r1_img2 = p1 - image_point(p2)
    r = float(np.linalg.norm(r12))
    if r == 0.0:
        raise GeometryError("atoms are coincident")
    big_r = float(np.linalg.norm(r2_img1))
    a = float(np.hypot(r12[0], r12[1]))
    dz = float(p1[2] - p2[2])
    gamma = None
    if abs(dz) <= EQUAL_HEIGHT_RTOL * max(p1[2], p2[2], a):
        gamma = big_r / r
    for arr in (r12, r21, r2_img1, r1_img2):
        arr.flags.writeable = False
    return GeometryDerived(
        a=a, dz=dz, r=r, R=big_r, Gamma=big_r / r, gamma=gamma,
        r12=r12, r21=r21, r2_img1=r2_img1, r1_img2=r1_img2,
    )


def equidistant_config(alpha1, alpha2, a, z, allow_contact=False) -> SystemConfig:
    """Atoms at equal height z, separated horizontally by a (along x)."""
    if a <= 0:
        raise GeometryError(f"horizontal separation must be positive, got {a}")
    return SystemConfig(
        AtomSpec(np.array([0.0, 0.0, float(z)]), alpha1),
        AtomSpec(np.array([float(a), 0.0, float(z)]), alpha2),
        allow_contact=allow_contact,
    )


def ratio_config(alpha1, alpha2, a, r, Gamma) -> SystemConfig:
    """Build a config from (a, r, Gamma); atom 2 is the lower one.

    The heights follow from r^2 = a^2 + (z1 - z2)^2 and
    (Gamma r)^2 = a^2 + (z1 + z2)^2.  At Gamma = 1 atom 2 lands exactly on
    the plate and the config is created with the contact flag set.
    """
    if not 0 < a <= r:
        raise GeometryError(f"need 0 < a <= r, got a = {a}, r = {r}")
    if Gamma < 1:
        raise GeometryError(f"Gamma = R/r cannot be below 1, got {Gamma}")
    dz = np.sqrt(r * r - a * a)
    sz = np.sqrt(Gamma * Gamma * r * r - a * a)
    z1 = (sz + dz) / 2.0
    z2 = max((sz - dz) / 2.0, 0.0)
    return SystemConfig(
        AtomSpec(np.array([0.0, 0.0, z1]), alpha1),
        AtomSpec(np.array([float(a), 0.0, z2]), alpha2),
        allow_contact=(z2 == 0.0),
    )
