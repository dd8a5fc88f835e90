"""Independent numerical route to every energy term.

Each term is written as an imaginary-frequency integral over the trace of
a product of 3x3 propagators sandwiched between the atomic tensors, with
the delta-function atom potentials already collapsed: an atom potential
4 pi alpha delta(r - r_a) turns an operator trace into a plain matrix
trace at the atom positions times (4 pi) per atom.  The integral is then
evaluated by adaptive Gauss-Kronrod quadrature.  Nothing on this path
reuses the closed forms, so agreement between the two routes is a genuine
cross-check.

Sign bookkeeping: rotating the energy integrals to imaginary frequency
leaves one overall sign ambiguous.  It is calibrated once against the
isotropic two-atom benchmark and frozen below as GLOBAL_SIGN; every term
uses it, with one extra minus sign per plate reflection from writing the
plate part of the Green function as minus the image propagator.  No
per-term sign fixups are allowed.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .energies import energy_breakdown
from .errors import GeometryError, InputError, QuadratureError
from .geometry import AtomSpec, SystemConfig, derive_geometry
from .propagators import free_propagator, image_propagator

# Calibrated once on the isotropic two-atom benchmark; see module docstring.
GLOBAL_SIGN = -1.0

# Folded half-line prefactors: (1/2) (1/2pi) (4 pi)^n_atoms, times 2 for
# integrating zeta over [0, inf) instead of the whole axis.
_PREF_TWO_ATOM = 8.0 * math.pi
_PREF_ONE_ATOM = 2.0


class Term(str, enum.Enum):
    E12 = "e12"
    E123 = "e123"
    E213 = "e213"
    E1323 = "e1323"
    ECP1 = "e_cp1"
    ECP2 = "e_cp2"


@dataclass(frozen=True)
class QuadratureSettings:
    """Tolerances for the adaptive integrator.

    abs_floor is relative to the integral of |integrand|, so it acts as a
    magnitude-aware absolute cutoff.
    """

    rel_tol: float = 1e-10
    abs_floor: float = 1e-16
    max_subdivisions: int = 200

    def __post_init__(self):
        if self.rel_tol <= 0:
            raise InputError("rel_tol must be positive")
        if self.abs_floor < 0:
            raise InputError("abs_floor must be nonnegative")
        if self.max_subdivisions < 1:
            raise InputError("max_subdivisions must be at least 1")


@dataclass(frozen=True)
class OracleResult:
    value: float
    error_estimate: float
    evaluations: int


# 15-point Kronrod nodes with the embedded 7-point Gauss weights
# (zero where a node is Kronrod-only).
_GK_NODES = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813,
])
_GK_WEIGHTS = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529,
])
_G_WEIGHTS = np.array([
    0.0, 0.129484966168870, 0.0, 0.279705391489277, 0.0,
    0.381830050505119, 0.0, 0.417959183673469, 0.0,
    0.381830050505119, 0.0, 0.279705391489277, 0.0,
    0.129484966168870, 0.0,
])


def _panel(f, lo, hi):
    """One Gauss-Kronrod panel: (value, error estimate, integral of |f|)."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    fx = f(mid + half * _GK_NODES)
    resk = float(_GK_WEIGHTS @ fx)
    resg = float(_G_WEIGHTS @ fx)
    resabs = float(_GK_WEIGHTS @ np.abs(fx)) * half
    resasc = float(_GK_WEIGHTS @ np.abs(fx - 0.5 * resk)) * half
    value = resk * half
    err = abs((resk - resg) * half)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    return value, err, resabs


def adaptive_quadrature(f, lo, hi, settings: QuadratureSettings) -> OracleResult:
    """Integrate a vectorized callable over [lo, hi] by panel bisection.

    f must map an ndarray of abscissae to an ndarray of values.  The
    panel with the largest error estimate is split until the summed error
    drops below max(rel_tol * |integral|, abs_floor * integral of |f|).

    Raises QuadratureError, carrying the partial estimate, once
    max_subdivisions splits were spent without convergence.
    """
    # seed panels crowded toward lo, where the scaled integrands peak
    fractions = (0.0, 0.015, 0.04, 0.1, 0.25, 0.5, 1.0)
    edges = [lo + (hi - lo) * frac for frac in fractions]
    panels = [(_panel(f, a, b), a, b) for a, b in zip(edges[:-1], edges[1:])]
    evals = 15 * len(panels)
    splits = 0
    while True:
        total = sum(p[0][0] for p in panels)
        err = sum(p[0][1] for p in panels)
        resabs = sum(p[0][2] for p in panels)
        bound = max(settings.rel_tol * abs(total), settings.abs_floor * resabs)
        if err <= bound:
            return OracleResult(total, err, evals)
        if splits >= settings.max_subdivisions:
            raise QuadratureError(
                f"no convergence after {splits} subdivisions "
                f"(error {err:.3e}, bound {bound:.3e})",
                partial=OracleResult(total, err, evals),
            )
        worst = max(range(len(panels)), key=lambda i: panels[i][0][1])
        _, a, b = panels[worst]
        mid = 0.5 * (a + b)
        panels[worst] = (_panel(f, a, mid), a, mid)
        panels.append((_panel(f, mid, b), mid, b))
        evals += 30
        splits += 1


def _pair_trace(left, g_left, right, g_right):
    """tr(left . g_left . right . g_right) for a batch of propagators."""
    return np.einsum("ij,njk,kl,nli->n", left, g_left, right, g_right)


def _integrand_closure(term: Term, cfg: SystemConfig):
    """Vectorized integrand over zeta plus the decay length of the term.

    The returned function integrates to the energy over zeta in [0, inf);
    its magnitude falls off like exp(-2 zeta d) for the returned d.
    """
    d = derive_geometry(cfg)
    p1, p2 = cfg.atom1.position, cfg.atom2.position
    a1, a2 = cfg.atom1.alpha, cfg.atom2.alpha

    if term is Term.E12:
        sign = GLOBAL_SIGN * _PREF_TWO_ATOM

        def f(zeta):
            return sign * _pair_trace(a1, free_propagator(d.r12, zeta),
                                      a2, free_propagator(d.r21, zeta))

        return f, d.r

    if term is Term.E123:
        sign = -GLOBAL_SIGN * _PREF_TWO_ATOM

        def f(zeta):
            return sign * _pair_trace(a1, free_propagator(d.r12, zeta),
                                      a2, image_propagator(p2, p1, zeta))

        return f, 0.5 * (d.r + d.R)

    if term is Term.E213:
        sign = -GLOBAL_SIGN * _PREF_TWO_ATOM

        def f(zeta):
            return sign * _pair_trace(a2, free_propagator(d.r21, zeta),
                                      a1, image_propagator(p1, p2, zeta))

        return f, 0.5 * (d.r + d.R)

    if term is Term.E1323:
        sign = GLOBAL_SIGN * _PREF_TWO_ATOM

        def f(zeta):
            return sign * _pair_trace(a1, image_propagator(p1, p2, zeta),
                                      a2, image_propagator(p2, p1, zeta))

        return f, d.R

    if term in (Term.ECP1, Term.ECP2):
        atom = cfg.atom1 if term is Term.ECP1 else cfg.atom2
        if atom.z == 0.0:
            raise GeometryError(f"{term.value}: atom sits on the plate, energy diverges")
        pos, alpha = atom.position, atom.alpha
        sign = -GLOBAL_SIGN * _PREF_ONE_ATOM

        def f(zeta):
            return sign * np.einsum("ij,nji->n", alpha, image_propagator(pos, pos, zeta))

        return f, atom.z

    raise InputError(f"unknown term {term!r}")


def integrand(term, cfg: SystemConfig, zeta):
    """Half-line integrand whose integral over zeta in [0, inf) is the energy.

    The factor two from folding the even integrand onto the half line is
    included.  zeta may be a scalar or an array; negative values are
    folded to |zeta| by the propagators.
    """
    f, _ = _integrand_closure(Term(term), cfg)
    z = np.asarray(zeta, dtype=float)
    out = f(np.atleast_1d(z))
    return float(out[0]) if z.ndim == 0 else out


def numeric_energy(term, cfg: SystemConfig, settings: QuadratureSettings | None = None) -> OracleResult:
    """Quadrature value of one term.

    Substitutes t = 2 zeta d, with d the term's decay length, so every
    integrand decays like exp(-t) regardless of the geometry's scale; the
    upper limit is chosen so the discarded tail is far below abs_floor.
    """
    settings = settings or QuadratureSettings()
    f, decay = _integrand_closure(Term(term), cfg)
    scale = 2.0 * decay
    t_max = 70.0 if settings.abs_floor <= 0 else max(70.0, 25.0 - math.log(settings.abs_floor))

    def g(t):
        return f(t / scale) / scale

    return adaptive_quadrature(g, 0.0, t_max, settings)


@dataclass(frozen=True)
class TermCheck:
    term: Term
    analytic: float
    numeric: float
    error_estimate: float
    evaluations: int
    rel_diff: float
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[TermCheck, ...]
    tol: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_rel_diff(self) -> float:
        return max(c.rel_diff for c in self.checks)

    def worst(self) -> TermCheck:
        return max(self.checks, key=lambda c: c.rel_diff)


def _rel_diff(x, y) -> float:
    scale = max(abs(x), abs(y))
    return abs(x - y) / scale if scale > 0 else 0.0


def verify(cfg: SystemConfig, settings: QuadratureSettings | None = None,
           tol: float = 1e-8) -> VerificationReport:
    """Compare every closed-form term against its quadrature value.

    Both atoms must sit strictly above the plate so the atom-plate terms
    are finite.  Raises QuadratureError if any integration fails.
    """
    if cfg.atom1.z == 0.0 or cfg.atom2.z == 0.0:
        raise GeometryError("verify needs both atoms strictly above the plate")
    bd = energy_breakdown(cfg)
    analytic = {
        Term.E12: bd.e12,
        Term.E123: bd.e123,
        Term.E213: bd.e213,
        Term.E1323: bd.e1323,
        Term.ECP1: bd.e_cp1,
        Term.ECP2: bd.e_cp2,
    }
    checks = []
    for term, ana in analytic.items():
        res = numeric_energy(term, cfg, settings)
        rel = _rel_diff(ana, res.value)
        checks.append(TermCheck(
            term=term, analytic=ana, numeric=res.value,
            error_estimate=res.error_estimate, evaluations=res.evaluations,
            rel_diff=rel, passed=rel <= tol,
        ))
    return VerificationReport(tuple(checks), tol)


def random_configs(n: int, seed: int, z_range=(0.2, 5.0), a_range=(0.2, 5.0)) -> list[SystemConfig]:
    """Seeded batch of random configurations with symmetric tensors.

    Heights and horizontal separation are uniform in the given ranges, the
    separation azimuth is uniform, and each polarizability is a symmetrized
    matrix with entries in [-1, 1] (often indefinite, intentionally; the
    PSD advisory warning is suppressed here).
    """
    rng = np.random.default_rng(seed)
    configs = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for _ in range(n):
            z1, z2 = rng.uniform(*z_range, size=2)
            a = rng.uniform(*a_range)
            phi = rng.uniform(0.0, 2.0 * math.pi)
            m1 = rng.uniform(-1.0, 1.0, size=(3, 3))
            m2 = rng.uniform(-1.0, 1.0, size=(3, 3))
            configs.append(SystemConfig(
                AtomSpec(np.array([0.0, 0.0, z1]), (m1 + m1.T) / 2.0),
                AtomSpec(np.array([a * math.cos(phi), a * math.sin(phi), z2]), (m2 + m2.T) / 2.0),
            ))
    return configs
