"""Casimir interaction energies for ideal-conductor boundaries.

Closed forms for the parallel-plate and sphere-plate configurations, and the
arc-plate energy per unit depth as a profile integral: the leading
proximity-style term plus an optional squared-slope gradient correction,

    U = -(pi^2 hbar c / 1440) * integral [1 + kappa*(2/3)*psi'(y)^2] / psi(y)^3 dy

with kappa = 0 (leading order), 1 (gradient-corrected), or a scale factor in
between. All functions are pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import NonPositiveGapError, PfaViolationError
from .geometry import ArcGeometry
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate

__all__ = [
    "PhysicalConstants",
    "CODATA",
    "EnergyModel",
    "PFA",
    "NTLO",
    "scaled_ntlo",
    "LineEnergy",
    "parallel_plate_pressure",
    "parallel_plate_energy_density",
    "sphere_plate_force",
    "sphere_plate_energy",
    "arc_energy",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants; fixed, not configurable."""

    hbar: float = 1.054571817e-34  # J*s, CODATA 2018
    c: float = 299792458.0  # m/s, exact


CODATA = PhysicalConstants()

# Coefficients evaluated once; every formula below is coefficient / power of
# separation. The plate energy-per-area coefficient (pi/720) is deliberately
# independent of the arc prefactor (pi^2/1440); no derivative relation between
# pressure and that density is asserted anywhere in this package.
_HBAR_C = CODATA.hbar * CODATA.c
_PLATE_PRESSURE_COEF = math.pi**2 * _HBAR_C / 240.0  # J*m
_PLATE_DENSITY_COEF = math.pi * _HBAR_C / 720.0  # J*m^2
_SPHERE_FORCE_COEF = math.pi**3 * _HBAR_C / 360.0  # J*m
_SPHERE_ENERGY_COEF = math.pi**3 * _HBAR_C / 720.0  # J*m
_ARC_COEF = math.pi**2 * _HBAR_C / 1440.0  # J*m^2


@dataclass(frozen=True)
class EnergyModel:
    """Which terms of the profile expansion the arc energy keeps.

    variant "pfa" keeps only the leading 1/psi^3 term; "ntlo" adds the full
    (2/3) psi'^2 gradient correction; "scaled-ntlo" weights that correction
    by epsilon in [0, 1]. Weight 0 reproduces "pfa" identically and weight 1
    reproduces "ntlo" identically.
    """

    variant: Literal["pfa", "ntlo", "scaled-ntlo"]
    epsilon: float | None = None

    def __post_init__(self) -> None:
        if self.variant not in ("pfa", "ntlo", "scaled-ntlo"):
            raise ValueError(f"unknown energy model variant: {self.variant!r}")
        if self.variant == "scaled-ntlo":
            if self.epsilon is None:
                raise ValueError("scaled-ntlo requires an epsilon")
            if not (0.0 <= self.epsilon <= 1.0):
                raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")
        elif self.epsilon is not None:
            raise ValueError(f"{self.variant} does not take an epsilon")

    @property
    def gradient_weight(self) -> float:
        """kappa: 0 for pfa, 1 for ntlo, epsilon for scaled-ntlo."""
        if self.variant == "pfa":
            return 0.0
        if self.variant == "ntlo":
            return 1.0
        return float(self.epsilon)  # type: ignore[arg-type]

    @property
    def label(self) -> str:
        if self.variant == "scaled-ntlo":
            return f"scaled-ntlo({self.epsilon:g})"
        return self.variant

    @property
    def key(self) -> str:
        """Identifier safe for CSV column names and dict keys."""
        if self.variant == "scaled-ntlo":
            return f"scaled_ntlo_{self.epsilon:g}"
        return self.variant


PFA = EnergyModel("pfa")
NTLO = EnergyModel("ntlo")


def scaled_ntlo(epsilon: float) -> EnergyModel:
    """Gradient correction scaled by epsilon in [0, 1]."""
    return EnergyModel("scaled-ntlo", epsilon)


@dataclass(frozen=True)
class LineEnergy:
    """Arc-plate interaction energy per unit depth.

    value is negative for every valid geometry (attraction);
    quadrature_error is the integration engine's absolute error estimate,
    in the same units as value.
    """

    value: float  # J/m
    model: EnergyModel
    quadrature_error: float  # J/m


def parallel_plate_pressure(d: float) -> float:
    """Attraction per unit area of ideal parallel plates, Pa.

    -pi^2 hbar c / (240 d^4)
    """
    if d <= 0.0:
        raise NonPositiveGapError(f"plate separation must be positive, got {d}")
    return -_PLATE_PRESSURE_COEF / d**4


def parallel_plate_energy_density(d: float) -> float:
    """Interaction energy per unit plate area, J/m^2.

    -pi hbar c / (720 d^3). This is the served value as such; it is not the
    separation-integral of parallel_plate_pressure, and the arc integral does
    not use it (see module docstring).
    """
    if d <= 0.0:
        raise NonPositiveGapError(f"plate separation must be positive, got {d}")
    return -_PLATE_DENSITY_COEF / d**3


def _check_sphere_args(R: float, d: float) -> None:
    if R <= 0.0:
        raise ValueError(f"sphere radius must be positive, got {R}")
    if d <= 0.0:
        raise NonPositiveGapError(f"gap must be positive, got {d}")
    if d / R >= 1.0:
        raise PfaViolationError(
            f"gap/radius = {d / R:.3g} >= 1; sphere-plate closed form invalid"
        )


def sphere_plate_force(R: float, d: float) -> float:
    """Sphere-plate attraction, N: -pi^3 hbar c R / (360 d^3)."""
    _check_sphere_args(R, d)
    return -_SPHERE_FORCE_COEF * R / d**3


def sphere_plate_energy(R: float, d: float) -> float:
    """Sphere-plate interaction energy, J: -pi^3 hbar c R / (720 d^2).

    Separation-integral of sphere_plate_force, vanishing at infinite gap;
    exactly linear in R.
    """
    _check_sphere_args(R, d)
    return -_SPHERE_ENERGY_COEF * R / (d * d)


def arc_energy(
    geom: ArcGeometry,
    model: EnergyModel,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> LineEnergy:
    """Arc-plate interaction energy per unit depth, J/m.

    Integrates [1 + kappa*(2/3)*slope^2] / separation^3 across the span and
    scales by -pi^2 hbar c / 1440. The separation and slope come from the
    geometry itself, so contact violations surface as ContactViolationError;
    quadrature failures as NonConvergenceError.
    """
    weight = model.gradient_weight * (2.0 / 3.0)

    def integrand(y: float) -> float:
        psi = geom.separation(y)
        s = geom.slope(y)
        return (1.0 + weight * s * s) / (psi * psi * psi)

    result = integrate(integrand, -geom.half_span, geom.half_span, spec)
    return LineEnergy(
        value=-_ARC_COEF * result.value,
        model=model,
        quadrature_error=_ARC_COEF * result.error_estimate,
    )
