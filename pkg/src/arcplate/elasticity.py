"""Thin-plate bending mechanics and the material table.

Kirchhoff-Love plate theory: bending stiffness D = E t^3 / (12 (1 - nu^2)),
strain energy density u = (D/2) [(k11 + k22)^2 - 2 (1 - nu)(k11 k22 - k12^2)],
and the per-unit-depth bending energy of a cylindrically curved strip,
u(arc curvature) times arc length. Energies pair dimensionally with the
per-unit-depth interaction energies from the casimir module (J/m).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

from .errors import MaterialNotFoundError, NonPositiveThicknessError
from .geometry import ArcGeometry
from .quadrature import DEFAULT_SPEC, QuadratureSpec

__all__ = [
    "Material",
    "MaterialWarning",
    "CurvatureTensor",
    "ThinPlateReport",
    "builtin_materials",
    "material_by_name",
    "bending_stiffness",
    "strain_energy_density",
    "bending_energy",
    "thin_plate_check",
]

# Strict tenth-rule bound for the thin-plate assumptions: t < span / 10.
THIN_PLATE_FACTOR = 10.0


class MaterialWarning(UserWarning):
    """Material parameters are unusual but accepted (e.g. nu above 0.5)."""


@dataclass(frozen=True)
class Material:
    """Isotropic elastic constants of one membrane material.

    Uncertainties are stored for reporting only; no computation here
    propagates them.
    """

    name: str
    youngs_modulus: float  # E, Pa
    poisson_ratio: float  # nu, dimensionless
    sigma_e: float | None = None  # one-sigma uncertainty of E, Pa
    sigma_nu: float | None = None  # one-sigma uncertainty of nu

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("material name must be non-empty")
        if not (self.youngs_modulus > 0.0 and math.isfinite(self.youngs_modulus)):
            raise ValueError(
                f"{self.name}: youngs modulus must be positive, "
                f"got {self.youngs_modulus}"
            )
        if not (-1.0 < self.poisson_ratio < 1.0):
            raise ValueError(
                f"{self.name}: poisson ratio must lie in (-1, 1), "
                f"got {self.poisson_ratio}"
            )
        if self.poisson_ratio > 0.5:
            # Thin-film values above the isotropic bulk bound are accepted
            # on purpose; flag them so the choice is visible.
            warnings.warn(
                f"{self.name}: poisson ratio {self.poisson_ratio} exceeds the "
                "isotropic bulk limit 0.5; accepted as a thin-film value",
                MaterialWarning,
                stacklevel=3,  # past the generated dataclass __init__
            )
        for label, sigma in (("sigma_e", self.sigma_e), ("sigma_nu", self.sigma_nu)):
            if sigma is not None and sigma < 0.0:
                raise ValueError(f"{self.name}: {label} must be >= 0, got {sigma}")

    @property
    def plane_strain_modulus(self) -> float:
        """E / (1 - nu^2), Pa; the stiffness combination bending depends on."""
        return self.youngs_modulus / (1.0 - self.poisson_ratio**2)


def builtin_materials() -> list[Material]:
    """The two membrane materials shipped with the package."""
    return [
        Material("gold", youngs_modulus=97e9, poisson_ratio=0.421,
                 sigma_e=10e9, sigma_nu=0.06),
        Material("silver", youngs_modulus=83.6e9, poisson_ratio=0.517),
    ]


def material_by_name(
    name: str, materials: Sequence[Material] | None = None
) -> Material:
    """Case-insensitive lookup in ``materials`` (builtins when omitted)."""
    pool = builtin_materials() if materials is None else materials
    wanted = name.strip().lower()
    for mat in pool:
        if mat.name.lower() == wanted:
            return mat
    known = ", ".join(m.name for m in pool)
    raise MaterialNotFoundError(f"unknown material {name!r}; available: {known}")


@dataclass(frozen=True)
class CurvatureTensor:
    """Symmetric 2x2 curvature tensor, entries in 1/m (k21 == k12)."""

    k11: float
    k12: float
    k22: float

    def __post_init__(self) -> None:
        for label, k in (("k11", self.k11), ("k12", self.k12), ("k22", self.k22)):
            if not math.isfinite(k):
                raise ValueError(f"curvature {label} must be finite, got {k}")

    @classmethod
    def arc(cls, radius: float) -> "CurvatureTensor":
        """Cylindrical bending: principal curvatures (1/radius, 0)."""
        if radius <= 0.0:
            raise ValueError(f"radius must be positive, got {radius}")
        return cls(k11=1.0 / radius, k12=0.0, k22=0.0)

    @classmethod
    def flat(cls) -> "CurvatureTensor":
        return cls(0.0, 0.0, 0.0)


def bending_stiffness(mat: Material, t: float) -> float:
    """D = E t^3 / (12 (1 - nu^2)), in J."""
    if t <= 0.0:
        raise NonPositiveThicknessError(f"thickness must be positive, got {t}")
    return mat.youngs_modulus * t**3 / (12.0 * (1.0 - mat.poisson_ratio**2))


def strain_energy_density(D: float, nu: float, k: CurvatureTensor) -> float:
    """Bending strain energy per unit area, J/m^2.

    u = (D/2) [(k11 + k22)^2 - 2 (1 - nu)(k11 k22 - k12^2)]
    """
    if D < 0.0:
        raise ValueError(f"bending stiffness must be >= 0, got {D}")
    trace = k.k11 + k.k22
    det = k.k11 * k.k22 - k.k12 * k.k12
    return 0.5 * D * (trace * trace - 2.0 * (1.0 - nu) * det)


def bending_energy(
    mat: Material,
    t: float,
    geom: ArcGeometry,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """Per-unit-depth bending energy of the arc, J/m.

    Strain energy density at the arc curvature times the arc length;
    strictly increasing and exactly cubic in t.
    """
    D = bending_stiffness(mat, t)
    u = strain_energy_density(D, mat.poisson_ratio, CurvatureTensor.arc(geom.radius))
    return u * geom.arc_length(spec)


@dataclass(frozen=True)
class ThinPlateReport:
    """Tenth-rule check of the thin-plate assumptions for spans a and b."""

    ratio_a: float  # t / a
    ratio_b: float  # t / b
    ok_a: bool  # t < a / 10, strict
    ok_b: bool  # t < b / 10, strict

    @property
    def passed(self) -> bool:
        return self.ok_a and self.ok_b


def thin_plate_check(t: float, span_a: float, span_b: float) -> ThinPlateReport:
    """Report whether thickness t is thin against both lateral spans."""
    if t <= 0.0:
        raise NonPositiveThicknessError(f"thickness must be positive, got {t}")
    if span_a <= 0.0 or span_b <= 0.0:
        raise ValueError(f"spans must be positive, got {span_a} and {span_b}")
    return ThinPlateReport(
        ratio_a=t / span_a,
        ratio_b=t / span_b,
        ok_a=t < span_a / THIN_PLATE_FACTOR,
        ok_b=t < span_b / THIN_PLATE_FACTOR,
    )
