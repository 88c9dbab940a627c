"""Critical membrane thickness and the gap sweep.

A membrane of thickness t flips its curvature when the magnitude of the
attractive arc-plate energy exceeds the bending energy; since bending energy
is exactly cubic in t, the largest admissible thickness has the closed form
t = (|U| / C)^(1/3) with C = E L / (24 (1 - nu^2) R^2). The sweep evaluates
this across a uniform grid of gaps for every requested material and model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .casimir import NTLO, PFA, EnergyModel, arc_energy
from .elasticity import Material
from .errors import NonNegativeEnergyError, ZeroReferenceError
from .geometry import ArcGeometry
from .quadrature import DEFAULT_SPEC, QuadratureSpec

__all__ = [
    "SweepConfig",
    "SweepRow",
    "SweepTable",
    "critical_thickness",
    "fractional_deviation",
    "run_sweep",
]


def critical_thickness(u_casimir: float, mat: Material, geom: ArcGeometry) -> float:
    """Largest thickness whose bending energy the interaction can overcome, m.

    t = (|u_casimir| / C)^(1/3), C = E L / (24 (1 - nu^2) R^2); the reported
    value is the equality point |U| = U_bend(t), i.e. the supremum of
    admissible thicknesses. Uses the closed-form arc length
    2 R arcsin(y_max / R); bending_energy's quadrature agrees with it to
    integration tolerance.
    """
    if u_casimir >= 0.0:
        raise NonNegativeEnergyError(
            f"need an attractive (negative) energy, got {u_casimir}"
        )
    length = 2.0 * geom.radius * math.asin(geom.half_span / geom.radius)
    coef = mat.plane_strain_modulus * length / (24.0 * geom.radius**2)
    return (-u_casimir / coef) ** (1.0 / 3.0)


def fractional_deviation(t_a: float, t_b: float) -> float:
    """|t_a - t_b| / t_b; t_b is the reference and must be positive."""
    if t_b <= 0.0:
        raise ZeroReferenceError(f"reference thickness must be positive, got {t_b}")
    return abs(t_a - t_b) / t_b


@dataclass(frozen=True)
class SweepConfig:
    """Inputs of one sweep: gap grid, geometry template, materials, models.

    comparison names the (other, reference) model pair feeding the per-row
    deviation delta; None picks (pfa, ntlo) when both are requested and
    disables delta otherwise.
    """

    gap_min: float  # m
    gap_max: float  # m
    points: int
    radius: float  # m
    half_span: float  # m
    materials: tuple[Material, ...]
    models: tuple[EnergyModel, ...]
    quadrature: QuadratureSpec = DEFAULT_SPEC
    comparison: tuple[EnergyModel, EnergyModel] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "materials", tuple(self.materials))
        object.__setattr__(self, "models", tuple(self.models))
        if not (0.0 < self.gap_min <= self.gap_max):
            raise ValueError(
                f"need 0 < gap_min <= gap_max, got [{self.gap_min}, {self.gap_max}]"
            )
        if self.points < 1:
            raise ValueError(f"points must be >= 1, got {self.points}")
        if not self.materials:
            raise ValueError("at least one material required")
        if not self.models:
            raise ValueError("at least one model required")
        names = [m.name for m in self.materials]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate material names: {names}")
        keys = [m.key for m in self.models]
        if len(set(keys)) != len(keys):
            raise ValueError(f"duplicate models: {keys}")
        if self.comparison is not None:
            for model in self.comparison:
                if model not in self.models:
                    raise ValueError(
                        f"comparison model {model.label} not among requested models"
                    )

    def resolved_comparison(self) -> tuple[EnergyModel, EnergyModel] | None:
        if self.comparison is not None:
            return self.comparison
        if PFA in self.models and NTLO in self.models:
            return (PFA, NTLO)
        return None

    def reference_model(self) -> EnergyModel:
        """Model whose thicknesses the CSV reports: the deviation reference
        when a comparison is active, else the last model requested."""
        pair = self.resolved_comparison()
        return pair[1] if pair is not None else self.models[-1]

    def gaps(self) -> np.ndarray:
        # uniform linear grid, ascending; points == 1 degenerates to gap_min
        return np.linspace(self.gap_min, self.gap_max, self.points)


@dataclass(frozen=True)
class SweepRow:
    gap: float  # m
    energies: dict[str, float]  # model key -> J/m
    thickness: dict[tuple[str, str], float]  # (material name, model key) -> m
    delta: float | None  # fractional deviation of the comparison pair


@dataclass(frozen=True)
class SweepTable:
    config: SweepConfig
    rows: tuple[SweepRow, ...] = field(repr=False)
    arc_length: float  # m, gap-independent


def run_sweep(config: SweepConfig) -> SweepTable:
    """One SweepRow per gap, ascending; deterministic for a fixed config.

    Rows are evaluated sequentially (the whole default sweep takes well under
    a second); a contact violation at any gap aborts the run immediately.
    """
    pair = config.resolved_comparison()
    first_material = config.materials[0].name
    rows: list[SweepRow] = []
    arc_len = 0.0
    for gap in config.gaps():
        geom = ArcGeometry(radius=config.radius, half_span=config.half_span, gap=float(gap))
        if not rows:
            arc_len = geom.arc_length(config.quadrature)
        energies = {
            model.key: arc_energy(geom, model, config.quadrature).value
            for model in config.models
        }
        thickness = {
            (mat.name, model.key): critical_thickness(energies[model.key], mat, geom)
            for mat in config.materials
            for model in config.models
        }
        delta = None
        if pair is not None:
            delta = fractional_deviation(
                thickness[(first_material, pair[0].key)],
                thickness[(first_material, pair[1].key)],
            )
        rows.append(
            SweepRow(gap=float(gap), energies=energies, thickness=thickness, delta=delta)
        )
    return SweepTable(config=config, rows=tuple(rows), arc_length=arc_len)
