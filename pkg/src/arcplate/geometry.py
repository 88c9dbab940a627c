"""Arc-over-plate geometry: separation profile, slope, sagitta, arc length.

Convention: the configured gap is the separation at the arc's center (y = 0),
which is the point farthest from the plate; the edges at |y| = half_span sit
closer by the sagitta. All lengths are SI meters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import (
    ContactViolationError,
    NonPositiveGapError,
    OutOfSpanError,
    PfaViolationError,
)
from .quadrature import DEFAULT_SPEC, QuadratureSpec, integrate

__all__ = [
    "ArcGeometry",
    "PfaReport",
    "PFA_WARN_RATIO",
    "PFA_FAIL_RATIO",
]

# Soft and hard thresholds on gap/radius for the proximity approximation.
PFA_WARN_RATIO = 0.05
PFA_FAIL_RATIO = 0.5


@dataclass(frozen=True)
class PfaReport:
    """Validity report for the proximity approximation on one geometry."""

    ratio: float  # gap / radius
    status: Literal["pass", "warn", "fail"]
    contact_margin: float  # gap - sagitta, m; > 0 means no touch

    @property
    def hard_failure(self) -> bool:
        return self.status == "fail"


@dataclass(frozen=True)
class ArcGeometry:
    radius: float  # R, m
    half_span: float  # y_max, m; profile defined on [-y_max, +y_max]
    gap: float  # g, m; separation at the arc center, its farthest point

    def __post_init__(self) -> None:
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValueError(f"radius must be positive and finite, got {self.radius}")
        if not (0.0 < self.half_span < self.radius):
            raise ValueError(
                f"half_span must lie in (0, radius), got {self.half_span} "
                f"with radius {self.radius}"
            )
        if not (self.gap > 0.0 and math.isfinite(self.gap)):
            raise NonPositiveGapError(f"gap must be positive, got {self.gap}")
        if self.gap / self.radius >= 1.0:
            raise PfaViolationError(
                f"gap/radius = {self.gap / self.radius:.3g} >= 1; the local "
                "parallel-plate picture has no meaning here"
            )
        if self.gap <= self.sagitta:
            raise ContactViolationError(
                f"gap {self.gap:.6g} m does not clear the sagitta "
                f"{self.sagitta:.6g} m; the arc would touch the plate"
            )

    @property
    def sagitta(self) -> float:
        # y_max^2 / (R + sqrt(R^2 - y_max^2)): no cancellation for R >> y_max
        y = self.half_span
        return y * y / (self.radius + math.sqrt(self.radius * self.radius - y * y))

    def _check_span(self, y: float) -> None:
        if abs(y) > self.half_span:
            raise OutOfSpanError(
                f"|y| = {abs(y):.6g} m exceeds half_span {self.half_span:.6g} m"
            )

    def separation(self, y: float) -> float:
        """Local gap psi(y) = g - R + sqrt(R^2 - y^2); psi(0) = g."""
        self._check_span(y)
        # written as g minus the local sagitta to stay cancellation-safe
        local_sag = y * y / (self.radius + math.sqrt(self.radius * self.radius - y * y))
        psi = self.gap - local_sag
        if psi <= 0.0:
            raise ContactViolationError(
                f"separation {psi:.6g} m at y = {y:.6g} m; arc touches the plate"
            )
        return psi

    def slope(self, y: float) -> float:
        """Profile derivative d(psi)/dy = -y / sqrt(R^2 - y^2); odd in y."""
        self._check_span(y)
        return -y / math.sqrt(self.radius * self.radius - y * y)

    def arc_length(self, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
        """Arc length: integral of sqrt(1 + slope^2) over the span.

        Agrees with the closed form 2 R arcsin(y_max / R) to quadrature
        tolerance; the integral form is kept so the quantity stays tied to
        the profile actually used elsewhere.
        """

        def integrand(y: float) -> float:
            s = self.slope(y)
            return math.sqrt(1.0 + s * s)

        result = integrate(integrand, -self.half_span, self.half_span, spec)
        return result.value

    def validate_pfa(self) -> PfaReport:
        """Gap/radius ratio against the warn (0.05) and fail (0.5) thresholds."""
        ratio = self.gap / self.radius
        if ratio >= PFA_FAIL_RATIO:
            status: Literal["pass", "warn", "fail"] = "fail"
        elif ratio > PFA_WARN_RATIO:
            status = "warn"
        else:
            status = "pass"
        return PfaReport(ratio=ratio, status=status, contact_margin=self.gap - self.sagitta)
