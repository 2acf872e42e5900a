"""Model parameters, the coupling family g(y), and spectral quantities.

Two identical oscillators (mass m, spring k) are coupled through g(y) x1 x2,
where y is a heavy coordinate of mass M.  Everything else in the package is
derived from the normal-mode frequencies computed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConstraintViolationError, DomainError, NonPositiveParameterError

FAMILIES = ("constant", "exponential", "inverse-power")

# Below this mass ratio the adiabatic (slow-y) treatment is dubious.
ADIABATIC_MASS_RATIO = 100.0


@dataclass(frozen=True)
class CouplingSpec:
    """Coupling family g(y), monotone non-increasing on [y_min, y_max].

    constant        g(y) = g0
    exponential     g(y) = g0 * exp(-y / lam)
    inverse-power   g(y) = g0 / (1 + (y / lam) ** exponent)
    """

    family: str
    g0: float
    lam: float = 1.0
    exponent: int = 2
    y_min: float = 0.0
    y_max: float = 10.0

    def check_domain(self, y: float) -> None:
        if not (self.y_min <= y <= self.y_max):
            raise DomainError(
                f"y={y} outside coupling domain [{self.y_min}, {self.y_max}]"
            )

    def value(self, y: float) -> float:
        self.check_domain(y)
        return self.value_raw(y)

    def value_raw(self, y: float) -> float:
        """Family formula without the domain check (integrator substeps only)."""
        if self.family == "constant":
            return self.g0
        if self.family == "exponential":
            return self.g0 * math.exp(-y / self.lam)
        if self.family == "inverse-power":
            return self.g0 / (1.0 + (y / self.lam) ** self.exponent)
        raise ConstraintViolationError(f"unknown coupling family {self.family!r}")

    def derivative(self, y: float) -> float:
        self.check_domain(y)
        return self.derivative_raw(y)

    def derivative_raw(self, y: float) -> float:
        if self.family == "constant":
            return 0.0
        if self.family == "exponential":
            return -self.g0 / self.lam * math.exp(-y / self.lam)
        if self.family == "inverse-power":
            u = (y / self.lam) ** (self.exponent - 1)
            denom = 1.0 + (y / self.lam) ** self.exponent
            return -self.g0 * self.exponent * u / (self.lam * denom**2)
        raise ConstraintViolationError(f"unknown coupling family {self.family!r}")


@dataclass(frozen=True)
class ModelParams:
    m: float
    M: float
    k: float
    coupling: CouplingSpec
    hbar: float = 1.0


@dataclass(frozen=True)
class ValidatedModel:
    """ModelParams that passed validation.  Immutable; construct via validate()."""

    m: float
    M: float
    k: float
    hbar: float
    coupling: CouplingSpec
    mass_ratio: float = field(init=False)
    adiabatic_warning: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "mass_ratio", self.M / self.m)
        object.__setattr__(
            self, "adiabatic_warning", self.mass_ratio < ADIABATIC_MASS_RATIO
        )

    @property
    def omega(self) -> float:
        return math.sqrt(self.k / self.m)

    def g(self, y: float) -> float:
        return self.coupling.value(y)

    def g_prime(self, y: float) -> float:
        return self.coupling.derivative(y)


@dataclass(frozen=True)
class Spectrum:
    """Frequencies at a fixed y: free omega, coupling omega_g, normal Omega+-."""

    omega: float
    omega_g: float
    omega_plus: float
    omega_minus: float


def validate(params: ModelParams) -> ValidatedModel:
    """Check all model invariants and return an immutable validated model.

    Raises NonPositiveParameterError or ConstraintViolationError naming the
    offending quantity.
    """
    for name in ("m", "M", "k", "hbar"):
        if not getattr(params, name) > 0:
            raise NonPositiveParameterError(f"{name} must be > 0, got {getattr(params, name)}")
    c = params.coupling
    if c.family not in FAMILIES:
        raise ConstraintViolationError(
            f"coupling family must be one of {FAMILIES}, got {c.family!r}"
        )
    if c.g0 < 0:
        raise ConstraintViolationError(f"g0 must be >= 0, got {c.g0}")
    if c.family != "constant" and not c.lam > 0:
        raise NonPositiveParameterError(f"lambda must be > 0, got {c.lam}")
    if c.family == "inverse-power":
        if not (isinstance(c.exponent, int) and c.exponent >= 1):
            raise ConstraintViolationError(
                f"inverse-power exponent must be a positive integer, got {c.exponent}"
            )
        if c.y_min < 0:
            raise ConstraintViolationError(
                f"inverse-power family requires y_min >= 0, got {c.y_min}"
            )
    if not c.y_min < c.y_max:
        raise ConstraintViolationError(
            f"domain requires y_min < y_max, got [{c.y_min}, {c.y_max}]"
        )
    # All families are monotone non-increasing, so sup g = g(y_min).
    g_sup = c.value(c.y_min) if c.family != "constant" else c.g0
    if not g_sup < params.k:
        raise ConstraintViolationError(
            f"g(y_min)={g_sup} >= k={params.k}: positivity constraint violated"
        )
    return ValidatedModel(
        m=params.m, M=params.M, k=params.k, hbar=params.hbar, coupling=c
    )


def coupling_value(spec: CouplingSpec, y: float) -> float:
    return spec.value(y)


def coupling_derivative(spec: CouplingSpec, y: float) -> float:
    return spec.derivative(y)


def spectrum(model: ValidatedModel, y: float) -> Spectrum:
    """Normal-mode frequencies Omega+- = sqrt((k +- g(y))/m) at fixed y."""
    g = model.g(y)
    omega = math.sqrt(model.k / model.m)
    omega_g = math.sqrt(g / model.m)
    return Spectrum(
        omega=omega,
        omega_g=omega_g,
        omega_plus=math.sqrt((model.k + g) / model.m),
        omega_minus=math.sqrt((model.k - g) / model.m),
    )


def normal_coordinates(x1: float, x2: float) -> tuple[float, float]:
    """Lab -> normal coordinates: x+- = (x1 +- x2)/sqrt(2)."""
    s = math.sqrt(0.5)
    return s * (x1 + x2), s * (x1 - x2)


def lab_coordinates(x_plus: float, x_minus: float) -> tuple[float, float]:
    """Normal -> lab coordinates: x1 = (x+ + x-)/sqrt(2), x2 = (x+ - x-)/sqrt(2)."""
    s = math.sqrt(0.5)
    return s * (x_plus + x_minus), s * (x_plus - x_minus)
