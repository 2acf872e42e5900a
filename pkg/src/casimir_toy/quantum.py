"""Closed-form quantum results at fixed y.

Two independent routes to the force on the heavy coordinate:

  * energy route:      F = -d/dy [hbar(Omega+ + Omega-)/2]
  * fluctuation route: F = -g'(y) <x1 x2>, with <x+-^2> = hbar/(2 m Omega+-)

and the Bogoliubov structure of the interacting vacuum: coefficients
alpha/beta, mean free-quanta numbers, and the geometric pair expansion of the
two-mode squeezed vacuum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidRatioError
from .model import Spectrum, ValidatedModel, spectrum


@dataclass(frozen=True)
class BogoliubovCoeffs:
    alpha_1p: float
    alpha_2p: float
    alpha_1m: float
    alpha_2m: float
    beta_1p: float
    beta_2p: float
    beta_1m: float
    beta_2m: float


@dataclass(frozen=True)
class VacuumObservables:
    E_vac: float
    x_plus_sq: float
    x_minus_sq: float
    x1x2: float
    N1: float
    N2: float


@dataclass(frozen=True)
class VacuumExpansion:
    """Pair expansion |0~> = c0 sum_n (-beta/alpha)^n |n,n>, truncated at N_max.

    tail is the exact geometric mass beyond N_max, so sum(c_n^2) + tail == 1.
    """

    alpha: float
    beta: float
    c0: float
    coefficients: np.ndarray
    N_max: int
    tail: float

    @property
    def ratio(self) -> float:
        return self.beta / self.alpha


def vacuum_energy(model: ValidatedModel, y: float) -> float:
    """Interacting effective-vacuum energy hbar(Omega+ + Omega-)/2."""
    s = spectrum(model, y)
    return model.hbar * (s.omega_plus + s.omega_minus) / 2.0


def casimir_force(model: ValidatedModel, y: float) -> float:
    """Energy-route force: -hbar g'/(4 m Omega+) + hbar g'/(4 m Omega-).

    Evaluated through the cancellation-free identity
    1/Omega- - 1/Omega+ = 2g / (m Omega+ Omega- (Omega+ + Omega-)),
    which is exact because Omega+^2 - Omega-^2 = 2g/m.
    """
    s = spectrum(model, y)
    gp = model.g_prime(y)
    g = model.g(y)
    inv_diff = 2.0 * g / (
        model.m * s.omega_plus * s.omega_minus * (s.omega_plus + s.omega_minus)
    )
    return model.hbar * gp / (4.0 * model.m) * inv_diff


def vacuum_fluctuations(model: ValidatedModel, y: float) -> VacuumObservables:
    """Ground-state second moments and mean free-quanta numbers at fixed y."""
    s = spectrum(model, y)
    xp2 = model.hbar / (2.0 * model.m * s.omega_plus)
    xm2 = model.hbar / (2.0 * model.m * s.omega_minus)
    # (xp2 - xm2)/2 via the same cancellation-free difference used for the
    # force: Omega+^2 - Omega-^2 = 2g/m exactly.
    x1x2 = -model.hbar * model.g(y) / (
        2.0
        * model.m**2
        * s.omega_plus
        * s.omega_minus
        * (s.omega_plus + s.omega_minus)
    )
    n1, n2 = mean_free_quanta(bogoliubov_coefficients(model, y))
    return VacuumObservables(
        E_vac=model.hbar * (s.omega_plus + s.omega_minus) / 2.0,
        x_plus_sq=xp2,
        x_minus_sq=xm2,
        x1x2=x1x2,
        N1=n1,
        N2=n2,
    )


def lifshitz_force(model: ValidatedModel, y: float) -> float:
    """Fluctuation-route force -g'(y) <x1 x2>; no vacuum energy involved."""
    obs = vacuum_fluctuations(model, y)
    return -model.g_prime(y) * obs.x1x2


def bogoliubov_coefficients(model: ValidatedModel, y: float) -> BogoliubovCoeffs:
    """Coefficients mixing free-mode and normal-mode ladder operators.

    alpha_1+- = (Omega+- + omega) / (2 sqrt(2 Omega+- omega))
    beta_1+-  = (Omega+- - omega) / (2 sqrt(2 Omega+- omega))
    with alpha_2+- = +-alpha_1+-, beta_2+- = +-beta_1+-.  Signs are kept as
    they come out; beta_1- is negative for any g > 0.
    """
    s = spectrum(model, y)
    a1p, b1p = _branch_coeffs(s.omega_plus, s.omega)
    a1m, b1m = _branch_coeffs(s.omega_minus, s.omega)
    return BogoliubovCoeffs(
        alpha_1p=a1p,
        alpha_2p=a1p,
        alpha_1m=a1m,
        alpha_2m=-a1m,
        beta_1p=b1p,
        beta_2p=b1p,
        beta_1m=b1m,
        beta_2m=-b1m,
    )


def _branch_coeffs(big_omega: float, omega: float) -> tuple[float, float]:
    denom = 2.0 * math.sqrt(2.0 * big_omega * omega)
    return (big_omega + omega) / denom, (big_omega - omega) / denom


def bogoliubov_normalization(coeffs: BogoliubovCoeffs) -> tuple[float, float]:
    """sum_j (alpha_j+-^2 - beta_j+-^2) per branch; exactly 1 for valid input."""
    plus = (coeffs.alpha_1p**2 + coeffs.alpha_2p**2) - (
        coeffs.beta_1p**2 + coeffs.beta_2p**2
    )
    minus = (coeffs.alpha_1m**2 + coeffs.alpha_2m**2) - (
        coeffs.beta_1m**2 + coeffs.beta_2m**2
    )
    return plus, minus


def mean_free_quanta(coeffs: BogoliubovCoeffs) -> tuple[float, float]:
    """<N_j> = beta_j+^2 + beta_j-^2; equal for j = 1, 2 by the sign structure."""
    n1 = coeffs.beta_1p**2 + coeffs.beta_1m**2
    n2 = coeffs.beta_2p**2 + coeffs.beta_2m**2
    return n1, n2


def squeezed_vacuum_expansion(
    coeffs: BogoliubovCoeffs, branch: str = "plus", N_max: int = 20
) -> VacuumExpansion:
    """Single-branch pair expansion of the interacting vacuum.

    Uses the (alpha, beta) of the chosen branch in the simplified one-mode
    transformation a = alpha(a1 + a2) + beta(a1' + a2'); the recursion
    c_{n+1} = -(beta/alpha) c_n gives c_n = (-beta/alpha)^n c0 with
    c0 = sqrt(1 - (beta/alpha)^2).
    """
    if N_max < 0:
        raise ValueError(f"N_max must be >= 0, got {N_max}")
    if branch == "plus":
        alpha, beta = coeffs.alpha_1p, coeffs.beta_1p
    elif branch == "minus":
        alpha, beta = coeffs.alpha_1m, coeffs.beta_1m
    else:
        raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")
    r = beta / alpha
    if not abs(r) < 1.0:
        raise InvalidRatioError(f"|beta/alpha| = {abs(r)} >= 1")
    c0 = math.sqrt(1.0 - r * r)
    coefficients = c0 * (-r) ** np.arange(N_max + 1)
    tail = r ** (2 * (N_max + 1))  # = c0^2 * r^(2N+2) / (1 - r^2)
    return VacuumExpansion(
        alpha=alpha, beta=beta, c0=c0, coefficients=coefficients, N_max=N_max, tail=tail
    )
