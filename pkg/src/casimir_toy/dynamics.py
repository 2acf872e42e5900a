"""Semiclassical evolution of the heavy coordinate under the vacuum force.

Integrates M y'' = F(y) with velocity-Verlet (leapfrog), where F comes from
one of three routes: the closed-form energy route, the closed-form
fluctuation route, or the truncated-Fock oracle.  The conserved audit
quantity is E_total = p_y^2 / 2M + E_vac(y).
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sparse
import scipy.sparse.linalg

from . import fock, quantum
from .errors import EmptyTrajectoryError
from .model import ValidatedModel

FORCE_ROUTES = ("casimir", "lifshitz", "oracle")


@dataclass(frozen=True)
class DynamicsConfig:
    y0: float
    v0: float
    dt: float
    t_max: float
    force_route: str = "casimir"
    oracle_n_max: int = 20
    oracle_budget_s: float = 300.0

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError(f"dt must be > 0, got {self.dt}")
        if self.t_max <= 0:
            raise ValueError(f"t_max must be > 0, got {self.t_max}")
        if self.force_route not in FORCE_ROUTES:
            raise ValueError(
                f"force_route must be one of {FORCE_ROUTES}, got {self.force_route!r}"
            )


@dataclass(frozen=True)
class Trajectory:
    t: np.ndarray
    y: np.ndarray
    p_y: np.ndarray
    F: np.ndarray
    E_vac: np.ndarray
    E_total: np.ndarray
    domain_exited: bool = False
    oracle_advisory: bool = False

    def __len__(self) -> int:
        return len(self.t)


class OracleTooSlowWarning(UserWarning):
    """Projected oracle-route runtime exceeds the configured budget."""


def _route_functions(model: ValidatedModel, config: DynamicsConfig):
    """Return (force(y), vacuum_energy(y)) for the selected route."""
    if config.force_route == "casimir":
        return (
            lambda y: quantum.casimir_force(model, y),
            lambda y: quantum.vacuum_energy(model, y),
        )
    if config.force_route == "lifshitz":
        return (
            lambda y: quantum.lifshitz_force(model, y),
            lambda y: quantum.vacuum_energy(model, y),
        )
    # Oracle route: H(y) = H0 + g(y) V with fixed H0, V, so precompute both
    # and find the lowest eigenpair per step (warm-started Lanczos).
    basis = fock.TruncatedBasis(config.oracle_n_max)
    eye = np.eye(basis.n_max + 1)
    num = basis.number()
    x = fock.position_matrix(model, basis)
    h0 = sparse.csr_matrix(
        model.hbar * model.omega * (np.kron(num, eye) + np.kron(eye, num) + np.eye(basis.dim))
    )
    v_int = sparse.csr_matrix(np.kron(x, x))
    state = {"v0": None}

    def oracle_pair(y):
        h = h0 + model.g(y) * v_int
        vals, vecs = sparse.linalg.eigsh(h, k=1, which="SA", v0=state["v0"])
        vec = vecs[:, 0]
        state["v0"] = vec
        x1x2 = float(vec @ (v_int @ vec))
        return -model.g_prime(y) * x1x2, float(vals[0])

    # Cache the (force, energy) pair so each step costs one diagonalization.
    cache: dict[float, tuple[float, float]] = {}

    def cached(y):
        if y not in cache:
            cache.clear()
            cache[y] = oracle_pair(y)
        return cache[y]

    return (lambda y: cached(y)[0], lambda y: cached(y)[1])


def evolve(model: ValidatedModel, config: DynamicsConfig) -> Trajectory:
    """Leapfrog (kick-drift-kick) integration of the heavy coordinate.

    Emits a row per step; stops at t_max or on domain exit (flagged).  When
    force_route='oracle' and the projected runtime exceeds the budget, an
    OracleTooSlowWarning is issued and the trajectory is flagged, but the run
    proceeds.
    """
    c = model.coupling
    c.check_domain(config.y0)
    force_fn, evac_fn = _route_functions(model, config)
    n_steps = int(round(config.t_max / config.dt))
    dt = config.dt
    big_m = model.M

    advisory = False
    tic = time.perf_counter()
    f = force_fn(config.y0)
    first_eval = time.perf_counter() - tic
    if config.force_route == "oracle":
        projected = first_eval * 2.0 * n_steps
        if projected > config.oracle_budget_s:
            advisory = True
            warnings.warn(
                f"projected oracle-route runtime {projected:.1f}s exceeds "
                f"budget {config.oracle_budget_s:.1f}s",
                OracleTooSlowWarning,
            )

    y = config.y0
    p = big_m * config.v0
    t = 0.0
    evac = evac_fn(y)
    rows = [(t, y, p, f, evac, p * p / (2 * big_m) + evac)]
    exited = False
    for _ in range(n_steps):
        p_half = p + 0.5 * dt * f
        y_new = y + dt * p_half / big_m
        if not (c.y_min <= y_new <= c.y_max):
            exited = True
            break
        f = force_fn(y_new)
        p = p_half + 0.5 * dt * f
        y = y_new
        t += dt
        evac = evac_fn(y)
        rows.append((t, y, p, f, evac, p * p / (2 * big_m) + evac))

    arr = np.array(rows)
    return Trajectory(
        t=arr[:, 0],
        y=arr[:, 1],
        p_y=arr[:, 2],
        F=arr[:, 3],
        E_vac=arr[:, 4],
        E_total=arr[:, 5],
        domain_exited=exited,
        oracle_advisory=advisory,
    )


def energy_audit(trajectory: Trajectory) -> tuple[float, np.ndarray]:
    """Max relative drift of E_total and the per-row drift series."""
    if len(trajectory) == 0:
        raise EmptyTrajectoryError("trajectory has no rows")
    e0 = trajectory.E_total[0]
    drift = np.abs(trajectory.E_total - e0) / max(abs(e0), 1e-30)
    return float(np.max(drift)), drift
