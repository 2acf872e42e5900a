"""Numerical laboratory for a 3-degree-of-freedom Casimir-like toy model.

Two oscillators x1, x2 coupled through g(y) x1 x2, with y a heavy
semiclassical coordinate.  The package evaluates the vacuum force on y
through two independent closed-form routes, exposes the Bogoliubov and
squeezed-vacuum structure of the interacting ground state, verifies every
analytic claim against a truncated-Fock-space diagonalization, and evolves y
under the quantum force.
"""

from .classical import (
    ClassicalTrajectory,
    ModeAmplitudes,
    PhaseState,
    classical_force,
    evolve_classical,
    normal_mode_solution,
)
from .dynamics import DynamicsConfig, Trajectory, energy_audit, evolve
from .fock import (
    GroundStateResult,
    TruncatedBasis,
    build_hamiltonian,
    ground_state,
    oracle_observables,
    verify_annihilation,
)
from .model import (
    CouplingSpec,
    ModelParams,
    Spectrum,
    ValidatedModel,
    coupling_derivative,
    coupling_value,
    lab_coordinates,
    normal_coordinates,
    spectrum,
    validate,
)
from .quantum import (
    BogoliubovCoeffs,
    VacuumExpansion,
    VacuumObservables,
    bogoliubov_coefficients,
    casimir_force,
    lifshitz_force,
    mean_free_quanta,
    squeezed_vacuum_expansion,
    vacuum_energy,
    vacuum_fluctuations,
)

__version__ = "0.1.0"

__all__ = [
    "BogoliubovCoeffs",
    "ClassicalTrajectory",
    "CouplingSpec",
    "DynamicsConfig",
    "GroundStateResult",
    "ModeAmplitudes",
    "ModelParams",
    "PhaseState",
    "Spectrum",
    "Trajectory",
    "TruncatedBasis",
    "VacuumExpansion",
    "VacuumObservables",
    "ValidatedModel",
    "bogoliubov_coefficients",
    "build_hamiltonian",
    "casimir_force",
    "classical_force",
    "coupling_derivative",
    "coupling_value",
    "energy_audit",
    "evolve",
    "evolve_classical",
    "ground_state",
    "lab_coordinates",
    "lifshitz_force",
    "mean_free_quanta",
    "normal_coordinates",
    "normal_mode_solution",
    "oracle_observables",
    "spectrum",
    "squeezed_vacuum_expansion",
    "vacuum_energy",
    "vacuum_fluctuations",
    "validate",
    "verify_annihilation",
]
