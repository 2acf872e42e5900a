"""Command-line front end: JSON config in, CSV/JSON artifacts out.

Subcommands:
  spectrum           frequency table over the y grid
  force-curve        vacuum energy and every force route over the y grid
  vacuum-content     Bogoliubov content and pair distribution
  oracle-check       JSON verification report (analytic vs Fock oracle)
  evolve             semiclassical trajectory of the heavy coordinate
  reference-casimir  perfect-conductor plate formula (not the toy model)

A run is configured by a single JSON document (see README); command-line
flags override config fields.  The output directory resolves as
--output-dir > $CASIMIR_TOY_OUTPUT_DIR > config output.directory.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import dynamics, fock, quantum
from .errors import (
    CasimirToyError,
    ConfigError,
    DomainError,
    NonPositiveSeparationError,
)
from .model import CouplingSpec, ModelParams, ValidatedModel, spectrum, validate

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_VERIFICATION = 4

OUTPUT_DIR_ENV = "CASIMIR_TOY_OUTPUT_DIR"


@dataclass(frozen=True)
class GridConfig:
    y_min: float
    y_max: float
    points: int


@dataclass(frozen=True)
class OracleConfig:
    n_max: int = 40
    convergence_tol: float = 1e-6
    y: float | None = None


@dataclass(frozen=True)
class OutputConfig:
    directory: str = "out"
    format: str = "csv"
    precision: int = 12


@dataclass(frozen=True)
class RunConfig:
    model: ValidatedModel
    grid: GridConfig | None
    oracle: OracleConfig
    dyn: dynamics.DynamicsConfig | None
    output: OutputConfig


def _require(mapping: dict, key: str, context: str):
    if key not in mapping:
        raise ConfigError(f"missing config field: {context}.{key}")
    return mapping[key]


def parse_config(doc: dict) -> RunConfig:
    """Validate the JSON config document; raises ConfigError naming the field."""
    if not isinstance(doc, dict):
        raise ConfigError("config root must be a JSON object")
    model_doc = _require(doc, "model", "config")
    coupling_doc = _require(model_doc, "coupling", "model")
    try:
        coupling = CouplingSpec(
            family=_require(coupling_doc, "family", "model.coupling"),
            g0=float(_require(coupling_doc, "g0", "model.coupling")),
            lam=float(coupling_doc.get("lambda", 1.0)),
            exponent=int(coupling_doc.get("exponent", 2)),
            y_min=float(coupling_doc.get("y_min", 0.0)),
            y_max=float(coupling_doc.get("y_max", 10.0)),
        )
        params = ModelParams(
            m=float(_require(model_doc, "m", "model")),
            M=float(_require(model_doc, "M", "model")),
            k=float(_require(model_doc, "k", "model")),
            hbar=float(model_doc.get("hbar", 1.0)),
            coupling=coupling,
        )
        model = validate(params)
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"malformed model section: {exc}") from exc
    except CasimirToyError as exc:
        raise ConfigError(f"invalid model: {exc}") from exc

    grid = None
    if "grid" in doc:
        gdoc = doc["grid"]
        grid = GridConfig(
            y_min=float(_require(gdoc, "y_min", "grid")),
            y_max=float(_require(gdoc, "y_max", "grid")),
            points=int(_require(gdoc, "points", "grid")),
        )
        if grid.points < 2:
            raise ConfigError(f"grid.points must be >= 2, got {grid.points}")
        if grid.y_min < coupling.y_min or grid.y_max > coupling.y_max:
            raise ConfigError(
                f"grid [{grid.y_min}, {grid.y_max}] not inside coupling domain "
                f"[{coupling.y_min}, {coupling.y_max}]"
            )

    odoc = doc.get("oracle", {})
    oracle = OracleConfig(
        n_max=int(odoc.get("n_max", 40)),
        convergence_tol=float(odoc.get("convergence_tol", 1e-6)),
        y=float(odoc["y"]) if "y" in odoc else None,
    )

    dyn = None
    if "dynamics" in doc:
        ddoc = doc["dynamics"]
        try:
            dyn = dynamics.DynamicsConfig(
                y0=float(_require(ddoc, "y0", "dynamics")),
                v0=float(_require(ddoc, "v0", "dynamics")),
                dt=float(_require(ddoc, "dt", "dynamics")),
                t_max=float(_require(ddoc, "t_max", "dynamics")),
                force_route=ddoc.get("force_route", "casimir"),
                oracle_n_max=int(ddoc.get("oracle_n_max", oracle.n_max)),
                oracle_budget_s=float(ddoc.get("oracle_budget_s", 300.0)),
            )
        except ValueError as exc:
            raise ConfigError(f"invalid dynamics section: {exc}") from exc

    outdoc = doc.get("output", {})
    output = OutputConfig(
        directory=str(outdoc.get("directory", "out")),
        format=str(outdoc.get("format", "csv")),
        precision=int(outdoc.get("precision", 12)),
    )
    if output.format not in ("csv", "json"):
        raise ConfigError(f"output.format must be csv or json, got {output.format!r}")
    if not 6 <= output.precision <= 17:
        raise ConfigError(f"output.precision must be in [6, 17], got {output.precision}")

    return RunConfig(model=model, grid=grid, oracle=oracle, dyn=dyn, output=output)


def load_config(path: str) -> RunConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return parse_config(doc)


def _fmt(x: float, precision: int) -> str:
    return format(x, f".{precision}g")


def write_csv(path: Path, header: list[str], rows, precision: int) -> None:
    """RFC-4180-style CSV: '.' decimal separator, LF endings, fixed header."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v, precision) for v in row) + "\n")


def write_json(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _grid_values(grid: GridConfig) -> np.ndarray:
    return np.linspace(grid.y_min, grid.y_max, grid.points)


def _need(config: RunConfig, section: str):
    value = getattr(config, "dyn" if section == "dynamics" else section)
    if value is None:
        raise ConfigError(f"missing config field: {section}")
    return value


def cmd_spectrum(config: RunConfig, outdir: Path) -> Path:
    grid = _need(config, "grid")
    model = config.model
    rows = []
    for y in _grid_values(grid):
        s = spectrum(model, y)
        rows.append((y, model.g(y), s.omega, s.omega_plus, s.omega_minus))
    path = outdir / "spectrum.csv"
    write_csv(
        path,
        ["y", "g", "omega", "omega_plus", "omega_minus"],
        rows,
        config.output.precision,
    )
    return path


def energy_gradient_fd(model: ValidatedModel, y: float, h: float) -> float:
    """Second-order finite difference of the vacuum energy, one-sided at the
    domain boundary."""
    e = lambda z: quantum.vacuum_energy(model, z)
    lo, hi = model.coupling.y_min, model.coupling.y_max
    if y - h >= lo and y + h <= hi:
        return (e(y + h) - e(y - h)) / (2 * h)
    # grouping by differences keeps the result exactly zero for constant E
    e0 = e(y)
    if y - h < lo:
        return (4 * (e(y + h) - e0) - (e(y + 2 * h) - e0)) / (2 * h)
    return -(4 * (e(y - h) - e0) - (e(y - 2 * h) - e0)) / (2 * h)


def cmd_force_curve(config: RunConfig, outdir: Path, with_oracle: bool = False) -> Path:
    grid = _need(config, "grid")
    model = config.model
    lam = model.coupling.lam if model.coupling.family != "constant" else 1.0
    h = 1e-4 * lam
    basis = fock.TruncatedBasis(config.oracle.n_max) if with_oracle else None
    header = ["y", "E_vac", "F_casimir", "F_lifshitz", "F_finite_diff"]
    if with_oracle:
        header.append("F_oracle")
    rows = []
    for y in _grid_values(grid):
        e = quantum.vacuum_energy(model, y)
        fc = quantum.casimir_force(model, y)
        fl = quantum.lifshitz_force(model, y)
        fd = -energy_gradient_fd(model, y, h)
        row = [y, e, fc, fl, fd]
        if with_oracle:
            row.append(fock.oracle_force(model, y, basis))
        rows.append(row)
    path = outdir / "force_curve.csv"
    write_csv(path, header, rows, config.output.precision)
    return path


def cmd_vacuum_content(
    config: RunConfig, outdir: Path, pair_y: float | None = None, pair_n_max: int = 20
) -> tuple[Path, Path]:
    grid = _need(config, "grid")
    model = config.model
    rows = []
    for y in _grid_values(grid):
        coeffs = quantum.bogoliubov_coefficients(model, y)
        n1, _ = quantum.mean_free_quanta(coeffs)
        exp = quantum.squeezed_vacuum_expansion(coeffs, "plus", N_max=0)
        rows.append((y, coeffs.beta_1p, coeffs.beta_1m, n1, exp.c0))
    path = outdir / "vacuum_content.csv"
    write_csv(
        path, ["y", "beta_1p", "beta_1m", "N_mean", "c0"], rows, config.output.precision
    )

    y_flag = grid.y_min if pair_y is None else pair_y
    coeffs = quantum.bogoliubov_coefficients(model, y_flag)
    exp = quantum.squeezed_vacuum_expansion(coeffs, "plus", N_max=pair_n_max)
    pair_rows = [
        (float(n), c, c * c) for n, c in enumerate(exp.coefficients)
    ]
    pair_path = outdir / "pair_distribution.csv"
    write_csv(pair_path, ["n", "c_n", "c_n_squared"], pair_rows, config.output.precision)
    return path, pair_path


def cmd_oracle_check(config: RunConfig, outdir: Path, y: float | None = None) -> tuple[Path, bool]:
    model = config.model
    oc = config.oracle
    if y is None:
        y = oc.y
    if y is None:
        y = config.grid.y_min if config.grid else model.coupling.y_min
    tol = oc.convergence_tol
    basis = fock.TruncatedBasis(oc.n_max)

    gs = fock.ground_state(fock.build_hamiltonian(model, y, basis))
    obs = fock.oracle_observables(model, y, basis, gs=gs)
    analytic = quantum.vacuum_fluctuations(model, y)
    coeffs = quantum.bogoliubov_coefficients(model, y)

    def rel(a, b):
        return abs(a - b) / max(abs(b), 1e-30)

    rel_energy = rel(gs.E0, analytic.E_vac)
    rel_x1x2 = rel(obs.x1x2, analytic.x1x2) if analytic.x1x2 != 0 else abs(obs.x1x2)
    rel_n = rel(obs.N1, analytic.N1) if analytic.N1 != 0 else abs(obs.N1)

    residuals = {}
    for n in (5, 10, 15, 20):
        if n <= basis.n_max - 2:
            exp = quantum.squeezed_vacuum_expansion(coeffs, "plus", N_max=n)
            residuals[str(n)] = fock.verify_annihilation(exp, basis)

    ratio = -coeffs.beta_1p / coeffs.alpha_1p
    report_struct = fock.ground_state_structure_checks(gs, pair_ratio=ratio)

    passed = (
        rel_energy < tol
        and rel_x1x2 < tol
        and rel_n < tol
        and report_struct.symmetry_violation < 1e-10
        and report_struct.odd_parity_mass < 1e-20
    )
    payload = {
        "y": y,
        "n_max": oc.n_max,
        "convergence_tol": tol,
        "E0_analytic": analytic.E_vac,
        "E0_oracle": gs.E0,
        "rel_err_energy": rel_energy,
        "rel_err_x1x2": rel_x1x2,
        "rel_err_N": rel_n,
        "annihilation_residuals": residuals,
        "symmetry_violation": report_struct.symmetry_violation,
        "odd_parity_mass": report_struct.odd_parity_mass,
        "pass": passed,
    }
    path = outdir / "oracle_check.json"
    write_json(path, payload)
    return path, passed


def cmd_evolve(config: RunConfig, outdir: Path) -> tuple[Path, dynamics.Trajectory]:
    dyn = _need(config, "dynamics")
    traj = dynamics.evolve(config.model, dyn)
    rows = zip(traj.t, traj.y, traj.p_y, traj.F, traj.E_vac, traj.E_total)
    path = outdir / "trajectory.csv"
    write_csv(
        path, ["t", "y", "p_y", "F", "E_vac", "E_total"], rows, config.output.precision
    )
    return path, traj


def reference_casimir_report(
    y: float, plate_area: float | None = None, c: float = 1.0, hbar: float = 1.0
) -> dict:
    """Perfect-conductor parallel-plate force per unit area at separation y.

    F/A = -(pi^2 / 240) hbar c / y^4.  This is the ideal-conductor reference
    formula, not an output of the toy model.
    """
    if y <= 0:
        raise NonPositiveSeparationError(f"separation must be > 0, got {y}")
    coeff = math.pi**2 / 240.0
    pressure = -coeff * hbar * c / y**4
    report = {
        "coefficient": coeff,
        "y": y,
        "hbar": hbar,
        "c": c,
        "pressure": pressure,
        "note": (
            "perfect-conductor parallel-plate formula; "
            "reference value, not a toy-model output"
        ),
    }
    if plate_area is not None:
        report["plate_area"] = plate_area
        report["total_force"] = pressure * plate_area
    return report


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-toy",
        description="3-degree-of-freedom Casimir-like force laboratory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", required=True, help="JSON config file")
        p.add_argument("--output-dir", default=None, help="override output directory")
        p.add_argument(
            "--precision", type=int, default=None, help="override output precision"
        )

    add_common(sub.add_parser("spectrum", help="frequency table over the y grid"))

    p = sub.add_parser("force-curve", help="vacuum energy and all force routes")
    add_common(p)
    p.add_argument(
        "--with-oracle", action="store_true", help="add the Fock-oracle force column"
    )

    p = sub.add_parser("vacuum-content", help="Bogoliubov content over the grid")
    add_common(p)
    p.add_argument(
        "--pair-y", type=float, default=None, help="y at which to emit the pair distribution"
    )
    p.add_argument(
        "--pair-n-max", type=int, default=20, help="pair-distribution truncation order"
    )

    p = sub.add_parser("oracle-check", help="analytic-vs-oracle verification report")
    add_common(p)
    p.add_argument("--y", type=float, default=None, help="evaluation point")

    add_common(sub.add_parser("evolve", help="semiclassical trajectory"))

    p = sub.add_parser(
        "reference-casimir", help="perfect-conductor plate formula (reference only)"
    )
    p.add_argument("--y", type=float, required=True, help="plate separation")
    p.add_argument("--area", type=float, default=None, help="plate area")
    p.add_argument("--c", type=float, default=1.0, help="speed of light")
    p.add_argument("--hbar", type=float, default=1.0, help="reduced Planck constant")
    return parser


def _resolve_outdir(args, config: RunConfig) -> Path:
    if args.output_dir is not None:
        return Path(args.output_dir)
    env = os.environ.get(OUTPUT_DIR_ENV)
    if env:
        return Path(env)
    return Path(config.output.directory)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "reference-casimir":
        try:
            report = reference_casimir_report(
                args.y, plate_area=args.area, c=args.c, hbar=args.hbar
            )
        except NonPositiveSeparationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        print(json.dumps(report, indent=2, sort_keys=True))
        return EXIT_OK

    try:
        config = load_config(args.config)
        if args.precision is not None:
            if not 6 <= args.precision <= 17:
                raise ConfigError(
                    f"output.precision must be in [6, 17], got {args.precision}"
                )
            config = RunConfig(
                model=config.model,
                grid=config.grid,
                oracle=config.oracle,
                dyn=config.dyn,
                output=OutputConfig(
                    directory=config.output.directory,
                    format=config.output.format,
                    precision=args.precision,
                ),
            )
        outdir = _resolve_outdir(args, config)

        if args.command == "spectrum":
            path = cmd_spectrum(config, outdir)
            print(f"wrote {path}")
        elif args.command == "force-curve":
            path = cmd_force_curve(config, outdir, with_oracle=args.with_oracle)
            print(f"wrote {path}")
        elif args.command == "vacuum-content":
            path, pair_path = cmd_vacuum_content(
                config, outdir, pair_y=args.pair_y, pair_n_max=args.pair_n_max
            )
            print(f"wrote {path}")
            print(f"wrote {pair_path}")
        elif args.command == "oracle-check":
            path, passed = cmd_oracle_check(config, outdir, y=args.y)
            print(f"wrote {path}")
            if not passed:
                print("verification FAILED", file=sys.stderr)
                return EXIT_VERIFICATION
        elif args.command == "evolve":
            path, traj = cmd_evolve(config, outdir)
            drift, _ = dynamics.energy_audit(traj)
            print(f"wrote {path}")
            print(f"final energy drift: {drift:.3e}")
            if traj.domain_exited:
                print("note: DOMAIN_EXIT (trajectory left the coupling domain)")
        return EXIT_OK
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
