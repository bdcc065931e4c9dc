"""Scenario-driven command line interface.

``hup-lab run <scenario-file>`` evaluates one scenario and prints a
deterministic report; ``hup-lab grid <scenario-file> --out <path>`` writes
a transform grid CSV for ``ft_grid`` scenarios.

Scenario files are flat text: one ``key = value`` per line, ``#`` comments
and blank lines ignored.  Values are parsed as JSON when possible and kept
as bare strings otherwise, so lists and nested density values stay
writable by hand::

    kind = discriminant
    n = 1
    p = 3
    etas = [0.0, 0.5, 1.5]

Reports and CSVs are byte-identical across reruns of the same file: all
randomness is seeded from the scenario, floats are printed with 17
significant digits, and timing goes to stderr only.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or precondition
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from .classifier import LambdaSet, fold_periodic, partition
from .config import TOL
from .curves import (
    CurveDensity,
    absolute_mass,
    construct_single_line_witness,
    exp_curve_ft,
    standard_witness_profile,
    surface_ft,
)
from .errors import HupLabError
from .linsys import (
    UnimodularTuple,
    final_pivot_formula,
    hup_discriminant,
    power_column_matrix,
    triangularize_power_system,
)
from .measures import (
    Density,
    DensityAtom,
    construct_consecutive_witness,
    construct_cross_diagonal_witness,
    cross_ft,
    gaussian,
    line_system_ft,
    odd_bump,
    odd_pair,
    translation_periodicity_residual,
    triangle,
)

__all__ = [
    "Scenario",
    "ScenarioError",
    "Check",
    "Report",
    "parse_scenario_text",
    "load_scenario",
    "run_scenario",
    "emit_grid",
    "main",
]


class ScenarioError(ValueError):
    """Malformed scenario file or parameter set."""


@dataclass(frozen=True)
class Scenario:
    kind: str
    params: dict


_REQUIRED = object()

_SCHEMAS: dict[str, dict] = {
    "consecutive_witness": {
        "n": _REQUIRED,
        "seed_density": None,
        "xi_min": -10.0,
        "xi_max": 10.0,
        "xi_step": 0.02,
        "off_min": 1e-3,
        "tolerance": TOL.grid_vanish,
        "seed": 0,
    },
    "cross_witness": {
        "n": 0,
        "variant": "diagonal",
        "densities": None,
        "grid_points": 1001,
        "grid_min": -10.0,
        "grid_max": 10.0,
        "off_min": 1e-3,
        "tolerance": TOL.grid_vanish,
        "seed": 0,
    },
    "exp_curve_witness": {
        "c": _REQUIRED,
        "gap": 0.2,
        "lobe_width": 0.5,
        "profile": None,
        "d": 1.0,
        "x_min": -5.0,
        "x_max": 5.0,
        "x_step": 0.02,
        "quad_tol": TOL.quad_abs,
        "mass_ratio_min": 0.1,
        "off_min": 1e-3,
        "tolerance": TOL.curve_vanish,
        "seed": 0,
    },
    "surface_witness": {
        "case": "axis",
        "c": 1.0,
        "extent": 3.0,
        "points": 21,
        "psi_density": None,
        "h_density": None,
        "profile": None,
        "quad_tol": TOL.quad_abs,
        "tolerance": TOL.curve_vanish,
        "seed": 0,
    },
    "classify": {
        "points": _REQUIRED,
        "n": _REQUIRED,
        "p": _REQUIRED,
        "expected_counts": None,
        "tolerance": TOL.discriminant,
        "seed": 0,
    },
    "discriminant": {
        "etas": _REQUIRED,
        "n": _REQUIRED,
        "p": _REQUIRED,
        "expect": None,
        "expect_tol": 1e-9,
        "min_value": None,
        "tolerance": TOL.discriminant,
        "seed": 0,
    },
    "reduce": {
        "etas": _REQUIRED,
        "n": _REQUIRED,
        "p": _REQUIRED,
        "tolerance": TOL.pivot_rel,
        "seed": 0,
    },
    "ft_grid": {
        "measure": _REQUIRED,
        "heights": None,
        "densities": None,
        "n": None,
        "seed_density": None,
        "lambda_heights": None,
        "xi_min": -10.0,
        "xi_max": 10.0,
        "xi_step": 0.02,
        "eta_min": 0.0,
        "eta_max": 2.0,
        "eta_step": 0.5,
        "tolerance": TOL.grid_vanish,
        "seed": 0,
    },
    "kronecker_check": {
        "density": None,
        "alpha": _REQUIRED,
        "sample_count": 401,
        "min_residual": 1e-6,
        "tolerance": 1e-6,
        "seed": 0,
    },
}


def parse_scenario_text(text: str) -> Scenario:
    params: dict = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ScenarioError(f"line {ln}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key:
            raise ScenarioError(f"line {ln}: empty key")
        if key in params:
            raise ScenarioError(f"line {ln}: duplicate key {key!r}")
        try:
            params[key] = json.loads(value)
        except json.JSONDecodeError:
            params[key] = value
    kind = params.pop("kind", None)
    if kind is None:
        raise ScenarioError("scenario is missing the 'kind' key")
    return Scenario(str(kind), params)


def load_scenario(path: str) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scenario_text(fh.read())


def _resolve(scenario: Scenario) -> dict:
    schema = _SCHEMAS.get(scenario.kind)
    if schema is None:
        known = ", ".join(sorted(_SCHEMAS))
        raise ScenarioError(f"unknown kind {scenario.kind!r} (known: {known})")
    unknown = sorted(set(scenario.params) - set(schema))
    if unknown:
        raise ScenarioError(f"unknown keys for {scenario.kind}: {', '.join(unknown)}")
    resolved = {}
    for key, default in schema.items():
        if key in scenario.params:
            resolved[key] = scenario.params[key]
        elif default is _REQUIRED:
            raise ScenarioError(f"{scenario.kind} requires the {key!r} key")
        else:
            resolved[key] = default
    return resolved


def _amplitude(value) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ScenarioError("amplitude pairs must be [re, im]")
        return complex(float(value[0]), float(value[1]))
    return complex(float(value))


def _density_from_json(value) -> Density:
    if not isinstance(value, list):
        raise ScenarioError("a density is a JSON list of atom objects")
    atoms = []
    for obj in value:
        if not isinstance(obj, dict):
            raise ScenarioError("each atom must be a JSON object")
        unknown = sorted(set(obj) - {"kind", "center", "width", "amplitude"})
        if unknown:
            raise ScenarioError(f"unknown atom keys: {', '.join(unknown)}")
        try:
            atoms.append(
                DensityAtom(
                    str(obj.get("kind", "gaussian")),
                    float(obj.get("center", 0.0)),
                    float(obj.get("width", 1.0)),
                    _amplitude(obj.get("amplitude", 1.0)),
                )
            )
        except ValueError as exc:
            raise ScenarioError(f"bad atom: {exc}") from exc
    return Density(tuple(atoms))


def _densities_from_json(value) -> list[Density]:
    if not isinstance(value, list):
        raise ScenarioError("densities must be a JSON list of density lists")
    return [_density_from_json(d) for d in value]


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    lo = float(lo)
    hi = float(hi)
    step = float(step)
    if step <= 0 or hi < lo:
        raise ScenarioError("grid needs step > 0 and max >= min")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(count)


@dataclass(frozen=True)
class Check:
    name: str
    measured: float
    threshold: float
    op: str  # one of <=, >=, ==
    passed: bool


def _check(name: str, measured: float, op: str, threshold: float) -> Check:
    measured = float(measured)
    threshold = float(threshold)
    if op == "<=":
        ok = measured <= threshold
    elif op == ">=":
        ok = measured >= threshold
    elif op == "==":
        ok = measured == threshold
    else:
        raise ValueError(f"unknown comparison {op!r}")
    return Check(name, measured, threshold, op, ok)


@dataclass
class Report:
    kind: str
    params: dict
    infos: list[str] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        # timing is deliberately absent: reports must be byte-stable
        lines = [f"scenario {self.kind}"]
        for key in sorted(self.params):
            value = json.dumps(self.params[key], sort_keys=True)
            lines.append(f"param {key} = {value}")
        lines.extend(f"info {text}" for text in self.infos)
        op_words = {"<=": "le", ">=": "ge", "==": "eq"}
        for c in self.checks:
            lines.append(
                f"check {c.name} measured={c.measured:.17g} "
                f"threshold={c.threshold:.17g} op={op_words.get(c.op, c.op)} "
                f"result={'PASS' if c.passed else 'FAIL'}"
            )
        lines.append(f"overall {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _random_densities(n: int, rng: np.random.Generator) -> list[Density]:
    out = []
    for _ in range(n + 1):
        atoms = []
        for _ in range(int(rng.integers(1, 3))):
            kind = ("gaussian", "triangle")[int(rng.integers(0, 2))]
            sign = 1.0 if rng.uniform() < 0.5 else -1.0
            atoms.append(
                DensityAtom(
                    kind,
                    float(rng.uniform(-2.0, 2.0)),
                    float(rng.uniform(0.5, 1.5)),
                    sign * float(rng.uniform(0.5, 1.5)),
                )
            )
        out.append(Density(tuple(atoms)))
    return out


def _run_consecutive_witness(p: dict) -> tuple[list[str], list[Check]]:
    n = int(p["n"])
    seed_density = (
        _density_from_json(p["seed_density"]) if p["seed_density"] else gaussian()
    )
    measure, lam = construct_consecutive_witness(n, seed_density)
    xi = _grid(p["xi_min"], p["xi_max"], p["xi_step"])
    on_max = max(
        float(np.max(np.abs(line_system_ft(measure, xi, eta)))) for eta in lam
    )
    off_eta = 1.0 / (n + 1)  # midway between the first two grid heights
    off_max = float(np.max(np.abs(line_system_ft(measure, xi, off_eta))))
    infos = ["lambda_heights " + json.dumps(list(lam))]
    checks = [
        _check("on_lambda_max", on_max, "<=", p["tolerance"]),
        _check("off_lambda_max", off_max, ">=", p["off_min"]),
    ]
    return infos, checks


def _run_cross_witness(p: dict) -> tuple[list[str], list[Check]]:
    variant = str(p["variant"])
    rng = np.random.default_rng(int(p["seed"]))
    if variant == "diagonal":
        n = int(p["n"])
        if p["densities"] is not None:
            densities = _densities_from_json(p["densities"])
        else:
            densities = _random_densities(n, rng)
        measure = construct_cross_diagonal_witness(n, densities)
        t = np.linspace(
            float(p["grid_min"]), float(p["grid_max"]), int(p["grid_points"])
        )
        vanish = float(np.max(np.abs(cross_ft(measure, t, t))))
        off = float(np.max(np.abs(cross_ft(measure, t, t + 1.0))))
        checks = [
            _check("diagonal_max", vanish, "<=", p["tolerance"]),
            _check("off_diagonal_max", off, ">=", p["off_min"]),
        ]
        return [], checks
    if variant == "xi_axis":
        if p["densities"] is not None:
            f0 = _densities_from_json(p["densities"])[0]
        else:
            f0 = odd_bump()
        if abs(complex(f0.ft(0.0))) > TOL.grid_vanish:
            raise ScenarioError("xi_axis variant needs a zero-mean base density")
        measure = construct_cross_diagonal_witness(1, [f0, -f0])
        t = np.linspace(
            float(p["grid_min"]), float(p["grid_max"]), int(p["grid_points"])
        )
        vanish = float(np.max(np.abs(cross_ft(measure, t, 0.0))))
        off = float(np.max(np.abs(cross_ft(measure, t, 0.5))))
        checks = [
            _check("axis_max", vanish, "<=", p["tolerance"]),
            _check("off_axis_max", off, ">=", p["off_min"]),
        ]
        return [], checks
    raise ScenarioError(f"unknown cross_witness variant {variant!r}")


def _run_exp_curve_witness(p: dict) -> tuple[list[str], list[Check]]:
    c = float(p["c"])
    if p["profile"] is not None:
        profile = _density_from_json(p["profile"])
    else:
        profile = standard_witness_profile(
            c, gap=float(p["gap"]), width=float(p["lobe_width"])
        )
    witness = construct_single_line_witness(c, profile)
    quad_tol = float(p["quad_tol"])
    xs = _grid(p["x_min"], p["x_max"], p["x_step"])
    d = float(p["d"])
    on_max = 0.0
    off_max = 0.0
    est_max = 0.0
    for x in xs:
        res = exp_curve_ft(witness, x, c * x, abs_tol=quad_tol)
        on_max = max(on_max, abs(res.value))
        est_max = max(est_max, res.error)
        off = exp_curve_ft(witness, x, c * x + d, abs_tol=quad_tol)
        off_max = max(off_max, abs(off.value))
    g_mass = absolute_mass(witness).value.real
    extent = max(
        max(abs(lo), abs(hi)) for lo, hi in profile.support_intervals()
    )
    phi_mass = absolute_mass(
        CurveDensity.from_density(profile, support_radius=extent)
    ).value.real
    ratio = g_mass / phi_mass if phi_mass > 0 else math.inf
    infos = [f"quad_error_max {est_max:.17g}"]
    checks = [
        _check("on_line_max", on_max, "<=", p["tolerance"]),
        _check("mass_ratio", ratio, ">=", p["mass_ratio_min"]),
        _check("off_line_max", off_max, ">=", p["off_min"]),
    ]
    return infos, checks


def _run_surface_witness(p: dict) -> tuple[list[str], list[Check]]:
    case = str(p["case"])
    quad_tol = float(p["quad_tol"])
    extent = float(p["extent"])
    points = int(p["points"])
    if points < 2:
        raise ScenarioError("surface grid needs at least 2 points per side")
    h_density = (
        _density_from_json(p["h_density"])
        if p["h_density"]
        else triangle(center=0.0, width=1.0)
    )
    axis_vals = np.linspace(-extent, extent, points)
    worst = 0.0
    if case == "axis":
        psi = (
            _density_from_json(p["psi_density"])
            if p["psi_density"]
            else odd_pair(triangle(center=1.0, width=0.8))
        )
        first = CurveDensity.from_density(psi)
        second = CurveDensity.from_density(h_density)
        for x2 in axis_vals:
            for x3 in axis_vals:
                res = surface_ft(first, second, (0.0, x2, x3), abs_tol=quad_tol)
                worst = max(worst, abs(res.value))
    elif case == "slant":
        c = float(p["c"])
        if p["profile"] is not None:
            profile = _density_from_json(p["profile"])
        else:
            profile = standard_witness_profile(c)
        tau = construct_single_line_witness(c, profile)
        second = CurveDensity.from_density(h_density)
        for x1 in axis_vals:
            for x2 in axis_vals:
                res = surface_ft(tau, second, (x1, x2, c * x1), abs_tol=quad_tol)
                worst = max(worst, abs(res.value))
    else:
        raise ScenarioError(f"unknown surface case {case!r}")
    checks = [_check("hyperplane_max", worst, "<=", p["tolerance"])]
    return [], checks


def _run_classify(p: dict) -> tuple[list[str], list[Check]]:
    pts = p["points"]
    if not isinstance(pts, list) or not all(
        isinstance(q, list) and len(q) == 2 for q in pts
    ):
        raise ScenarioError("points must be a JSON list of [xi, eta] pairs")
    n = int(p["n"])
    pp = int(p["p"])
    lam = fold_periodic(LambdaSet(tuple((float(a), float(b)) for a, b in pts)))
    part = partition(lam, n, pp, discriminant_tol=float(p["tolerance"]))
    infos = []
    for xi in sorted(part.fibers):
        infos.append(
            f"fiber xi={xi:.17g} size={len(part.fibers[xi])} "
            f"class={part.classes[xi]}"
        )
    counts = part.class_counts()
    infos.append(
        "class_counts " + json.dumps({str(k): v for k, v in sorted(counts.items())})
    )
    checks = [_check("fibers_classified", len(part.fibers), ">=", 1.0)]
    if p["expected_counts"] is not None:
        expected = p["expected_counts"]
        if not isinstance(expected, dict):
            raise ScenarioError("expected_counts must be a JSON object")
        for key in sorted(expected):
            cls = int(key)
            checks.append(
                _check(
                    f"count_class_{cls}",
                    float(counts.get(cls, 0)),
                    "==",
                    float(expected[key]),
                )
            )
    return infos, checks


def _run_discriminant(p: dict) -> tuple[list[str], list[Check]]:
    etas = p["etas"]
    if not isinstance(etas, list):
        raise ScenarioError("etas must be a JSON list")
    value = hup_discriminant([float(e) for e in etas], int(p["n"]), int(p["p"]))
    checks = [_check("discriminant", value, ">=", 0.0)]
    if p["min_value"] is not None:
        checks.append(_check("discriminant_min", value, ">=", float(p["min_value"])))
    if p["expect"] is not None:
        checks.append(
            _check(
                "matches_expected",
                abs(value - float(p["expect"])),
                "<=",
                float(p["expect_tol"]),
            )
        )
    return [], checks


def _run_reduce(p: dict) -> tuple[list[str], list[Check]]:
    etas = p["etas"]
    if not isinstance(etas, list):
        raise ScenarioError("etas must be a JSON list")
    n = int(p["n"])
    pp = int(p["p"])
    betas = UnimodularTuple.from_phases([float(e) for e in etas])
    reduction = triangularize_power_system(betas, n, pp)
    det = complex(np.linalg.det(power_column_matrix(betas, n, pp)))
    pivot_product = reduction.pivot_product()
    rel_det = abs(pivot_product - det) / max(1.0, abs(det))
    formula = final_pivot_formula(betas, n, pp)
    rel_pivot = abs(reduction.pivots[-1] - formula) / max(1.0, abs(formula))
    infos = [f"pivot_product_abs {abs(pivot_product):.17g}"]
    checks = [
        _check("pivot_product_vs_det", rel_det, "<=", p["tolerance"]),
        _check("final_pivot_vs_formula", rel_pivot, "<=", p["tolerance"]),
    ]
    return infos, checks


def _grid_measure(p: dict):
    """Build (transform callable, lambda heights or None) for ft_grid."""
    measure_kind = str(p["measure"])
    if measure_kind == "line":
        if p["heights"] is None or p["densities"] is None:
            raise ScenarioError("line grids need 'heights' and 'densities'")
        heights = [float(h) for h in p["heights"]]
        densities = _densities_from_json(p["densities"])
        from .measures import LineMeasure

        measure = LineMeasure(tuple(heights), tuple(densities))
        return (lambda xi, eta: line_system_ft(measure, xi, eta)), p["lambda_heights"]
    if measure_kind == "cross":
        if p["densities"] is None:
            raise ScenarioError("cross grids need 'densities'")
        densities = _densities_from_json(p["densities"])
        measure = construct_cross_diagonal_witness(len(densities) - 1, densities)
        return (lambda xi, eta: cross_ft(measure, xi, eta)), p["lambda_heights"]
    if measure_kind == "consecutive_witness":
        if p["n"] is None:
            raise ScenarioError("consecutive_witness grids need 'n'")
        n = int(p["n"])
        seed_density = (
            _density_from_json(p["seed_density"]) if p["seed_density"] else gaussian()
        )
        measure, lam = construct_consecutive_witness(n, seed_density)
        heights = p["lambda_heights"] if p["lambda_heights"] is not None else list(lam)
        return (lambda xi, eta: line_system_ft(measure, xi, eta)), heights
    raise ScenarioError(f"unknown grid measure {measure_kind!r}")


def _run_ft_grid(p: dict) -> tuple[list[str], list[Check]]:
    transform, lambda_heights = _grid_measure(p)
    xi = _grid(p["xi_min"], p["xi_max"], p["xi_step"])
    eta = _grid(p["eta_min"], p["eta_max"], p["eta_step"])
    total_max = 0.0
    lambda_max = 0.0
    heights = [float(h) for h in lambda_heights] if lambda_heights else []
    for x in xi:
        row = np.abs(np.asarray(transform(float(x), eta), dtype=complex))
        total_max = max(total_max, float(np.max(row)))
        for j, e in enumerate(eta):
            if any(abs(e - h) <= TOL.merge for h in heights):
                lambda_max = max(lambda_max, float(row[j]))
    infos = [f"grid_rows {len(xi) * len(eta)}", f"max_abs {total_max:.17g}"]
    checks = []
    if heights:
        checks.append(_check("lambda_rows_max", lambda_max, "<=", p["tolerance"]))
    else:
        checks.append(_check("grid_evaluated", float(len(xi) * len(eta)), ">=", 1.0))
    return infos, checks


def _run_kronecker_check(p: dict) -> tuple[list[str], list[Check]]:
    f = _density_from_json(p["density"]) if p["density"] else gaussian()
    residual = translation_periodicity_residual(
        f, float(p["alpha"]), int(p["sample_count"])
    )
    checks = [_check("nonperiodicity_residual", residual, ">=", p["min_residual"])]
    return [], checks


_RUNNERS = {
    "consecutive_witness": _run_consecutive_witness,
    "cross_witness": _run_cross_witness,
    "exp_curve_witness": _run_exp_curve_witness,
    "surface_witness": _run_surface_witness,
    "classify": _run_classify,
    "discriminant": _run_discriminant,
    "reduce": _run_reduce,
    "ft_grid": _run_ft_grid,
    "kronecker_check": _run_kronecker_check,
}


def run_scenario(scenario: Scenario, *, tolerance: float | None = None) -> Report:
    """Evaluate a scenario and return its report (no printing)."""
    params = _resolve(scenario)
    if tolerance is not None:
        params["tolerance"] = float(tolerance)
    start = time.perf_counter()
    infos, checks = _RUNNERS[scenario.kind](params)
    elapsed = time.perf_counter() - start
    return Report(scenario.kind, params, infos, checks, elapsed)


def emit_grid(
    scenario: Scenario, out_path: str, *, tolerance: float | None = None
) -> int:
    """Write the CSV grid of an ``ft_grid`` scenario; returns the row count.

    Columns are ``xi,eta,re,im,abs`` with 17 significant digits, rows in
    row-major order (xi outer, eta inner).
    """
    if scenario.kind != "ft_grid":
        raise ScenarioError("the grid command needs an ft_grid scenario")
    params = _resolve(scenario)
    if tolerance is not None:
        params["tolerance"] = float(tolerance)
    transform, _ = _grid_measure(params)
    xi = _grid(params["xi_min"], params["xi_max"], params["xi_step"])
    eta = _grid(params["eta_min"], params["eta_max"], params["eta_step"])
    rows = 0
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        fh.write("xi,eta,re,im,abs\n")
        for x in xi:
            vals = np.asarray(transform(float(x), eta), dtype=complex)
            for e, v in zip(eta, vals):
                fh.write(
                    f"{float(x):.17g},{float(e):.17g},"
                    f"{v.real:.17g},{v.imag:.17g},{abs(v):.17g}\n"
                )
                rows += 1
    return rows


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="hup-lab",
        description="Verification runs for uniqueness-pair constructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_parser = sub.add_parser("run", help="evaluate a scenario and print a report")
    run_parser.add_argument("scenario", help="path to a scenario file")
    grid_parser = sub.add_parser("grid", help="write a transform grid CSV")
    grid_parser.add_argument("scenario", help="path to an ft_grid scenario file")
    grid_parser.add_argument("--out", required=True, help="CSV output path")
    for sp in (run_parser, grid_parser):
        sp.add_argument(
            "--tolerance",
            type=float,
            default=None,
            help="override the scenario's primary tolerance",
        )
        sp.add_argument(
            "--quiet", action="store_true", help="suppress stdout output"
        )
    args = parser.parse_args(argv)

    try:
        scenario = load_scenario(args.scenario)
    except OSError as exc:
        print(f"error: cannot read scenario: {exc}", file=sys.stderr)
        return 3
    except (ScenarioError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        if args.command == "run":
            report = run_scenario(scenario, tolerance=args.tolerance)
            if not args.quiet:
                sys.stdout.write(report.render())
            print(f"# elapsed_s {report.elapsed_s:.3f}", file=sys.stderr)
            return 0 if report.overall else 1
        start = time.perf_counter()
        rows = emit_grid(scenario, args.out, tolerance=args.tolerance)
        elapsed = time.perf_counter() - start
        if not args.quiet:
            sys.stdout.write(f"grid rows {rows} -> {args.out}\n")
        print(f"# elapsed_s {elapsed:.3f}", file=sys.stderr)
        return 0
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ScenarioError, HupLabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
