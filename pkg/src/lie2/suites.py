"""Named verification suites, deterministic configuration, and reports.

Every suite draws from its own generator seeded by (config.seed, ordinal), so
a report depends only on the configuration, never on execution order or the
number of worker threads.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Callable

import numpy as np

from . import kacmoody, su2grid, twogroups
from .liealg import InputError, LieAlgebraPresentation, load_presentation
from .linfty import jacobi_sweep, hom_residuals, two_hom_residual, zeroed_phi2
from .models import (
    ModelBundle,
    build_models,
    equivalence_report,
    exactness_check,
    lambda2_forced_residual,
    make_gk,
    make_pkg,
    universality_sweep,
)
from .paths import (
    LOOP,
    CentralVector,
    PolyPath,
    random_path,
    validate_splitting,
)

LINEAR = "linear"


@dataclass(frozen=True)
class RunConfig:
    algebra: str = "su2"
    k: float = 1.0
    degree: int = 4
    splitting: str = LINEAR
    nt: int = 256
    ntheta: int = 256
    seed: int = 20240601
    trials: int = 50
    tol_exact: float = 1e-10
    tol_quad: float = 1e-3
    suites: tuple[str, ...] = ("all",)
    jobs: int = 1
    form_scale: float = 1.0

    def splitting_coeffs(self) -> np.ndarray:
        if self.splitting == LINEAR:
            return np.array([0.0, 1.0])
        try:
            coeffs = np.array([float(v) for v in self.splitting.split(",")])
        except ValueError as exc:
            raise InputError(f"cannot parse splitting {self.splitting!r}") from exc
        return validate_splitting(coeffs)

    def resolve_suites(self) -> list[str]:
        names = list(self.suites)
        if not names or "all" in names:
            return list(REGISTRY)
        unknown = [n for n in names if n not in REGISTRY]
        if unknown:
            raise InputError(f"unknown suites: {', '.join(unknown)}")
        return names

    def validate(self) -> None:
        if self.trials <= 0:
            raise InputError("trials must be positive")
        if self.seed < 0:
            raise InputError("seed must be a non-negative integer")
        if self.tol_exact <= 0 or self.tol_quad <= 0:
            raise InputError("tolerances must be positive")
        if self.degree < 2:
            raise InputError("polynomial degree must be at least 2")
        if self.nt < 8 or self.ntheta < 8:
            raise InputError("grids need at least 8 intervals per axis")
        if self.jobs < 1:
            raise InputError("jobs must be at least 1")
        self.splitting_coeffs()
        self.resolve_suites()
        load_presentation(self.algebra, form_scale=self.form_scale)


@dataclass
class SuiteResult:
    name: str
    trials: int
    max_residual: float
    tolerance: float
    passed: bool
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "witness": self.witness,
            "details": self.details,
        }


# ---------------------------------------------------------------------------
# witness serialization (coefficient formats of the owning modules)
# ---------------------------------------------------------------------------

def serialize_element(v) -> dict | list | float:
    if isinstance(v, PolyPath):
        return {"type": "path", "kind": v.kind, "coeffs": v.coeffs.tolist()}
    if isinstance(v, CentralVector):
        return {"type": "central", "loop": serialize_element(v.loop), "c": v.c}
    if isinstance(v, np.ndarray):
        return {"type": "vector", "value": v.tolist()}
    if isinstance(v, (float, int, np.floating)):
        return {"type": "real", "value": float(v)}
    if isinstance(v, (tuple, list)):
        return [serialize_element(x) for x in v]
    raise TypeError(f"cannot serialize witness element of type {type(v)!r}")


def deserialize_element(doc, algebra: LieAlgebraPresentation):
    if isinstance(doc, list):
        return [deserialize_element(x, algebra) for x in doc]
    if doc["type"] == "path":
        return PolyPath(algebra, np.asarray(doc["coeffs"]), doc["kind"])
    if doc["type"] == "central":
        return CentralVector(deserialize_element(doc["loop"], algebra), doc["c"])
    if doc["type"] == "vector":
        return np.asarray(doc["value"], dtype=float)
    if doc["type"] == "real":
        return float(doc["value"])
    raise InputError(f"unknown witness element type {doc!r}")


def serialize_graded(inputs) -> list:
    return [[deg, serialize_element(v)] for deg, v in inputs]


def deserialize_graded(doc, algebra):
    return [(int(deg), deserialize_element(v, algebra)) for deg, v in doc]


# ---------------------------------------------------------------------------
# shared setup helpers
# ---------------------------------------------------------------------------

def _algebra(config: RunConfig) -> LieAlgebraPresentation:
    return load_presentation(config.algebra, form_scale=config.form_scale)


def _bundle(config: RunConfig) -> ModelBundle:
    return build_models(_algebra(config), config.k, config.splitting_coeffs(),
                        config.degree)


def _require_su2_matrix_layer(config: RunConfig) -> LieAlgebraPresentation:
    g = _algebra(config)
    if g.dim != 3:
        raise InputError("group-level suites support only the bundled 3-dimensional presentations")
    su2grid.validate_pairing_scale(g)
    return g


def _result(config, name, trials, residual, tolerance, witness=None, details=None):
    return SuiteResult(
        name=name,
        trials=trials,
        max_residual=float(residual),
        tolerance=float(tolerance),
        passed=bool(residual <= tolerance),
        witness=witness if residual > tolerance else None,
        details=details or {},
    )


# ---------------------------------------------------------------------------
# suite runners
# ---------------------------------------------------------------------------

def run_gk_jacobi(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    gk = make_gk(_algebra(config), config.k)
    worst, inputs = jacobi_sweep(gk, rng, config.trials)
    return _result(config, "gk-jacobi", config.trials, worst, config.tol_exact,
                   witness={"inputs": serialize_graded(inputs)} if inputs else None)


def run_pkg_jacobi(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    pkg = make_pkg(_algebra(config), config.k, config.degree)
    worst, inputs = jacobi_sweep(pkg, rng, config.trials)
    return _result(config, "pkg-jacobi", config.trials, worst, config.tol_exact,
                   witness={"inputs": serialize_graded(inputs)} if inputs else None)


def _hom_suite(name: str, pick, config: RunConfig, rng: np.random.Generator,
               mutation_floor: float = 1e-2) -> SuiteResult:
    bundle = _bundle(config)
    hom = pick(bundle)
    report = hom_residuals(hom, rng, config.trials)
    control = hom_residuals(zeroed_phi2(hom), rng, min(config.trials, 50))
    details = {
        "chain": report.chain,
        "homo1": report.homo1,
        "homo2": report.homo2,
        "homo3": report.homo3,
        "mutation_residual": control.max_residual,
        "mutation_floor": mutation_floor,
    }
    residual = report.max_residual
    passed = residual <= config.tol_exact and control.max_residual > mutation_floor
    witness = None
    if residual > config.tol_exact:
        key = max(("chain", "homo1", "homo2", "homo3"),
                  key=lambda k: getattr(report, k))
        witness = {"component": key,
                   "inputs": serialize_element(report.worst_inputs[key])}
    result = _result(config, name, config.trials, residual, config.tol_exact,
                     witness=witness, details=details)
    result.passed = passed
    return result


def run_phi_hom(config, rng):
    return _hom_suite("phi-hom", lambda b: b.phi, config, rng)


def run_psi_hom(config, rng):
    return _hom_suite("psi-hom", lambda b: b.psi, config, rng)


def run_lambda_hom(config, rng):
    result = _hom_suite("lambda-hom", lambda b: b.lam, config, rng)
    bundle = _bundle(config)
    result.details["forced_corrector"] = lambda2_forced_residual(bundle, rng)
    return result


def run_tau_2hom(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    bundle = _bundle(config)
    report = two_hom_residual(bundle.tau, rng, config.trials)
    details = {
        "homotopy0": report.homotopy0,
        "homotopy1": report.homotopy1,
        "coherence": report.coherence,
    }
    witness = None
    if report.max_residual > config.tol_exact:
        key = max(("homotopy0", "homotopy1", "coherence"),
                  key=lambda k: getattr(report, k))
        witness = {"component": key,
                   "inputs": serialize_element(report.worst_inputs[key])}
    return _result(config, "tau-2hom", config.trials, report.max_residual,
                   config.tol_exact, witness=witness, details=details)


def run_exactness(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    g = _algebra(config)
    reports = [exactness_check(g, config.k, d) for d in range(2, config.degree + 1)]
    failed = [r for r in reports if not r.passed]
    details = {
        f"degree_{r.degree}": {
            "dim_paths": r.dim_paths,
            "dim_loops": r.dim_loops,
            "rank_endpoint": r.rank_endpoint,
            "nullity_endpoint": r.nullity_endpoint,
            "rank_loop_inclusion": r.rank_loop_inclusion,
            "passed": r.passed,
        }
        for r in reports
    }
    residual = 1.0 if failed else 0.0
    return _result(config, "exactness", len(reports), residual, 0.0,
                   witness={"failed_degrees": [r.degree for r in failed]} if failed else None,
                   details=details)


def run_equivalence(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    bundle = _bundle(config)
    report = equivalence_report(bundle, rng, config.trials)
    universality = universality_sweep(rng, count=20, degree=8)
    details = {
        "round_trip_identity": report.round_trip_identity,
        "retraction": report.retraction,
        "trivializer": report.trivializer,
        "splitting_integral_deviation": universality,
    }
    residual = max(report.max_residual, universality)
    return _result(config, "equivalence", config.trials, residual,
                   config.tol_exact, details=details)


def run_omega_cocycle(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    g = _algebra(config)
    worst, witness_inputs = 0.0, None
    for _ in range(config.trials):
        loops = [random_path(g, rng, config.degree, LOOP) for _ in range(3)]
        r = kacmoody.omega_cocycle_residual(*loops, config.k)
        if r > worst:
            worst, witness_inputs = r, loops
    # worked fixture: quadratic against cubic bump in one coordinate at level 1
    f = PolyPath(g, np.array([[0.0, 1.0, -1.0]] + [[0.0, 0.0, 0.0]] * (g.dim - 1)), LOOP)
    h = PolyPath(g, np.array([[0.0, 0.0, 1.0, -1.0]] + [[0.0] * 4] * (g.dim - 1)), LOOP)
    fixture = kacmoody.omega(f, h, 1.0)
    details = {"fixture_value": fixture, "fixture_expected": 1.0 / 30.0,
               "fixture_deviation": abs(fixture - 1.0 / 30.0)}
    return _result(config, "omega-cocycle", config.trials, worst, config.tol_exact,
                   witness={"inputs": serialize_element(witness_inputs)}
                   if witness_inputs else None,
                   details=details)


def run_extended_jacobi(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    g = _algebra(config)
    worst, witness_inputs = 0.0, None
    for _ in range(config.trials):
        vs = [CentralVector(random_path(g, rng, config.degree, LOOP),
                            float(rng.uniform(-1, 1))) for _ in range(3)]
        r = kacmoody.extended_jacobi_residual(*vs, config.k)
        if r > worst:
            worst, witness_inputs = r, vs
    return _result(config, "extended-jacobi", config.trials, worst, config.tol_exact,
                   witness={"inputs": serialize_element(witness_inputs)}
                   if witness_inputs else None)


def run_dalpha_action(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    g = _algebra(config)
    worst, witness_inputs = 0.0, None
    parts = {"action": 0.0, "derivation": 0.0, "projection": 0.0, "loop_bracket": 0.0}
    for _ in range(config.trials):
        p1 = random_path(g, rng, config.degree)
        p2 = random_path(g, rng, config.degree)
        loop = random_path(g, rng, config.degree, LOOP)
        v = CentralVector(random_path(g, rng, config.degree, LOOP),
                          float(rng.uniform(-1, 1)))
        w = CentralVector(random_path(g, rng, config.degree, LOOP),
                          float(rng.uniform(-1, 1)))
        sample = {
            "action": kacmoody.dalpha_action_residual(p1, p2, v, config.k),
            "derivation": kacmoody.dalpha_derivation_residual(p1, v, w, config.k),
            "projection": kacmoody.dalpha_equivariance_residual(p1, v, config.k),
            "loop_bracket": kacmoody.dalpha_matches_central_bracket_residual(
                loop, v, config.k),
        }
        for key, value in sample.items():
            parts[key] = max(parts[key], value)
        top = max(sample.values())
        if top > worst:
            worst, witness_inputs = top, [p1, p2, loop, v, w]
    return _result(config, "dalpha-action", config.trials, worst, config.tol_exact,
                   witness={"inputs": serialize_element(witness_inputs)}
                   if witness_inputs else None,
                   details=parts)


# -- group-scale suites ------------------------------------------------------

KAPPA_AMPLITUDE = 0.8
CONJ_PATH_AMPLITUDE = 0.6
ADOMEGA_PATH_AMPLITUDE = 0.5
ADOMEGA_LOOP_AMPLITUDE = 0.6


def _kappa_fixtures(rng: np.random.Generator, count: int = 3):
    return [su2grid.random_loop_field_coeffs(rng, amplitude=KAPPA_AMPLITUDE)
            for _ in range(count)]


def run_kappa_cocycle(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    _require_su2_matrix_layer(config)
    specs = _kappa_fixtures(rng)
    fields = [s.sample(config.nt, config.ntheta) for s in specs]
    residual = su2grid.kappa_cocycle_residual(*fields, config.k)
    witness = {"fields": [s.coeffs.tolist() for s in specs],
               "nt": config.nt, "ntheta": config.ntheta}
    return _result(config, "kappa-cocycle", 1, residual, config.tol_quad,
                   witness=witness)


def _adomega_fixture(g, rng: np.random.Generator, degree: int):
    path_spec = su2grid.random_group_path_coeffs(rng, amplitude=ADOMEGA_PATH_AMPLITUDE)
    xi = ADOMEGA_LOOP_AMPLITUDE * random_path(g, rng, degree, LOOP)
    eta = ADOMEGA_LOOP_AMPLITUDE * random_path(g, rng, degree, LOOP)
    return path_spec, xi, eta


def run_ad_omega(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    g = _require_su2_matrix_layer(config)
    path_spec, xi, eta = _adomega_fixture(g, rng, config.degree)
    p = path_spec.sample(config.ntheta)
    residual = su2grid.ad_omega_identity_residual(p, xi, eta, config.k)
    witness = {"path": path_spec.coeffs.tolist(),
               "xi": serialize_element(xi), "eta": serialize_element(eta),
               "ntheta": config.ntheta}
    return _result(config, "ad-omega", 1, residual, config.tol_quad,
                   witness=witness)


def run_kappa_conjugation(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    _require_su2_matrix_layer(config)
    path_spec = su2grid.random_group_path_coeffs(rng, amplitude=CONJ_PATH_AMPLITUDE)
    f_specs = _kappa_fixtures(rng, count=2)
    p = path_spec.sample(config.ntheta)
    f1, f2 = (s.sample(config.nt, config.ntheta) for s in f_specs)
    residual = su2grid.kappa_conjugation_identity_residual(p, f1, f2, config.k)
    witness = {"path": path_spec.coeffs.tolist(),
               "fields": [s.coeffs.tolist() for s in f_specs],
               "nt": config.nt, "ntheta": config.ntheta}
    return _result(config, "kappa-conjugation", 1, residual, config.tol_quad,
                   witness=witness)


# -- finite crossed-module suites ---------------------------------------------

def _bundled_crossed_modules() -> list[twogroups.FiniteCrossedModule]:
    q8 = twogroups.quaternion_group()
    s3 = twogroups.symmetric_group_3()
    return [
        twogroups.conjugation_module(twogroups.cyclic_group(5)),
        twogroups.conjugation_module(s3),
        twogroups.conjugation_module(q8),
        twogroups.trivial_action_module(s3, twogroups.cyclic_group(3)),
        twogroups.inclusion_module(q8, [0, 1, 2, 3], name="Z4<i>"),
    ]


def run_crossed_axioms(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    violations: dict[str, list[str]] = {}
    modules = _bundled_crossed_modules()
    for cm in modules:
        bad = cm.violations()
        if bad:
            violations[cm.name] = bad[:5]
    residual = float(sum(len(v) for v in violations.values()))
    return _result(config, "crossed-axioms", len(modules), residual, 0.0,
                   witness={"violations": violations} if violations else None,
                   details={"modules": [cm.name for cm in modules]})


def run_two_group_axioms(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    violations: dict[str, list[str]] = {}
    modules = _bundled_crossed_modules()
    for cm in modules:
        grp = twogroups.FiniteTwoGroup(cm)
        bad = grp.violations()
        if cm.name.startswith("conj["):
            bad += twogroups.unique_morphism_count_violations(grp)
        if bad:
            violations[cm.name] = bad[:5]
    residual = float(sum(len(v) for v in violations.values()))
    return _result(config, "two-group-axioms", len(modules), residual, 0.0,
                   witness={"violations": violations} if violations else None,
                   details={"modules": [cm.name for cm in modules]})


def run_strict_exactness(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    q8 = twogroups.quaternion_group()
    s3 = twogroups.symmetric_group_3()
    cases = {
        "kernel-inclusion[Q8]": twogroups.kernel_inclusion_pair(q8, [0, 1, 2, 3]),
        "collapse[S3]": twogroups.indiscrete_collapse_pair(s3),
        "identity[Z4]": twogroups.identity_kernel_pair(twogroups.cyclic_group(4)),
    }
    details = {}
    failures = []
    for name, (iota, pi) in cases.items():
        record = twogroups.strict_kernel_exactness(iota, pi)
        details[name] = {
            "kernel_objects": record.kernel_objects,
            "kernel_morphisms": record.kernel_morphisms,
            "image_objects": record.image_objects,
            "image_morphisms": record.image_morphisms,
            "passed": record.passed,
        }
        if not record.passed:
            failures.append(name)
    residual = float(len(failures))
    return _result(config, "strict-exactness", len(cases), residual, 0.0,
                   witness={"failures": failures} if failures else None,
                   details=details)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuiteSpec:
    ordinal: int
    runner: Callable[[RunConfig, np.random.Generator], SuiteResult]
    identity: str


REGISTRY: dict[str, SuiteSpec] = {
    "gk-jacobi": SuiteSpec(0, run_gk_jacobi,
        "graded Jacobi identity of the skeletal model: for n inputs, "
        "sum over unshuffles of chi(sigma) (-1)^(i(j-1)) l_j(l_i(...), ...) = 0; "
        "at n = 4 this is the closedness of the 3-form B(x, [y, z])."),
    "pkg-jacobi": SuiteSpec(1, run_pkg_jacobi,
        "graded Jacobi identity of the path model; the mixed-degree cases "
        "encode that the twisted action of based paths on centrally extended "
        "loops is an action by derivations."),
    "phi-hom": SuiteSpec(2, run_phi_hom,
        "coherence of the endpoint homomorphism: d(phi2(x,y)) = phi0(l2(x,y)) "
        "- l2(phi0 x, phi0 y); phi2(x, dh) = phi1(l2(x,h)) - l2(phi0 x, phi1 h); "
        "and the six-term corrector law against both Jacobiators."),
    "psi-hom": SuiteSpec(3, run_psi_hom,
        "coherence of the splitting homomorphism x -> x f; its six-term law "
        "reduces to the universal value -1/6 of the integral of f (f - f^2)'."),
    "lambda-hom": SuiteSpec(4, run_lambda_hom,
        "coherence of the loop inclusion; its six-term law is exactly the "
        "2-cocycle condition of the loop cocycle, and its corrector is forced "
        "by the mixed-degree law."),
    "tau-2hom": SuiteSpec(5, run_tau_2hom,
        "the retraction p -> p - p(2 pi) f is a homotopy from (splitting o "
        "endpoint) to the identity: d tau = id0 - round_trip0, tau d = id1 - "
        "round_trip1, and from2(x,y) - to2(x,y) = l2(from0 x, tau y) + "
        "l2(tau x, to0 y) - tau(l2(x,y))."),
    "exactness": SuiteSpec(6, run_exactness,
        "exact rank check that the loop inclusion hits precisely the kernel "
        "of endpoint evaluation, on objects and directions, degree by degree."),
    "equivalence": SuiteSpec(7, run_equivalence,
        "(endpoint o splitting) is the identity of the skeletal model with "
        "vanishing corrector; the retraction homotopy certifies the other "
        "composite; the indiscrete model is trivialized by tau(x) = x."),
    "omega-cocycle": SuiteSpec(8, run_omega_cocycle,
        "loop cocycle omega(f,g) = 2k integral B(f, g') satisfies "
        "omega([f,g],h) + omega([g,h],f) + omega([h,f],g) = 0."),
    "extended-jacobi": SuiteSpec(9, run_extended_jacobi,
        "the twisted bracket [(f,a),(g,b)] = ([f,g], omega(f,g)) on loops + "
        "center satisfies the Jacobi identity."),
    "dalpha-action": SuiteSpec(10, run_dalpha_action,
        "the lifted action ([p,l], 2k integral B(p, l')) is a Lie algebra "
        "action by derivations of the twisted bracket, compatible with the "
        "projection to loops."),
    "kappa-cocycle": SuiteSpec(11, run_kappa_cocycle,
        "the exponentiated double-integral cocycle on paths of loops "
        "satisfies kappa(f,g) kappa(fg,h) = kappa(g,h) kappa(f,gh); verified "
        "by second-order quadrature."),
    "ad-omega": SuiteSpec(12, run_ad_omega,
        "conjugation invariance of the loop cocycle: omega(Ad(p) xi, Ad(p) "
        "eta) - omega(xi, eta) = k beta_p([xi, eta]) with beta_p(xi) = "
        "-2 integral B(xi, p^-1 p')."),
    "kappa-conjugation": SuiteSpec(13, run_kappa_conjugation,
        "conjugation rule for the exponentiated cocycle: kappa(p f1 p^-1, "
        "p f2 p^-1) = kappa(f1,f2) exp(ik integral of beta_p corrections)."),
    "crossed-axioms": SuiteSpec(14, run_crossed_axioms,
        "boundary and action compatibility of the bundled finite crossed "
        "modules: partial(alpha(g) h) = g partial(h) g^-1 and "
        "alpha(partial h1) h2 = h1 h2 h1^-1, exhaustively."),
    "two-group-axioms": SuiteSpec(15, run_two_group_axioms,
        "category axioms of the 2-group built on each crossed module: "
        "source/target/identity are homomorphisms, composition is defined "
        "exactly on matching pairs, units/associativity/interchange hold."),
    "strict-exactness": SuiteSpec(16, run_strict_exactness,
        "image-equals-kernel on objects and morphisms for composable strict "
        "homomorphism pairs: subgroup inclusion vs quotient, indiscrete "
        "collapse, and the identity."),
}


def describe(name: str) -> str:
    if name not in REGISTRY:
        raise InputError(f"unknown suite {name!r}")
    return f"{name}: {REGISTRY[name].identity}"


def _suite_rng(config: RunConfig, name: str) -> np.random.Generator:
    return np.random.default_rng((config.seed, REGISTRY[name].ordinal))


def run(config: RunConfig) -> dict:
    """Execute the configured suites and assemble the report document."""
    config.validate()
    names = config.resolve_suites()
    start = time.perf_counter()

    def one(name: str) -> SuiteResult:
        return REGISTRY[name].runner(config, _suite_rng(config, name))

    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(one, names))
    else:
        results = [one(name) for name in names]

    passed = sum(1 for r in results if r.passed)
    report = {
        "config": asdict(config) | {"suites": list(config.suites)},
        "suites": [r.to_json() for r in results],
        "summary": {
            "total": len(results),
            "passed": passed,
            "failed": len(results) - passed,
            "all_passed": passed == len(results),
            "wall_time_s": time.perf_counter() - start,
        },
    }
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2)


def strip_wall_time(report: dict) -> dict:
    clone = json.loads(json.dumps(report))
    clone["summary"].pop("wall_time_s", None)
    return clone


# ---------------------------------------------------------------------------
# replay
# ---------------------------------------------------------------------------

def replay_suite(name: str, witness: dict, config: RunConfig) -> float:
    """Re-evaluate a recorded worst-case witness and return its residual."""
    g = _algebra(config)
    if name in ("gk-jacobi", "pkg-jacobi"):
        structure = make_gk(g, config.k) if name == "gk-jacobi" \
            else make_pkg(g, config.k, config.degree)
        from .linfty import generalized_jacobi_residual
        return generalized_jacobi_residual(
            structure, deserialize_graded(witness["inputs"], g))
    if name in ("phi-hom", "psi-hom", "lambda-hom"):
        bundle = _bundle(config)
        hom = {"phi-hom": bundle.phi, "psi-hom": bundle.psi,
               "lambda-hom": bundle.lam}[name]
        from .linfty import hom_residuals_once
        x, y, z, h = deserialize_element(witness["inputs"], g)
        return max(hom_residuals_once(hom, x, y, z, h).values())
    if name == "tau-2hom":
        bundle = _bundle(config)
        from .linfty import two_hom_residuals_once
        x, y, h = deserialize_element(witness["inputs"], g)
        return max(two_hom_residuals_once(bundle.tau, x, y, h).values())
    if name == "omega-cocycle":
        f, q, h = deserialize_element(witness["inputs"], g)
        return kacmoody.omega_cocycle_residual(f, q, h, config.k)
    if name == "extended-jacobi":
        a, b, c = deserialize_element(witness["inputs"], g)
        return kacmoody.extended_jacobi_residual(a, b, c, config.k)
    if name == "dalpha-action":
        p1, p2, loop, v, w = deserialize_element(witness["inputs"], g)
        return max(
            kacmoody.dalpha_action_residual(p1, p2, v, config.k),
            kacmoody.dalpha_derivation_residual(p1, v, w, config.k),
            kacmoody.dalpha_equivariance_residual(p1, v, config.k),
            kacmoody.dalpha_matches_central_bracket_residual(loop, v, config.k),
        )
    if name == "kappa-cocycle":
        specs = [su2grid.LoopFieldCoeffs(np.asarray(c)) for c in witness["fields"]]
        fields = [s.sample(witness["nt"], witness["ntheta"]) for s in specs]
        return su2grid.kappa_cocycle_residual(*fields, config.k)
    if name == "ad-omega":
        p = su2grid.GroupPathCoeffs(np.asarray(witness["path"])).sample(witness["ntheta"])
        xi = deserialize_element(witness["xi"], g)
        eta = deserialize_element(witness["eta"], g)
        return su2grid.ad_omega_identity_residual(p, xi, eta, config.k)
    if name == "kappa-conjugation":
        p = su2grid.GroupPathCoeffs(np.asarray(witness["path"])).sample(witness["ntheta"])
        specs = [su2grid.LoopFieldCoeffs(np.asarray(c)) for c in witness["fields"]]
        f1, f2 = (s.sample(witness["nt"], witness["ntheta"]) for s in specs)
        return su2grid.kappa_conjugation_identity_residual(p, f1, f2, config.k)
    if name in ("crossed-axioms", "two-group-axioms", "strict-exactness", "exactness"):
        rng = _suite_rng(config, name)
        return REGISTRY[name].runner(config, rng).max_residual
    raise InputError(f"suite {name!r} does not support replay")


def replay_report(path: str | Path) -> list[tuple[str, float]]:
    """Re-run every witness recorded in a report; returns (suite, residual)."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read report {path}: {exc}") from exc
    try:
        cfg_doc = dict(doc["config"])
        cfg_doc["suites"] = tuple(cfg_doc.get("suites", ("all",)))
        config = RunConfig(**cfg_doc)
        entries = doc["suites"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed report {path}: {exc}") from exc
    out = []
    for entry in entries:
        if entry.get("witness"):
            out.append((entry["name"], replay_suite(entry["name"],
                                                    entry["witness"], config)))
    return out
