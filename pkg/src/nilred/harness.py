"""Check registry, suites, seeded runs and JSON reports."""

from __future__ import annotations

import inspect
import json
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import linalg
from .exterior import wedge_identity_holds
from .fieldpoly import FieldSpec
from .groebner import GroebnerTimeout, groebner_basis, ideal_equal, orbit_closure_ideal
from .laurent import (
    LatticeOperatorSpec,
    MatrixPolynomial,
    ch_inverse,
    companion_model,
    lattice_nilpotent,
    omega,
    reversed_det_coefficients,
    x_points,
    z1_points,
    z_membership,
)
from .orbits import Partition, jordan_type, max_partition, partitions, surjectivity_witness
from .schemes import (
    Chart,
    JordanOperator,
    NilpotentSchemeSpec,
    charts,
    intertwining_nullity,
    invariance_only_chart_ideal,
    invariant_chart_ideal,
    nilpotent_scheme_ideal,
    phi,
    random_nilpotent,
    random_vee_point,
    shuffle_chart_ideal,
    tangent_dim,
    vee_scheme_ideal,
)

STATUSES = ("pass", "fail", "timeout", "inconclusive")


@dataclass(frozen=True)
class CheckSpec:
    name: str
    params: dict = field(default_factory=dict)

    def key(self) -> str:
        return self.name + json.dumps(_jsonable(self.params), sort_keys=True)


@dataclass
class Report:
    check: str
    params: dict
    field: str
    status: str
    witness: str
    elapsed_ms: float
    seed: int

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": _jsonable(self.params),
            "field": self.field,
            "status": self.status,
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "seed": self.seed,
        }


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (Partition, tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, FieldSpec):
        return str(value)
    return value


def _field(params) -> FieldSpec:
    return params if isinstance(params, FieldSpec) else FieldSpec.parse(str(params))


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _show(m) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in m) + "]"


# --- checks: each returns (status, witness) -------------------------------------------


def check_nilpotent_reduced(n: int, e: int, field: str = "Q", timeout_secs: float = 600):
    """Defining ideal of N_{n,e} equals the prime ideal of the closure of the orbit of tau."""
    F = _field(field)
    spec = NilpotentSchemeSpec(n, e)
    tau = max_partition(n, e)
    mine = nilpotent_scheme_ideal(spec, F)
    oracle = orbit_closure_ideal(tau, F, timeout=timeout_secs)
    oracle = oracle.rename({f"x_{i}_{j}": f"a_{i}_{j}" for i in range(1, n + 1) for j in range(1, n + 1)})
    oracle = oracle.to_ring(mine.ring)
    if ideal_equal(mine, oracle, timeout=timeout_secs):
        return "pass", f"GB(I) = GB(oracle) for tau={tau}"
    go = groebner_basis(oracle, timeout=timeout_secs)
    gm = groebner_basis(mine, timeout=timeout_secs)
    extra = next((g for g in gm.basis if not go.contains(g)), None)
    missing = next((g for g in go.basis if not gm.contains(g)), None)
    return "fail", f"tau={tau}; not in oracle: {extra}; not in I: {missing}"


def check_shuffle_identity(N: int, type=None, n: int | None = None, field: str = "Q"):
    """Wedge power of I + zT equals I + sum z^d sh_d for every Jordan type of size N."""
    F = _field(field)
    types = [Partition(type)] if type is not None else list(partitions(N))
    checked = 0
    for sigma in types:
        if sigma.size != N:
            raise ValueError(f"type {sigma} does not have size {N}")
        T = JordanOperator.of_type(sigma).rows()
        for k in ([n] if n is not None else range(1, N + 1)):
            if not wedge_identity_holds(T, k, F):
                return "fail", f"type={sigma}, n={k}"
            checked += 1
    return "pass", f"{checked} (type, n) pairs agree exactly"


def check_chart_equality(type, n: int, field: str = "Q", timeout_secs: float = 600):
    """Invariant-plane chart ideal equals the pulled-back shuffle ideal on every chart."""
    F = _field(field)
    T = JordanOperator.of_type(type)
    all_charts = charts(T.N, n)
    for chart in all_charts:
        a = invariant_chart_ideal(T, chart, F)
        b = shuffle_chart_ideal(T, chart, F)
        if not ideal_equal(a, b, timeout=timeout_secs):
            return "fail", f"chart S={chart.S}"
    return "pass", f"equal on all {len(all_charts)} charts"


def check_nonreduced_contrast(field: str = "Q"):
    """On Gr(1,2) with T = J_2 invariance alone gives (x^2); adding the char poly gives (x)."""
    F = _field(field)
    chart = Chart(2, 1, (1,))
    inv = invariance_only_chart_ideal((2,), chart, F)
    full = invariant_chart_ideal((2,), chart, F)
    x = inv.ring.var("x_2_1")
    gi = groebner_basis(inv).basis
    gf = groebner_basis(full).basis
    if gi == (x**2,) and gf == (x,):
        return "pass", "invariance-only: (x_2_1^2); with char poly: (x_2_1)"
    return "fail", f"invariance-only: {list(map(str, gi))}; with char poly: {list(map(str, gf))}"


def check_surjectivity(n: int, e: int | None = None, field: str = "Q"):
    """Every sigma with largest part <= e is hit by phi at the chain witness."""
    F = _field(field)
    count = 0
    for ee in ([e] if e is not None else range(1, n + 1)):
        T = JordanOperator.of_type((ee,) * n)
        Tm = linalg.coerce(T.rows(), F)
        for sigma in partitions(n, largest=ee):
            psi = linalg.coerce(surjectivity_witness(n, ee, sigma), F)
            J = linalg.coerce(JordanOperator.of_type(sigma).rows(), F)
            if linalg.matmul(Tm, psi, F) != linalg.matmul(psi, J, F):
                return "fail", f"e={ee}, sigma={sigma}: T Psi != Psi J_sigma"
            if linalg.rank(psi, F) != n:
                return "fail", f"e={ee}, sigma={sigma}: Psi has rank < {n}"
            got = jordan_type(phi(T, psi, F), F)
            if got != sigma:
                return "fail", f"e={ee}, sigma={sigma}: phi gives type {got}"
            count += 1
    return "pass", f"{count} (e, sigma) witnesses"


def check_relative_dimension(n: int, e: int, prime: int = 5, seed: int = 0, trials: int = 100):
    """Intertwining nullity n^2 and tangent additivity at random full-rank points."""
    F = FieldSpec.prime(prime)
    rng = _rng(seed)
    spec = NilpotentSchemeSpec(n, e)
    base = nilpotent_scheme_ideal(spec, F)
    vee = vee_scheme_ideal(spec, (e,) * n, F)
    rel = n * n
    for trial in range(trials):
        T, A, psi = random_vee_point(rng, n, e, F)
        nul = intertwining_nullity(T, A, F)
        a_point = [x for r in A for x in r]
        total = tangent_dim(vee, a_point + [x for r in psi for x in r])
        below = tangent_dim(base, a_point)
        if nul != rel or total != below + rel:
            return "fail", (f"trial {trial}: A={_show(A)}, Psi={_show(psi)}, nullity={nul}, "
                            f"tangent={total}, base tangent={below}, expected +{rel}")
    return "pass", f"{trials} points: nullity {rel}, tangent additivity holds"


def check_ch_inverse(n: int, prime: int = 5, seed: int = 0, trials: int = 200):
    """(1 - C t^-1)(1 + C t^-1 + ... + C^(n-1) t^-(n-1)) = 1 for random C with char poly lam^n."""
    F = FieldSpec.prime(prime)
    rng = _rng(seed)
    for trial in range(trials):
        k = int(rng.integers(1, n + 1))
        _, C = random_nilpotent(rng, k, k, F)
        inv = ch_inverse(C, F)
        left = MatrixPolynomial(F, [linalg.identity(k, F), linalg.scale(C, -1, F)])
        if left * inv != MatrixPolynomial.identity(k, F):
            return "fail", f"trial {trial}: C={_show(C)}"
    return "pass", f"{trials} products exact"


def check_omega_involution(n: int, prime: int = 7, seed: int = 0, trials: int = 200,
                           order: int = 6, degree: int = 3):
    """omega(omega(A)) agrees with A through t^-order on random big-cell inputs."""
    F = FieldSpec.prime(prime)
    rng = _rng(seed)
    for trial in range(trials):
        k = int(rng.integers(1, n + 1))
        d = int(rng.integers(1, degree + 1))
        A = MatrixPolynomial(F, [linalg.identity(k, F)] +
                             [linalg.random_matrix(rng, k, k, F) for _ in range(d)])
        back = omega(omega(A, order), order)
        if back.truncate(order) != A.truncate(order):
            return "fail", f"trial {trial}: A={A}"
    return "pass", f"{trials} inputs, order {order}"


def check_omega_bijection(n: int, prime: int = 2):
    """omega maps the full enumeration of X onto the full enumeration of Z_1, injectively."""
    F = FieldSpec.prime(prime)
    xs = x_points(n, F)
    zs = set(z1_points(n, F))
    images = [omega(A) for A in xs]
    stray = next((B for B in images if B not in zs), None)
    if stray is not None:
        return "fail", f"image outside Z_1: {stray}"
    if len(set(images)) != len(xs):
        return "fail", "omega is not injective on X"
    if set(images) != zs:
        return "fail", f"image misses {len(zs - set(images))} points of Z_1"
    return "pass", f"|X| = |Z_1| = {len(xs)}, bijection"


def _random_z(rng, n: int, p: int, F: FieldSpec) -> MatrixPolynomial:
    """A product of ``p`` random elements of Z_1, so an element of Z_p."""
    A = MatrixPolynomial.identity(n, F)
    for _ in range(p):
        _, B = random_nilpotent(rng, n, n, F)
        A = A * MatrixPolynomial(F, [linalg.identity(n, F), B])
    return A


def check_companion(n: int, prime: int = 5, seed: int = 0, trials: int = 100, degree: int = 2):
    """char poly of the block companion matrix equals lam^(pn) det A(lam^-1) on Z_p samples."""
    F = FieldSpec.prime(prime)
    rng = _rng(seed)
    for trial in range(trials):
        k = int(rng.integers(1, n + 1))
        p = int(rng.integers(1, degree + 1))
        A = _random_z(rng, k, p, F)
        if not z_membership(A, p):
            return "fail", f"trial {trial}: sample left Z_{p}: {A}"
        C, chi = companion_model(A, p)
        if linalg.char_poly(C, F) != reversed_det_coefficients(A, p):
            return "fail", f"trial {trial}: A={A}, char poly {chi}"
    return "pass", f"{trials} samples"


def check_lattice_type(n: int, a: int, b: int):
    """Multiplication by t on t^-b L0 / t^a L0 has Jordan type ((a+b)^n)."""
    F = FieldSpec.rationals()
    T = lattice_nilpotent(LatticeOperatorSpec(n, a, b))
    got = jordan_type(T.rows(), F)
    if got != Partition((a + b,) * n):
        return "fail", f"type {got}"
    return "pass", f"type {got} on dimension {T.N}"


REGISTRY: dict[str, Callable] = {
    "ch_inverse": check_ch_inverse,
    "chart_equality": check_chart_equality,
    "companion": check_companion,
    "lattice_type": check_lattice_type,
    "nilpotent_reduced": check_nilpotent_reduced,
    "nonreduced_contrast": check_nonreduced_contrast,
    "omega_bijection": check_omega_bijection,
    "omega_involution": check_omega_involution,
    "relative_dimension": check_relative_dimension,
    "shuffle_identity": check_shuffle_identity,
    "surjectivity": check_surjectivity,
}


def describe(name: str) -> str:
    return (inspect.getdoc(REGISTRY[name]) or "").splitlines()[0]


def validate(spec: CheckSpec) -> dict:
    """Bind ``spec.params`` to the check's signature; unknown or missing names raise."""
    if spec.name not in REGISTRY:
        raise KeyError(f"unknown check {spec.name!r}; known: {', '.join(sorted(REGISTRY))}")
    params = dict(spec.params)
    sig = inspect.signature(REGISTRY[spec.name])
    if "prime" in params and "field" in sig.parameters and "prime" not in sig.parameters:
        params["field"] = f"Fp:{params.pop('prime')}"
    if "field" in params and "prime" in sig.parameters and "field" not in sig.parameters:
        F = _field(params.pop("field"))
        if not F.p:
            raise ValueError(f"check {spec.name} needs a prime field")
        params["prime"] = F.p
    try:
        bound = sig.bind(**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {spec.name}: {exc}") from None
    bound.apply_defaults()
    return dict(bound.arguments)


def run_check(spec: CheckSpec) -> Report:
    args = validate(spec)
    seed = int(args.get("seed", 0))
    fld = str(_field(args["field"])) if "field" in args else (
        f"Fp:{args['prime']}" if "prime" in args else "Q")
    start = time.perf_counter()
    try:
        status, witness = REGISTRY[spec.name](**args)
    except GroebnerTimeout as exc:
        status, witness = "timeout", f"Groebner computation exceeded its budget: {exc}"
    elapsed = (time.perf_counter() - start) * 1000
    return Report(spec.name, _jsonable(args), fld, status, witness, elapsed, seed)


# --- suites ---------------------------------------------------------------------------


def _core() -> list[CheckSpec]:
    specs = [CheckSpec("shuffle_identity", {"N": N}) for N in range(1, 7)]
    for T, n in [((2,), 1), ((2, 2), 2), ((3, 1), 2), ((2, 2, 2), 3)]:
        for fld in ("Q", "Fp:2"):
            specs.append(CheckSpec("chart_equality", {"type": list(T), "n": n, "field": fld}))
    specs.append(CheckSpec("nonreduced_contrast", {}))
    return specs


def _reducedness() -> list[CheckSpec]:
    return [CheckSpec("nilpotent_reduced", {"n": n, "e": e, "field": fld})
            for n, e in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)]
            for fld in ("Q", "Fp:2", "Fp:3")]


def _surjectivity() -> list[CheckSpec]:
    specs = [CheckSpec("surjectivity", {"n": n}) for n in range(1, 7)]
    specs += [CheckSpec("relative_dimension", {"n": n, "e": e, "trials": 100})
              for n in range(1, 5) for e in range(1, n + 1)]
    return specs


def _laurent() -> list[CheckSpec]:
    specs = [CheckSpec("ch_inverse", {"n": 5, "trials": 200}),
             CheckSpec("omega_involution", {"n": 4, "trials": 200}),
             CheckSpec("companion", {"n": 3, "trials": 100})]
    specs += [CheckSpec("omega_bijection", {"n": n, "prime": q}) for n in (2, 3) for q in (2, 3)]
    specs += [CheckSpec("lattice_type", {"n": n, "a": a, "b": b})
              for n in (1, 2, 3) for a, b in [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1)]]
    return specs


SUITES: dict[str, Callable[[], list[CheckSpec]]] = {
    "core": _core,
    "reducedness": _reducedness,
    "surjectivity": _surjectivity,
    "laurent": _laurent,
}


def suite_specs(name: str) -> list[CheckSpec]:
    if name == "all":
        return [s for key in SUITES for s in SUITES[key]()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(list(SUITES) + ['all'])}")
    return SUITES[name]()


def run_suite(name: str | list[CheckSpec], progress: Callable[[Report], None] | None = None) -> list[Report]:
    """Run every check of a suite (or an explicit list), ordered by check name then parameters."""
    specs = suite_specs(name) if isinstance(name, str) else list(name)
    reports = []
    for spec in sorted(specs, key=CheckSpec.key):
        try:
            report = run_check(spec)
        except Exception as exc:  # a broken check must not abort the suite
            report = Report(spec.name, _jsonable(spec.params), "?", "fail",
                            f"{type(exc).__name__}: {exc}", 0.0, int(spec.params.get("seed", 0)))
        reports.append(report)
        if progress:
            progress(report)
    return reports


def reports_json(reports: list[Report]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


def emit_report(reports: list[Report], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(reports_json(reports))
