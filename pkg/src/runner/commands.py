"""
Drivers of the ortho, checks, expand, integral and converge commands

Every driver returns rendered report rows plus the failed checks; none of them writes files.
"""
from dataclasses import dataclass, field
from fractions import Fraction
import random
from typing import Dict, List, Optional
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

import config
from src.checks.differential import (derivative_shift_check, glp_convention_difference,
                                     ode_residual_glp_poly, ode_residual_ltp_poly)
from src.checks.orthonormality import identity_violations, orthonormality_matrix
from src.checks.potentials import SingularPointError, potentials
from src.expansions.power_series import (Basis, arranged_sum_glp, arranged_sum_ltp,
                                         rearranged_sum_glp, rearranged_sum_ltp, split_mu_star,
                                         target_function)
from src.integrals.convergence import (CONVERGENCE_COLUMNS, ConvergenceRow, convergence_table,
                                       relative_error)
from src.integrals.sto import IntegralSpec, StoParams, analytic_I, quadrature_I, series_I
from src.laguerre.ltp import (GlpIndices, LtpIndices, RadialScale, ltp_poly,
                              ltp_standard_convention, ltp_standard_weighted, ltp_weighted_poly)
from src.numerics.precision import PrecisionContext, format_scientific, ulp_distance
from src.runner.run_config import RunConfig
from src.utils.decimal_input import parse_decimal
from src.utils.logger import get_logger

logger = get_logger()

ORTHO_COLUMNS = ["alpha", "l", "n", "n_prime", "value", "expected"]
CHECK_COLUMNS = ["check", "alpha", "n", "l", "q", "p", "x", "status", "detail"]
EXPAND_COLUMNS = ["basis", "form", "alpha", "nu", "N", "r", "value", "target", "rel_err"]


@dataclass
class CommandResult:
    """Rendered report rows, the failed checks and lines for stdout"""
    rows: List[Dict[str, str]]
    columns: List[str]
    failures: List[str] = field(default_factory=list)
    summary: List[str] = field(default_factory=list)
    convergence_rows: Optional[List[ConvergenceRow]] = None


def run_ortho(cfg: RunConfig, ctx: PrecisionContext) -> CommandResult:
    """Exact orthonormality matrices for every alpha and l <= l_max"""
    rows, failures = [], []
    for alpha in cfg.alphas:
        for l in range(cfg.l_max + 1):
            matrix = orthonormality_matrix(alpha, l, cfg.n_max)
            for entry in (entry for line in matrix for entry in line):
                rows.append({
                    "alpha": str(alpha), "l": str(l), "n": str(entry.n),
                    "n_prime": str(entry.n_prime), "value": str(entry.value),
                    "expected": str(entry.expected),
                })
            for n, n_prime, value in identity_violations(matrix):
                failures.append(f"ortho alpha={alpha} l={l} n={n} n'={n_prime}: {value}")
    matrices = len(cfg.alphas) * (cfg.l_max + 1)
    summary = [f"{matrices} orthonormality matrices, {len(failures)} nonzero deviations"]
    return CommandResult(rows, ORTHO_COLUMNS, failures, summary)


def _check_row(check: str, passed: bool, detail: str = "", **fields) -> Dict[str, str]:
    row = {column: "" for column in CHECK_COLUMNS}
    row.update({key: str(value) for key, value in fields.items()})
    row.update(check=check, status="pass" if passed else "FAIL", detail=detail)
    return row


def _polynomial_checks(cfg: RunConfig) -> List[Dict[str, str]]:
    rows = []
    for q in range(cfg.q_max + 1):
        for p in range(q + 1):
            difference = glp_convention_difference(q, p)
            rows.append(_check_row("glp-convention", difference.is_zero, str(difference), q=q, p=p))
            residual = ode_residual_glp_poly(GlpIndices(q, p))
            rows.append(_check_row("ode-glp", residual.is_zero, str(residual), q=q, p=p))
            for k in range(1, q - p + 1):
                shift = derivative_shift_check(GlpIndices(q, p), k)
                rows.append(_check_row("derivative-shift", shift.is_zero, f"k={k} {shift}", q=q, p=p))
    for alpha in cfg.alphas:
        for n in range(1, cfg.n_max + 1):
            for l in range(n):
                idx = LtpIndices(alpha, n, l)
                labels = dict(alpha=alpha, n=n, l=l, q=idx.q, p=idx.p)
                residual = ode_residual_ltp_poly(idx)
                rows.append(_check_row("ode-ltp", residual.is_zero, str(residual), **labels))
                same = (ltp_standard_convention(idx) == ltp_poly(idx)
                        and ltp_standard_weighted(idx) == ltp_weighted_poly(idx))
                rows.append(_check_row("convention-equality", same, "", **labels))
    return rows


def _random_point(rng: random.Random) -> Fraction:
    # Three-decimal points in the configured x range
    lo, hi = (parse_decimal(bound) for bound in config.POTENTIAL_X_RANGE)
    return Fraction(rng.randint(int(lo * 1000), int(hi * 1000)), 1000)


def _potential_checks(cfg: RunConfig, ctx: PrecisionContext) -> List[Dict[str, str]]:
    rows = []
    rng = random.Random(cfg.seed)
    scale = RadialScale(cfg.zeta)
    for alpha in cfg.alphas:
        for n in range(1, cfg.n_max + 1):
            for l in range(n):
                idx = LtpIndices(alpha, n, l)
                accepted = 0
                while accepted < config.POTENTIAL_POINTS_PER_INDEX:
                    x = _random_point(rng)
                    try:
                        decomposition = potentials(idx, scale, x / (2 * scale.zeta), ctx)
                    except SingularPointError as e:
                        logger.debug(f"Skipping node: {e}")
                        continue
                    accepted += 1
                    passed = decomposition.consistent()
                    if alpha == 1:
                        passed = passed and decomposition.frictional == 0 and decomposition.frictional_glp == 0
                    rows.append(_check_row(
                        "potential", passed, f"{decomposition.frictional_ulps} ulp",
                        alpha=alpha, n=n, l=l, q=idx.q, p=idx.p, x=float(x)))
    return rows


def run_checks(cfg: RunConfig, ctx: PrecisionContext) -> CommandResult:
    """Polynomial identities, differential equations and the potential decomposition"""
    rows = _polynomial_checks(cfg) + _potential_checks(cfg, ctx)
    failures = [f"{row['check']} alpha={row['alpha']} n={row['n']} l={row['l']} "
                f"q={row['q']} p={row['p']} x={row['x']}: {row['detail']}"
                for row in rows if row["status"] != "pass"]
    summary = [f"{len(rows)} checks, {len(failures)} failed"]
    return CommandResult(rows, CHECK_COLUMNS, failures, summary)


def run_expand(cfg: RunConfig, ctx: PrecisionContext) -> CommandResult:
    """Arranged and rearranged partial sums against r^eta* exp(-xi r)"""
    eta_star, xi = parse_decimal(cfg.eta_star), parse_decimal(cfg.xi)
    spec = split_mu_star(1 + eta_star, xi)
    texts = [text.strip() for text in cfg.r_points.split(",") if text.strip()]
    rows, failures = [], []

    def emit(basis: str, alpha, values: Dict[str, object], r_text: str, target):
        for form, value in values.items():
            rows.append({
                "basis": basis, "form": form, "alpha": "" if alpha is None else str(alpha),
                "nu": str(cfg.nu), "N": str(cfg.N), "r": r_text,
                "value": format_scientific(value, ctx), "target": format_scientific(target, ctx),
                "rel_err": format_scientific(relative_error(value, target, ctx), ctx),
            })
        ulps = ulp_distance(values["arranged"], values["rearranged"], ctx)
        if ulps > config.ULP_TOLERANCE:
            failures.append(f"{basis} alpha={alpha} r={r_text}: arranged and rearranged differ by {ulps} ulp")

    for r_text, r in zip(texts, cfg.points()):
        target = target_function(spec, r, ctx)
        for alpha in cfg.alphas:
            emit("ltp", alpha, {
                "arranged": arranged_sum_ltp(alpha, cfg.nu, eta_star, xi, cfg.N, r, ctx),
                "rearranged": rearranged_sum_ltp(alpha, cfg.nu, eta_star, xi, cfg.N, r, ctx),
            }, r_text, target)
        emit("glp", None, {
            "arranged": arranged_sum_glp(cfg.nu, eta_star, xi, cfg.N, r, ctx),
            "rearranged": rearranged_sum_glp(cfg.nu, eta_star, xi, cfg.N, r, ctx),
        }, r_text, target)
    summary = [f"{len(rows)} partial sums at {len(texts)} points, {len(failures)} rearrangement mismatches"]
    return CommandResult(rows, EXPAND_COLUMNS, failures, summary)


def integral_spec(cfg: RunConfig) -> IntegralSpec:
    return IntegralSpec(StoParams(cfg.n_star, cfg.zeta), StoParams(cfg.np_star, cfg.zeta_prime),
                        cfg.mu_star, cfg.xi)


def run_integral(cfg: RunConfig, ctx: PrecisionContext) -> CommandResult:
    """One radial integral by the requested method, next to the closed form"""
    spec = integral_spec(cfg)
    analytic = analytic_I(spec, ctx)
    alpha, N = "", ""
    if cfg.method == "analytic":
        value = analytic
    elif cfg.method == "quadrature":
        value = quadrature_I(spec, ctx)
    else:
        kind, form = cfg.method.split("-")
        basis = Basis.ltp(cfg.alpha_range[0], cfg.nu) if kind == "ltp" else Basis.glp(cfg.nu)
        logger.info(f"Series {cfg.method} with {basis} up to N={cfg.N}")
        value = series_I(spec, basis, form, cfg.N, ctx)
        alpha = "" if basis.alpha is None else str(basis.alpha)
        N = str(cfg.N)
    row = {
        "method": cfg.method, "alpha": alpha, "nu": str(cfg.nu), "N": N,
        "value": format_scientific(value, ctx), "analytic": format_scientific(analytic, ctx),
        "rel_err": format_scientific(relative_error(value, analytic, ctx), ctx),
    }
    return CommandResult([row], CONVERGENCE_COLUMNS, summary=[f"{cfg.method}: {row['value']}"])


def run_converge(cfg: RunConfig, ctx: PrecisionContext) -> CommandResult:
    """Convergence table over N = 1..N_max for both forms of the requested bases"""
    spec = integral_spec(cfg)
    bases = []
    if cfg.basis in ("ltp", "both"):
        bases.extend(Basis.ltp(alpha, cfg.nu) for alpha in cfg.alphas)
    if cfg.basis in ("glp", "both"):
        bases.append(Basis.glp(cfg.nu))
    table = convergence_table(spec, bases, cfg.N_max, ctx, workers=cfg.workers)

    failures = []
    by_key = {(row.method, row.alpha, row.N): row for row in table}
    for row in table:
        kind, form = row.method.split("-")
        if form == "arranged":
            partner = by_key.get((f"{kind}-rearranged", row.alpha, row.N))
            if partner is not None:
                ulps = ulp_distance(row.value, partner.value, ctx)
                if ulps > config.ULP_TOLERANCE:
                    failures.append(f"{kind} alpha={row.alpha} N={row.N}: forms differ by {ulps} ulp")
        if row.N == cfg.N_max and row.rel_err > cfg.tol:
            failures.append(f"{row.method} alpha={row.alpha} N={row.N}: "
                            f"rel_err {float(row.rel_err):.3e} exceeds {cfg.tol:g}")
    worst = max(float(row.rel_err) for row in table if row.N == cfg.N_max)
    summary = [f"{len(table)} rows, largest rel_err at N={cfg.N_max}: {worst:.3e}"]
    return CommandResult([row.as_record(ctx) for row in table], CONVERGENCE_COLUMNS,
                         failures, summary, convergence_rows=table)


DRIVERS = {
    "ortho": run_ortho,
    "checks": run_checks,
    "expand": run_expand,
    "integral": run_integral,
    "converge": run_converge,
}
