"""
Convergence tables of the four series forms against the closed-form integral
"""
import concurrent.futures
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.expansions.power_series import Basis
from src.integrals.sto import FORMS, METHODS, IntegralSpec, analytic_I, series_I
from src.numerics.precision import HighPrecReal, PrecisionContext, format_scientific
from src.utils.logger import get_logger

logger = get_logger()

CONVERGENCE_COLUMNS = ["method", "alpha", "nu", "N", "value", "analytic", "rel_err"]


@dataclass(frozen=True)
class ConvergenceRow:
    """One truncation order of one series method"""
    N: int
    method: str
    alpha: Optional[int]
    nu: int
    value: HighPrecReal
    analytic: HighPrecReal
    rel_err: HighPrecReal

    def as_record(self, ctx: PrecisionContext) -> Dict[str, str]:
        """Field dictionary with numbers in round-trip scientific notation"""
        return {
            "method": self.method,
            "alpha": "" if self.alpha is None else str(self.alpha),
            "nu": str(self.nu),
            "N": str(self.N),
            "value": format_scientific(self.value, ctx),
            "analytic": format_scientific(self.analytic, ctx),
            "rel_err": format_scientific(self.rel_err, ctx),
        }


def relative_error(value: HighPrecReal, reference: HighPrecReal, ctx: PrecisionContext) -> HighPrecReal:
    """|value - reference| / |reference| (absolute error when the reference is zero)"""
    mp = ctx.mp
    difference = mp.fabs(mp.mpf(value) - mp.mpf(reference))
    if reference == 0:
        return difference
    return difference / mp.fabs(reference)


def _method(basis: Basis, form: str) -> str:
    return f"{basis.kind}-{form}"


def _row_tasks(bases: Iterable[Basis], N_max: int, forms: Sequence[str]) -> List[Tuple[Basis, str, int]]:
    tasks = []
    for basis in bases:
        for form in forms:
            for N in range(max(1, basis.first_index), N_max + 1):
                tasks.append((basis, form, N))

    def order(task):
        basis, form, N = task
        alpha = -10 ** 9 if basis.alpha is None else basis.alpha
        return METHODS.index(_method(basis, form)), alpha, basis.nu, N

    return sorted(tasks, key=order)


def convergence_table(spec: IntegralSpec, bases: Sequence[Basis], N_max: int,
                      ctx: PrecisionContext, workers: int = 1,
                      forms: Sequence[str] = FORMS) -> List[ConvergenceRow]:
    """
    Rows for every truncation order 1..N_max, method and basis

    Args:
        spec (IntegralSpec): Integral parameters
        bases (Sequence[Basis]): LTP(alpha, nu) and/or GLP(nu) bases
        N_max (int): Largest truncation order
        ctx (PrecisionContext): Target precision
        workers (int): Threads for independent rows; the row order does not depend on it
        forms (Sequence[str]): Series forms to tabulate

    Returns:
        List[ConvergenceRow]: Ordered by (method, alpha, N)
    """
    if N_max < 1:
        raise ValueError(f"N_max must be at least 1, got {N_max}")
    for form in forms:
        if form not in FORMS:
            raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    analytic = analytic_I(spec, ctx)
    tasks = _row_tasks(bases, N_max, forms)
    logger.info(f"Convergence table: {len(tasks)} rows, N_max={N_max}, {ctx.mantissa_bits} bits")

    def compute(task) -> ConvergenceRow:
        basis, form, N = task
        value = series_I(spec, basis, form, N, ctx)
        row = ConvergenceRow(N, _method(basis, form), basis.alpha, basis.nu, value, analytic,
                             relative_error(value, analytic, ctx))
        logger.debug(f"{row.method} alpha={row.alpha} N={N}: rel_err={float(row.rel_err):.3e}")
        return row

    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(compute, tasks))
    return [compute(task) for task in tasks]
