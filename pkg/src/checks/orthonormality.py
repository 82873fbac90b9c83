"""
Exact weighted inner products and finite-rank completeness projections
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.laguerre.ltp import LtpIndices, eto_value, ltp_family
from src.laguerre.polynomial import ExactPolynomial
from src.numerics.exact import RadicalScaled
from src.numerics.precision import HighPrecReal, PrecisionContext
from src.utils.logger import get_logger

logger = get_logger()

WEIGHT_SIDES = ("first", "second")


@dataclass(frozen=True)
class InnerProductResult:
    """
    One exact inner product against its Kronecker delta

    Attributes:
        value (RadicalScaled): Exact value of the integral
        expected (int): 1 when n == n_prime, else 0
        n (int): Principal quantum number of the first factor
        n_prime (int): Principal quantum number of the second factor
    """
    value: RadicalScaled
    expected: int
    n: int = 0
    n_prime: int = 0

    @property
    def passed(self) -> bool:
        return self.value == RadicalScaled(Fraction(self.expected))


def weighted_inner(alpha: int, l: int, n: int, n_prime: int, weight_on: str = "second",
                   convention: str = "nonstandard") -> InnerProductResult:
    """
    Exact integral of exp(-x) x^2 LTP_n(x) LTPbar_n'(x) over (0, inf)

    Args:
        alpha (int): Frictional quantum number
        l (int): Orbital quantum number shared by both factors
        n (int): Principal quantum number of the first factor
        n_prime (int): Principal quantum number of the second factor
        weight_on (str): Which factor carries the weight (2n/x)^alpha
        convention (str): "nonstandard" or "standard" construction route

    Returns:
        InnerProductResult: Exact value and the expected delta
    """
    if weight_on not in WEIGHT_SIDES:
        raise ValueError(f"weight_on must be one of {WEIGHT_SIDES}, got {weight_on!r}")
    first = ltp_family(LtpIndices(alpha, n, l), convention, weighted=weight_on == "first")
    second = ltp_family(LtpIndices(alpha, n_prime, l), convention, weighted=weight_on == "second")
    value = (first * second).shift(2).moment_integral()
    return InnerProductResult(value, int(n == n_prime), n, n_prime)


def orthonormality_matrix(alpha: int, l: int, size: int, weight_on: str = "second",
                          convention: str = "nonstandard") -> List[List[InnerProductResult]]:
    """Matrix of weighted_inner over n, n' in l+1 .. l+size"""
    ns = range(l + 1, l + size + 1)
    logger.debug(f"Orthonormality matrix alpha={alpha} l={l} size={size} ({convention})")
    return [[weighted_inner(alpha, l, n, n_prime, weight_on, convention) for n_prime in ns]
            for n in ns]


def identity_violations(matrix: List[List[InnerProductResult]]) -> List[Tuple[int, int, RadicalScaled]]:
    """Entries that differ from the identity matrix, as (n, n', value)"""
    return [(entry.n, entry.n_prime, entry.value)
            for row in matrix for entry in row if not entry.passed]


def projected_polynomial(alpha: int, l: int, N: int, m: int,
                         convention: str = "nonstandard") -> ExactPolynomial:
    """
    Exact image of LTP_m under the rank-N kernel, minus LTP_m itself

    The kernel coefficients are the exact weighted inner products, so the
    result is the zero polynomial for m <= N and -LTP_m for m > N.
    """
    if m < l + 1 or N < l + 1:
        raise ValueError(f"need m >= l+1 and N >= l+1, got m={m}, N={N}, l={l}")
    projected = ExactPolynomial()
    for n in range(l + 1, N + 1):
        coefficient = weighted_inner(alpha, l, m, n, "second", convention).value
        if coefficient.is_zero:
            continue
        projected = projected + ltp_family(LtpIndices(alpha, n, l), convention).scale(coefficient)
    return projected - ltp_family(LtpIndices(alpha, m, l), convention)


def completeness_projection(alpha: int, l: int, N: int, m: int, x_points: Iterable,
                            ctx: PrecisionContext,
                            convention: str = "nonstandard") -> List[HighPrecReal]:
    """
    Residuals of the finite-rank completeness kernel acting on the radial function of order m

    Args:
        alpha (int): Frictional quantum number
        l (int): Orbital quantum number
        N (int): Truncation order of the kernel
        m (int): Principal quantum number of the projected function
        x_points (Iterable): Evaluation points
        ctx (PrecisionContext): Target precision
        convention (str): Construction route of the basis

    Returns:
        List[HighPrecReal]: Exactly 0 for m <= N, exactly -R_m(x) for m > N
    """
    residual = projected_polynomial(alpha, l, N, m, convention)
    if residual.is_zero:
        return [ctx.mp.zero for _ in x_points]
    return [eto_value(residual, x, ctx) for x in x_points]
