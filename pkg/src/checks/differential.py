"""
Differential equations and polynomial identities of the Laguerre families
"""
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.laguerre.ltp import (GlpIndices, InvalidIndicesError, LtpIndices, glp_nonstandard,
                              glp_standard, ltp_poly)
from src.laguerre.polynomial import ExactPolynomial
from src.numerics.exact import factorial, sign_power
from src.numerics.precision import HighPrecReal, PrecisionContext, round_to, to_exact, to_high


def glp_convention_difference(q: int, p: int) -> ExactPolynomial:
    """L_q^p - (-1)^p q! L^(p)_(q-p); the zero polynomial when the two conventions agree"""
    g = GlpIndices(q, p)
    bridge = glp_standard(q - p, p).scale(sign_power(p) * factorial(q))
    return glp_nonstandard(g) - bridge


def ode_residual_glp_poly(g: GlpIndices) -> ExactPolynomial:
    """x L'' + (p+1-x) L' + (q-p) L for L = L_q^p, as an exact polynomial"""
    q, p = g.mu, g.nu
    L = glp_nonstandard(g)
    d1, d2 = L.derivative(1), L.derivative(2)
    return d2.shift(1) + d1.scale(p + 1) - d1.shift(1) + L.scale(q - p)


def ode_residual_glp(g: GlpIndices, x, ctx: PrecisionContext) -> HighPrecReal:
    """Numerical residual of the generalized Laguerre equation at x > 0"""
    x = to_exact(x)
    if x <= 0:
        raise ValueError(f"x must be positive, got {x}")
    q, p = g.mu, g.nu
    work = ctx.padded()
    L = glp_nonstandard(g)
    xv = to_high(x, work)
    value = (xv * L.derivative(2).evaluate(x, work)
             + (p + 1 - xv) * L.derivative(1).evaluate(x, work)
             + (q - p) * L.evaluate(x, work))
    return round_to(value, ctx)


def ode_residual_ltp_poly(idx: LtpIndices) -> ExactPolynomial:
    """
    Residual of the LTP equation multiplied through by x

    x^2 L'' + x (3-alpha-x) L' - [(1-n) x + l(l+1) + l(1-alpha)] L
    """
    a, n, l = idx.alpha, idx.n, idx.l
    L = ltp_poly(idx)
    d1, d2 = L.derivative(1), L.derivative(2)
    first = d1.shift(1).scale(3 - a) - d1.shift(2)
    potential = L.shift(1).scale(1 - n) + L.scale(l * (l + 1) + l * (1 - a))
    return d2.shift(2) + first - potential


def ode_residual_ltp(idx: LtpIndices, x, ctx: PrecisionContext) -> HighPrecReal:
    """x L'' + (3-alpha-x) L' - [(1-n) + (l(l+1) + l(1-alpha))/x] L evaluated at x > 0"""
    x = to_exact(x)
    if x <= 0:
        raise ValueError(f"x must be positive, got {x}")
    a, n, l = idx.alpha, idx.n, idx.l
    work = ctx.padded()
    L = ltp_poly(idx)
    xv = to_high(x, work)
    centrifugal = (1 - n) + to_high(l * (l + 1) + l * (1 - a), work) / xv
    value = (xv * L.derivative(2).evaluate(x, work)
             + (3 - a - xv) * L.derivative(1).evaluate(x, work)
             - centrifugal * L.evaluate(x, work))
    return round_to(value, ctx)


def derivative_shift_check(g: GlpIndices, k: int) -> ExactPolynomial:
    """
    k-th derivative of L_q^p minus L_q^(p+k)

    Raises:
        InvalidIndicesError: If p + k exceeds q
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if g.nu + k > g.mu:
        raise InvalidIndicesError(f"p + k = {g.nu + k} exceeds q = {g.mu}")
    return glp_nonstandard(g).derivative(k) - glp_nonstandard(GlpIndices(g.mu, g.nu + k))
