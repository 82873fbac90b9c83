"""
Core and frictional potentials of the L^alpha exponential-type orbitals
"""
from dataclasses import dataclass
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

import config
from src.laguerre.ltp import GlpIndices, LtpIndices, RadialScale, glp_nonstandard, ltp_poly
from src.numerics.precision import (HighPrecReal, PrecisionContext, round_to, to_exact, to_high,
                                    ulp_distance)
from src.utils.logger import get_logger

logger = get_logger()

# Extra bits for the two frictional routes before they are compared in ulps
POTENTIAL_GUARD_BITS = 64


class SingularPointError(ValueError):
    """Raised when a potential is requested at a node of the polynomial it divides by"""

    def __init__(self, x, polynomial: str):
        self.x = x
        self.polynomial = polynomial
        super().__init__(f"{polynomial} vanishes at x = {x}; the potential is singular there")


@dataclass(frozen=True)
class PotentialDecomposition:
    """
    Core plus frictional potential at one radial point

    ``frictional`` comes from the logarithmic derivative of the LTP,
    ``frictional_glp`` from the ratio L_q^(p+1)/L_q^p. ``energy`` is the
    bound-state energy -zeta^2/2.
    """
    x: object
    core: HighPrecReal
    frictional: HighPrecReal
    frictional_glp: HighPrecReal
    total: HighPrecReal
    energy: HighPrecReal
    frictional_ulps: int

    def consistent(self, tolerance: int = config.ULP_TOLERANCE) -> bool:
        return self.frictional_ulps <= tolerance


def potentials(idx: LtpIndices, scale: RadialScale, r, ctx: PrecisionContext) -> PotentialDecomposition:
    """
    Decompose the effective potential at r into core and frictional parts

    Args:
        idx (LtpIndices): Quantum numbers
        scale (RadialScale): Orbital exponent
        r: Radial distance, r > 0
        ctx (PrecisionContext): Target precision

    Returns:
        PotentialDecomposition: Both frictional routes and their ulp distance

    Raises:
        SingularPointError: If the LTP or L_q^p vanishes at x = 2 zeta r
    """
    r = to_exact(r)
    if r <= 0:
        raise ValueError(f"r must be positive, got {r}")
    x = scale.x_of(r)
    L = ltp_poly(idx)
    glp = glp_nonstandard(GlpIndices(idx.q, idx.p))
    if L.vanishes_at(x):
        raise SingularPointError(x, f"LTP(alpha={idx.alpha}, n={idx.n}, l={idx.l})")
    if glp.vanishes_at(x):
        raise SingularPointError(x, f"L_{idx.q}^{idx.p}")

    work = ctx.padded(POTENTIAL_GUARD_BITS)
    xv = to_high(x, work)
    zeta_sq = to_high(scale.zeta ** 2, work)
    prefactor = -2 * zeta_sq * (1 - idx.alpha) / xv

    log_derivative = L.derivative().evaluate(x, work) / L.evaluate(x, work)
    frictional = round_to(prefactor * (log_derivative - idx.l / xv), ctx)

    if idx.p + 1 > idx.q:
        ratio = work.mp.zero
    else:
        shifted = glp_nonstandard(GlpIndices(idx.q, idx.p + 1))
        ratio = shifted.evaluate(x, work) / glp.evaluate(x, work)
    frictional_glp = round_to(prefactor * ratio, ctx)

    core = round_to(-2 * zeta_sq * idx.n / xv, ctx)
    ulps = ulp_distance(frictional, frictional_glp, ctx)
    if ulps > config.ULP_TOLERANCE:
        logger.warning(f"Frictional potentials differ by {ulps} ulp at x={x} for {idx}")
    return PotentialDecomposition(
        x=x,
        core=core,
        frictional=frictional,
        frictional_glp=frictional_glp,
        total=round_to(core + frictional, ctx),
        energy=round_to(-zeta_sq / 2, ctx),
        frictional_ulps=ulps,
    )
