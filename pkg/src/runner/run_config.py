"""
Run configuration and exit codes of the batch commands
"""
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

import config
from src.utils.decimal_input import parse_decimal, parse_decimal_list

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

COMMANDS = ("ortho", "checks", "expand", "integral", "converge")
INTEGRAL_METHODS = ("analytic", "quadrature", "ltp-arranged", "ltp-rearranged",
                    "glp-arranged", "glp-rearranged")
BASIS_CHOICES = ("ltp", "glp", "both")


@dataclass
class RunConfig:
    """
    Everything one batch command needs; numeric parameters stay decimal strings until validated

    Attributes:
        command (str): One of ortho, checks, expand, integral, converge
        alpha_range (Tuple[int, int]): Inclusive alpha sweep
        nu (int): Angular index of the expanded potential (l of the LTP basis)
        l_max (int): Largest orbital quantum number swept by ortho/checks
        n_max (int): Basis size per l (ortho) or largest n (checks)
        q_max (int): Largest GLP degree index swept by checks
        eta_star (str): Fractional exponent of the expanded power function
        xi (str): Screening parameter
        zeta (str): Orbital exponent of the bra orbital
        zeta_prime (str): Orbital exponent of the ket orbital
        mu_star (str): Potential exponent
        n_star (str): Principal quantum number of the bra orbital
        np_star (str): Principal quantum number of the ket orbital
        N (int): Truncation order of expand/integral
        N_max (int): Largest truncation order of converge
        r_points (str): Comma-separated evaluation points of expand
        method (str): Integral method
        basis (str): Bases tabulated by converge
        precision_bits (int): Working precision
        output_path (Optional[str]): Report path (default: exports dir / <command>.<format>)
        format (str): csv or json
        tol (float): Relative-error tolerance at N_max for converge
        workers (int): Threads for independent table rows
        seed (int): Seed of the random potential check points
    """
    command: str
    alpha_range: Tuple[int, int] = config.ALPHA_RANGE
    nu: int = config.BENCHMARK_NU
    l_max: int = config.DEFAULT_L_MAX
    n_max: int = config.DEFAULT_N_MAX
    q_max: int = config.DEFAULT_Q_MAX
    eta_star: str = config.DEFAULT_ETA_STAR
    xi: str = config.BENCHMARK_XI_VALUES[0]
    zeta: str = config.BENCHMARK_ZETA
    zeta_prime: str = config.BENCHMARK_ZETA_PRIME
    mu_star: str = config.BENCHMARK_MU_STAR
    n_star: str = config.BENCHMARK_N_STAR
    np_star: str = config.BENCHMARK_NP_STAR
    N: int = config.DEFAULT_EXPANSION_ORDER
    N_max: int = config.BENCHMARK_N_MAX
    r_points: str = config.DEFAULT_R_POINTS
    method: str = "analytic"
    basis: str = "both"
    precision_bits: int = config.DEFAULT_PRECISION_BITS
    output_path: Optional[str] = None
    format: str = config.DEFAULT_EXPORT_FORMAT
    tol: float = config.CONVERGENCE_TOLERANCE
    workers: int = 1
    seed: int = config.RANDOM_SEED

    def validate(self) -> None:
        """
        Reject configurations that cannot run

        Raises:
            ValueError: With a message naming the offending setting
        """
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format not in config.EXPORT_FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.method not in INTEGRAL_METHODS:
            raise ValueError(f"unknown integral method {self.method!r}")
        if self.basis not in BASIS_CHOICES:
            raise ValueError(f"unknown basis {self.basis!r}")
        if self.precision_bits < config.MIN_PRECISION_BITS:
            raise ValueError(f"precision must be at least {config.MIN_PRECISION_BITS} bits")
        lo, hi = self.alpha_range
        if lo > hi or hi > 2:
            raise ValueError(f"alpha range {lo}:{hi} must be nonempty with alpha <= 2")
        if self.command == "integral" and self.method.startswith("ltp") and lo != hi:
            raise ValueError(f"integral by {self.method} needs a single alpha, got {lo}:{hi}")
        for name in ("nu", "l_max", "q_max"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        for name in ("n_max", "N_max", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.N < 0:
            raise ValueError("N must be nonnegative")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        for name in ("eta_star", "xi", "zeta", "zeta_prime", "mu_star", "n_star", "np_star"):
            parse_decimal(getattr(self, name))
        self.points()

    @property
    def alphas(self) -> List[int]:
        lo, hi = self.alpha_range
        return list(range(lo, hi + 1))

    def points(self) -> List[Fraction]:
        return parse_decimal_list(self.r_points)

    def report_path(self) -> Path:
        if self.output_path:
            return Path(self.output_path)
        return config.EXPORTS_DIR / f"{self.command}.{self.format}"
