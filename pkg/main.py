#!/usr/bin/env python3
"""
Command-line front end of the Laguerre-type polynomial toolkit
"""
import sys
from pathlib import Path
import argparse
from typing import List, Optional

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src.runner.run_config import BASIS_CHOICES, COMMANDS, INTEGRAL_METHODS, RunConfig
from src.runner.runner import run
from src.utils.decimal_input import parse_int_range
from src.utils.logger import get_logger
import config

logger = get_logger()

COMMAND_HELP = {
    "ortho": "exact orthonormality matrices",
    "checks": "polynomial identities, differential equations and potentials",
    "expand": "arranged/rearranged partial sums against the target function",
    "integral": "one radial STO integral by the chosen method",
    "converge": "convergence table of the four series forms",
}


def _normalize_argv(argv: List[str]) -> List[str]:
    """Join flags with negative values ("--alpha -2:2") so argparse does not read them as options"""
    normalized = []
    i = 0
    while i < len(argv):
        token = argv[i]
        following = argv[i + 1] if i + 1 < len(argv) else ""
        if (token.startswith("--") and "=" not in token and following.startswith("-")
                and following[1:2].isdigit()):
            normalized.append(f"{token}={following}")
            i += 2
            continue
        normalized.append(token)
        i += 1
    return normalized


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument('--alpha', type=parse_int_range, default=config.ALPHA_RANGE,
                        help='alpha range lo:hi (a single integer selects one alpha)')
    common.add_argument('--nu', type=int, default=config.BENCHMARK_NU,
                        help='angular index of the expanded potential')
    common.add_argument('--lmax', type=int, default=config.DEFAULT_L_MAX)
    common.add_argument('--nmax', type=int, default=config.DEFAULT_N_MAX)
    common.add_argument('--qmax', type=int, default=config.DEFAULT_Q_MAX)
    common.add_argument('--eta', default=config.DEFAULT_ETA_STAR, help='eta* in [0, 1)')
    common.add_argument('--xi', default=config.BENCHMARK_XI_VALUES[0], help='screening parameter')
    common.add_argument('--zeta', default=config.BENCHMARK_ZETA)
    common.add_argument('--zetap', default=config.BENCHMARK_ZETA_PRIME)
    common.add_argument('--mustar', default=config.BENCHMARK_MU_STAR)
    common.add_argument('--nstar', default=config.BENCHMARK_N_STAR)
    common.add_argument('--npstar', default=config.BENCHMARK_NP_STAR)
    common.add_argument('--N', type=int, default=config.DEFAULT_EXPANSION_ORDER,
                        help='truncation order for expand and integral')
    common.add_argument('--Nmax', type=int, default=config.BENCHMARK_N_MAX,
                        help='largest truncation order for converge')
    common.add_argument('--r', default=config.DEFAULT_R_POINTS, help='comma-separated points')
    common.add_argument('--method', choices=INTEGRAL_METHODS, default='analytic')
    common.add_argument('--basis', choices=BASIS_CHOICES, default='both')
    common.add_argument('--precision', type=int, default=config.DEFAULT_PRECISION_BITS,
                        help='working precision in mantissa bits')
    common.add_argument('--format', choices=config.EXPORT_FORMATS,
                        default=config.DEFAULT_EXPORT_FORMAT)
    common.add_argument('--output', help='report path')
    common.add_argument('--tol', type=float, default=config.CONVERGENCE_TOLERANCE,
                        help='relative-error tolerance at Nmax for converge')
    common.add_argument('--workers', type=int, default=1)
    common.add_argument('--seed', type=int, default=config.RANDOM_SEED)

    parser = argparse.ArgumentParser(description='Laguerre-type polynomial toolkit',
                                     allow_abbrev=False)
    subparsers = parser.add_subparsers(dest='command', required=True)
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common], help=COMMAND_HELP[command],
                              allow_abbrev=False)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments and run one command"""
    parser = build_parser()
    args = parser.parse_args(_normalize_argv(sys.argv[1:] if argv is None else argv))

    run_config = RunConfig(
        command=args.command,
        alpha_range=args.alpha,
        nu=args.nu,
        l_max=args.lmax,
        n_max=args.nmax,
        q_max=args.qmax,
        eta_star=args.eta,
        xi=args.xi,
        zeta=args.zeta,
        zeta_prime=args.zetap,
        mu_star=args.mustar,
        n_star=args.nstar,
        np_star=args.npstar,
        N=args.N,
        N_max=args.Nmax,
        r_points=args.r,
        method=args.method,
        basis=args.basis,
        precision_bits=args.precision,
        output_path=args.output,
        format=args.format,
        tol=args.tol,
        workers=args.workers,
        seed=args.seed,
    )
    return run(run_config)


if __name__ == "__main__":
    sys.exit(main())
