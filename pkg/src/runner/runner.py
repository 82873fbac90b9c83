"""
Run one batch command: validate, compute, export, report the exit status
"""
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.exporters.csv_exporter import CSVExporter
from src.exporters.json_exporter import JSONExporter
from src.laguerre.polynomial import NonIntegrableError, RadicalMismatchError
from src.numerics.precision import PrecisionContext
from src.runner.commands import DRIVERS, CommandResult
from src.runner.run_config import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, RunConfig
from src.utils.logger import get_logger

logger = get_logger()


def _export(result: CommandResult, cfg: RunConfig, ctx: PrecisionContext):
    path = cfg.report_path()
    if cfg.format == "json":
        exporter = JSONExporter(path.parent)
        if result.convergence_rows is not None:
            return exporter.emit_json(result.convergence_rows, path.name, ctx)
        return exporter.export(result.rows, path.name)
    exporter = CSVExporter(path.parent)
    if result.convergence_rows is not None:
        return exporter.emit_csv(result.convergence_rows, path.name, ctx)
    return exporter.export(result.rows, path.name, result.columns)


def run(cfg: RunConfig) -> int:
    """
    Execute one command

    Args:
        cfg (RunConfig): Command and parameters

    Returns:
        int: 0 if every executed check passed, 1 on a failed check, 2 on a usage error
    """
    try:
        cfg.validate()
    except ValueError as e:
        logger.error(f"Invalid configuration: {str(e)}")
        return EXIT_USAGE

    ctx = PrecisionContext(cfg.precision_bits)
    logger.info("=" * 50)
    logger.info(f"Running {cfg.command} at {ctx.mantissa_bits} bits")
    logger.info("=" * 50)

    try:
        result = DRIVERS[cfg.command](cfg, ctx)
    except (RadicalMismatchError, NonIntegrableError) as e:
        logger.error(f"Internal arithmetic error in {cfg.command}: {str(e)}")
        raise
    except ValueError as e:
        logger.error(f"Invalid parameters for {cfg.command}: {str(e)}")
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"An error occurred: {str(e)}")
        raise

    path = _export(result, cfg, ctx)
    for line in result.summary:
        print(line)

    if result.failures:
        logger.warning(f"{len(result.failures)} check(s) failed, first: {result.failures[0]}")
        print(f"FAILED: {result.failures[0]}")
        return EXIT_CHECK_FAILED

    logger.info(f"{cfg.command} completed, report: {path}")
    return EXIT_OK
