"""
Test suite for the batch commands and the command-line front end
"""
import json
import pytest
import sys
import os
from unittest.mock import patch

import pandas as pd

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from main import _normalize_argv, main
from src.laguerre.polynomial import RadicalMismatchError
from src.runner.run_config import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, RunConfig
from src.runner.runner import run

UNIT_INTEGRAL = dict(n_star="1", np_star="1", zeta="1", zeta_prime="1", mu_star="1", xi="0")


def read_report(path):
    return pd.read_csv(path, dtype=str, keep_default_na=False)


class TestRunConfig:
    """Test configuration validation"""

    def test_defaults_are_valid(self):
        """Test the default configuration of every command"""
        for command in ("ortho", "checks", "expand", "integral", "converge"):
            RunConfig(command).validate()
        assert RunConfig("ortho").alphas == [-2, -1, 0, 1, 2]

    @pytest.mark.parametrize("overrides,message", [
        (dict(command="bogus"), "unknown command"),
        (dict(precision_bits=32), "at least 64"),
        (dict(alpha_range=(3, 3)), "alpha <= 2"),
        (dict(format="xlsx"), "unknown format"),
        (dict(n_max=0), "n_max must be positive"),
        (dict(xi="abc"), "not a decimal"),
        (dict(r_points=","), "empty list"),
        (dict(command="integral", method="ltp-arranged"), "needs a single alpha"),
    ])
    def test_invalid(self, overrides, message):
        """Test rejected settings"""
        settings = dict(command="ortho")
        settings.update(overrides)
        with pytest.raises(ValueError, match=message):
            RunConfig(**settings).validate()

    def test_report_path(self, tmp_path):
        """Test default and explicit report paths"""
        assert RunConfig("expand", format="json").report_path().name == "expand.json"
        assert RunConfig("ortho", output_path=str(tmp_path / "o.csv")).report_path() == tmp_path / "o.csv"


class TestCommands:
    """Test the batch commands end to end"""

    def test_ortho(self, tmp_path, capsys):
        """Test exact orthonormality matrices"""
        output = tmp_path / "ortho.csv"
        code = run(RunConfig("ortho", alpha_range=(0, 1), l_max=1, n_max=4, output_path=str(output)))
        assert code == EXIT_OK
        df = read_report(output)
        assert len(df) == 2 * 2 * 16
        diagonal = df[df["n"] == df["n_prime"]]
        assert set(diagonal["value"]) == {"1"}
        assert "0 nonzero deviations" in capsys.readouterr().out

    def test_checks(self, tmp_path):
        """Test identities, differential equations and potentials"""
        output = tmp_path / "checks.csv"
        code = run(RunConfig("checks", alpha_range=(0, 1), n_max=3, q_max=4, zeta="1",
                             output_path=str(output)))
        assert code == EXIT_OK
        df = read_report(output)
        assert set(df["status"]) == {"pass"}
        assert len(df[df["check"] == "potential"]) == 2 * 6 * 20

    def test_expand(self, tmp_path):
        """Test partial sums in JSON"""
        output = tmp_path / "expand.json"
        code = run(RunConfig("expand", alpha_range=(-1, 0), N=6, r_points="0.5,2", format="json",
                             output_path=str(output)))
        assert code == EXIT_OK
        rows = json.loads(output.read_text(encoding="utf-8"))
        assert len(rows) == 12
        assert {row["basis"] for row in rows} == {"ltp", "glp"}

    def test_integral_analytic(self, tmp_path, capsys):
        """Test the closed form of a normalized density"""
        output = tmp_path / "integral.csv"
        code = run(RunConfig("integral", method="analytic", output_path=str(output), **UNIT_INTEGRAL))
        assert code == EXIT_OK
        df = read_report(output)
        assert abs(float(df.iloc[0]["value"]) - 1) < 1e-60
        assert capsys.readouterr().out.startswith("analytic: ")

    def test_integral_series(self, tmp_path):
        """Test a single-term GLP series"""
        output = tmp_path / "series.csv"
        code = run(RunConfig("integral", method="glp-arranged", N=0, output_path=str(output),
                             **UNIT_INTEGRAL))
        assert code == EXIT_OK
        row = read_report(output).iloc[0]
        assert row["N"] == "0"
        assert row["alpha"] == ""
        assert abs(float(row["value"]) - 1) < 1e-60

    def test_converge_passes_for_terminating_series(self, tmp_path):
        """Test an integer potential exponent, captured exactly at every order"""
        output = tmp_path / "converge.csv"
        code = run(RunConfig("converge", alpha_range=(0, 0), mu_star="3", N_max=3,
                             output_path=str(output)))
        assert code == EXIT_OK
        df = read_report(output)
        assert list(df["method"].unique()) == ["ltp-arranged", "ltp-rearranged",
                                               "glp-arranged", "glp-rearranged"]
        assert len(df) == 12

    def test_converge_tolerance_failure(self, tmp_path, capsys):
        """Test exit status 1 when N_max misses the tolerance"""
        code = run(RunConfig("converge", basis="glp", N_max=2, tol=1e-30,
                             output_path=str(tmp_path / "converge.csv")))
        assert code == EXIT_CHECK_FAILED
        assert "FAILED: glp-arranged" in capsys.readouterr().out

    def test_usage_errors(self, tmp_path):
        """Test exit status 2"""
        assert run(RunConfig("bogus")) == EXIT_USAGE
        assert run(RunConfig("integral", xi="-1", output_path=str(tmp_path / "i.csv"))) == EXIT_USAGE
        assert run(RunConfig("expand", eta_star="1", output_path=str(tmp_path / "e.csv"))) == EXIT_USAGE

    def test_unexpected_errors_propagate(self, tmp_path):
        """Test that non-usage errors are re-raised"""
        with patch.dict("src.runner.runner.DRIVERS", {"ortho": lambda cfg, ctx: 1 / 0}):
            with pytest.raises(ZeroDivisionError):
                run(RunConfig("ortho", output_path=str(tmp_path / "o.csv")))

    def test_integral_ltp_single_alpha(self, tmp_path):
        """Test that an LTP integral reports the alpha it used"""
        output = tmp_path / "ltp.csv"
        code = run(RunConfig("integral", method="ltp-rearranged", alpha_range=(0, 0), N=4,
                             output_path=str(output), **UNIT_INTEGRAL))
        assert code == EXIT_OK
        row = read_report(output).iloc[0]
        assert (row["alpha"], row["N"]) == ("0", "4")

    def test_internal_arithmetic_errors_propagate(self, tmp_path):
        """Test that exact-arithmetic failures are not reported as usage errors"""
        def broken(cfg, ctx):
            raise RadicalMismatchError("cannot add sqrt(2) and sqrt(3) parts")

        with patch.dict("src.runner.runner.DRIVERS", {"ortho": broken}):
            with pytest.raises(RadicalMismatchError, match="sqrt"):
                run(RunConfig("ortho", output_path=str(tmp_path / "o.csv")))

    @pytest.mark.slow
    def test_screened_converge_misses_tolerance(self, tmp_path, capsys):
        """Test that the screened benchmark at N_max=40 exits with status 1"""
        output = tmp_path / "yukawa.csv"
        code = main(["converge", "--xi", "5.1", "--Nmax", "40", "--output", str(output)])
        assert code == EXIT_CHECK_FAILED
        assert "FAILED: " in capsys.readouterr().out
        df = read_report(output)
        assert len(df) == 6 * 2 * 40


class TestCommandLine:
    """Test argument parsing"""

    def test_normalize_argv(self):
        """Test joining of negative values"""
        assert _normalize_argv(["ortho", "--alpha", "-2:2"]) == ["ortho", "--alpha=-2:2"]
        assert _normalize_argv(["expand", "--xi", "-0.5", "--N", "3"]) == \
            ["expand", "--xi=-0.5", "--N", "3"]
        assert _normalize_argv(["ortho", "--alpha=-1", "--help"]) == ["ortho", "--alpha=-1", "--help"]

    def test_main(self, tmp_path):
        """Test a full command-line run"""
        output = tmp_path / "ortho.csv"
        code = main(["ortho", "--alpha", "-1:0", "--lmax", "0", "--nmax", "2",
                     "--output", str(output)])
        assert code == EXIT_OK
        assert len(read_report(output)) == 2 * 4

    def test_main_integral(self, tmp_path):
        """Test the integral command"""
        output = tmp_path / "integral.json"
        code = main(["integral", "--nstar", "1", "--npstar", "1", "--zeta", "1", "--zetap", "1",
                     "--mustar", "1", "--xi", "0", "--format", "json", "--output", str(output)])
        assert code == EXIT_OK
        assert json.loads(output.read_text(encoding="utf-8"))[0]["method"] == "analytic"

    @pytest.mark.parametrize("argv", [
        ["ortho", "--alpha", "x:y"],
        ["ortho", "--method", "simpson"],
        ["unknown"],
        [],
    ])
    def test_parser_errors(self, argv):
        """Test that malformed command lines exit with status 2"""
        with pytest.raises(SystemExit) as excinfo:
            main(argv)
        assert excinfo.value.code == EXIT_USAGE

    def test_usage_error_from_values(self, tmp_path):
        """Test that invalid values exit with status 2"""
        assert main(["ortho", "--precision", "16", "--output", str(tmp_path / "o.csv")]) == EXIT_USAGE
