"""
Configuration settings for the Laguerre-type polynomial toolkit
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables (ambient settings only, never numerical defaults)
load_dotenv()

# Base paths
BASE_DIR = Path(__file__).resolve().parent
DATA_DIR = BASE_DIR / "data"
LOGS_DIR = BASE_DIR / "logs"
EXPORTS_DIR = Path(os.getenv("EXPORTS_DIR", DATA_DIR / "exports"))

# Create directories if they don't exist
for dir_path in [DATA_DIR, LOGS_DIR, EXPORTS_DIR]:
    dir_path.mkdir(parents=True, exist_ok=True)

# Precision settings (explicit flags only: no environment override)
DEFAULT_PRECISION_BITS = 256
MIN_PRECISION_BITS = 64
GUARD_BITS = 32
ULP_TOLERANCE = 8

# Quantum-number sweeps used by the batch commands
ALPHA_RANGE = (-2, 2)
DEFAULT_L_MAX = 3
DEFAULT_N_MAX = 10
DEFAULT_Q_MAX = 14
POTENTIAL_POINTS_PER_INDEX = 20
POTENTIAL_X_RANGE = ("0.05", "12")
RANDOM_SEED = 20240611

# Convergence experiment (Coulomb: xi = 0, Yukawa: xi = 5.1)
BENCHMARK_ZETA = "3.56"
BENCHMARK_ZETA_PRIME = "4.65"
BENCHMARK_XI_VALUES = ("0", "5.1")
BENCHMARK_N_STAR = "2.3"
BENCHMARK_NP_STAR = "4.6"
BENCHMARK_MU_STAR = "1.1"
BENCHMARK_NU = 0
BENCHMARK_N_MAX = 40
CONVERGENCE_TOLERANCE = 1e-3

# Expansion experiment
DEFAULT_ETA_STAR = "0.5"
DEFAULT_R_POINTS = "0.1,0.5,1,2,5"
DEFAULT_EXPANSION_ORDER = 40

# Export Settings
EXPORT_FORMATS = ["csv", "json"]
DEFAULT_EXPORT_FORMAT = "csv"

# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level} | {name}:{function} | {message}"
LOG_FILE = LOGS_DIR / "laguerre.log"
