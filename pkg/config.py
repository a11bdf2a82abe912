import os
from dotenv import load_dotenv

basedir = os.path.abspath(os.path.dirname(__file__))
load_dotenv(os.path.join(basedir, '.env'))


def _flag(name, default):
    value = os.environ.get(name)
    if value is None:
        return default
    return value.strip().lower() not in ('0', 'false', 'no', 'off', '')


class Config:
    # Power iteration (adjacency, signless Laplacian, A_alpha)
    SOLVER_TOLERANCE = float(os.environ.get('SPECTRAL_TOLERANCE') or 1e-10)
    SOLVER_MAX_ITERATIONS = int(os.environ.get('SPECTRAL_MAX_ITERATIONS') or 200000)
    RAYLEIGH_RESTART_INTERVAL = int(os.environ.get('SPECTRAL_RESTART_INTERVAL') or 50)

    # p-spectral fixed-point solver
    P_RESTARTS = int(os.environ.get('SPECTRAL_P_RESTARTS') or 8)
    P_CONFIRM_RESTARTS = int(os.environ.get('SPECTRAL_P_CONFIRM_RESTARTS') or 32)
    P_MAX_ITERATIONS = int(os.environ.get('SPECTRAL_P_MAX_ITERATIONS') or 50000)
    P_TOLERANCE = float(os.environ.get('SPECTRAL_P_TOLERANCE') or 1e-10)

    # Comparison tolerances
    WITNESS_TOLERANCE = 1e-9
    NEAR_EXTREMAL_TOLERANCE = 1e-6
    S_TOLERANCE = 1e-9
    ROOT_TOLERANCE = 1e-12

    # Search harness
    RANDOM_SEED = int(os.environ.get('SPECTRAL_SEED') or 0)
    JOBS = int(os.environ.get('SPECTRAL_JOBS') or 1)
    SHARD_EDGES = int(os.environ.get('SPECTRAL_SHARD_EDGES') or 10)
    BATCH_SIZE = 4096
    MAX_ENUMERATION_N = 8
    MAX_CANONICAL_N = 10
    MAX_EXACT_CHARPOLY_N = 12

    # Output
    OUTPUT_FORMAT = os.environ.get('SPECTRAL_FORMAT') or 'text'
    SIGNIFICANT_DIGITS = 10

    # Logging and diagnostics
    LOG_LEVEL = os.environ.get('SPECTRAL_LOG_LEVEL') or 'WARNING'
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
    DEBUG_CHECKS = _flag('SPECTRAL_DEBUG', False)
    SHOW_PROGRESS = _flag('SPECTRAL_PROGRESS', True)
