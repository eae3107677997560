import logging
import resource
import sys
from pathlib import Path

# Configuration
PROJECT_ROOT = Path(__file__).parent.parent

# Stage scripts share one output folder, like a fixed build dir.
BUILD_DIR = PROJECT_ROOT / "build"
REPORT_PATH = BUILD_DIR / "report.txt"
RECORDS_PATH = BUILD_DIR / "records.txt"

# Published seed; re-running with it reproduces every report byte for byte.
DEFAULT_SEED = 20240611

# Exhaustive oracles
DEFAULT_DEGREE_BOUND = 3
ORACLE_DEGREE_CAP = 4
ORACLE_FIELD_CAP = 9
SEARCH_SPACE_CAP = 200_000
CACHE_SIZE = 4096

# Ideal arithmetic
DEFAULT_WINDOW = 8
MAX_WINDOW = 64
QUOTIENT_CAP = 4096

# Factorization support
RATIONAL_FACTOR_DEGREE_CAP = 8
NUMBER_FIELD_DEGREE_CAP = 6

# Claim sampling
BEZOUT_SAMPLES = 50
BEZOUT_MAX_DEGREE = 3
EXACTNESS_SAMPLES = 40
INTEGER_SAMPLE_RANGE = range(-10, 11)

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

logger = logging.getLogger("composites")


def configure_logging(level=logging.INFO):
    logging.basicConfig(level=level, format=LOG_FORMAT)


def log_resource_usage(stage_name, operations=()):
    """Peak memory and CPU time of the stage, with the cache counters of the operations it ran."""
    usage = resource.getrusage(resource.RUSAGE_SELF)
    max_rss_mb = usage.ru_maxrss / 1024
    if sys.platform == "darwin":
        max_rss_mb /= 1024
    cpu = usage.ru_utime + usage.ru_stime
    names = ", ".join(op.__name__ for op in operations) or "-"
    logger.info(f"[{stage_name}] {names}: max memory {max_rss_mb:.2f} MB, cpu {cpu:.2f} s")
    for op in operations:
        if hasattr(op, "cache_info"):
            info = op.cache_info()
            logger.info(f"[{stage_name}] {op.__name__} cache: hits={info.hits} misses={info.misses} size={info.currsize}")
