# Sorting library configuration
# Values here are the defaults; a .env file or QMSORT_* environment
# variables override them (see load_settings)

import os
from dataclasses import dataclass

from dotenv import load_dotenv

# Pivot selection
THETA = '11/5'            # undersampling factor, a multiple of 1/30
DELTA = '1/16'            # hybrid escalates outside [delta n, (1 - delta) n]

# Base cases
TIMING_CUTOFF = 42        # insertion sort below this size when timing
COUNTING_CUTOFF = 1       # Mergesort down to single elements when counting

# Benchmark Settings
DEFAULT_SEEDS = 10
DEFAULT_MIN_BYTES = 16 * 1024 * 1024   # data sorted per size before moving on
ELEMENT_BYTES = 8                      # nominal size of one key
SAVE_TO_FILE = True
OUTPUT_DIRECTORY = 'bench_data'
JOBS = 1                               # worker processes for counting runs


@dataclass(frozen=True)
class Settings:
    theta: str = THETA
    delta: str = DELTA
    timing_cutoff: int = TIMING_CUTOFF
    counting_cutoff: int = COUNTING_CUTOFF
    default_seeds: int = DEFAULT_SEEDS
    default_min_bytes: int = DEFAULT_MIN_BYTES
    element_bytes: int = ELEMENT_BYTES
    save_to_file: bool = SAVE_TO_FILE
    output_directory: str = OUTPUT_DIRECTORY
    jobs: int = JOBS


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value == '':
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got '{value}'")


def _env_bool(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None or value == '':
        return default
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


def load_settings(env_file: str = None) -> Settings:
    """Read overrides from env_file (or a .env found upward) and QMSORT_* variables."""
    if env_file:
        load_dotenv(env_file)
    else:
        load_dotenv()
    return Settings(
        theta=os.getenv('QMSORT_THETA') or THETA,
        delta=os.getenv('QMSORT_DELTA') or DELTA,
        timing_cutoff=_env_int('QMSORT_TIMING_CUTOFF', TIMING_CUTOFF),
        counting_cutoff=_env_int('QMSORT_COUNTING_CUTOFF', COUNTING_CUTOFF),
        default_seeds=_env_int('QMSORT_SEEDS', DEFAULT_SEEDS),
        default_min_bytes=_env_int('QMSORT_MIN_BYTES', DEFAULT_MIN_BYTES),
        element_bytes=_env_int('QMSORT_ELEMENT_BYTES', ELEMENT_BYTES),
        save_to_file=_env_bool('QMSORT_SAVE_TO_FILE', SAVE_TO_FILE),
        output_directory=os.getenv('QMSORT_OUTPUT_DIRECTORY') or OUTPUT_DIRECTORY,
        jobs=_env_int('QMSORT_JOBS', JOBS),
    )
