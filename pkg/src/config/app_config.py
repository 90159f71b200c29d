import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

PROJECT_ROOT = Path(__file__).parent.parent.parent


def _positive_float(env_var: str, default: str) -> float:
    """Read a strictly positive float from the environment"""
    raw = os.getenv(env_var, default)
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"{env_var} must be a number, got {raw!r}")
    if not value > 0:
        raise ValueError(f"{env_var} must be strictly positive, got {value}")
    return value


def _optional_int(env_var: str) -> Optional[int]:
    raw = os.getenv(env_var, '').strip()
    if not raw:
        return None
    if not raw.isdigit() or int(raw) < 1:
        raise ValueError(f"{env_var} must be a positive integer, got {raw!r}")
    return int(raw)


# Relative tolerance of the cross-checks (three-way mirror agreement, `abmink check`)
ABMINK_TOL = _positive_float('ABMINK_TOL', '1e-6')

LOG_LEVEL = os.getenv('ABMINK_LOG_LEVEL', 'WARNING').upper()
LOG_DIR = Path(os.getenv('ABMINK_LOG_DIR', str(PROJECT_ROOT / 'logs')))

# None lets the executor pick its own pool size
MAX_WORKERS = _optional_int('ABMINK_MAX_WORKERS')
