from .app_config import ABMINK_TOL, MAX_WORKERS
from .logging_config import LOGGING_CONFIG
from .scenario_config import SCENARIO_CONFIGS, SCENARIO_NAMES

__all__ = ['ABMINK_TOL', 'MAX_WORKERS', 'LOGGING_CONFIG', 'SCENARIO_CONFIGS', 'SCENARIO_NAMES']
