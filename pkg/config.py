"""
Demazure Multiplicity Toolkit Configuration Module
Centralizes all configuration settings for the library, the CLI and the sweeps
"""
import os
import pytz
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Worker Configuration
MAX_WORKERS = int(os.getenv('DEMAZURE_MULT_THREADS', os.cpu_count() or 1))

# Timezone Configuration (report headers only)
TIMEZONE = pytz.timezone(os.getenv('DEMAZURE_MULT_TIMEZONE', 'UTC'))

# Partition Counting Configuration
PARTITION_CONFIG = {
    'enumeration_cap': int(os.getenv('DEMAZURE_MULT_ENUM_CAP', 60)),
    'table_min_capacity': 64,  # smallest lazily grown rho_k table
}

# Stabilized Limit Configuration
STABILIZATION_CONFIG = {
    'extra_checks': 3,  # beta is evaluated at threshold..threshold+3
}

# Character Oracle Configuration
ORACLE_CONFIG = {
    'max_depth': 40,  # refuse truncations deeper than this
}

# CLI Defaults
# Note: small bounds so a default run finishes in seconds
CLI_DEFAULTS = {
    's_max': 10,
    'depth': 8,
    'order': 30,
    'lambda_max': None,  # derived from s when not given
    'format': 'text',
    'method': 'closed-form',
}

# Verification Sweep Defaults
VERIFY_DEFAULTS = {
    'orbit_k_max': 50,
    'orbit_levels': (1, 2, 3),
    'flags_mu_max': 24,
    'flags_b_max': 15,
    'flags_r_max': 60,
    'oracle_depth': 10,
}

OUTPUT_FORMATS = ('json', 'csv', 'text')
METHODS = ('closed-form', 'limit', 'oracle')
VERIFY_TARGETS = (
    'partrel', 'bformula', 'triple', 'orbit',
    'assembly', 'transfer', 'flags', 'oracle', 'all',
)

# Logging Configuration
LOGGING_CONFIG = {
    'level': os.getenv('DEMAZURE_MULT_LOG_LEVEL', 'WARNING'),
    'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    'datefmt': '%Y-%m-%d %H:%M:%S'
}
