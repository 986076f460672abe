"""
Configuration module for the Nichols workbench.
Loads environment variables and provides constants.
"""

import os
from dotenv import load_dotenv

# Load .env file if it exists
load_dotenv()

# Result cache directory (one JSON report per input hash)
NICHOLS_CACHE = os.getenv("NICHOLS_CACHE", ".nichols_cache")

# Run log database
NICHOLS_DB_PATH = os.getenv("NICHOLS_DB_PATH", "nichols_runs.sqlite")
NICHOLS_RUN_LOG = os.getenv("NICHOLS_RUN_LOG", "1") == "1"  # Set to 0 to skip recording CLI jobs

# Scan limits
DEFAULT_CAP = int(os.getenv("DEFAULT_CAP", "8"))
DEFAULT_BUDGET_SECS = float(os.getenv("DEFAULT_BUDGET_SECS", "600"))  # 10 minutes per job
MAX_NONZEROS = int(os.getenv("MAX_NONZEROS", "20000000"))  # Stored nonzero entries, per degree

# Rack isomorphism search (brute force above this size is refused)
RACK_SEARCH_LIMIT = int(os.getenv("RACK_SEARCH_LIMIT", "8"))

# verify --sweep sample
DEFAULT_SAMPLES = int(os.getenv("DEFAULT_SAMPLES", "20"))
SAMPLE_SEED = int(os.getenv("SAMPLE_SEED", "20240601"))

# Family tags accepted by classify / dims --family
FAMILY_TAGS = ["Vabe", "K", "N", "L", "I"]
