# Copy to config.py and edit. Every key is optional.

# DEBUG
DEBUG = False
LOG_FILE = ""  # e.g. "vknot.log", rotated at 5 MB

# SEARCH
MAX_CANONICAL_COMPONENTS = 10  # warn above this many components in canonical searches

# MOVES
WALK_FAMILIES = "R1insert, R1delete, R2insert, R2delete, R3"

# API
API_HOST = "127.0.0.1"
API_PORT = 8001
CORS_ORIGINS = "*"
