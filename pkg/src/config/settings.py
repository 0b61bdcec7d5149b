"""
Supposer — Settings
Environment config, enumeration bounds, generator defaults and audit sizes.
"""

import os
from fractions import Fraction

from dotenv import load_dotenv

load_dotenv()

# ──────────────────────────────────────────────
# Logging
# ──────────────────────────────────────────────
LOG_LEVEL = os.getenv("SUPPOSER_LOG_LEVEL", "WARNING")

# ──────────────────────────────────────────────
# Enumeration Bounds
# ──────────────────────────────────────────────
# Both are exponential in the number of worlds.
TABLE_MAX_WORLDS = int(os.getenv("SUPPOSER_TABLE_MAX_WORLDS", "8"))            # 4^n table entries
BRUTEFORCE_MAX_WORLDS = int(os.getenv("SUPPOSER_BRUTEFORCE_MAX_WORLDS", "10"))  # strong-superiority oracle

# ──────────────────────────────────────────────
# Fixtures
# ──────────────────────────────────────────────
COIN_DEPTH = int(os.getenv("SUPPOSER_COIN_DEPTH", "16"))    # coin fixture truncation depth

# ──────────────────────────────────────────────
# Random Model Generation
# ──────────────────────────────────────────────
GEN_ATOM_LIMIT = 6                    # generated universes have at most 2^6 worlds
GEN_MAX_ATOMS = int(os.getenv("SUPPOSER_GEN_MAX_ATOMS", "4"))
GEN_MAX_RANKS = int(os.getenv("SUPPOSER_GEN_MAX_RANKS", "4"))
GEN_NON_ENTERTAINABLE = Fraction(os.getenv("SUPPOSER_GEN_NON_ENTERTAINABLE", "1/4"))
GEN_WEIGHT_BOUND = int(os.getenv("SUPPOSER_GEN_WEIGHT_BOUND", "16"))

# ──────────────────────────────────────────────
# Audit Sizes
# ──────────────────────────────────────────────
AUDIT_SEEDS = int(os.getenv("SUPPOSER_AUDIT_SEEDS", "100"))
AUDIT_POOL_SIZE = int(os.getenv("SUPPOSER_AUDIT_POOL_SIZE", "32"))
AUDIT_MAX_WORLDS = int(os.getenv("SUPPOSER_AUDIT_MAX_WORLDS", "3"))
EXHAUSTIVE_LIMIT = int(os.getenv("SUPPOSER_EXHAUSTIVE_LIMIT", "5"))        # all-propositions regime
FORMULA_POOL_SIZE = int(os.getenv("SUPPOSER_FORMULA_POOL_SIZE", "20"))
MAX_STORED_FAILURES = int(os.getenv("SUPPOSER_MAX_STORED_FAILURES", "50"))  # per axiom; counts stay exact
ORACLE_MAX_WORLDS = int(os.getenv("SUPPOSER_ORACLE_MAX_WORLDS", "8"))        # random audit runs the core oracle up to here
