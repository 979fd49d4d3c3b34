"""Thin loop toolkit constants, for better testability."""

from typing import Final

# Exhaustive reduction search is exponential in the word length.
MAX_ORACLE_LEN: Final[int] = 10

# Default bound on the denominator of random barycentric coordinates.
DEFAULT_DENOM_BOUND: Final[int] = 4

# Relative tolerance for comparing breakpoint gaps against chord ratios.
UNIFORM_REL_TOL: Final[float] = 1e-12
SPEED_REL_TOL: Final[float] = 1e-6

# splitmix64, as published by Steele, Lea and Flood; state and outputs are 64-bit.
SPLITMIX_GAMMA: Final[int] = 0x9E3779B97F4A7C15
SPLITMIX_MUL1: Final[int] = 0xBF58476D1CE4E5B9
SPLITMIX_MUL2: Final[int] = 0x94D049BB133111EB
MASK64: Final[int] = (1 << 64) - 1

EXIT_OK: Final[int] = 0
EXIT_DOMAIN_ERROR: Final[int] = 1
EXIT_USAGE_ERROR: Final[int] = 2

LOG_LEVELS: Final[tuple[str, ...]] = ("DEBUG", "INFO", "WARNING", "ERROR")
DEFAULT_LOG_LEVEL: Final[str] = "WARNING"

# Bound on memoized carrier lookups, shared by all complexes.
LOCATE_CACHE_SIZE: Final[int] = 4096
