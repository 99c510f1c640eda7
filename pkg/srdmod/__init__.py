"""Stanley-Reisner rings of T-spaces: combinatorics, differential operators and holonomic checks"""

__version__ = "1.0.0"
