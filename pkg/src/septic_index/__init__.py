"""Common index divisors of septic trinomial fields x^7 + ax + b.

Two independent classifiers are provided: a Newton-polygon splitting engine
(:mod:`septic_index.splitter`) and closed-form congruence conditions
(:mod:`septic_index.theorems`).
"""

__version__ = "0.1.0"

from .exact import Trinomial, normalize  # noqa: E402
from .splitter import engine_index_divisors, splitting_type  # noqa: E402
from .theorems import thm_2_divides, thm_3_divides  # noqa: E402

__all__ = [
    "__version__",
    "Trinomial",
    "normalize",
    "splitting_type",
    "engine_index_divisors",
    "thm_2_divides",
    "thm_3_divides",
]
