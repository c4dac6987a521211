"""Column subset selection with certified spectral lower bounds."""

from ._core import (
    InfeasibleScheduleError,
    RinvError,
    brute_force_best,
    generate,
    lemma_margins,
    riesz_lower_bound,
    select,
)

__all__ = [
    "InfeasibleScheduleError",
    "RinvError",
    "brute_force_best",
    "generate",
    "lemma_margins",
    "riesz_lower_bound",
    "select",
]
