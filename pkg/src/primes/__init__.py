"""
Primes package: Bertrand-interval utilities.
"""

from .intervals import (
    DEFAULT_PRIME_CAP,
    Justification,
    NoAdmissiblePrimeError,
    PrimeChoice,
    choose_p,
    count_primes_in_interval,
    primes_in_interval,
    trial_division_primes,
    verify_r2,
)

__all__ = [
    "DEFAULT_PRIME_CAP",
    "Justification",
    "NoAdmissiblePrimeError",
    "PrimeChoice",
    "choose_p",
    "count_primes_in_interval",
    "primes_in_interval",
    "trial_division_primes",
    "verify_r2",
]
