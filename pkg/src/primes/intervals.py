"""
Prime Intervals Module

Primes in the half-open interval (m/2, m]: Bertrand's postulate guarantees
one for every m >= 2, and from m = 11 on there are always at least two. The
second prime is what lets the Chern-class argument avoid a prime dividing m+1.
"""

import bisect
import logging
import threading
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from sympy import isprime
from sympy.ntheory.generate import Sieve

LOGGER = logging.getLogger(__name__)

DEFAULT_PRIME_CAP = 1_000_000
RAMANUJAN_SECOND = 11


class NoAdmissiblePrimeError(ValueError):
    """Raised when (m/2, m] has no odd prime avoiding m+1."""


class Justification(str, Enum):
    BERTRAND = "bertrand"
    SECOND_PRIME = "second_prime"


@dataclass(frozen=True)
class PrimeChoice:
    """
    The prime used for the mod-p argument on BU(m).

    Attributes:
        m: Rank of BU(m).
        p: Chosen odd prime, m/2 < p <= m, p not dividing m+1.
        k: m/2 for even m, (m+1)/2 for odd m.
        justification: Always 'bertrand': the largest odd prime never divides
            m+1, so second_prime is never produced.
        candidates: Odd primes in (m/2, m].
        rejected: Candidates dividing m+1.
    """
    m: int
    p: int
    k: int
    justification: Justification
    candidates: Tuple[int, ...]
    rejected: Tuple[int, ...]

    @property
    def alternates(self) -> Tuple[int, ...]:
        return tuple(q for q in self.candidates if q != self.p and q not in self.rejected)


# ---------------------------------------------------------------------- #
#  Shared sieve                                                            #
# ---------------------------------------------------------------------- #

_SIEVE_LOCK = threading.Lock()
_SIEVE = None
_SIEVE_LIMIT = 0


def _shared_sieve(n: int, cap: int = DEFAULT_PRIME_CAP) -> Sieve:
    """The shared sieve, initialized once up to cap; n is the largest value queried."""
    global _SIEVE, _SIEVE_LIMIT
    if n > cap:
        raise ValueError(f"{n} exceeds the prime cap {cap}; raise --prime-cap")
    with _SIEVE_LOCK:
        if _SIEVE is None or _SIEVE_LIMIT < cap:
            sieve = Sieve()
            sieve.extend(cap)
            _SIEVE, _SIEVE_LIMIT = sieve, cap
            LOGGER.debug("prime sieve initialized up to %d", cap)
        return _SIEVE


def _primes_upto(n: int, cap: int = DEFAULT_PRIME_CAP) -> List[int]:
    return list(_shared_sieve(n, cap).primerange(2, n + 1))


def trial_division_primes(lo: int, hi: int) -> List[int]:
    """Naive oracle: primes q with lo < q <= hi."""
    found = []
    for q in range(max(lo + 1, 2), hi + 1):
        d = 2
        while d * d <= q:
            if q % d == 0:
                break
            d += 1
        else:
            found.append(q)
    return found


# ---------------------------------------------------------------------- #
#  Operations                                                              #
# ---------------------------------------------------------------------- #

def primes_in_interval(m: int, cap: int = DEFAULT_PRIME_CAP) -> List[int]:
    """Sorted primes q with m/2 < q <= m."""
    if m < 2:
        raise ValueError(f"primes_in_interval needs m >= 2, got {m}")
    return list(_shared_sieve(m, cap).primerange(m // 2 + 1, m + 1))


def count_primes_in_interval(m: int, cap: int = DEFAULT_PRIME_CAP) -> int:
    return len(primes_in_interval(m, cap))


def choose_p(m: int, cap: int = DEFAULT_PRIME_CAP) -> PrimeChoice:
    """The largest odd prime in (m/2, m] that does not divide m+1."""
    if m < 3:
        raise ValueError(f"choose_p needs m >= 3, got {m}")
    candidates = tuple(q for q in primes_in_interval(m, cap) if q % 2 == 1)
    rejected = tuple(q for q in candidates if (m + 1) % q == 0)
    admissible = [q for q in candidates if q not in rejected]
    if not admissible:
        raise NoAdmissiblePrimeError(f"No odd prime in ({m}/2, {m}] avoids {m + 1}")
    p = max(admissible)
    # q | m+1 forces m+1 = 2q, and Bertrand then puts a larger prime in (q, m].
    assert p == max(candidates)
    justification = Justification.BERTRAND
    k = m // 2 if m % 2 == 0 else (m + 1) // 2
    assert isprime(p) and 2 * p > m and (m + 1) % p
    return PrimeChoice(m, p, k, justification, candidates, rejected)


def verify_r2(limit: int, cap: int = DEFAULT_PRIME_CAP) -> bool:
    """True iff every m with 11 <= m <= limit has two primes in (m/2, m]."""
    if limit < RAMANUJAN_SECOND:
        raise ValueError(f"verify_r2 needs limit >= {RAMANUJAN_SECOND}, got {limit}")
    primes = _primes_upto(limit, cap)
    for m in range(RAMANUJAN_SECOND, limit + 1):
        count = bisect.bisect_right(primes, m) - bisect.bisect_right(primes, m // 2)
        if count < 2:
            LOGGER.info("m = %d has only %d prime(s) in (m/2, m]", m, count)
            return False
    return True
