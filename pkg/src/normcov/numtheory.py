"""Exact elementary number theory.

Everything here works on plain Python integers and is exact: factorization
by trial division (with a deterministic Miller-Rabin fallback for large
cofactors), Euler's totient, the distinct-prime counter, prime-power
detection, and the solver for representations n = (q^d - 1)/(q - 1) with q
a prime power and d >= 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .errors import DomainError

_TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class Factorization:
    """A positive integer together with its prime factorization.

    ``factors`` lists (prime, exponent) pairs with strictly increasing
    primes and all exponents >= 1; the product of the prime powers is ``n``.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, a in self.factors:
            if p <= last or a < 1:
                raise DomainError(f"malformed factorization of {self.n}")
            prod *= p**a
            last = p
        if prod != self.n:
            raise DomainError(f"factors do not multiply to {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


class QRep(NamedTuple):
    """A representation n = (q**d - 1)//(q - 1) with q a prime power, d >= 2."""

    q: int
    d: int

    def degree(self) -> int:
        return (self.q**self.d - 1) // (self.q - 1)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witnesses)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Return the prime factorization of n >= 2."""
    if n < 2:
        raise DomainError(f"factorize needs n >= 2, got {n}")
    m = n
    factors = []
    for a in (2,):
        e = 0
        while m % a == 0:
            m //= a
            e += 1
        if e:
            factors.append((a, e))
    p = 3
    while p * p <= m and p <= _TRIAL_LIMIT:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 2
    if m > 1:
        if m <= _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(m):
            factors.append((m, 1))
        else:
            # Degrees in scope never reach this; fail loudly rather than
            # returning a wrong factorization.
            raise DomainError(f"cannot factorize large non-prime cofactor {m}")
    return Factorization(n, tuple(factors))


def euler_phi(n: int) -> int:
    """Euler's totient, via the factorization product formula."""
    if n < 1:
        raise DomainError(f"euler_phi needs n >= 1, got {n}")
    if n == 1:
        return 1
    phi = n
    for p, _ in factorize(n).factors:
        phi -= phi // p
    return phi


def omega(n: int) -> int:
    """Number of distinct prime divisors of n >= 2."""
    if n < 2:
        raise DomainError(f"omega needs n >= 2, got {n}")
    return len(factorize(n).factors)


def prime_power(n: int) -> Optional[tuple[int, int]]:
    """Return (p, a) if n == p**a for a prime p, else None."""
    if n < 2:
        raise DomainError(f"prime_power needs n >= 2, got {n}")
    factors = factorize(n).factors
    if len(factors) == 1:
        return factors[0]
    return None


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise DomainError(f"divisors needs n >= 1, got {n}")
    if n == 1:
        return (1,)
    divs = [1]
    for p, a in factorize(n).factors:
        divs = [d * p**e for d in divs for e in range(a + 1)]
    return tuple(sorted(divs))


def _repunit(q: int, d: int) -> int:
    return (q**d - 1) // (q - 1)


def q_set(n: int) -> set[QRep]:
    """All representations n = (q**d - 1)/(q - 1), q a prime power, d >= 2.

    For each candidate d the unique real solution q is located by binary
    search (the repunit sum is strictly increasing in q), then tested for
    being an integer prime power.
    """
    if n < 3:
        raise DomainError(f"q_set needs n >= 3, got {n}")
    reps = set()
    d = 2
    while 2**d - 1 <= n:
        if d == 2:
            q = n - 1
        else:
            lo, hi = 2, n - 1
            q = 0
            while lo <= hi:
                mid = (lo + hi) // 2
                val = _repunit(mid, d)
                if val == n:
                    q = mid
                    break
                if val < n:
                    lo = mid + 1
                else:
                    hi = mid - 1
            if q == 0:
                d += 1
                continue
        if q >= 2 and prime_power(q) is not None:
            reps.add(QRep(q, d))
        d += 1
    return reps


def smallest_prime_factor_sieve(limit: int) -> list[int]:
    """spf[i] = smallest prime factor of i, for 0 <= i <= limit."""
    spf = list(range(limit + 1))
    for i in range(2, int(limit**0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def distinct_primes_from_spf(n: int, spf: list[int]) -> tuple[int, ...]:
    """Distinct prime divisors of n using a precomputed sieve."""
    primes = []
    while n > 1:
        p = spf[n]
        primes.append(p)
        while n % p == 0:
            n //= p
    return tuple(primes)


def primes_from(start: int, count: int) -> list[int]:
    """The first ``count`` primes >= start, ascending."""
    import sympy

    out = []
    p = start if is_prime(start) else int(sympy.nextprime(start))
    while len(out) < count:
        out.append(p)
        p = int(sympy.nextprime(p))
    return out
