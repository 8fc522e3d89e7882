"""Enumeration and exact counting of partitions, coprime partitions and
partitions with clusters.

A partition is represented as a tuple of positive integers sorted
non-increasingly; this canonical form makes multiset equality plain tuple
equality, so sets of partitions behave as expected.  Closed-form counts are
evaluated in exact rational arithmetic and every formula has a brute-force
counterpart used by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .errors import DomainError
from .numtheory import factorize, euler_phi, prime_power

Partition = tuple[int, ...]


def canonical(terms) -> Partition:
    """Normalize a term sequence into the canonical non-increasing tuple."""
    out = tuple(sorted(terms, reverse=True))
    if not out or out[-1] < 1:
        raise DomainError(f"partition terms must be positive: {terms}")
    return out


def _accel_asc(n: int) -> Iterator[list[int]]:
    # Kelleher's accelerated ascending-composition generator.
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        l = k + 1
        while x <= y:
            a[k] = x
            a[l] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


def _parts_exact_k(n: int, k: int, maxpart: int) -> Iterator[Partition]:
    if k == 1:
        if 1 <= n <= maxpart:
            yield (n,)
        return
    lo = -(-n // k)  # ceil(n / k): the largest part is at least the average
    for first in range(min(maxpart, n - k + 1), lo - 1, -1):
        for rest in _parts_exact_k(n - first, k - 1, first):
            yield (first,) + rest


def enumerate_partitions(n: int, k: Optional[int] = None) -> Iterator[Partition]:
    """Yield each partition of n exactly once, canonical form.

    With ``k`` given, only partitions into exactly k parts are produced
    (empty stream for k > n).
    """
    if n < 1:
        raise DomainError(f"enumerate_partitions needs n >= 1, got {n}")
    if k is None:
        for asc in _accel_asc(n):
            yield tuple(reversed(asc))
        return
    if k < 1:
        raise DomainError(f"part count must be >= 1, got {k}")
    yield from _parts_exact_k(n, k, n)


@lru_cache(maxsize=None)
def _p_exact(n: int, k: int) -> int:
    # Standard two-variable recurrence for the number of k-partitions of n.
    if k == 0:
        return 1 if n == 0 else 0
    if n < k:
        return 0
    return _p_exact(n - 1, k - 1) + _p_exact(n - k, k)


def count_partitions(n: int, k: int) -> int:
    """p_k(n): the number of partitions of n into exactly k parts.

    k = 2 and k = 3 use the classical closed forms; other k fall back to the
    recurrence.
    """
    if n < 1 or k < 1:
        raise DomainError(f"count_partitions needs n, k >= 1, got ({n}, {k})")
    if k > n:
        return 0
    if k == 1 or k == n:
        return 1
    if k == 2:
        return n // 2
    if k == 3:
        eps = Fraction(1, 3) if n % 3 == 0 else Fraction(0)
        val = Fraction((n - 1) * (n - 2), 12) + Fraction((n - 1) // 2, 2) + eps
        if val.denominator != 1:
            raise AssertionError(f"3-partition closed form not integral at n={n}")
        return int(val)
    return _p_exact(n, k)


@lru_cache(maxsize=None)
def count_all_partitions(n: int) -> int:
    """p(n), by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if j % 2 == 1 else -1
        if g1 <= n:
            total += sign * count_all_partitions(n - g1)
        if g2 <= n:
            total += sign * count_all_partitions(n - g2)
        j += 1
    return total


def count_coprime(n: int, k: int) -> int:
    """Number of k-partitions of n whose terms have gcd 1.

    k = 2 uses ceil(phi(n)/2); k = 3 (n >= 4) uses the exact rational product
    n^2/12 * prod_{p | n} (1 - 1/p^2); everything else is counted by
    filtered enumeration.
    """
    if n < 1 or k < 1:
        raise DomainError(f"count_coprime needs n, k >= 1, got ({n}, {k})")
    if k > n:
        return 0
    if k == 2 and n >= 2:
        return (euler_phi(n) + 1) // 2
    if k == 3 and n >= 4:
        val = Fraction(n * n, 12)
        for p, _ in factorize(n).factors:
            val *= Fraction(p * p - 1, p * p)
        if val.denominator != 1:
            raise AssertionError(f"coprime 3-partition count not integral at n={n}")
        return int(val)
    return sum(1 for p in enumerate_partitions(n, k) if math.gcd(*p, 0) == 1)


def subset_sum_mask(terms) -> int:
    """Bitmask of all sub-multiset sums of ``terms`` (bit 0 set for the
    empty sum)."""
    mask = 1
    for t in terms:
        mask |= mask << t
    return mask


def has_cluster(p: Partition, x: int) -> bool:
    """True iff some nonempty sub-multiset of the terms of p sums to x."""
    n = sum(p)
    if not 1 <= x <= n - 1:
        raise DomainError(f"cluster size must lie in [1, {n - 1}], got {x}")
    return bool(subset_sum_mask(p) >> x & 1)


def count_cluster_partitions(n: int, x: int, k: int = 3) -> int:
    """p_k(n, x): the number of k-partitions of n having an x-cluster.

    For k = 3 the closed form is used (floor(n/4) exactly when n is even,
    n >= 4 and x = n/2); general k is counted by enumeration.
    """
    if n < 2:
        raise DomainError(f"count_cluster_partitions needs n >= 2, got {n}")
    if not 1 <= x <= n - 1:
        raise DomainError(f"cluster size must lie in [1, {n - 1}], got {x}")
    if k < 1:
        raise DomainError(f"part count must be >= 1, got {k}")
    if k == 1:
        return 0
    if k == 2:
        return 1
    if k == 3:
        if n >= 4 and n % 2 == 0 and x == n // 2:
            return n // 4
        return (n - x) // 2 + x // 2
    return sum(1 for p in enumerate_partitions(n, k) if subset_sum_mask(p) >> x & 1)


@dataclass(frozen=True)
class ClusterFamily:
    """A degree n together with cluster sizes 1 <= x_1 < ... < x_l < n/2."""

    n: int
    xs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"cluster family needs n >= 2, got {self.n}")
        xs = self.xs
        if list(xs) != sorted(set(xs)):
            raise DomainError(f"cluster sizes must be strictly increasing: {xs}")
        hi = -(-self.n // 2) - 1  # ceil(n/2) - 1, i.e. the largest x < n/2
        for x in xs:
            if not 1 <= x <= hi:
                raise DomainError(
                    f"cluster size {x} outside [1, {hi}] for n={self.n}"
                )


def cluster_partitions(n: int, x: int) -> set[Partition]:
    """The full set of 3-partitions of n with an x-cluster, by enumeration."""
    if not 1 <= x <= n - 1:
        raise DomainError(f"cluster size must lie in [1, {n - 1}], got {x}")
    found = set()
    for c in range(1, n // 3 + 1):
        for b in range(c, (n - c) // 2 + 1):
            a = n - b - c
            sums = {a, b, c, a + b, a + c, b + c}
            if x in sums:
                found.add((a, b, c))
    return found


def cluster_intersection(fam: ClusterFamily, verify: bool = False) -> set[Partition]:
    """The exact intersection of the 3-partition cluster sets of a family.

    One cluster size gives the whole set; two give a fixed pair; three give
    at most a singleton; four always give the empty set.  ``verify=True``
    additionally checks the closed form against enumeration.
    """
    n, xs = fam.n, fam.xs
    l = len(xs)
    if l == 0 or l > 4:
        raise DomainError(f"cluster_intersection supports 1 to 4 sizes, got {l}")
    if l == 1:
        result = cluster_partitions(n, xs[0])
    elif l == 2:
        x, y = xs
        result = {canonical((x, y, n - x - y)), canonical((x, y - x, n - y))}
    elif l == 3:
        x, y, z = xs
        if z in (x + y, n - x - y):
            result = {canonical((x, y, n - x - y))}
        else:
            result = set()
    else:
        result = set()
    if verify:
        brute = cluster_partitions(n, xs[0])
        for x in xs[1:]:
            brute &= cluster_partitions(n, x)
        if brute != result:
            raise AssertionError(
                f"cluster intersection mismatch at n={n}, xs={xs}: "
                f"closed form {sorted(result)} vs enumeration {sorted(brute)}"
            )
    return result


def union_cluster_count(fam: ClusterFamily) -> int:
    """|union of the 3-partition cluster sets|, by inclusion-exclusion.

    All 4-wise intersections vanish, every pairwise intersection has size 2
    and every 3-wise intersection has size at most 1, so the alternating sum
    terminates after the triple term and is exact.
    """
    n, xs = fam.n, fam.xs
    l = len(xs)
    if l == 0:
        return 0
    total = sum(count_cluster_partitions(n, x, 3) for x in xs)
    total -= 2 * (l * (l - 1) // 2)
    members = set(xs)
    triples = 0
    for i in range(l):
        xi = xs[i]
        for j in range(i + 1, l):
            xj = xs[j]
            s = xi + xj
            t = n - s
            if s in members and s > xj:
                triples += 1
            if t != s and t in members and t > xj:
                triples += 1
    return total + triples


def projective_triple(q: int, d1: int, d2: int) -> Partition:
    """The coprime 3-partition of (q**(d1+d2)-1)/(q-1) attached to a
    projective-space decomposition with coprime exponents."""
    if d1 < 1 or d2 < 1:
        raise DomainError(f"exponents must be >= 1, got ({d1}, {d2})")
    if math.gcd(d1, d2) != 1:
        raise DomainError(f"exponents must be coprime, got ({d1}, {d2})")
    if q < 2 or prime_power(q) is None:
        raise DomainError(f"q must be a prime power >= 2, got {q}")
    a = (q**d1 - 1) // (q - 1)
    b = (q**d2 - 1) // (q - 1)
    c = (q**d1 - 1) * (q**d2 - 1) // (q - 1)
    return canonical((a, b, c))
