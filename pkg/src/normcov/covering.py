"""Subgroup-type model and coverage semantics for Sym(n) and Alt(n).

A conjugacy class of Sym(n) is a partition of n (the cycle type), so
coverage questions reduce to partition combinatorics: an intransitive
component covers the partitions with a matching cluster, an imprimitive
component covers the partitions whose terms admit a block grouping, the
alternating component covers the even types, and primitive components cover
only their catalogued coprime 3-partition types.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

from .errors import DomainError, EnumerationGuardError
from .numtheory import divisors, euler_phi, factorize, is_prime, omega, primes_from
from .partitions import (
    Partition,
    canonical,
    count_all_partitions,
    enumerate_partitions,
    subset_sum_mask,
)
from .tables import catalog_types

ENUMERATION_GUARD = 10**7


@dataclass(frozen=True)
class GroupKind:
    """Sym(n) or Alt(n), identified by family and degree."""

    family: str  # "sym" | "alt"
    n: int

    def __post_init__(self):
        if self.family not in ("sym", "alt"):
            raise DomainError(f"family must be 'sym' or 'alt', got {self.family!r}")
        if self.family == "sym" and self.n < 3:
            raise DomainError(f"Sym needs degree >= 3, got {self.n}")
        if self.family == "alt" and self.n < 4:
            raise DomainError(f"Alt needs degree >= 4, got {self.n}")

    @property
    def kind(self) -> str:
        parity = "even" if self.n % 2 == 0 else "odd"
        return f"{self.family}-{parity}"

    def __str__(self):
        name = "Sym" if self.family == "sym" else "Alt"
        return f"{name}({self.n})"


def sym(n: int) -> GroupKind:
    return GroupKind("sym", n)


def alt(n: int) -> GroupKind:
    return GroupKind("alt", n)


@dataclass(frozen=True)
class Intransitive:
    """Maximal intransitive subgroup Sym(x) x Sym(n-x), 1 <= x < n/2."""

    x: int

    def validate(self, n: int):
        if not 1 <= self.x < Fraction(n, 2):
            raise DomainError(f"intransitive split {self.x} outside [1, {n}/2)")

    def __str__(self):
        return f"intransitive:{self.x}"


@dataclass(frozen=True)
class Imprimitive:
    """Maximal imprimitive subgroup Sym(b) wr Sym(n/b), 2 <= b <= n/2, b | n."""

    b: int

    def validate(self, n: int):
        if not (2 <= self.b <= n // 2 and n % self.b == 0):
            raise DomainError(f"block size {self.b} invalid for degree {n}")

    def __str__(self):
        return f"imprimitive:{self.b}"


@dataclass(frozen=True)
class Alternating:
    """The alternating group as a component of Sym(n)."""

    def validate(self, n: int):
        pass

    def __str__(self):
        return "alternating"


@dataclass(frozen=True)
class PrimitiveEntry:
    """A catalogued primitive type: covers exactly one coprime 3-partition."""

    label: str
    partition: Partition

    def validate(self, n: int):
        if sum(self.partition) != n:
            raise DomainError(
                f"primitive entry {self.label} does not sum to degree {n}"
            )

    def __str__(self):
        return f"primitive:{self.label}:{','.join(map(str, self.partition))}"


SubgroupType = Union[Intransitive, Imprimitive, Alternating, PrimitiveEntry]


@dataclass(frozen=True)
class BasicSet:
    """A group together with a set of candidate basic components."""

    group: GroupKind
    components: frozenset[SubgroupType]

    def __post_init__(self):
        for c in self.components:
            c.validate(self.group.n)
            if isinstance(c, Alternating) and self.group.family == "alt":
                raise DomainError("Alternating is not a proper component of Alt(n)")


@dataclass
class CoverageReport:
    """Outcome of testing every group partition against a component set."""

    checked: int
    covered_count: int
    uncovered: list[Partition]
    uncovered_total: int
    complete: bool

    def __post_init__(self):
        if self.complete != (self.uncovered_total == 0):
            raise DomainError("complete flag inconsistent with uncovered count")


def partition_in_group(p: Partition, g: GroupKind) -> bool:
    """Whether a permutation of cycle type p lies in g.

    Sym contains every type; Alt contains p iff n minus the number of
    cycles is even.
    """
    if sum(p) != g.n:
        raise DomainError(f"partition {p} does not sum to degree {g.n}")
    if g.family == "sym":
        return True
    return (g.n - len(p)) % 2 == 0


@lru_cache(maxsize=None)
def _block_grouping_exists(terms: Partition, b: int) -> bool:
    # Can the terms be split into groups, each with a divisor m of all its
    # members and group sum m*b?  (Each group is the set of cycles moving
    # one orbit of blocks; m is the orbit length.)
    if not terms:
        return True
    t0 = terms[0]
    rest = terms[1:]
    for m in divisors(t0):
        target = m * b - t0
        if target < 0:
            continue
        idx_divisible = [i for i, t in enumerate(rest) if t % m == 0]
        for chosen in _subsets_with_sum(rest, tuple(idx_divisible), target):
            remaining = tuple(t for i, t in enumerate(rest) if i not in chosen)
            if _block_grouping_exists(remaining, b):
                return True
    return False


def _subsets_with_sum(terms, idxs, target):
    # Index subsets of terms[idxs] summing to target; deduplicates equal-term
    # choices by requiring indices increasing and skipping repeats at the
    # same level.
    if target == 0:
        yield frozenset()
        return
    seen = set()
    for pos, i in enumerate(idxs):
        t = terms[i]
        if t > target or t in seen:
            continue
        seen.add(t)
        for rest in _subsets_with_sum(terms, idxs[pos + 1 :], target - t):
            yield rest | {i}


def covers(s: SubgroupType, p: Partition, g: GroupKind) -> bool:
    """Whether component s contains a permutation of type p inside g."""
    if sum(p) != g.n:
        raise DomainError(f"partition {p} does not sum to degree {g.n}")
    if g.family == "alt" and not partition_in_group(p, g):
        raise DomainError(f"partition {p} is not an even type of degree {g.n}")
    s.validate(g.n)
    if isinstance(s, Intransitive):
        return bool(subset_sum_mask(p) >> s.x & 1)
    if isinstance(s, Imprimitive):
        return _block_grouping_exists(canonical(p), s.b)
    if isinstance(s, Alternating):
        if g.family == "alt":
            raise DomainError("Alternating is not a proper component of Alt(n)")
        return (g.n - len(p)) % 2 == 0
    if isinstance(s, PrimitiveEntry):
        return canonical(p) == s.partition
    raise DomainError(f"unknown component {s!r}")


def maroti_basic_set(n: int) -> BasicSet:
    """The explicit basic set for Sym(n), n composite: splits up to n/3,
    splits coprime to n, and block sizes the primes dividing n."""
    if n < 4 or is_prime(n):
        raise DomainError(f"construction needs composite n >= 4, got {n}")
    components: set[SubgroupType] = set()
    for k in range(1, n // 3 + 1):
        components.add(Intransitive(k))
    for k in range(1, (n - 1) // 2 + 1):
        if 2 * k < n and math.gcd(k, n) == 1:
            components.add(Intransitive(k))
    for p, _ in factorize(n).factors:
        components.add(Imprimitive(p))
    return BasicSet(sym(n), frozenset(components))


def maroti_upper_bound(n: int) -> Fraction:
    """The size bound n/3 + phi(n)/2 + omega(n) for the construction."""
    if n < 4 or is_prime(n):
        raise DomainError(f"bound needs composite n >= 4, got {n}")
    return Fraction(n, 3) + Fraction(euler_phi(n), 2) + omega(n)


def group_partitions(g: GroupKind):
    """All partitions of n that occur as types in g."""
    for p in enumerate_partitions(g.n):
        if g.family == "sym" or (g.n - len(p)) % 2 == 0:
            yield p


def verify_basic_set(bs: BasicSet, limit: Optional[int] = None) -> CoverageReport:
    """Test every partition type of the group against the components.

    Refuses degrees whose partition count exceeds the enumeration guard.
    ``limit`` truncates the uncovered listing (the total is always exact).
    """
    g = bs.group
    total = count_all_partitions(g.n)
    if total > ENUMERATION_GUARD:
        raise EnumerationGuardError(g.n, total, ENUMERATION_GUARD)
    intransitive = sorted(c.x for c in bs.components if isinstance(c, Intransitive))
    imprimitive = sorted(c.b for c in bs.components if isinstance(c, Imprimitive))
    has_alt = any(isinstance(c, Alternating) for c in bs.components)
    primitive = {c.partition for c in bs.components if isinstance(c, PrimitiveEntry)}
    checked = 0
    covered = 0
    uncovered: list[Partition] = []
    uncovered_total = 0
    for p in group_partitions(g):
        checked += 1
        if _covered_by_any(p, g.n, intransitive, imprimitive, has_alt, primitive):
            covered += 1
        else:
            uncovered_total += 1
            if limit is None or len(uncovered) < limit:
                uncovered.append(p)
    return CoverageReport(
        checked=checked,
        covered_count=covered,
        uncovered=uncovered,
        uncovered_total=uncovered_total,
        complete=uncovered_total == 0,
    )


def _covered_by_any(p, n, intransitive, imprimitive, has_alt, primitive):
    if intransitive:
        mask = subset_sum_mask(p)
        for x in intransitive:
            if mask >> x & 1:
                return True
    if has_alt and (n - len(p)) % 2 == 0:
        return True
    if primitive and p in primitive:
        return True
    for b in imprimitive:
        if _block_grouping_exists(p, b):
            return True
    return False


def conjecture_value(n: int) -> int:
    """The conjectured normal covering number of Sym(n), exact evaluation.

    Four cases on the factorization of n; the rational result is asserted
    integral before returning.
    """
    if n < 3:
        raise DomainError(f"conjecture_value needs n >= 3, got {n}")
    factors = factorize(n).factors
    r = len(factors)
    p1 = factors[0][0]
    alpha_sum = sum(a for _, a in factors)
    val = Fraction(n, 2) * (1 - Fraction(1, p1))
    if r == 1:
        if alpha_sum >= 2:
            val += 1
    else:
        p2 = factors[1][0]
        val *= 1 - Fraction(1, p2)
        val += 1 if alpha_sum == 2 else 2
    if val.denominator != 1:
        raise AssertionError(f"conjecture formula not integral at n={n}: {val}")
    return int(val)


@dataclass
class CounterexampleReport:
    """Progress of the inequality chain refuting the conjecture at
    n = product of r consecutive primes starting from p."""

    p: int
    r: int
    primes: list[int]
    feasible: bool
    below_guaranteed_prime: bool  # p < 43: the coefficient inequality is
    # not guaranteed, but still computed
    a2_holds: Optional[bool]
    a3_surrogate_holds: bool
    phi_ratio: Optional[Fraction]  # phi(N)/N, exact
    a4_holds: Optional[bool]  # phi(N)/N < 1/7
    note: str


def counterexample_check(
    p: int, r: int, prime_budget: int = 10**7
) -> CounterexampleReport:
    """Evaluate the counterexample inequality chain at N(r, p).

    N(r, p) is the product of the r consecutive primes starting at p.  The
    coefficient inequality and the totient ratio are exact rationals; the
    growth inequality uses the logarithmic surrogate r*log(p) > log(14r).
    The threshold where phi(N)/N < 1/7 needs primes beyond about 10**11, so
    no attempt is made to materialize a full counterexample degree.
    """
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    if r < 2:
        raise DomainError(f"r must be >= 2, got {r}")
    below = p < 43
    primes = primes_from(p, r)
    feasible = primes[-1] <= prime_budget
    a3 = r * math.log(p) > math.log(14 * r)
    if not feasible:
        return CounterexampleReport(
            p, r, [], False, below, None, a3, None, None,
            f"the {r} consecutive primes from {p} exceed the prime budget "
            f"{prime_budget}",
        )
    num = 1
    den = 1
    for q in primes:
        num *= q - 1
        den *= q
    ratio = Fraction(num, den)
    n_val = den  # N(r, p)
    p2 = primes[1]
    lhs = Fraction(n_val, 2) * (1 - Fraction(1, p)) * (1 - Fraction(1, p2)) + 2
    rhs = Fraction(n_val, 3) + Fraction(n_val, 7)
    a2 = lhs > rhs
    a4 = ratio < Fraction(1, 7)
    note = (
        "materializing a full counterexample degree is not desk-scale "
        "reproducible: phi(N)/N < 1/7 requires primes beyond ~10^11"
    )
    return CounterexampleReport(p, r, primes, True, below, a2, a3, ratio, a4, note)


def a2_coefficient_holds(p: int, p2: int) -> bool:
    """Leading-coefficient form of the counterexample inequality:
    (1/2)(1-1/p)(1-1/p2) > 1/3 + 1/7, exact."""
    lhs = Fraction(1, 2) * (1 - Fraction(1, p)) * (1 - Fraction(1, p2))
    return lhs > Fraction(10, 21)


def primitive_coprime3_types(g: GroupKind) -> set[Partition]:
    """Catalogued coprime 3-partitions of n coverable by a proper primitive
    group, restricted to the types that occur in g."""
    return {p for p in catalog_types(g.n) if partition_in_group(p, g)}


def coprime_3_partitions(n: int):
    """All coprime 3-partitions of n, canonical form."""
    for c in range(1, n // 3 + 1):
        for b in range(c, (n - c) // 2 + 1):
            a = n - b - c
            if math.gcd(math.gcd(a, b), c) == 1:
                yield (a, b, c)


def imprimitive_coprime3_count(n: int) -> int:
    """Exact number of coprime 3-partitions of n covered by some
    imprimitive maximal subgroup (0 for prime n)."""
    if n < 3:
        raise DomainError(f"imprimitive_coprime3_count needs n >= 3, got {n}")
    if is_prime(n):
        return 0
    blocks = [b for b in divisors(n) if 2 <= b <= n // 2]
    count = 0
    for p in coprime_3_partitions(n):
        if any(_block_grouping_exists(p, b) for b in blocks):
            count += 1
    return count
