"""One-shot verification battery.

Each check pits a closed form or certified bound against an independent
brute-force oracle (exhaustive enumeration, explicit block-system search,
exact rational arithmetic).  ``run_suite`` prints one pass/fail line per
criterion and is deterministic for a fixed seed.

Known red check: ``bounds_pipeline`` includes the claim that the
omega-free overhead majorant drops below 1/(2*pi^2) from n = 1560 on; the
sharp threshold is in fact n = 1561 (the majorant exceeds the constant at
n = 1560 by about 2.5e-6), so that sub-check fails at the single boundary
point.  It is kept as stated rather than silently moved.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from mpmath import mp

from . import bounds, covering, numtheory, partitions, tables
from .covering import (
    Imprimitive,
    alt,
    imprimitive_coprime3_count,
    maroti_basic_set,
    maroti_upper_bound,
    sym,
    verify_basic_set,
)
from .numtheory import (
    euler_phi,
    is_prime,
    omega,
    q_set,
    smallest_prime_factor_sieve,
)
from .partitions import (
    ClusterFamily,
    canonical,
    cluster_intersection,
    count_cluster_partitions,
    count_coprime,
    count_partitions,
    union_cluster_count,
)

DEFAULT_SEED = 20230423

# A rational strictly above 1/(2*pi^2) = 0.05066059182...; used to turn the
# strict lower-range comparison into exact integer arithmetic.
_INV_TWO_PI_SQ_UPPER = Fraction(50660592, 10**9)


@dataclass
class CheckResult:
    criterion: str
    ok: bool
    detail: str
    seconds: float


# ---------------------------------------------------------------- oracles


def _three_partitions(n):
    for c in range(1, n // 3 + 1):
        for b in range(c, (n - c) // 2 + 1):
            yield (n - b - c, b, c)


def _perm_of_type(p):
    # Concrete permutation with the given cycle type, on points 0..n-1.
    n = sum(p)
    perm = list(range(n))
    start = 0
    for length in p:
        for i in range(length):
            perm[start + i] = start + (i + 1) % length
        start += length
    return perm


def _block_systems(n, b):
    # All partitions of {0..n-1} into n/b blocks of size b.
    from itertools import combinations

    def rec(points):
        if not points:
            yield ()
            return
        first = points[0]
        rest = points[1:]
        for others in combinations(rest, b - 1):
            block = (first,) + others
            remaining = tuple(x for x in rest if x not in others)
            for more in rec(remaining):
                yield (block,) + more

    yield from rec(tuple(range(n)))


def _preserves_some_block_system(p, b):
    # Ground truth for the block-grouping criterion: explicit search over
    # every block system acted on by a concrete permutation of type p.
    n = sum(p)
    perm = _perm_of_type(p)
    for system in _block_systems(n, b):
        blocks = {frozenset(block) for block in system}
        if all(frozenset(perm[x] for x in block) in blocks for block in system):
            return True
    return False


# --------------------------------------------------------------- criteria


def _c01_partition_closed_forms(level, rng):
    n_max = 200 if level == "desk" else 60
    for n in range(1, n_max + 1):
        two = sum(1 for b in range(1, n) if n - b >= b)
        if two != count_partitions(n, 2) and n >= 2:
            return False, f"p2({n}) mismatch: enum {two}"
        three = sum(1 for _ in _three_partitions(n))
        if n >= 3 and three != count_partitions(n, 3):
            return False, f"p3({n}) mismatch: enum {three}"
    return True, f"p2, p3 closed forms match enumeration for n <= {n_max}"


def _c02_coprime_counts(level, rng):
    n_max = 500 if level == "desk" else 120
    for n in range(3, n_max + 1):
        two = sum(
            1 for b in range(1, n // 2 + 1) if n - b >= b and math.gcd(n - b, b) == 1
        )
        if two != count_coprime(n, 2):
            return False, f"p2'({n}) mismatch: enum {two}"
        three = sum(
            1 for (a, b, c) in _three_partitions(n) if math.gcd(math.gcd(a, b), c) == 1
        )
        if n >= 4 and three != count_coprime(n, 3):
            return False, f"p3'({n}) mismatch: enum {three}"
        u = _INV_TWO_PI_SQ_UPPER
        if not three * u.denominator > n * n * u.numerator:
            return False, f"p3'({n}) = {three} not above n^2/(2 pi^2)"
    return True, f"coprime 2-/3-counts match enumeration for n in [3, {n_max}]"


def _c03_cluster_formula(level, rng):
    n_max = 200 if level == "desk" else 60
    for n in range(2, n_max + 1):
        counts = [0] * n
        for (a, b, c) in _three_partitions(n):
            for s in {a, b, c, a + b, a + c, b + c}:
                counts[s] += 1
        for x in range(1, n):
            got = count_cluster_partitions(n, x, 3)
            if got != counts[x]:
                return False, f"p3({n},{x}) = {got}, enumeration says {counts[x]}"
            if 2 * got > n:
                return False, f"p3({n},{x}) = {got} exceeds n/2"
    return True, f"cluster closed form matches enumeration for n <= {n_max}, all x"


def _c04_intersection_lemmas(level, rng):
    n_max = 100 if level == "desk" else 40
    quad_exhaustive_max = 60 if level == "desk" else 40
    random_quads_total = 100_000 if level == "desk" else 2_000
    big_ns = [n for n in range(quad_exhaustive_max + 1, n_max + 1)]
    quads_per_n = random_quads_total // len(big_ns) if big_ns else 0
    for n in range(5, n_max + 1):
        hi = -(-n // 2) - 1
        sets = {
            x: partitions.cluster_partitions(n, x) for x in range(1, hi + 1)
        }
        pair_cache = {}
        for x in range(1, hi + 1):
            for y in range(x + 1, hi + 1):
                brute = sets[x] & sets[y]
                got = cluster_intersection(ClusterFamily(n, (x, y)))
                if brute != got or len(got) != 2:
                    return False, f"pair mismatch at n={n}, ({x},{y})"
                pair_cache[(x, y)] = brute
        nonempty_triples = []
        for (x, y), pair in pair_cache.items():
            for z in range(y + 1, hi + 1):
                brute = {p for p in pair if p in sets[z]}
                got = cluster_intersection(ClusterFamily(n, (x, y, z)))
                if brute != got or len(got) > 1:
                    return False, f"triple mismatch at n={n}, ({x},{y},{z})"
                if brute:
                    nonempty_triples.append(((x, y, z), next(iter(brute))))
        if n <= quad_exhaustive_max:
            # Exhaustive quadruples: empty pairs/triples force empty
            # quadruples, so only nonempty triples need inspection.
            for (x, y, z), p in nonempty_triples:
                for t in range(z + 1, hi + 1):
                    if p in sets[t]:
                        return False, f"quadruple nonempty at n={n}, ({x},{y},{z},{t})"
                    got = cluster_intersection(ClusterFamily(n, (x, y, z, t)))
                    if got:
                        return False, f"closed form quad nonempty at n={n}"
        elif hi >= 4:
            for _ in range(quads_per_n):
                xs = tuple(sorted(rng.sample(range(1, hi + 1), 4)))
                x, y, z, t = xs
                brute = {
                    p for p in pair_cache[(x, y)] if p in sets[z] and p in sets[t]
                }
                got = cluster_intersection(ClusterFamily(n, xs))
                if brute or got:
                    return False, f"quadruple mismatch at n={n}, {xs}"
    return True, (
        f"pair/triple/quadruple intersections match brute force for n <= {n_max}"
    )


def _c05_union_bound(level, rng):
    exhaustive_max = 20 if level == "desk" else 14
    sampled_max = 60 if level == "desk" else 30
    samples_per_n = 10_000 if level == "desk" else 500
    from itertools import combinations

    for n in range(3, exhaustive_max + 1):
        hi = -(-n // 2) - 1
        sets = {x: partitions.cluster_partitions(n, x) for x in range(1, hi + 1)}
        for l in range(1, hi + 1):
            for xs in combinations(range(1, hi + 1), l):
                got = union_cluster_count(ClusterFamily(n, xs))
                brute = len(set().union(*(sets[x] for x in xs)))
                if got != brute:
                    return False, f"union count mismatch at n={n}, X={xs}"
                if 2 * got > l * (n - l + 1):
                    return False, f"union bound violated at n={n}, X={xs}"
    for n in range(exhaustive_max + 1, sampled_max + 1):
        hi = -(-n // 2) - 1
        for _ in range(samples_per_n):
            l = rng.randint(1, hi)
            xs = tuple(sorted(rng.sample(range(1, hi + 1), l)))
            got = union_cluster_count(ClusterFamily(n, xs))
            if 2 * got > l * (n - l + 1):
                return False, f"union bound violated at n={n}, X={xs}"
    return True, (
        f"union bound holds: exhaustively for n <= {exhaustive_max}, "
        f"{samples_per_n} seeded families per n <= {sampled_max}"
    )


def _c06_imprimitive_semantics(level, rng):
    n_max = 12 if level == "desk" else 10
    checked = 0
    for n in range(4, n_max + 1):
        for b in range(2, n // 2 + 1):
            if n % b != 0:
                continue
            for p in partitions.enumerate_partitions(n):
                criterion = covering._block_grouping_exists(p, b)
                truth = _preserves_some_block_system(p, b)
                checked += 1
                if criterion != truth:
                    return False, (
                        f"block criterion mismatch at n={n}, b={b}, type {p}: "
                        f"criterion {criterion}, block-system search {truth}"
                    )
    return True, f"block criterion matches explicit search ({checked} cases, n <= {n_max})"


def _c07_imprimitive_cap(level, rng):
    n_max = 300 if level == "desk" else 100
    for n in range(4, n_max + 1):
        if is_prime(n):
            continue
        c = imprimitive_coprime3_count(n)
        if c * c > 4 * n**3:
            return False, f"imprimitive coverage count {c} exceeds 2n^(3/2) at n={n}"
    return True, f"imprimitive coverage count <= 2n^(3/2) for composite n <= {n_max}"


def _c08_maroti_construction(level, rng):
    n_max = 50 if level == "desk" else 30
    for n in range(4, n_max + 1):
        if is_prime(n):
            continue
        bs = maroti_basic_set(n)
        if len(bs.components) > maroti_upper_bound(n):
            return False, f"basic set size exceeds n/3 + phi(n)/2 + omega(n) at n={n}"
        report = verify_basic_set(bs, limit=5)
        if not report.complete:
            return False, (
                f"construction incomplete at n={n}: {report.uncovered_total} "
                f"uncovered, e.g. {report.uncovered}"
            )
    return True, f"construction covers all partitions for composite n in [4, {n_max}]"


def _c09_counterexample_chain(level, rng):
    import sympy

    p_max = 10_000 if level == "desk" else 500
    r_max = 10_000 if level == "desk" else 500
    ps = list(sympy.primerange(43, p_max + 1))
    ps.append(int(sympy.nextprime(ps[-1])))
    for p, p2 in zip(ps, ps[1:]):
        if not covering.a2_coefficient_holds(p, p2):
            return False, f"coefficient inequality fails at p1={p}"
    primes = numtheory.primes_from(43, r_max)
    num, den = 1, 1
    for i, q in enumerate(primes):
        new_num, new_den = num * (q - 1), den * q
        if i >= 1 and not new_num * den < num * new_den:
            return False, f"phi(N)/N not strictly decreasing at r={i + 1}"
        num, den = new_num, new_den
    still_above = Fraction(num, den) > Fraction(1, 7)
    return True, (
        f"coefficient inequality exact for primes in [43, {p_max}]; phi(N)/N "
        f"strictly decreasing through r={r_max} (still "
        f"{'above' if still_above else 'below'} 1/7 at r={r_max}); materializing "
        "a full counterexample degree is NOT desk-scale reproducible "
        "(requires primes beyond ~10^11)"
    )


def _c10_qset_and_catalog(level, rng):
    n_max = 100_000 if level == "desk" else 10_000
    cat_max = 10_000 if level == "desk" else 2_000
    spf = smallest_prime_factor_sieve(n_max)
    got31 = {(q, d) for q, d in q_set(31)}
    if got31 != {(2, 5), (5, 3)}:
        return False, f"Q(31) = {sorted(got31)}, expected {{(2,5),(5,3)}}"
    for n in range(3, n_max + 1):
        reps = q_set(n)
        m = n - 1
        w = 0
        while m > 1:
            p = spf[m]
            w += 1
            while m % p == 0:
                m //= p
        if len(reps) > w:
            return False, f"|Q({n})| = {len(reps)} exceeds omega({n - 1}) = {w}"
        if any(d == 2 for _, d in reps):
            if len(reps) != 1 or next(iter(reps)).q != n - 1:
                return False, f"(q,2) singleton law fails at n={n}"
    for n in range(3, cat_max + 1):
        g = sym(n) if n % 2 == 0 else alt(n) if n >= 5 else sym(n)
        cat = covering.primitive_coprime3_types(g)  # validates sum and gcd
        if len(cat) > bounds.primitive_cap(n):
            return False, f"catalog size {len(cat)} exceeds cap at n={n}"
    return True, (
        f"Q(31) matches; |Q| and singleton laws hold for n <= {n_max}; catalog "
        f"valid and within cap for n <= {cat_max}"
    )


def _c11_bounds_pipeline(level, rng):
    n_max = 1_000_000 if level == "desk" else 100_000
    failures = []
    # zeta2 range by exact integer arithmetic over radicals
    spf = smallest_prime_factor_sieve(n_max)
    u = _INV_TWO_PI_SQ_UPPER
    cache = {}
    for n in range(4, n_max + 1):
        m, rad = n, 1
        while m > 1:
            p = spf[m]
            rad *= p
            while m % p == 0:
                m //= p
        ab = cache.get(rad)
        if ab is None:
            a_val, b_val, r = 1, 12, rad
            while r > 1:
                p = spf[r]
                r //= p
                a_val *= p * p - 1
                b_val *= p * p
            ab = (a_val, b_val)
            cache[rad] = ab
        a_val, b_val = ab
        if not (a_val * u.denominator > b_val * u.numerator and 12 * a_val < b_val):
            failures.append(f"zeta2({n}) outside (1/(2 pi^2), 1/12)")
            break
    # the asymptotic constant
    with mp.workdps(50):
        const = (1 - mp.sqrt(1 - 4 / mp.pi**2)) / 2
        if not abs(const - mp.mpf("0.114411")) < mp.mpf("5e-7"):
            failures.append("constant (1-sqrt(1-4/pi^2))/2 != 0.114411 (6 places)")
        if not const > 1 / mp.pi**2:
            failures.append("constant does not exceed 1/pi^2")
    # auxiliary inequality for small degrees
    for n in range(20, 64):
        lhs = bounds.corollary_auxiliary_sqrt_term(n)
        rhs_hi = (math.sqrt(17) / 2) * n**0.75
        with bounds._ivprec(80):
            from mpmath import iv

            rhs = (iv.sqrt(iv.mpf(17)) / 2) * iv.mpf(n) ** iv.mpf("0.75")
        if not lhs.b <= rhs.a:
            failures.append(f"auxiliary sqrt inequality not certified at n={n}")
    # radicand positivity below the threshold
    for n in range(4, 1560):
        lhs = bounds.corollary_auxiliary_sqrt_term(n)  # raises if not positive
    # majorant below 1/(2 pi^2) from the stated threshold on
    thr = 1 / (2 * math.pi**2)
    suspects = [
        n for n in range(1560, n_max + 1) if bounds.g_surrogate(n) >= thr - 1e-9
    ]
    for n in suspects:
        with mp.workdps(40):
            val = bounds.g_surrogate_interval(n, prec=120)
            exact_thr = 1 / (2 * mp.pi**2)
            if not val.b < exact_thr:
                failures.append(
                    f"g({n}) = {mp.nstr(mp.mpf(val.a), 10)} >= 1/(2 pi^2) "
                    f"= {mp.nstr(exact_thr, 10)} (sharp threshold is n=1561)"
                )
    if failures:
        return False, "; ".join(failures)
    return True, f"zeta2 range (n <= {n_max}), constants, auxiliary inequality, " \
        "radicand positivity and majorant threshold all verified"


def _c12_rounding_soundness(level, rng):
    trials = 100 if level == "desk" else 20
    for _ in range(trials):
        if rng.random() < 0.5:
            n = rng.randrange(4, 100_000, 2)
            g = sym(n)
        else:
            n = rng.randrange(5, 100_001, 2)
            g = alt(n)
        lo = bounds.lower_bound_theorem(g, prec=30)
        hi = bounds.lower_bound_theorem(g, prec=60)
        if lo > hi:
            return False, f"doubling precision decreased the bound at {g}: {lo} -> {hi}"
    return True, f"doubling precision never decreased the theorem bound ({trials} seeded degrees)"


CRITERIA: list[tuple[str, Callable]] = [
    ("partition_closed_forms", _c01_partition_closed_forms),
    ("coprime_counts", _c02_coprime_counts),
    ("cluster_formula", _c03_cluster_formula),
    ("intersection_lemmas", _c04_intersection_lemmas),
    ("union_bound", _c05_union_bound),
    ("imprimitive_semantics", _c06_imprimitive_semantics),
    ("imprimitive_cap", _c07_imprimitive_cap),
    ("maroti_construction", _c08_maroti_construction),
    ("counterexample_chain", _c09_counterexample_chain),
    ("qset_and_catalog", _c10_qset_and_catalog),
    ("bounds_pipeline", _c11_bounds_pipeline),
    ("rounding_soundness", _c12_rounding_soundness),
]


def run_criterion(name: str, level: str = "desk", seed: int = DEFAULT_SEED) -> CheckResult:
    func = dict(CRITERIA)[name]
    rng = random.Random(seed)
    start = time.perf_counter()
    ok, detail = func(level, rng)
    return CheckResult(name, ok, detail, time.perf_counter() - start)


def run_suite(
    level: str = "desk",
    seed: int = DEFAULT_SEED,
    emit: Optional[Callable[[str], None]] = print,
) -> list[CheckResult]:
    if level not in ("desk", "quick"):
        raise ValueError(f"unknown level {level!r}")
    if emit:
        emit(f"suite level={level} seed={seed}")
    results = []
    for name, _ in CRITERIA:
        res = run_criterion(name, level, seed)
        results.append(res)
        if emit:
            status = "PASS" if res.ok else "FAIL"
            emit(f"{status} {name} ({res.seconds:.1f}s): {res.detail}")
    return results
