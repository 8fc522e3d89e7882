import math
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from normcov.errors import DomainError
from normcov.partitions import (
    ClusterFamily,
    canonical,
    cluster_intersection,
    cluster_partitions,
    count_all_partitions,
    count_cluster_partitions,
    count_coprime,
    count_partitions,
    enumerate_partitions,
    has_cluster,
    projective_triple,
    union_cluster_count,
)


def test_canonical():
    assert canonical([2, 5, 3]) == (5, 3, 2)
    assert canonical(x for x in (1, 1, 1)) == (1, 1, 1)
    with pytest.raises(DomainError):
        canonical([3, 0])


def test_enumerate_all_matches_count():
    for n in range(1, 30):
        parts = list(enumerate_partitions(n))
        assert len(parts) == count_all_partitions(n)
        assert len(set(parts)) == len(parts)
        for p in parts:
            assert sum(p) == n
            assert p == canonical(p)


def test_enumerate_fixed_k():
    for n in range(1, 40):
        for k in range(1, 6):
            parts = list(enumerate_partitions(n, k))
            assert all(len(p) == k and sum(p) == n for p in parts)
            assert len(parts) == count_partitions(n, k)


def test_count_known_values():
    assert count_all_partitions(50) == 204226
    assert count_all_partitions(100) == 190569292
    assert count_partitions(9, 3) == 7
    assert count_partitions(10, 2) == 5


def test_count_closed_forms_vs_recurrence():
    for n in range(2, 300):
        assert count_partitions(n, 2) == n // 2
    for n in range(3, 300):
        expected = len(
            [
                1
                for c in range(1, n // 3 + 1)
                for b in range(c, (n - c) // 2 + 1)
            ]
        )
        assert count_partitions(n, 3) == expected


def test_count_coprime_known():
    assert count_coprime(6, 3) == 2
    assert count_coprime(12, 2) == 2
    assert count_coprime(9, 3) == 6


def test_count_coprime_vs_filter():
    for n in range(4, 200):
        brute3 = sum(
            1 for p in enumerate_partitions(n, 3) if math.gcd(math.gcd(*p[:2]), p[2]) == 1
        )
        assert count_coprime(n, 3) == brute3
        brute2 = sum(1 for p in enumerate_partitions(n, 2) if math.gcd(*p) == 1)
        assert count_coprime(n, 2) == brute2


def test_coprime3_closed_form_is_integral():
    # (n^2/12) * prod (1 - 1/p^2) over p | n must land on an integer.
    for n in range(4, 500):
        val = Fraction(n * n, 12)
        for p in {f for f in range(2, n + 1) if n % f == 0 and all(f % d for d in range(2, f))}:
            val *= 1 - Fraction(1, p * p)
        assert val.denominator == 1
        assert count_coprime(n, 3) == int(val)


def test_has_cluster():
    assert has_cluster((5, 3, 2), 5)
    assert has_cluster((5, 3, 2), 8)
    assert has_cluster((5, 3, 2), 2)
    assert not has_cluster((5, 3, 2), 4)


def test_cluster_count_closed_form():
    assert count_cluster_partitions(10, 5, 3) == 2
    assert count_cluster_partitions(10, 3, 3) == 4
    for n in range(3, 80):
        for x in range(1, n):
            brute = sum(1 for p in enumerate_partitions(n, 3) if has_cluster(p, x))
            got = count_cluster_partitions(n, x, 3)
            assert got == brute, (n, x)
            assert 2 * got <= n


def test_cluster_count_degenerate_ks():
    assert count_cluster_partitions(10, 3, 1) == 0
    assert count_cluster_partitions(10, 3, 2) == 1
    assert count_cluster_partitions(12, 5, 4) == sum(
        1 for p in enumerate_partitions(12, 4) if has_cluster(p, 5)
    )


def test_cluster_family_validation():
    ClusterFamily(10, (2, 3, 4))
    with pytest.raises(DomainError):
        ClusterFamily(10, (3, 2))  # not increasing
    with pytest.raises(DomainError):
        ClusterFamily(10, (0,))
    with pytest.raises(DomainError):
        ClusterFamily(10, (5,))  # must stay below ceil(n/2)


def test_intersection_two_sizes():
    got = cluster_intersection(ClusterFamily(10, (2, 3)), verify=True)
    assert got == {(5, 3, 2), (7, 2, 1)}
    for n in range(5, 60):
        hi = -(-n // 2) - 1
        for x in range(1, hi + 1):
            for y in range(x + 1, hi + 1):
                got = cluster_intersection(ClusterFamily(n, (x, y)))
                assert got == {
                    canonical((x, y, n - x - y)),
                    canonical((x, y - x, n - y)),
                }


def test_intersection_three_and_four_sizes():
    assert cluster_intersection(ClusterFamily(20, (2, 5, 7)), verify=True) == {
        (13, 5, 2)
    }
    assert cluster_intersection(ClusterFamily(30, (2, 5, 7, 11)), verify=True) == set()
    for n in range(7, 50):
        hi = -(-n // 2) - 1
        sets = {x: cluster_partitions(n, x) for x in range(1, hi + 1)}
        for xs in combinations(range(1, hi + 1), 3):
            got = cluster_intersection(ClusterFamily(n, xs))
            brute = sets[xs[0]] & sets[xs[1]] & sets[xs[2]]
            assert got == brute
            assert len(got) <= 1


def test_union_count_and_bound():
    assert union_cluster_count(ClusterFamily(10, (1,))) == 4
    for n in range(3, 26):
        hi = -(-n // 2) - 1
        sets = {x: cluster_partitions(n, x) for x in range(1, hi + 1)}
        for l in range(1, hi + 1):
            for xs in combinations(range(1, hi + 1), l):
                got = union_cluster_count(ClusterFamily(n, xs))
                assert got == len(set().union(*(sets[x] for x in xs)))
                assert 2 * got <= l * (n - l + 1)


@settings(max_examples=200)
@given(st.integers(min_value=8, max_value=120), st.data())
def test_union_bound_random(n, data):
    hi = -(-n // 2) - 1
    l = data.draw(st.integers(min_value=1, max_value=hi))
    xs = tuple(sorted(data.draw(
        st.sets(st.integers(min_value=1, max_value=hi), min_size=l, max_size=l)
    )))
    got = union_cluster_count(ClusterFamily(n, xs))
    assert 2 * got <= len(xs) * (n - len(xs) + 1)


def test_projective_triple():
    assert projective_triple(2, 2, 3) == (21, 7, 3)
    assert projective_triple(5, 1, 2) == (24, 6, 1)
    with pytest.raises(DomainError):
        projective_triple(2, 2, 4)  # gcd(d1, d2) != 1
    with pytest.raises(DomainError):
        projective_triple(6, 1, 2)  # q not a prime power
