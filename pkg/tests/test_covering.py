import math
from fractions import Fraction
from itertools import combinations

import pytest

from normcov.covering import (
    Alternating,
    BasicSet,
    Imprimitive,
    Intransitive,
    PrimitiveEntry,
    _block_grouping_exists,
    a2_coefficient_holds,
    alt,
    conjecture_value,
    counterexample_check,
    covers,
    imprimitive_coprime3_count,
    maroti_basic_set,
    maroti_upper_bound,
    partition_in_group,
    primitive_coprime3_types,
    sym,
    verify_basic_set,
)
from normcov.errors import DomainError
from normcov.numtheory import euler_phi, is_prime, omega
from normcov.partitions import enumerate_partitions


# --- block-system ground truth -------------------------------------------


def perm_of_type(p):
    n = sum(p)
    perm = list(range(n))
    start = 0
    for length in p:
        for i in range(length):
            perm[start + i] = start + (i + 1) % length
        start += length
    return perm


def block_systems(n, b):
    def rec(points):
        if not points:
            yield ()
            return
        first, rest = points[0], points[1:]
        for others in combinations(rest, b - 1):
            block = (first,) + others
            remaining = tuple(x for x in rest if x not in others)
            for more in rec(remaining):
                yield (block,) + more

    yield from rec(tuple(range(n)))


def preserves_some_block_system(p, b):
    n = sum(p)
    perm = perm_of_type(p)
    for system in block_systems(n, b):
        blocks = {frozenset(bl) for bl in system}
        if all(frozenset(perm[x] for x in bl) in blocks for bl in system):
            return True
    return False


# --- membership and components -------------------------------------------


def test_partition_parity_explicitly():
    # sign of a cycle type is (-1)^(n - number of cycles)
    for n in range(4, 12):
        for p in enumerate_partitions(n):
            assert partition_in_group(p, sym(n))
            assert partition_in_group(p, alt(n)) == ((n - len(p)) % 2 == 0)


def test_component_validation():
    with pytest.raises(DomainError):
        Intransitive(0).validate(10)
    with pytest.raises(DomainError):
        Intransitive(5).validate(10)  # k must be < n/2
    with pytest.raises(DomainError):
        Imprimitive(10).validate(10)  # block must be a proper divisor
    with pytest.raises(DomainError):
        Imprimitive(3).validate(10)
    with pytest.raises(DomainError):
        BasicSet(alt(7), (Alternating(),))


def test_intransitive_covers():
    g = sym(10)
    assert covers(Intransitive(3), (7, 3), g)
    assert covers(Intransitive(3), (5, 3, 2), g)
    assert covers(Intransitive(3), (7, 2, 1), g)
    assert not covers(Intransitive(4), (7, 3), g)
    assert not covers(Intransitive(3), (10,), g)


def test_imprimitive_covers_known_case():
    # [5, 3, 2] in Sym(10) with blocks of size 5: one 5-cycle fills a block,
    # the 3-cycle and 2-cycle together fill the other.  Confirmed by the
    # explicit block-system search below.
    assert covers(Imprimitive(5), (5, 3, 2), sym(10))
    assert preserves_some_block_system((5, 3, 2), 5)


def test_imprimitive_covers_matches_block_system_search():
    for n in range(4, 11):
        for b in range(2, n // 2 + 1):
            if n % b:
                continue
            for p in enumerate_partitions(n):
                assert _block_grouping_exists(p, b) == preserves_some_block_system(
                    p, b
                ), (n, b, p)


def test_alternating_and_primitive_covers():
    assert not covers(Alternating(), (5, 3, 2), sym(10))  # odd permutation
    assert covers(Alternating(), (9, 1), sym(10))  # even permutation
    for n in range(4, 9):
        for p in enumerate_partitions(n):
            assert covers(Alternating(), p, sym(n)) == partition_in_group(p, alt(n))
    entry = PrimitiveEntry("pgl", (6, 3, 1))
    assert covers(entry, (6, 3, 1), sym(10))
    assert not covers(entry, (8, 1, 1), sym(10))


def test_covers_rejects_partition_outside_group():
    with pytest.raises(DomainError):
        covers(Intransitive(1), (2, 1, 1), alt(4))  # odd permutation


# --- construction ---------------------------------------------------------


def test_maroti_basic_set_smallest():
    bs = maroti_basic_set(6)
    kinds = sorted(str(c) for c in bs.components)
    assert kinds == ["imprimitive:2", "imprimitive:3", "intransitive:1", "intransitive:2"]
    assert len(bs.components) <= maroti_upper_bound(6)


def test_maroti_requires_composite():
    with pytest.raises(DomainError):
        maroti_basic_set(7)


def test_maroti_verifies_complete():
    for n in (4, 6, 8, 9, 10, 12, 15, 36):
        report = verify_basic_set(maroti_basic_set(n))
        assert report.complete, n
        assert not report.uncovered
    report = verify_basic_set(maroti_basic_set(36))
    assert report.checked == 17977


def test_maroti_size_bound():
    for n in range(4, 80):
        if is_prime(n):
            continue
        assert len(maroti_basic_set(n).components) <= Fraction(n, 3) + Fraction(
            euler_phi(n), 2
        ) + omega(n)


def test_verify_reports_incomplete():
    bs = BasicSet(sym(6), (Intransitive(1),))
    report = verify_basic_set(bs, limit=3)
    assert not report.complete
    assert report.uncovered_total > 0
    assert 0 < len(report.uncovered) <= 3
    assert report.checked == report.covered_count + report.uncovered_total


# --- conjecture and counterexample ---------------------------------------


def test_conjecture_values():
    assert conjecture_value(12) == 4
    assert conjecture_value(9) == 4
    assert conjecture_value(6) == 2
    assert conjecture_value(7) == 3


def test_conjecture_matches_formula_cases():
    assert conjecture_value(16) == 5  # powers of two: n/4 + 1
    assert conjecture_value(2021) == euler_phi(2021) // 2 + 1


def test_counterexample_chain_first_point():
    rep = counterexample_check(43, 2)
    assert rep.feasible
    assert rep.phi_ratio == Fraction(1932, 2021)
    assert rep.a2_holds
    assert rep.a3_surrogate_holds
    assert rep.a4_holds is False


def test_counterexample_budget():
    rep = counterexample_check(43, 10**4, prime_budget=10**5)
    assert not rep.feasible
    assert rep.phi_ratio is None
    assert "budget" in rep.note


def test_a2_coefficient_boundary():
    assert a2_coefficient_holds(43, 47)
    assert not a2_coefficient_holds(2, 3)
    for p in (43, 101, 997):
        lhs = Fraction(1, 2) * (1 - Fraction(1, p)) * (1 - Fraction(1, p + 2))
        assert a2_coefficient_holds(p, p + 2) == (lhs > Fraction(10, 21))


# --- coverage tallies -----------------------------------------------------


def test_primitive_coprime3_types_known():
    assert primitive_coprime3_types(sym(10)) == {(6, 3, 1), (8, 1, 1)}
    assert primitive_coprime3_types(sym(16)) == {(7, 7, 2)}
    assert primitive_coprime3_types(alt(31)) == {(15, 15, 1), (24, 6, 1)}


def test_imprimitive_coprime3_count():
    assert imprimitive_coprime3_count(9) == 2
    assert imprimitive_coprime3_count(7) == 0  # prime degree
    for n in range(4, 60):
        c = imprimitive_coprime3_count(n)
        assert c * c <= 4 * n**3
