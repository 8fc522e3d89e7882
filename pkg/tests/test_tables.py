import math

import pytest

from normcov.errors import DomainError
from normcov.numtheory import q_set
from normcov.tables import catalog_types, load_rows, table_bytes


def test_table_bytes_is_parseable_and_stable():
    raw = table_bytes()
    assert raw == table_bytes()
    assert raw.decode().startswith("#")
    rows = load_rows()
    assert len(rows) == 11
    assert {r.parity for r in rows} == {"even", "odd"}


def test_fixed_degree_rows():
    assert catalog_types(10) == {(6, 3, 1), (8, 1, 1)}
    assert catalog_types(22) == {(14, 7, 1)}
    assert catalog_types(7) >= {(4, 2, 1), (3, 3, 1)}
    assert {(8, 8, 1), (12, 3, 2), (10, 5, 2)} <= catalog_types(17)
    assert {(11, 11, 1), (14, 7, 2), (15, 5, 3)} <= catalog_types(23)


def test_parametric_rows():
    assert (7, 7, 2) in catalog_types(16)  # 2^a
    assert (12, 12, 1) in catalog_types(25)  # p^a row
    assert (20, 4, 1) in catalog_types(25)  # p^2 row
    assert (13, 13, 1) in catalog_types(27)  # p^a row


def test_projective_row_parity_constraints():
    # even degrees need q odd and d even, so 2^a-based reps are skipped
    for n in (31,):
        types = catalog_types(n)
        assert (15, 15, 1) in types  # q=2, d=5 excluded; q=5, d=3 kept? no:
        # (15,15,1) comes from q=5, d=3 split 1+2; (24,6,1) likewise
        assert (24, 6, 1) in types


def test_all_types_sum_and_coprime():
    for n in range(3, 400):
        for p in catalog_types(n):
            assert sum(p) == n
            assert math.gcd(math.gcd(p[0], p[1]), p[2]) == 1


def test_catalog_rejects_tiny_degree():
    with pytest.raises(DomainError):
        catalog_types(2)


def test_even_projective_requires_even_d():
    # q even never contributes to an even degree
    for n in range(4, 2000, 2):
        if not q_set(n):
            continue
        for p in catalog_types(n):
            assert sum(p) == n
