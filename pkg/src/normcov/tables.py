"""Catalog of coprime 3-partition types realized by proper primitive groups.

The catalog ships as a human-readable TSV data file (see
``data/primitive_types.tsv`` for the format) parsed at import of the first
caller.  Fixed rows carry explicit degree/type lists; parametric rows name a
degree pattern that is matched by a built-in rule.  ``dump_tables`` returns
the file bytes verbatim so the CLI round-trips it bit-exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import DomainError
from .numtheory import prime_power, q_set
from .partitions import Partition, canonical, projective_triple

_DATA_PACKAGE = "normcov"
_DATA_FILE = "data/primitive_types.tsv"

_DEGREE_PATTERNS = ("2^a", "p^a", "p^2", "(q^d-1)/(q-1)")


@dataclass(frozen=True)
class TableRow:
    """One catalog row: parity, degree pattern, and the types it yields."""

    parity: str  # "even" | "odd"
    degree: str  # literal integer or a degree pattern
    types: tuple[Partition, ...]  # explicit types (fixed rows only)
    constraints: str

    @property
    def fixed_degree(self) -> int | None:
        return int(self.degree) if self.degree.isdigit() else None

    def instantiate(self, n: int) -> set[Partition]:
        """All types this row contributes at degree n (possibly empty)."""
        if (n % 2 == 0) != (self.parity == "even"):
            return set()
        if self.fixed_degree is not None:
            return set(self.types) if n == self.fixed_degree else set()
        if self.degree == "2^a":
            pp = prime_power(n)
            if pp is None or pp[0] != 2 or pp[1] < 2:
                return set()
            half = n // 2
            return {canonical((2, half - 1, half - 1))}
        if self.degree == "p^a":
            pp = prime_power(n)
            if pp is None or pp[0] == 2:
                return set()
            return {canonical((1, (n - 1) // 2, (n - 1) // 2))}
        if self.degree == "p^2":
            pp = prime_power(n)
            if pp is None or pp[0] == 2 or pp[1] != 2:
                return set()
            p = pp[0]
            return {canonical((1, p - 1, p * (p - 1)))}
        if self.degree == "(q^d-1)/(q-1)":
            out = set()
            for q, d in q_set(n):
                if n % 2 == 0 and (q % 2 == 0 or d % 2 != 0):
                    continue  # even degrees need q odd and d even
                if n % 2 == 1 and d % 2 == 1 and q % 2 == 0:
                    continue  # odd degrees exclude q even with d odd
                for d1 in range(1, d // 2 + 1):
                    d2 = d - d1
                    if math.gcd(d1, d2) == 1:
                        out.add(projective_triple(q, d1, d2))
            return out
        raise DomainError(f"unknown degree pattern {self.degree!r}")


def _parse_type_list(text: str) -> tuple[Partition, ...]:
    types = []
    for chunk in text.split():
        if not (chunk.startswith("[") and chunk.endswith("]")):
            raise DomainError(f"malformed type literal {chunk!r}")
        types.append(canonical(int(t) for t in chunk[1:-1].split(",")))
    return tuple(types)


def table_bytes() -> bytes:
    """The shipped data file, byte for byte."""
    return resources.files(_DATA_PACKAGE).joinpath(_DATA_FILE).read_bytes()


@lru_cache(maxsize=1)
def load_rows() -> tuple[TableRow, ...]:
    """Parse the shipped catalog file."""
    rows = []
    for lineno, line in enumerate(table_bytes().decode().splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise DomainError(f"line {lineno}: expected 4 columns, got {len(cols)}")
        parity, degree, types, constraints = cols
        if parity not in ("even", "odd"):
            raise DomainError(f"line {lineno}: bad parity {parity!r}")
        if degree.isdigit():
            parsed = _parse_type_list(types)
            for p in parsed:
                if sum(p) != int(degree):
                    raise DomainError(f"line {lineno}: {p} does not sum to {degree}")
        elif degree in _DEGREE_PATTERNS:
            parsed = ()
        else:
            raise DomainError(f"line {lineno}: unknown degree pattern {degree!r}")
        rows.append(TableRow(parity, degree, parsed, constraints))
    return tuple(rows)


def catalog_types(n: int) -> set[Partition]:
    """All catalogued coprime 3-partition types at degree n.

    Each returned partition sums to n and has gcd 1.
    """
    if n < 3:
        raise DomainError(f"catalog needs n >= 3, got {n}")
    out = set()
    for row in load_rows():
        out |= row.instantiate(n)
    for p in out:
        if sum(p) != n or math.gcd(*p) != 1:
            raise AssertionError(f"catalog produced invalid type {p} at n={n}")
    return out
