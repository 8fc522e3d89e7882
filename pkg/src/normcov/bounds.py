"""Certified evaluation of the lower-bound pipeline.

The rational ingredients (the coprime-density factor, divisor counts) are
kept exact; logarithms and square roots go through mpmath interval
arithmetic so every reported number carries a rounding direction: upper
bounds are rounded up, lower bounds down.  Doubling the working precision
can only tighten a report, never invalidate it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from mpmath import iv, mpf

from .covering import GroupKind, conjecture_value, maroti_upper_bound
from .errors import DomainError, NegativeDiscriminantError
from .numtheory import factorize, is_prime, omega
from .partitions import count_coprime

DEFAULT_PRECISION = 80


class _ivprec:
    """Temporarily set the interval-context precision."""

    def __init__(self, prec):
        self.prec = prec

    def __enter__(self):
        self.saved = iv.prec
        iv.prec = self.prec

    def __exit__(self, *exc):
        iv.prec = self.saved


def float_up(x) -> float:
    """Smallest float >= x (x an mpf)."""
    f = float(x)
    return math.nextafter(f, math.inf) if f < x else f


def float_down(x) -> float:
    """Largest float <= x (x an mpf)."""
    f = float(x)
    return math.nextafter(f, -math.inf) if f > x else f


def _iv_fraction(x: Fraction):
    return iv.mpf(x.numerator) / iv.mpf(x.denominator)


def zeta2(n: int) -> Fraction:
    """(1/12) * prod over primes p | n of (1 - 1/p^2), exact."""
    if n < 4:
        raise DomainError(f"zeta2 needs n >= 4, got {n}")
    val = Fraction(1, 12)
    for p, _ in factorize(n).factors:
        val *= Fraction(p * p - 1, p * p)
    return val


def _f_interval(n: int):
    # The coverage-overhead term: caps for primitive components (parity
    # split), the additive 2, and the imprimitive 2*n^{3/2}, all over n^2.
    w = omega(n - 1)
    nn = iv.mpf(n)
    if n % 2 == 0:
        cap = (iv.log(nn) / iv.log(3) + 1) / 4
    else:
        cap = (iv.log(nn) / iv.log(2) + 1) / 2
    return cap * w / nn**2 + 2 / nn**2 + 2 / iv.sqrt(nn)


def f_overhead(n: int, prec: int = DEFAULT_PRECISION) -> float:
    """Upper-rounded value of the overhead function f(n)."""
    if n < 4:
        raise DomainError(f"f_overhead needs n >= 4, got {n}")
    with _ivprec(prec):
        return float_up(_f_interval(n).b)


def primitive_cap(n: int, prec: int = DEFAULT_PRECISION) -> float:
    """Upper-rounded cap on the number of coprime 3-partitions covered by
    proper primitive groups: parity-split logarithmic cap times omega(n-1),
    plus 2."""
    if n < 3:
        raise DomainError(f"primitive_cap needs n >= 3, got {n}")
    w = omega(n - 1) if n > 3 else 1
    with _ivprec(prec):
        nn = iv.mpf(n)
        if n % 2 == 0:
            cap = (iv.log(nn) / iv.log(3) + 1) / 4
        else:
            cap = (iv.log(nn) / iv.log(2) + 1) / 2
        return float_up((cap * w + 2).b)


def _require_theorem_hypothesis(g: GroupKind):
    if g.family == "sym":
        if g.n % 2 != 0 or g.n < 4:
            raise DomainError(f"theorem needs Sym(n) with n even >= 4, got {g}")
    else:
        if g.n % 2 != 1 or g.n < 5:
            raise DomainError(f"theorem needs Alt(n) with n odd >= 5, got {g}")


def _radicand_interval(n: int, z: Fraction):
    # 1 - 8 z + 8 f + (16n+8)/(n+1)^2 * (z - f), as an interval.
    f = _f_interval(n)
    zz = _iv_fraction(z)
    coeff = _iv_fraction(Fraction(16 * n + 8, (n + 1) ** 2))
    return 1 - 8 * zz + 8 * f + coeff * (zz - f)


def lower_bound_theorem(g: GroupKind, prec: int = DEFAULT_PRECISION) -> int:
    """Certified integer lower bound on the normal covering number.

    Evaluated as ceil((n+1)/2 * (1 - sqrt(radicand))) with the overhead
    rounded up and the root taken on intervals, so the returned integer
    never exceeds the true value of the expression (it may be <= 0 for
    small degrees).  Precision escalates until the ceiling is pinned or the
    budget is exhausted; the lower endpoint is certified either way.
    """
    _require_theorem_hypothesis(g)
    n = g.n
    z = zeta2(n)
    last = None
    for attempt in range(4):
        with _ivprec(prec << attempt):
            rad = _radicand_interval(n, z)
            if not rad.a > 0:
                continue
            val = (iv.mpf(n + 1) / 2) * (1 - iv.sqrt(rad))
            lo = _ceil_mpf(val.a)
            hi = _ceil_mpf(val.b)
            if lo == hi:
                return lo
            last = lo
    if last is None:
        raise AssertionError(f"radicand not certainly positive at n={n}")
    return last


def _ceil_mpf(x) -> int:
    from mpmath import mp

    return int(mp.ceil(x))


def lower_bound_corollary(
    g: GroupKind, prec: int = DEFAULT_PRECISION
) -> tuple[float, Optional[float]]:
    """(exact_form, simple_form), both rounded down (valid lower bounds).

    exact_form splits the theorem's radical by subadditivity of the square
    root; simple_form is the closed asymptotic shape
    n/2*(1 - sqrt(1 - 4/pi^2)) - (sqrt(17)/2)*n^(3/4), defined for n >= 20.
    """
    _require_theorem_hypothesis(g)
    n = g.n
    z = zeta2(n)
    with _ivprec(prec):
        f = _f_interval(n)
        zz = _iv_fraction(z)
        coeff = _iv_fraction(Fraction(16 * n + 8, (n + 1) ** 2))
        aux = 8 * f + coeff * (zz - f)
        if not aux.a > 0:
            raise DomainError(
                f"auxiliary radicand not certainly positive at n={n}: {aux}"
            )
        half = iv.mpf(n + 1) / 2
        exact = half * (1 - iv.sqrt(1 - 8 * zz)) - half * iv.sqrt(aux)
        exact_form = float_down(exact.a)
        if n < 20:
            return exact_form, None
        pi2 = iv.pi**2
        simple = (iv.mpf(n) / 2) * (1 - iv.sqrt(1 - 4 / pi2)) - (
            iv.sqrt(iv.mpf(17)) / 2
        ) * iv.mpf(n) ** iv.mpf("0.75")
        return exact_form, float_down(simple.a)


def corollary_auxiliary_sqrt_term(n: int, prec: int = DEFAULT_PRECISION):
    """Interval for (n/2) * sqrt(8f + (16n+8)/(n+1)^2 (zeta2 - f))."""
    z = zeta2(n)
    with _ivprec(prec):
        f = _f_interval(n)
        zz = _iv_fraction(z)
        coeff = _iv_fraction(Fraction(16 * n + 8, (n + 1) ** 2))
        aux = 8 * f + coeff * (zz - f)
        return (iv.mpf(n) / 2) * iv.sqrt(aux)


def g_surrogate(n: int) -> float:
    """Float value of the omega-free overhead majorant
    (log2(n)+1)*log2(n)/(2 n^2) + 2/n^2 + 2/sqrt(n)."""
    l = math.log2(n)
    return (l + 1) * l / (2 * n * n) + 2 / (n * n) + 2 / math.sqrt(n)


def g_surrogate_interval(n: int, prec: int = DEFAULT_PRECISION):
    with _ivprec(prec):
        nn = iv.mpf(n)
        l = iv.log(nn) / iv.log(2)
        return (l + 1) * l / (2 * nn**2) + 2 / nn**2 + 2 / iv.sqrt(nn)


def intransitive_quadratic_solve(
    n: int, deficit: Fraction, prec: int = DEFAULT_PRECISION
) -> float:
    """Smaller root of l^2 - (n+1) l + 2*deficit = 0, rounded down.

    This is the step that turns a covering deficit into a minimum count of
    intransitive components; exposed so the bound pipeline can be audited.
    """
    deficit = Fraction(deficit)
    disc = Fraction((n + 1) ** 2) - 8 * deficit
    if disc < 0:
        raise NegativeDiscriminantError(disc)
    with _ivprec(prec):
        root = (iv.mpf(n + 1) - iv.sqrt(_iv_fraction(disc))) / 2
        return float_down(root.a)


@dataclass
class BoundReport:
    """Every intermediate quantity of the bound pipeline for one group."""

    n: int
    group: str
    zeta2: Fraction
    f_upper: float
    primitive_cap: float
    imprimitive_cap: float
    radicand_lower: float
    theorem_bound: int
    corollary_bound: float
    corollary_simple: Optional[float]
    clamped: int
    vacuous: bool
    bps_reference: Optional[float]
    maroti_upper: Optional[Fraction]
    conjecture: Optional[int]
    precision: int

    _FIELDS = (
        "n", "group", "zeta2", "f_upper", "primitive_cap", "imprimitive_cap",
        "radicand_lower", "theorem_bound", "corollary_bound",
        "corollary_simple", "clamped", "vacuous", "bps_reference",
        "maroti_upper", "conjecture", "precision",
    )

    def to_dict(self) -> dict:
        out = {}
        for name in self._FIELDS:
            val = getattr(self, name)
            if isinstance(val, Fraction):
                val = f"{val.numerator}/{val.denominator}"
            out[name] = val
        return out

    @classmethod
    def csv_header(cls) -> str:
        return ",".join(cls._FIELDS)

    def to_csv_row(self) -> str:
        return ",".join("" if v is None else str(v) for v in self.to_dict().values())


def _imprimitive_cap_upper(n: int, prec: int) -> float:
    # 2 * n^{3/2}, rounded up
    with _ivprec(prec):
        return float_up((2 * iv.sqrt(iv.mpf(n)) ** 3).b)


def bound_report(g: GroupKind, prec: int = DEFAULT_PRECISION) -> BoundReport:
    """Assemble the full pipeline: density, overhead, caps, theorem and
    corollary bounds, plus the construction upper bound for comparison."""
    _require_theorem_hypothesis(g)
    n = g.n
    z = zeta2(n)
    with _ivprec(prec):
        rad = _radicand_interval(n, z)
        radicand_lower = float_down(rad.a)
    theorem = lower_bound_theorem(g, prec)
    exact_form, simple_form = lower_bound_corollary(g, prec)
    composite = not is_prime(n)
    bps = 0.025 * n if (n % 2 == 0 and n >= 792_000) else None
    return BoundReport(
        n=n,
        group=str(g),
        zeta2=z,
        f_upper=f_overhead(n, prec),
        primitive_cap=primitive_cap(n, prec),
        imprimitive_cap=_imprimitive_cap_upper(n, prec),
        radicand_lower=radicand_lower,
        theorem_bound=theorem,
        corollary_bound=exact_form,
        corollary_simple=simple_form,
        clamped=max(theorem, 1),
        vacuous=theorem <= 0,
        bps_reference=bps,
        maroti_upper=maroti_upper_bound(n) if composite else None,
        conjecture=conjecture_value(n),
        precision=prec,
    )
