"""The four interval counting functions, evaluated as Mobius-weighted sums.

For the integer interval {m+1, ..., n} with 0 <= m < n:

  f(m, n)       nonempty subsets whose elements have gcd 1
  fk(m, n, k)   the same, restricted to cardinality k
  phi(m, n)     nonempty subsets whose gcd is relatively prime to n
  phik(m, n, k) the same, restricted to cardinality k

f and fk sum over all d up to n with the Mobius function as weights; phi and
phik sum over the divisors of n only. Every value is an exact int.
"""

from dataclasses import dataclass
from enum import Enum

from .exactmath import binomial
from .sieve import SieveTable, divisors


class Family(str, Enum):
    F = "F"
    FK = "FK"
    PHI = "PHI"
    PHIK = "PHIK"


K_FAMILIES = (Family.FK, Family.PHIK)


def _check_interval(m: int, n: int) -> None:
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m >= n:
        raise ValueError(f"m < n required (got m={m}, n={n})")


def _check_table(n: int, table: SieveTable) -> None:
    if n > table.limit:
        raise ValueError(f"n={n} exceeds sieve limit {table.limit}")


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


@dataclass(frozen=True)
class CountQuery:
    """One counting request; k is required for FK/PHIK and forbidden otherwise."""

    family: Family
    m: int
    n: int
    k: int | None = None

    def __post_init__(self) -> None:
        _check_interval(self.m, self.n)
        if self.family in K_FAMILIES:
            if self.k is None:
                raise ValueError(f"family {self.family.value} requires k")
            _check_k(self.k)
        elif self.k is not None:
            raise ValueError(f"family {self.family.value} does not take k")


def f_interval(m: int, n: int, table: SieveTable) -> int:
    """Number of nonempty relatively prime subsets of {m+1, ..., n}."""
    _check_interval(m, n)
    _check_table(n, table)
    mobius = table.mobius
    powers: dict[int, int] = {}
    total = 0
    for d in range(1, n + 1):
        mu = mobius[d]
        if mu == 0:
            continue
        width = n // d - m // d
        if width == 0:
            continue
        term = powers.get(width)
        if term is None:
            term = powers[width] = (1 << width) - 1
        total += term if mu > 0 else -term
    if total < 0:
        raise RuntimeError(f"negative count {total} for f({m}, {n})")
    return total


def fk_interval(m: int, n: int, k: int, table: SieveTable) -> int:
    """Number of relatively prime k-element subsets of {m+1, ..., n}."""
    _check_interval(m, n)
    _check_table(n, table)
    _check_k(k)
    mobius = table.mobius
    # floor(n/d) - floor(m/d) <= floor((n-m)/d) + 1, so once d*(k-1) > n-m
    # every binomial argument is below k and the terms are all zero.
    d_hi = n if k == 1 else min(n, (n - m) // (k - 1))
    coeffs: dict[int, int] = {}
    total = 0
    for d in range(1, d_hi + 1):
        mu = mobius[d]
        if mu == 0:
            continue
        width = n // d - m // d
        if width < k:
            continue
        term = coeffs.get(width)
        if term is None:
            term = coeffs[width] = binomial(width, k)
        total += term if mu > 0 else -term
    if total < 0:
        raise RuntimeError(f"negative count {total} for fk({m}, {n}, {k})")
    return total


def phi_interval(m: int, n: int, table: SieveTable) -> int:
    """Number of nonempty subsets of {m+1, ..., n} whose gcd is coprime to n."""
    _check_interval(m, n)
    _check_table(n, table)
    if n == 1:
        # The divisor-sum form counts the empty set as well when n = 1 (it
        # gives 2); the definition counts only the one nonempty subset {1}.
        return 1
    mobius = table.mobius
    total = 0
    for d in divisors(n, table):
        mu = mobius[d]
        if mu == 0:
            continue
        term = 1 << (n // d - m // d)  # d | n, so n // d is exact
        total += term if mu > 0 else -term
    if total < 0:
        raise RuntimeError(f"negative count {total} for phi({m}, {n})")
    return total


def phik_interval(m: int, n: int, k: int, table: SieveTable) -> int:
    """Number of k-element subsets of {m+1, ..., n} whose gcd is coprime to n."""
    _check_interval(m, n)
    _check_table(n, table)
    _check_k(k)
    if n == 1:
        # Same n = 1 convention as phi_interval: {1} is the only subset.
        return 1 if k == 1 else 0
    mobius = table.mobius
    total = 0
    for d in divisors(n, table):
        mu = mobius[d]
        if mu == 0:
            continue
        term = binomial(n // d - m // d, k)
        total += term if mu > 0 else -term
    if total < 0:
        raise RuntimeError(f"negative count {total} for phik({m}, {n}, {k})")
    return total


def f_upto(n: int, table: SieveTable) -> int:
    """f over the full interval {1, ..., n}."""
    return f_interval(0, n, table)


def euler_phi_via_phik(n: int, table: SieveTable) -> int:
    """Euler's totient of n recovered as phik(0, n, 1); requires n >= 2.

    Singletons {a} with 1 <= a <= n and gcd(a, n) = 1 are exactly the
    totatives of n, so the k = 1 slice of phik is the classical phi.
    """
    if n < 2:
        raise ValueError(f"totient cross-check requires n >= 2, got {n}")
    return phik_interval(0, n, 1, table)


def count(query: CountQuery, table: SieveTable) -> int:
    """Evaluate one counting query."""
    if query.family is Family.F:
        return f_interval(query.m, query.n, table)
    if query.family is Family.FK:
        assert query.k is not None
        return fk_interval(query.m, query.n, query.k, table)
    if query.family is Family.PHI:
        return phi_interval(query.m, query.n, table)
    assert query.k is not None
    return phik_interval(query.m, query.n, query.k, table)
