"""Exact evaluation of the counting formulas and recurrences.

Everything returns Python ints (unbounded precision); no floating point.
"""

from functools import lru_cache
from math import comb, factorial

from .families import Family


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    return comb(n, k)


@lru_cache(maxsize=None)
def stirling2(n: int, r: int) -> int:
    """Stirling number of the second kind: partitions of [n] into r classes."""
    if n < 0 or r < 0:
        raise ValueError("arguments must be nonnegative")
    if r > n:
        raise ValueError(f"need r <= n, got ({n}, {r})")
    if r == n:
        return 1
    if r == 0:
        return 0
    return r * stirling2(n - 1, r) + stirling2(n - 1, r - 1)


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    if n < 0:
        raise ValueError("argument must be nonnegative")
    return sum(stirling2(n, r) for r in range(n + 1))


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("argument must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def double_factorial(k: int) -> int:
    """k!! = k (k-2) (k-4) ...; by convention (-1)!! = 1."""
    if k < -1:
        raise ValueError(f"double factorial undefined for {k}")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}."""
    if n < 1:
        raise ValueError("argument must be >= 1")
    if n <= 2:
        return 1
    a, b = 1, 1
    for _ in range(n - 2):
        a, b = b, a + b
    return b


@lru_cache(maxsize=None)
def derangements(m: int) -> int:
    """Fixed-point-free permutations of a set of size m."""
    if m < 0:
        raise ValueError("argument must be nonnegative")
    if m == 0:
        return 1
    if m == 1:
        return 0
    return (m - 1) * (derangements(m - 1) + derangements(m - 2))


def _catalan_or_zero(i: int) -> int:
    return 0 if i % 2 else catalan(i // 2)


@lru_cache(maxsize=None)
def jones_rho(n: int, r: int) -> int:
    """Number of R-classes of rank r in the Jones monoid of degree n.

    Satisfies rho(n, 0) = catalan(n/2) for even n, rho(n, n) = 1, and
    rho(n, r) = rho(n-1, r-1) + rho(n-1, r+1).
    """
    if n < 0 or r < 0:
        raise ValueError("arguments must be nonnegative")
    if r > n or (n - r) % 2:
        return 0
    if r == n:
        return 1
    if r == 0:
        return _catalan_or_zero(n)
    return jones_rho(n - 1, r - 1) + jones_rho(n - 1, r + 1)


def jones_rho_convolution(n: int, r: int) -> int:
    """Alternative recurrence rho(n, r) = sum_i c_{i-1} rho(n-i, r-1), where
    c_i is catalan(i/2) for even i and 0 otherwise.

    Splitting a rank-r class at its first unmatched point leaves a complete
    noncrossing matching on the i-1 points before it (c_{i-1} ways) and a
    rank-(r-1) class on the n-i points after it.
    """
    if n < 0 or r < 0:
        raise ValueError("arguments must be nonnegative")
    if r > n or (n - r) % 2:
        return 0
    if r == n:
        return 1
    if r == 0:
        return _catalan_or_zero(n)
    return sum(_catalan_or_zero(i - 1) * jones_rho(n - i, r - 1)
               for i in range(1, n + 1))


def rank_ideal(family: Family, n: int, r: int) -> int:
    """Minimum size of a generating set (= of an idempotent generating set)
    for the ideal of rank at most r.

    Partition: sum_{j=r}^n S(n,j) C(j,r); Brauer: n!/(2^k k! r!);
    Jones: (r+1)/(n+1) C(n+1, k); full transformation: n if r = 1,
    S(n,r) for 2 <= r <= n-1.
    """
    if family == Family.PARTITION:
        if not 0 <= r <= n - 1:
            raise ValueError(f"need 0 <= r <= n-1, got r={r}, n={n}")
        value = sum(stirling2(n, j) * comb(j, r) for j in range(r, n + 1))
        alt = sum(comb(n, j) * stirling2(j, r) * bell(n - j)
                  for j in range(r, n + 1))
        assert value == alt, (n, r, value, alt)
        return value
    if family == Family.BRAUER:
        if not 0 <= r <= n - 2 or (n - r) % 2:
            raise ValueError(f"need 0 <= r = n-2k <= n-2, got r={r}, n={n}")
        k = (n - r) // 2
        value = factorial(n) // (2**k * factorial(k) * factorial(r))
        assert value == comb(n, 2 * k) * double_factorial(2 * k - 1)
        return value
    if family in (Family.JONES, Family.PLANAR_PARTITION):
        if family == Family.PLANAR_PARTITION:
            # isomorphic to the Jones monoid of doubled degree
            n, r = 2 * n, 2 * r
        if not 0 <= r <= n - 2 or (n - r) % 2:
            raise ValueError(f"need 0 <= r = n-2k <= n-2, got r={r}, n={n}")
        k = (n - r) // 2
        value = (r + 1) * comb(n + 1, k) // (n + 1)
        assert value == jones_rho(n, r)
        return value
    if family in (Family.FULL_TRANSFORMATION, Family.SINGULAR_TRANSFORMATION):
        if not 1 <= r <= n - 1:
            raise ValueError(f"need 1 <= r <= n-1, got r={r}, n={n}")
        return n if r == 1 else stirling2(n, r)
    raise ValueError(f"unknown family {family}")


@lru_cache(maxsize=None)
def strong_tournament_count(n: int) -> int:
    """Strongly connected labelled tournaments on n vertices: w_1 = 1 and
    w_n = F_n - sum_s C(n,s) w_s F_{n-s} with F_k = 2^(k(k-1)/2)."""
    if n < 1:
        raise ValueError("argument must be >= 1")
    if n == 1:
        return 1
    total = lambda k: 2 ** (k * (k - 1) // 2)
    return total(n) - sum(comb(n, s) * strong_tournament_count(s) * total(n - s)
                          for s in range(1, n))


@lru_cache(maxsize=None)
def permutations_min_cycle_3(k: int) -> int:
    """Permutations of [k] with no fixed points and no 2-cycles (a_k)."""
    if k < 0:
        raise ValueError("argument must be nonnegative")
    if k == 0:
        return 1
    if k <= 2:
        return 0
    # remove k: it lies in a 3-cycle or a longer cycle
    return ((k - 1) * permutations_min_cycle_3(k - 1)
            + (k - 1) * (k - 2) * permutations_min_cycle_3(k - 3))


def maps_without_2cycles(n: int, k: int) -> int:
    """Maps [k] -> [n] (k <= n) with no 2-cycles (b_{nk}), by
    inclusion-exclusion over forced 2-cycles."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    return sum((-1)**i * comb(k, 2 * i) * double_factorial(2 * i - 1)
               * n**(k - 2 * i)
               for i in range(k // 2 + 1))


def min_idgen_sets_partition(n: int) -> int:
    """Number of minimal idempotent generating sets of the singular part of
    the partition monoid: sum_k C(n,k) a_k b_{n,n-k}."""
    if n < 0:
        raise ValueError("argument must be nonnegative")
    return sum(comb(n, k) * permutations_min_cycle_3(k)
               * maps_without_2cycles(n, n - k)
               for k in range(n + 1))


def min_idgen_sets_jones(n: int) -> int:
    """Number of minimal idempotent generating sets of the singular part of
    the Jones monoid: the nth Fibonacci number."""
    return fibonacci(n)


def idgen_subsets_jones(n: int) -> int:
    """Number of arbitrary generating subsets of the top-class idempotents
    for the singular Jones monoid: f_2 = 1, f_3 = 7, f_n = 5f_{n-1}+6f_{n-2}."""
    if n < 2:
        raise ValueError("argument must be >= 2")
    a, b = 1, 7  # f_2, f_3
    if n == 2:
        value = 1
    elif n == 3:
        value = 7
    else:
        for _ in range(n - 3):
            a, b = b, 5 * b + 6 * a
        value = b
    closed = (2 * 6**n + 9 * (-1) ** (n + 1)) // 63
    assert value == closed, (n, value, closed)
    return value


def brauer_min_idgen_bounds(n: int) -> tuple[int, int]:
    """Lower/upper bounds (c_n, e_n) sandwiching the number of minimal
    idempotent generating sets of the singular Brauer monoid for n >= 4:
    c_n = prod i! and e_n = derangements of an (n choose 2)-set."""
    if n < 2:
        raise ValueError("argument must be >= 2")
    c = 1
    for i in range(1, n):
        c *= factorial(i)
    return c, derangements(n * (n - 1) // 2)


def monoid_order(family: Family, n: int) -> int:
    """Cardinality of the monoid."""
    if family == Family.PARTITION:
        return bell(2 * n)
    if family == Family.BRAUER:
        return double_factorial(2 * n - 1)
    if family == Family.JONES:
        return catalan(n)
    if family == Family.PLANAR_PARTITION:
        return catalan(2 * n)
    if family == Family.FULL_TRANSFORMATION:
        return n**n
    if family == Family.SINGULAR_TRANSFORMATION:
        return n**n - factorial(n)
    raise ValueError(f"unknown family {family}")
