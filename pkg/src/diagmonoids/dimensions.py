"""Hook lengths, standard tableaux counts, and cell-module dimensions for the
partition, Brauer and Temperley-Lieb algebras.

Integer partitions are tuples of weakly decreasing positive ints; () is the
empty partition.  All dimension values are the combinatorial ones, valid as
irreducible-representation dimensions whenever the algebra is semisimple.
"""

from functools import lru_cache
from math import comb, factorial

from . import counting
from .families import Family

IntPartition = tuple[int, ...]


def check_partition(parts) -> IntPartition:
    p = tuple(parts)
    if any(x <= 0 for x in p):
        raise ValueError(f"parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def conjugate(parts: IntPartition) -> IntPartition:
    p = check_partition(parts)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def hook_lengths(parts: IntPartition) -> tuple[tuple[int, ...], ...]:
    """Hook length of every box: arm + leg + 1."""
    p = check_partition(parts)
    q = conjugate(p)
    return tuple(
        tuple((p[i] - (j + 1)) + (q[j] - (i + 1)) + 1 for j in range(p[i]))
        for i in range(len(p))
    )


def std_tableaux_count(parts: IntPartition) -> int:
    """Number of standard fillings, by the hook length formula."""
    p = check_partition(parts)
    r = sum(p)
    denom = 1
    for row in hook_lengths(p):
        for h in row:
            denom *= h
    value, rem = divmod(factorial(r), denom)
    assert rem == 0
    return value


def std_tableaux_brute(parts: IntPartition) -> int:
    """Independent count by direct enumeration of standard fillings."""
    p = check_partition(parts)
    r = sum(p)
    rows = len(p)

    def rec(filled, heights):
        if filled == r:
            return 1
        total = 0
        for i in range(rows):
            j = heights[i]
            if j < p[i] and (i == 0 or heights[i - 1] > j):
                heights[i] += 1
                total += rec(filled + 1, heights)
                heights[i] -= 1
        return total

    return rec(0, [0] * rows)


def partitions_of(r: int):
    """Integer partitions of r in reverse-lexicographic order."""
    if r < 0:
        raise ValueError("argument must be nonnegative")
    if r == 0:
        yield ()
        return

    def rec(rem, maxpart, prefix):
        if rem == 0:
            yield tuple(prefix)
            return
        for x in range(min(rem, maxpart), 0, -1):
            prefix.append(x)
            yield from rec(rem - x, x, prefix)
            prefix.pop()

    yield from rec(r, r, [])


def dim_partition_algebra(n: int, mu: IntPartition) -> int:
    """Cell-module dimension for the partition algebra on n points, labelled
    by a partition mu with |mu| <= n."""
    p = check_partition(mu)
    r = sum(p)
    if r > n:
        raise ValueError(f"need |mu| <= n, got |mu|={r}, n={n}")
    classes = sum(counting.stirling2(n, j) * comb(j, r) for j in range(r, n + 1))
    return classes * std_tableaux_count(p)


def dim_brauer_algebra(n: int, mu: IntPartition) -> int:
    """Cell-module dimension for the Brauer algebra: n!/(2^k k! prod h(b))
    where |mu| = n - 2k."""
    p = check_partition(mu)
    r = sum(p)
    if r > n or (n - r) % 2:
        raise ValueError(f"need |mu| = n - 2k, got |mu|={r}, n={n}")
    k = (n - r) // 2
    denom = 2**k * factorial(k)
    for row in hook_lengths(p):
        for h in row:
            denom *= h
    value, rem = divmod(factorial(n), denom)
    assert rem == 0
    if r <= n - 2:
        assert value == counting.rank_ideal(Family.BRAUER, n, r) * std_tableaux_count(p)
    return value


def dim_tl_algebra(n: int, r: int) -> int:
    """Cell-module dimension for the Temperley-Lieb algebra: the number of
    rank-r R-classes of the degree-n Jones monoid."""
    if not 0 <= r <= n or (n - r) % 2:
        raise ValueError(f"need 0 <= r = n - 2k <= n, got r={r}, n={n}")
    return counting.jones_rho(n, r)


@lru_cache(maxsize=None)
def _bratteli_level(n: int):
    """Path counts from the empty partition through 2n half-steps.

    Whole steps may add a box or stand still; half steps may remove a box or
    stand still.
    """
    if n == 0:
        return {(): 1}
    prev = _bratteli_level(n - 1)
    half = {}
    for lam, c in prev.items():
        half[lam] = half.get(lam, 0) + c
        for mu in _remove_box(lam):
            half[mu] = half.get(mu, 0) + c
    full = {}
    for lam, c in half.items():
        full[lam] = full.get(lam, 0) + c
        for mu in _add_box(lam):
            full[mu] = full.get(mu, 0) + c
    return full


def _remove_box(lam):
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i] > lam[i + 1]:
            mu = list(lam)
            mu[i] -= 1
            if mu[i] == 0:
                mu.pop(i)
            yield tuple(mu)


def _add_box(lam):
    for i in range(len(lam)):
        if i == 0 or lam[i - 1] > lam[i]:
            mu = list(lam)
            mu[i] += 1
            yield tuple(mu)
    yield lam + (1,)


def bratteli_paths(n: int, mu: IntPartition) -> int:
    """Number of paths from the empty partition at level 0 to mu at level n
    in the alternating add/remove-a-box level graph."""
    p = check_partition(mu)
    if sum(p) > n:
        raise ValueError(f"need |mu| <= n, got |mu|={sum(p)}, n={n}")
    return _bratteli_level(n).get(p, 0)
